#pragma once

#include "dlinear/data.hpp"
#include "dlinear/matrix.hpp"
#include "dlinear/model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dlinear::train {

enum class OptimizerKind { adam, sgd };

struct TrainConfig {
	double learning_rate = 0.005;
	std::size_t batch_size = 32;
	std::size_t max_epochs = 20;
	/// Epochs without validation improvement tolerated before stopping.
	std::size_t patience = 5;
	std::uint64_t seed = 2021;
	OptimizerKind optimizer = OptimizerKind::adam;
	double beta1 = 0.9;
	double beta2 = 0.999;
	double adam_epsilon = 1e-8;

	void validate() const;
};

struct TrainReport {
	std::vector<double> epoch_train_losses;
	std::vector<double> epoch_val_losses;
	std::size_t best_epoch = 0;
	std::string final_params_snapshot_id;
	bool stopped_early = false;
	/// Reductions run single-threaded in window, row, column order.
	std::string reduction_order = "window-row-column";

	double best_val_loss() const {
		return epoch_val_losses.at(best_epoch);
	}
};

/// Mean of squared differences; shapes must match.
double mse_loss(MatrixView pred, MatrixView target);

/// Mean over every element of every (pred, target) pair.
double mse_loss(std::span<const Matrix> preds, std::span<const MatrixView> targets);

/// Gradient of the batch MSE, stored in a structure shaped like the model.
template <class Model>
struct Gradient {
	Model params;
	double loss = 0.0;
};

/**
 * @brief Exact gradient of the batch MSE with respect to every weight and bias.
 *
 * With residual R = prediction - target and n = batch * T * C elements,
 * dW = (2/n) sum R x^T and db = (2/n) sum R over the batch, per branch and per
 * channel map. The decomposition does not depend on the parameters.
 */
Gradient<model::DLinearModel> grad(const model::DLinearModel &model, std::span<const data::WindowPair> batch);
Gradient<model::LinearMap> grad(const model::LinearMap &map, std::span<const data::WindowPair> batch);

/// Flat views over every parameter buffer, in a fixed order (trend maps, then remainder maps; weight then bias).
std::vector<std::span<double>> parameter_buffers(model::DLinearModel &model);
std::vector<std::span<double>> parameter_buffers(model::LinearMap &map);
std::vector<std::span<const double>> parameter_buffers(const model::DLinearModel &model);
std::vector<std::span<const double>> parameter_buffers(const model::LinearMap &map);

/// First-order optimizer over flat parameter buffers.
class Optimizer {
public:
	explicit Optimizer(const TrainConfig &config);

	void step(std::span<const std::span<double>> params, std::span<const std::span<const double>> grads);

	std::size_t steps() const {
		return steps_;
	}
	const std::vector<double> &first_moment() const {
		return m_;
	}
	const std::vector<double> &second_moment() const {
		return v_;
	}

private:
	OptimizerKind kind_;
	double lr_;
	double beta1_;
	double beta2_;
	double eps_;
	std::size_t steps_ = 0;
	std::vector<double> m_;
	std::vector<double> v_;
};

/**
 * @brief Mini-batch training with validation-based early stopping.
 *
 * Training windows are reshuffled every epoch with a generator seeded from
 * config.seed. After each epoch the validation MSE is computed; the parameters
 * from the best epoch are restored before returning. Throws DataError for empty
 * window sets and NumericalError naming the epoch and batch on a non-finite loss.
 */
TrainReport fit(model::DLinearModel &model, std::span<const data::WindowPair> train_windows,
                std::span<const data::WindowPair> val_windows, const TrainConfig &config);
TrainReport fit(model::LinearMap &map, std::span<const data::WindowPair> train_windows,
                std::span<const data::WindowPair> val_windows, const TrainConfig &config);

std::string to_string(OptimizerKind kind);
OptimizerKind optimizer_from_string(const std::string &name);

nlohmann::json to_json(const TrainConfig &config);
TrainConfig train_config_from_json(const nlohmann::json &doc, TrainConfig defaults = {});
nlohmann::json to_json(const TrainReport &report);

} // namespace dlinear::train

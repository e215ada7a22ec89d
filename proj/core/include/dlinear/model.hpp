#pragma once

#include "dlinear/decompose.hpp"
#include "dlinear/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dlinear::model {

/// Affine map from an L-step history to a T-step forecast: y = W x + b.
struct LinearMap {
	Matrix weight;            // T x L; row = forecast step, column = input lag
	std::vector<double> bias; // T

	/// Every weight 1/L, every bias 0.
	static LinearMap initialized(std::size_t lookback, std::size_t horizon);

	std::size_t lookback() const {
		return weight.cols();
	}
	std::size_t horizon() const {
		return weight.rows();
	}

	bool operator==(const LinearMap &other) const = default;
};

enum class ChannelMode { shared, individual };

/// T x C block of predictions.
struct ForecastBlock {
	Matrix values;
};

/**
 * @brief Decomposition-linear forecaster.
 *
 * The input is split into trend and remainder by a moving average; each part
 * goes through its own LinearMap and the two outputs are summed. In shared mode
 * every variate uses the same pair of maps, in individual mode variate j has its own.
 */
class DLinearModel {
public:
	DLinearModel() = default;
	DLinearModel(ChannelMode mode, std::size_t lookback, std::size_t horizon, std::size_t channels,
	             int kernel_size = kDefaultKernelSize);

	ChannelMode mode() const {
		return mode_;
	}
	std::size_t lookback() const {
		return lookback_;
	}
	std::size_t horizon() const {
		return horizon_;
	}
	std::size_t channels() const {
		return channels_;
	}
	int kernel_size() const {
		return kernel_size_;
	}

	/// Index into the map vectors used by `channel`.
	std::size_t map_index(std::size_t channel) const {
		return mode_ == ChannelMode::shared ? 0 : channel;
	}

	const LinearMap &trend_map(std::size_t channel) const {
		return trend_maps_[map_index(channel)];
	}
	const LinearMap &remainder_map(std::size_t channel) const {
		return remainder_maps_[map_index(channel)];
	}

	std::vector<LinearMap> &trend_maps() {
		return trend_maps_;
	}
	const std::vector<LinearMap> &trend_maps() const {
		return trend_maps_;
	}
	std::vector<LinearMap> &remainder_maps() {
		return remainder_maps_;
	}
	const std::vector<LinearMap> &remainder_maps() const {
		return remainder_maps_;
	}

	bool operator==(const DLinearModel &other) const = default;

private:
	ChannelMode mode_ = ChannelMode::shared;
	std::size_t lookback_ = 0;
	std::size_t horizon_ = 0;
	std::size_t channels_ = 0;
	int kernel_size_ = kDefaultKernelSize;
	std::vector<LinearMap> trend_maps_;
	std::vector<LinearMap> remainder_maps_;
};

ForecastBlock forward(const DLinearModel &model, MatrixView input);

/// Single shared map on the raw input, no decomposition.
ForecastBlock forward_linear(const LinearMap &map, MatrixView input);

/// Repeats the last input row `horizon` times.
ForecastBlock repeat_c(MatrixView input, std::size_t horizon);

/**
 * Writes map(x[:, j]) into out[:, j] for every column j, where x is L x C and out is T x C.
 * With `accumulate` the result is added to out instead of overwriting it.
 */
void apply_shared(const LinearMap &map, MatrixView x, Matrix &out, bool accumulate = false);

/// As apply_shared, for column `col` only.
void apply_column(const LinearMap &map, MatrixView x, std::size_t col, Matrix &out, bool accumulate = false);

std::uint64_t count_params(const LinearMap &map);
std::uint64_t count_params(const DLinearModel &model);

/// Weight multiply-accumulates for one window of `channels` variates (biases and decomposition excluded).
std::uint64_t count_macs(const LinearMap &map, std::size_t channels);
std::uint64_t count_macs(const DLinearModel &model, std::size_t channels);

/// T rows by L columns, no header.
void write_weight_csv(const LinearMap &map, const std::filesystem::path &path);
Matrix read_weight_csv(const std::filesystem::path &path);

/**
 * @brief Writes one weight grid per branch into `dir`.
 *
 * Shared mode produces trend_weights.csv and remainder_weights.csv. Individual mode
 * produces one pair per variate, suffixed with the variate name (or ch<j> when no
 * names are given). Returns the written paths in (trend, remainder) order.
 */
std::vector<std::filesystem::path> export_weights(const DLinearModel &model, const std::filesystem::path &dir,
                                                  std::span<const std::string> variate_names = {});

nlohmann::json to_json(const LinearMap &map);
LinearMap linear_map_from_json(const nlohmann::json &doc);

nlohmann::json to_json(const DLinearModel &model);
DLinearModel dlinear_from_json(const nlohmann::json &doc);

std::string to_string(ChannelMode mode);
ChannelMode channel_mode_from_string(const std::string &name);

} // namespace dlinear::model

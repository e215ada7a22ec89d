#include "dlinear/train.hpp"

#include "dlinear/decompose.hpp"
#include "dlinear/error.hpp"
#include "dlinear/metrics.hpp"
#include "dlinear/rng.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace dlinear::train {

using model::ChannelMode;
using model::DLinearModel;
using model::LinearMap;

namespace {

void check_same_shape(MatrixView a, MatrixView b) {
	if (a.rows() != b.rows() || a.cols() != b.cols()) {
		throw DataError("shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
		                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
	}
}

void check_batch(std::span<const data::WindowPair> batch, std::size_t lookback, std::size_t horizon,
                 std::size_t channels) {
	if (batch.empty()) {
		throw DataError("gradient needs a non-empty batch");
	}
	for (const auto &w : batch) {
		if (w.input.rows() != lookback || w.target.rows() != horizon ||
		    (channels && (w.input.cols() != channels || w.target.cols() != channels)) ||
		    w.input.cols() != w.target.cols()) {
			throw DataError("window shape (" + std::to_string(w.input.rows()) + ", " + std::to_string(w.target.rows()) +
			                ", " + std::to_string(w.input.cols()) + ") does not match model (L=" +
			                std::to_string(lookback) + ", T=" + std::to_string(horizon) + ")");
		}
	}
}

void zero(LinearMap &map) {
	std::fill(map.weight.values().begin(), map.weight.values().end(), 0.0);
	std::fill(map.bias.begin(), map.bias.end(), 0.0);
}

void scale(LinearMap &map, double factor) {
	for (auto &w : map.weight.values()) {
		w *= factor;
	}
	for (auto &b : map.bias) {
		b *= factor;
	}
}

// residual is T x C, x is L x C: g.W[t][l] += sum_j R[t][j] x[l][j], g.b[t] += sum_j R[t][j]
void accumulate_shared(const Matrix &residual, MatrixView x, LinearMap &g) {
	const std::size_t horizon = residual.rows();
	const std::size_t lookback = x.rows();
	const std::size_t c = x.cols();
	for (std::size_t t = 0; t < horizon; ++t) {
		const auto r = residual.row(t);
		auto gw = g.weight.row(t);
		double rsum = 0.0;
		for (std::size_t j = 0; j < c; ++j) {
			rsum += r[j];
		}
		g.bias[t] += rsum;
		for (std::size_t l = 0; l < lookback; ++l) {
			const auto xr = x.row(l);
			double acc = 0.0;
			for (std::size_t j = 0; j < c; ++j) {
				acc += r[j] * xr[j];
			}
			gw[l] += acc;
		}
	}
}

void accumulate_column(const Matrix &residual, MatrixView x, std::size_t col, LinearMap &g) {
	const std::size_t horizon = residual.rows();
	const std::size_t lookback = x.rows();
	for (std::size_t t = 0; t < horizon; ++t) {
		const double r = residual(t, col);
		auto gw = g.weight.row(t);
		g.bias[t] += r;
		for (std::size_t l = 0; l < lookback; ++l) {
			gw[l] += r * x(l, col);
		}
	}
}

// Overwrites pred with pred - target and returns the sum of squares.
double residual_in_place(Matrix &pred, MatrixView target) {
	double sq = 0.0;
	for (std::size_t t = 0; t < pred.rows(); ++t) {
		auto p = pred.row(t);
		const auto y = target.row(t);
		for (std::size_t j = 0; j < p.size(); ++j) {
			p[j] -= y[j];
			sq += p[j] * p[j];
		}
	}
	return sq;
}

void append_buffers(LinearMap &map, std::vector<std::span<double>> &out) {
	out.emplace_back(map.weight.values());
	out.emplace_back(map.bias);
}

void append_buffers(const LinearMap &map, std::vector<std::span<const double>> &out) {
	out.emplace_back(map.weight.values());
	out.emplace_back(map.bias);
}

metrics::ForecastFn forecaster(const DLinearModel &model) {
	return [&model](MatrixView x) { return model::forward(model, x).values; };
}

metrics::ForecastFn forecaster(const LinearMap &map) {
	return [&map](MatrixView x) { return model::forward_linear(map, x).values; };
}

std::size_t lookback_of(const DLinearModel &m) {
	return m.lookback();
}
std::size_t lookback_of(const LinearMap &m) {
	return m.lookback();
}
std::size_t horizon_of(const DLinearModel &m) {
	return m.horizon();
}
std::size_t horizon_of(const LinearMap &m) {
	return m.horizon();
}
std::size_t channels_of(const DLinearModel &m) {
	return m.channels();
}
std::size_t channels_of(const LinearMap &) {
	return 0;
}

template <class Model>
TrainReport fit_impl(Model &model, std::span<const data::WindowPair> train_windows,
                     std::span<const data::WindowPair> val_windows, const TrainConfig &config) {
	config.validate();
	if (train_windows.empty()) {
		throw DataError("training set is empty");
	}
	if (val_windows.empty()) {
		throw DataError("validation set is empty; early stopping needs at least one window");
	}
	check_batch(train_windows, lookback_of(model), horizon_of(model), channels_of(model));
	check_batch(val_windows, lookback_of(model), horizon_of(model), channels_of(model));

	Rng rng(config.seed);
	Optimizer optimizer(config);
	std::vector<std::size_t> order(train_windows.size());
	std::iota(order.begin(), order.end(), std::size_t{0});
	std::vector<data::WindowPair> batch;
	batch.reserve(config.batch_size);

	TrainReport report;
	Model best = model;
	double best_val = std::numeric_limits<double>::infinity();
	std::size_t since_best = 0;

	for (std::size_t epoch = 0; epoch < config.max_epochs; ++epoch) {
		rng.shuffle(order.begin(), order.end());
		double sq_total = 0.0;
		double elem_total = 0.0;
		std::size_t batch_index = 0;
		for (std::size_t start = 0; start < order.size(); start += config.batch_size, ++batch_index) {
			const std::size_t stop = std::min(order.size(), start + config.batch_size);
			batch.clear();
			for (std::size_t i = start; i < stop; ++i) {
				batch.push_back(train_windows[order[i]]);
			}
			const auto g = grad(model, batch);
			if (!std::isfinite(g.loss)) {
				throw NumericalError("non-finite training loss at epoch " + std::to_string(epoch) + ", batch " +
				                     std::to_string(batch_index));
			}
			const double elems = static_cast<double>(batch.size() * batch.front().target.size());
			sq_total += g.loss * elems;
			elem_total += elems;
			const auto params = parameter_buffers(model);
			const auto grads = parameter_buffers(g.params);
			optimizer.step(params, grads);
		}

		const double val = metrics::evaluate(forecaster(model), val_windows).mse;
		if (!std::isfinite(val)) {
			throw NumericalError("non-finite validation loss at epoch " + std::to_string(epoch));
		}
		report.epoch_train_losses.push_back(sq_total / elem_total);
		report.epoch_val_losses.push_back(val);
		if (val < best_val) {
			best_val = val;
			best = model;
			report.best_epoch = epoch;
			since_best = 0;
		} else if (++since_best >= config.patience) {
			report.stopped_early = epoch + 1 < config.max_epochs;
			break;
		}
	}

	model = std::move(best);
	report.final_params_snapshot_id = "epoch-" + std::to_string(report.best_epoch);
	return report;
}

} // namespace

void TrainConfig::validate() const {
	if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
		throw ConfigError("learning_rate must be positive");
	}
	if (batch_size == 0) {
		throw ConfigError("batch_size must be positive");
	}
	if (max_epochs == 0) {
		throw ConfigError("max_epochs must be positive");
	}
	if (patience > max_epochs) {
		throw ConfigError("patience must not exceed max_epochs");
	}
	if (!(beta1 >= 0.0 && beta1 < 1.0) || !(beta2 >= 0.0 && beta2 < 1.0) || !(adam_epsilon > 0.0)) {
		throw ConfigError("Adam requires beta1, beta2 in [0, 1) and a positive epsilon");
	}
}

double mse_loss(MatrixView pred, MatrixView target) {
	check_same_shape(pred, target);
	if (pred.empty()) {
		throw DataError("mse of an empty block is undefined");
	}
	double sq = 0.0;
	for (std::size_t t = 0; t < pred.rows(); ++t) {
		for (std::size_t j = 0; j < pred.cols(); ++j) {
			const double r = pred(t, j) - target(t, j);
			sq += r * r;
		}
	}
	return sq / static_cast<double>(pred.size());
}

double mse_loss(std::span<const Matrix> preds, std::span<const MatrixView> targets) {
	if (preds.size() != targets.size()) {
		throw DataError("prediction and target batches differ in size");
	}
	double sq = 0.0;
	std::size_t n = 0;
	for (std::size_t w = 0; w < preds.size(); ++w) {
		check_same_shape(preds[w], targets[w]);
		for (std::size_t t = 0; t < preds[w].rows(); ++t) {
			for (std::size_t j = 0; j < preds[w].cols(); ++j) {
				const double r = preds[w](t, j) - targets[w](t, j);
				sq += r * r;
			}
		}
		n += preds[w].size();
	}
	if (n == 0) {
		throw DataError("mse of an empty batch is undefined");
	}
	return sq / static_cast<double>(n);
}

Gradient<DLinearModel> grad(const DLinearModel &model, std::span<const data::WindowPair> batch) {
	check_batch(batch, model.lookback(), model.horizon(), model.channels());
	Gradient<DLinearModel> g{model, 0.0};
	for (auto &m : g.params.trend_maps()) {
		zero(m);
	}
	for (auto &m : g.params.remainder_maps()) {
		zero(m);
	}

	Matrix trend;
	Matrix remainder;
	Matrix pred;
	double sq = 0.0;
	std::size_t n = 0;
	const bool shared = model.mode() == ChannelMode::shared;
	for (const auto &w : batch) {
		decompose_into(w.input, model.kernel_size(), trend, remainder);
		if (shared) {
			model::apply_shared(model.trend_maps().front(), trend, pred);
			model::apply_shared(model.remainder_maps().front(), remainder, pred, true);
		} else {
			pred = Matrix(model.horizon(), model.channels());
			for (std::size_t j = 0; j < model.channels(); ++j) {
				model::apply_column(model.trend_map(j), trend, j, pred);
				model::apply_column(model.remainder_map(j), remainder, j, pred, true);
			}
		}
		sq += residual_in_place(pred, w.target);
		n += pred.size();
		if (shared) {
			accumulate_shared(pred, trend, g.params.trend_maps().front());
			accumulate_shared(pred, remainder, g.params.remainder_maps().front());
		} else {
			for (std::size_t j = 0; j < model.channels(); ++j) {
				accumulate_column(pred, trend, j, g.params.trend_maps()[j]);
				accumulate_column(pred, remainder, j, g.params.remainder_maps()[j]);
			}
		}
	}

	const double factor = 2.0 / static_cast<double>(n);
	for (auto &m : g.params.trend_maps()) {
		scale(m, factor);
	}
	for (auto &m : g.params.remainder_maps()) {
		scale(m, factor);
	}
	g.loss = sq / static_cast<double>(n);
	return g;
}

Gradient<LinearMap> grad(const LinearMap &map, std::span<const data::WindowPair> batch) {
	check_batch(batch, map.lookback(), map.horizon(), 0);
	Gradient<LinearMap> g{map, 0.0};
	zero(g.params);
	Matrix pred;
	double sq = 0.0;
	std::size_t n = 0;
	for (const auto &w : batch) {
		model::apply_shared(map, w.input, pred);
		sq += residual_in_place(pred, w.target);
		n += pred.size();
		accumulate_shared(pred, w.input, g.params);
	}
	scale(g.params, 2.0 / static_cast<double>(n));
	g.loss = sq / static_cast<double>(n);
	return g;
}

std::vector<std::span<double>> parameter_buffers(DLinearModel &model) {
	std::vector<std::span<double>> out;
	for (auto &m : model.trend_maps()) {
		append_buffers(m, out);
	}
	for (auto &m : model.remainder_maps()) {
		append_buffers(m, out);
	}
	return out;
}

std::vector<std::span<double>> parameter_buffers(LinearMap &map) {
	std::vector<std::span<double>> out;
	append_buffers(map, out);
	return out;
}

std::vector<std::span<const double>> parameter_buffers(const DLinearModel &model) {
	std::vector<std::span<const double>> out;
	for (const auto &m : model.trend_maps()) {
		append_buffers(m, out);
	}
	for (const auto &m : model.remainder_maps()) {
		append_buffers(m, out);
	}
	return out;
}

std::vector<std::span<const double>> parameter_buffers(const LinearMap &map) {
	std::vector<std::span<const double>> out;
	append_buffers(map, out);
	return out;
}

Optimizer::Optimizer(const TrainConfig &config)
    : kind_(config.optimizer), lr_(config.learning_rate), beta1_(config.beta1), beta2_(config.beta2),
      eps_(config.adam_epsilon) {
}

void Optimizer::step(std::span<const std::span<double>> params, std::span<const std::span<const double>> grads) {
	if (params.size() != grads.size()) {
		throw DataError("optimizer received mismatched parameter and gradient buffers");
	}
	std::size_t total = 0;
	for (std::size_t i = 0; i < params.size(); ++i) {
		if (params[i].size() != grads[i].size()) {
			throw DataError("optimizer buffer " + std::to_string(i) + " size mismatch");
		}
		total += params[i].size();
	}
	++steps_;

	if (kind_ == OptimizerKind::sgd) {
		for (std::size_t i = 0; i < params.size(); ++i) {
			for (std::size_t k = 0; k < params[i].size(); ++k) {
				params[i][k] -= lr_ * grads[i][k];
			}
		}
		return;
	}

	if (m_.empty()) {
		m_.assign(total, 0.0);
		v_.assign(total, 0.0);
	} else if (m_.size() != total) {
		throw DataError("optimizer state does not match the parameter count");
	}
	const double bias1 = 1.0 - std::pow(beta1_, static_cast<double>(steps_));
	const double bias2 = 1.0 - std::pow(beta2_, static_cast<double>(steps_));
	std::size_t offset = 0;
	for (std::size_t i = 0; i < params.size(); ++i) {
		for (std::size_t k = 0; k < params[i].size(); ++k, ++offset) {
			const double g = grads[i][k];
			m_[offset] = beta1_ * m_[offset] + (1.0 - beta1_) * g;
			v_[offset] = beta2_ * v_[offset] + (1.0 - beta2_) * g * g;
			const double m_hat = m_[offset] / bias1;
			const double v_hat = v_[offset] / bias2;
			params[i][k] -= lr_ * m_hat / (std::sqrt(v_hat) + eps_);
		}
	}
}

TrainReport fit(DLinearModel &model, std::span<const data::WindowPair> train_windows,
                std::span<const data::WindowPair> val_windows, const TrainConfig &config) {
	return fit_impl(model, train_windows, val_windows, config);
}

TrainReport fit(LinearMap &map, std::span<const data::WindowPair> train_windows,
                std::span<const data::WindowPair> val_windows, const TrainConfig &config) {
	return fit_impl(map, train_windows, val_windows, config);
}

std::string to_string(OptimizerKind kind) {
	return kind == OptimizerKind::adam ? "adam" : "sgd";
}

OptimizerKind optimizer_from_string(const std::string &name) {
	if (name == "adam") {
		return OptimizerKind::adam;
	}
	if (name == "sgd") {
		return OptimizerKind::sgd;
	}
	throw ConfigError("unknown optimizer '" + name + "' (expected adam or sgd)");
}

nlohmann::json to_json(const TrainConfig &c) {
	return {{"learning_rate", c.learning_rate}, {"batch_size", c.batch_size},
	        {"max_epochs", c.max_epochs},       {"patience", c.patience},
	        {"seed", c.seed},                   {"optimizer", to_string(c.optimizer)},
	        {"beta1", c.beta1},                 {"beta2", c.beta2},
	        {"adam_epsilon", c.adam_epsilon}};
}

TrainConfig train_config_from_json(const nlohmann::json &doc, TrainConfig c) {
	if (!doc.is_object()) {
		throw ConfigError("train settings must be an object");
	}
	try {
		for (const auto &[key, value] : doc.items()) {
			if (key == "learning_rate") {
				c.learning_rate = value.get<double>();
			} else if (key == "batch_size") {
				c.batch_size = value.get<std::size_t>();
			} else if (key == "max_epochs") {
				c.max_epochs = value.get<std::size_t>();
			} else if (key == "patience") {
				c.patience = value.get<std::size_t>();
			} else if (key == "seed") {
				c.seed = value.get<std::uint64_t>();
			} else if (key == "optimizer") {
				c.optimizer = optimizer_from_string(value.get<std::string>());
			} else if (key == "beta1") {
				c.beta1 = value.get<double>();
			} else if (key == "beta2") {
				c.beta2 = value.get<double>();
			} else if (key == "adam_epsilon") {
				c.adam_epsilon = value.get<double>();
			} else {
				throw ConfigError("unknown train setting '" + key + "'");
			}
		}
	} catch (const nlohmann::json::exception &e) {
		throw ConfigError(std::string("invalid train settings: ") + e.what());
	}
	c.validate();
	return c;
}

nlohmann::json to_json(const TrainReport &r) {
	return {{"epoch_train_losses", r.epoch_train_losses},
	        {"epoch_val_losses", r.epoch_val_losses},
	        {"best_epoch", r.best_epoch},
	        {"best_val_loss", r.epoch_val_losses.empty() ? 0.0 : r.best_val_loss()},
	        {"final_params_snapshot_id", r.final_params_snapshot_id},
	        {"stopped_early", r.stopped_early},
	        {"reduction_order", r.reduction_order}};
}

} // namespace dlinear::train

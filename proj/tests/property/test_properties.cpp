// Randomized invariant checks. Every case derives from a fixed seed, and the
// failing case index is reported so it can be replayed.
#include "dlinear/decompose.hpp"
#include "dlinear/experiment.hpp"
#include "dlinear/metrics.hpp"
#include "dlinear/model.hpp"
#include "dlinear/synthetic.hpp"
#include "dlinear/train.hpp"

#include "test_support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace dlinear;
using model::ChannelMode;
using model::DLinearModel;
using model::LinearMap;
using testing_support::draw_odd_kernel;
using testing_support::draw_real;
using testing_support::draw_size;
using testing_support::max_abs;
using testing_support::max_abs_diff;
using testing_support::random_matrix;

namespace {

template <class Body>
void for_all(std::uint64_t seed, int cases, Body body) {
	Rng rng(seed);
	for (int i = 0; i < cases; ++i) {
		INFO("case " << i << " (seed " << seed << ")");
		body(rng);
	}
}

void randomize(DLinearModel &m, Rng &rng) {
	for (auto buf : train::parameter_buffers(m)) {
		for (auto &v : buf) {
			v = rng.normal();
		}
	}
}

Matrix permute_columns(MatrixView x, const std::vector<std::size_t> &perm) {
	Matrix out(x.rows(), x.cols());
	for (std::size_t t = 0; t < x.rows(); ++t) {
		for (std::size_t j = 0; j < x.cols(); ++j) {
			out(t, j) = x(t, perm[j]);
		}
	}
	return out;
}

std::vector<std::size_t> random_permutation(Rng &rng, std::size_t n) {
	std::vector<std::size_t> p(n);
	std::iota(p.begin(), p.end(), std::size_t{0});
	rng.shuffle(p.begin(), p.end());
	return p;
}

Matrix combine(double a, MatrixView x, double b, MatrixView y) {
	Matrix out(x.rows(), x.cols());
	for (std::size_t i = 0; i < x.size(); ++i) {
		out.values()[i] = a * x.values()[i] + b * y.values()[i];
	}
	return out;
}

} // namespace

// ---- data ----

TEST_CASE("scaler forward then inverse is the identity", "[property][data]") {
	for_all(101, 200, [](Rng &rng) {
		const auto n = draw_size(rng, 2, 60);
		const auto c = draw_size(rng, 1, 5);
		auto m = random_matrix(rng, n, c);
		for (std::size_t t = 0; t < n; ++t) {
			m(t, 0) += draw_real(rng, -1e4, 1e4);
		}
		const auto s = testing_support::make_series(m);
		const auto scaler = data::fit_scaler(s);
		const auto back = data::apply_scaler(data::apply_scaler(s, scaler, data::Direction::forward), scaler,
		                                     data::Direction::inverse);
		for (std::size_t i = 0; i < m.size(); ++i) {
			const double v = m.values()[i];
			CHECK(std::abs(back.values.values()[i] - v) <= 1e-10 * std::max(1.0, std::abs(v)));
		}
	});
}

TEST_CASE("scaler statistics match a two-pass long double oracle", "[property][data]") {
	for_all(102, 100, [](Rng &rng) {
		const auto n = draw_size(rng, 2, 80);
		const auto m = random_matrix(rng, n, 2);
		const auto scaler = data::fit_scaler(testing_support::make_series(m));
		for (std::size_t j = 0; j < 2; ++j) {
			long double mean = 0;
			for (std::size_t t = 0; t < n; ++t) {
				mean += m(t, j);
			}
			mean /= n;
			long double var = 0;
			for (std::size_t t = 0; t < n; ++t) {
				var += (m(t, j) - mean) * (m(t, j) - mean);
			}
			const double sd = static_cast<double>(std::sqrt(var / n));
			CHECK(std::abs(scaler.means[j] - static_cast<double>(mean)) <= 1e-12 * std::max(1.0, max_abs(m)));
			CHECK(std::abs(scaler.stds[j] - sd) <= 1e-10 * std::max(1e-300, sd));
		}
	});
}

TEST_CASE("scaler fitted on train ignores val and test", "[property][data]") {
	for_all(103, 50, [](Rng &rng) {
		const auto n = draw_size(rng, 20, 200);
		const auto series = testing_support::make_series(random_matrix(rng, n, 3));
		const auto spec = data::SplitSpec::ratio(0.7, 0.1, 0.2);
		const auto parts = data::split(series, spec);
		const auto from_split = data::fit_scaler(parts.train);
		const auto alone = data::fit_scaler(data::slice(series, 0, parts.train.length()));
		CHECK(from_split.means == alone.means);
		CHECK(from_split.stds == alone.stds);
	});
}

TEST_CASE("split is lossless at the row level", "[property][data]") {
	for_all(104, 300, [](Rng &rng) {
		const auto n = draw_size(rng, 100, 100000);
		const double train = draw_real(rng, 0.05, 0.85);
		const double val = draw_real(rng, 0.01, 0.95 - train) ;
		const auto spec = data::SplitSpec::ratio(train, val, 1.0 - train - val);
		const auto b = data::split_boundaries(n, spec);
		CHECK(b.train_begin == 0);
		CHECK(b.val_begin == b.train_end);
		CHECK(b.test_begin == b.val_end);
		CHECK(b.test_end + b.unused_tail == n);
		CHECK(b.train_end == static_cast<std::size_t>(std::floor(static_cast<double>(n) * train + 1e-9)));

		const std::size_t steps = draw_size(rng, 1, 5);
		const auto cal = data::SplitSpec::ett_calendar(steps);
		if (n >= cal.train_steps + cal.val_steps + cal.test_steps) {
			const auto cb = data::split_boundaries(n, cal);
			CHECK(cb.test_end + cb.unused_tail == n);
		}
	});
}

TEST_CASE("window rows are adjacent source rows", "[property][data]") {
	for_all(105, 200, [](Rng &rng) {
		const auto lookback = draw_size(rng, 1, 20);
		const auto horizon = draw_size(rng, 1, 20);
		const auto n = lookback + horizon + draw_size(rng, 0, 40);
		const auto c = draw_size(rng, 1, 4);
		const auto full = testing_support::index_series(n + 30, c);
		const auto ctx_len = draw_size(rng, 0, 30);
		const auto context = data::slice(full, 30 - ctx_len, 30);
		const auto segment = data::slice(full, 30, 30 + n);
		const auto w = data::make_windows(segment, ctx_len ? &context : nullptr, lookback, horizon);
		CHECK(w.size() == data::window_count(n, ctx_len, lookback, horizon));
		CHECK(w.size() == n - horizon + 1 - (lookback - std::min(ctx_len, lookback)));
		for (const auto &p : w) {
			for (std::size_t j = 0; j < c; ++j) {
				CHECK(p.target(0, j) - p.input(lookback - 1, j) == 1.0);
				CHECK(p.target(0, j) == 1000.0 * j + 30 + p.origin_index);
			}
		}
	});
}

// ---- decompose ----

TEST_CASE("trend plus remainder reconstructs the input", "[property][decompose]") {
	for_all(201, 300, [](Rng &rng) {
		const auto x = random_matrix(rng, draw_size(rng, 1, 300), draw_size(rng, 1, 6));
		const auto d = decompose(x, draw_odd_kernel(rng, 51));
		for (std::size_t i = 0; i < x.size(); ++i) {
			const double v = x.values()[i];
			CHECK(std::abs(d.trend.values()[i] + d.remainder.values()[i] - v) <= 1e-12 * std::max(std::abs(v), max_abs(x)));
		}
	});
}

TEST_CASE("trend matches the padded moving-average oracle", "[property][decompose]") {
	for_all(202, 200, [](Rng &rng) {
		const auto x = random_matrix(rng, draw_size(rng, 1, 120), draw_size(rng, 1, 4));
		const int k = draw_odd_kernel(rng, 41);
		CHECK(max_abs_diff(decompose(x, k).trend, testing_support::oracle_trend(x, k)) <= 1e-13 * max_abs(x));
	});
}

TEST_CASE("interior trend is the plain centered average", "[property][decompose]") {
	for_all(203, 200, [](Rng &rng) {
		const int k = draw_odd_kernel(rng, 25);
		const auto half = static_cast<std::size_t>(k / 2);
		const auto x = random_matrix(rng, 2 * half + draw_size(rng, 1, 60), 2);
		const auto d = decompose(x, k);
		for (std::size_t t = half; t + half < x.rows(); ++t) {
			for (std::size_t j = 0; j < 2; ++j) {
				long double sum = 0;
				for (std::size_t i = t - half; i <= t + half; ++i) {
					sum += x(i, j);
				}
				CHECK(std::abs(d.trend(t, j) - static_cast<double>(sum / k)) <= 1e-13 * max_abs(x));
			}
		}
	});
}

TEST_CASE("decomposition is linear", "[property][decompose]") {
	for_all(204, 200, [](Rng &rng) {
		const auto rows = draw_size(rng, 1, 100);
		const auto cols = draw_size(rng, 1, 4);
		const auto x = random_matrix(rng, rows, cols);
		const auto y = random_matrix(rng, rows, cols);
		const double a = rng.normal(), b = rng.normal();
		const int k = draw_odd_kernel(rng);
		const auto lhs = decompose(combine(a, x, b, y), k);
		const auto dx = decompose(x, k), dy = decompose(y, k);
		const double scale = std::max({1.0, std::abs(a) * max_abs(x), std::abs(b) * max_abs(y)});
		CHECK(max_abs_diff(lhs.trend, combine(a, dx.trend, b, dy.trend)) <= 1e-10 * scale);
		CHECK(max_abs_diff(lhs.remainder, combine(a, dx.remainder, b, dy.remainder)) <= 1e-10 * scale);
	});
}

TEST_CASE("columns decompose independently", "[property][decompose]") {
	for_all(205, 200, [](Rng &rng) {
		const auto x = random_matrix(rng, draw_size(rng, 1, 80), draw_size(rng, 1, 6));
		const auto perm = random_permutation(rng, x.cols());
		const int k = draw_odd_kernel(rng);
		const auto a = decompose(permute_columns(x, perm), k);
		const auto b = decompose(x, k);
		CHECK(a.trend == permute_columns(b.trend, perm));
		CHECK(a.remainder == permute_columns(b.remainder, perm));
	});
}

TEST_CASE("affine trend has no interior remainder", "[property][decompose][synthetic]") {
	for_all(206, 100, [](Rng &rng) {
		synthetic::SyntheticSpec s;
		s.kind = synthetic::Kind::linear_trend;
		s.slope = draw_real(rng, -5, 5);
		s.length = draw_size(rng, 30, 400);
		const int k = draw_odd_kernel(rng);
		const auto d = decompose(synthetic::generate(s).values, k);
		const auto half = static_cast<std::size_t>(k / 2);
		for (std::size_t t = half; t + half < s.length; ++t) {
			CHECK(std::abs(d.remainder(t, 0)) < 1e-10);
		}
	});
}

// ---- model ----

TEST_CASE("forward is linear when biases vanish", "[property][model]") {
	for_all(301, 200, [](Rng &rng) {
		const auto lookback = draw_size(rng, 1, 40);
		const auto c = draw_size(rng, 1, 5);
		DLinearModel m(rng.bounded(2) ? ChannelMode::shared : ChannelMode::individual, lookback, draw_size(rng, 1, 20), c,
		               draw_odd_kernel(rng));
		randomize(m, rng);
		for (auto *maps : {&m.trend_maps(), &m.remainder_maps()}) {
			for (auto &map : *maps) {
				std::fill(map.bias.begin(), map.bias.end(), 0.0);
			}
		}
		const auto x = random_matrix(rng, lookback, c);
		const auto y = random_matrix(rng, lookback, c);
		const double a = rng.normal(), b = rng.normal();
		const auto lhs = model::forward(m, combine(a, x, b, y)).values;
		const auto rhs = combine(a, model::forward(m, x).values, b, model::forward(m, y).values);
		CHECK(max_abs_diff(lhs, rhs) <= 1e-10 * std::max(1.0, max_abs(rhs)));
	});
}

TEST_CASE("channels are processed independently", "[property][model]") {
	for_all(302, 200, [](Rng &rng) {
		const auto lookback = draw_size(rng, 1, 30);
		const auto c = draw_size(rng, 1, 6);
		const auto mode = rng.bounded(2) ? ChannelMode::shared : ChannelMode::individual;
		DLinearModel m(mode, lookback, draw_size(rng, 1, 12), c, draw_odd_kernel(rng, 9));
		randomize(m, rng);
		const auto x = random_matrix(rng, lookback, c);
		const auto perm = random_permutation(rng, c);
		auto permuted = m;
		if (mode == ChannelMode::individual) {
			for (std::size_t j = 0; j < c; ++j) {
				permuted.trend_maps()[j] = m.trend_maps()[perm[j]];
				permuted.remainder_maps()[j] = m.remainder_maps()[perm[j]];
			}
		}
		CHECK(model::forward(permuted, permute_columns(x, perm)).values ==
		      permute_columns(model::forward(m, x).values, perm));
	});
}

TEST_CASE("forward equals branch maps applied to the decomposition oracle", "[property][model]") {
	for_all(303, 200, [](Rng &rng) {
		const auto lookback = draw_size(rng, 1, 40);
		const auto c = draw_size(rng, 1, 5);
		DLinearModel m(rng.bounded(2) ? ChannelMode::shared : ChannelMode::individual, lookback, draw_size(rng, 1, 16), c,
		               draw_odd_kernel(rng));
		randomize(m, rng);
		const auto x = random_matrix(rng, lookback, c);
		const auto oracle = testing_support::oracle_forward(m, x);
		CHECK(max_abs_diff(model::forward(m, x).values, oracle) <= 1e-12 * std::max(1.0, max_abs(oracle)));
	});
}

TEST_CASE("repeat-c rows all equal the last input row", "[property][model]") {
	for_all(304, 100, [](Rng &rng) {
		const auto x = random_matrix(rng, draw_size(rng, 1, 20), draw_size(rng, 1, 5));
		const auto y = model::repeat_c(x, draw_size(rng, 1, 50)).values;
		for (std::size_t t = 0; t < y.rows(); ++t) {
			CHECK(std::equal(y.row(t).begin(), y.row(t).end(), x.row(x.rows() - 1).begin()));
		}
	});
}

TEST_CASE("parameter count equals the number of stored scalars", "[property][model]") {
	for (std::size_t lookback = 1; lookback <= 8; ++lookback) {
		for (std::size_t horizon = 1; horizon <= 8; ++horizon) {
			for (std::size_t c = 1; c <= 8; ++c) {
				for (const auto mode : {ChannelMode::shared, ChannelMode::individual}) {
					const DLinearModel m(mode, lookback, horizon, c, 3);
					std::uint64_t stored = 0;
					for (const auto *maps : {&m.trend_maps(), &m.remainder_maps()}) {
						for (const auto &map : *maps) {
							stored += map.weight.values().size() + map.bias.size();
						}
					}
					const std::uint64_t maps = mode == ChannelMode::shared ? 1 : c;
					CHECK(model::count_params(m) == stored);
					CHECK(stored == 2 * maps * (horizon * lookback + horizon));
				}
			}
		}
	}
}

// ---- train ----

TEST_CASE("analytic gradients match central differences", "[property][train]") {
	for_all(401, 40, [](Rng &rng) {
		const auto lookback = draw_size(rng, 1, 5);
		const auto horizon = draw_size(rng, 1, 5);
		const auto c = draw_size(rng, 1, 5);
		auto w = testing_support::windows_over(random_matrix(rng, lookback + horizon + draw_size(rng, 0, 6), c),
		                                       lookback, horizon);
		DLinearModel m(rng.bounded(2) ? ChannelMode::shared : ChannelMode::individual, lookback, horizon, c,
		               draw_odd_kernel(rng, 7));
		randomize(m, rng);
		const auto g = train::grad(m, w.pairs);
		const auto analytic = train::parameter_buffers(g.params);
		auto params = train::parameter_buffers(m);
		for (std::size_t b = 0; b < params.size(); ++b) {
			for (std::size_t k = 0; k < params[b].size(); ++k) {
				const double saved = params[b][k];
				params[b][k] = saved + 1e-5;
				const double up = train::grad(m, w.pairs).loss;
				params[b][k] = saved - 1e-5;
				const double down = train::grad(m, w.pairs).loss;
				params[b][k] = saved;
				const double fd = (up - down) / 2e-5;
				CHECK(std::abs(analytic[b][k] - fd) / std::max(1.0, std::abs(analytic[b][k])) < 1e-4);
			}
		}
	});
}

TEST_CASE("small full-batch gradient steps never increase the loss", "[property][train]") {
	for_all(402, 10, [](Rng &rng) {
		synthetic::SyntheticSpec s;
		s.kind = synthetic::Kind::trend_plus_seasonal;
		s.slope = draw_real(rng, 0.0, 0.05);
		s.noise_std = 0.3;
		s.seed = rng.next_u64();
		s.length = 300;
		s.channels = 2;
		const auto raw = synthetic::generate(s);
		const auto z = data::apply_scaler(raw, data::fit_scaler(raw), data::Direction::forward);
		const auto w = data::make_windows(z, 48, 12);
		DLinearModel m(ChannelMode::shared, 48, 12, 2, 25);
		train::TrainConfig c;
		c.optimizer = train::OptimizerKind::sgd;
		c.learning_rate = 1e-4;
		train::Optimizer opt(c);
		double last = train::grad(m, w.pairs()).loss;
		for (int step = 0; step < 10; ++step) {
			const auto g = train::grad(m, w.pairs());
			opt.step(train::parameter_buffers(m), train::parameter_buffers(g.params));
			const double now = train::grad(m, w.pairs()).loss;
			CHECK(now <= last);
			last = now;
		}
	});
}

TEST_CASE("Adam moments are identical across reruns", "[property][train]") {
	for_all(403, 20, [](Rng &rng) {
		auto w = testing_support::windows_over(random_matrix(rng, 60, 2), 8, 4);
		train::TrainConfig c;
		c.seed = rng.next_u64();
		const auto trace = [&] {
			DLinearModel m(ChannelMode::individual, 8, 4, 2, 3);
			train::Optimizer opt(c);
			Rng order(c.seed);
			for (int k = 0; k < 5; ++k) {
				const auto start = order.bounded(w.pairs.size() - 8);
				const std::span<const data::WindowPair> batch(w.pairs.data() + start, 8);
				const auto g = train::grad(m, batch);
				opt.step(train::parameter_buffers(m), train::parameter_buffers(g.params));
			}
			return std::make_pair(opt.first_moment(), opt.second_moment());
		};
		CHECK(trace() == trace());
	});
}

TEST_CASE("restored model scores exactly the best validation loss", "[property][train]") {
	for_all(404, 8, [](Rng &rng) {
		auto tr = testing_support::windows_over(random_matrix(rng, 150, 2), 12, 4);
		auto va = testing_support::windows_over(random_matrix(rng, 50, 2), 12, 4);
		DLinearModel m(rng.bounded(2) ? ChannelMode::shared : ChannelMode::individual, 12, 4, 2, 5);
		train::TrainConfig c;
		c.seed = rng.next_u64();
		c.max_epochs = 12;
		c.patience = draw_size(rng, 0, 4);
		c.learning_rate = draw_real(rng, 0.001, 0.05);
		const auto report = train::fit(m, tr.pairs, va.pairs, c);
		const double best = *std::min_element(report.epoch_val_losses.begin(), report.epoch_val_losses.end());
		const auto fn = [&m](MatrixView x) { return model::forward(m, x).values; };
		CHECK(metrics::evaluate(fn, va.pairs).mse == best);
		CHECK(report.best_val_loss() == best);
	});
}

// ---- metrics ----

namespace {

struct RandomEval {
	std::vector<Matrix> preds;
	testing_support::OwnedWindows windows;
	metrics::ForecastFn fn() const {
		return [this](MatrixView x) {
			// The input's first value is its window index.
			return preds[static_cast<std::size_t>(x(0, 0))];
		};
	}
};

RandomEval random_eval(Rng &rng, std::size_t n, std::size_t horizon, std::size_t c, double shift = 0.0) {
	RandomEval e;
	Matrix source(n * (1 + horizon), c);
	for (std::size_t i = 0; i < n; ++i) {
		const std::size_t base = i * (1 + horizon);
		for (std::size_t j = 0; j < c; ++j) {
			source(base, j) = static_cast<double>(i);
		}
		for (std::size_t t = 0; t < horizon; ++t) {
			for (std::size_t j = 0; j < c; ++j) {
				source(base + 1 + t, j) = rng.normal() + shift;
			}
		}
		Matrix p(horizon, c);
		for (auto &v : p.values()) {
			v = rng.normal() + shift;
		}
		e.preds.push_back(std::move(p));
	}
	e.windows = testing_support::windows_over(std::move(source), 1, horizon, 1 + horizon);
	return e;
}

} // namespace

TEST_CASE("metric invariants", "[property][metrics]") {
	for_all(501, 100, [](Rng &rng) {
		const auto n = draw_size(rng, 2, 30);
		const auto horizon = draw_size(rng, 1, 6);
		const auto c = draw_size(rng, 1, 4);
		const auto e = random_eval(rng, n, horizon, c);
		const auto s = metrics::evaluate(e.fn(), e.windows.pairs);
		CHECK(s.n_windows == n);
		CHECK(s.mse >= 0.0);
		CHECK(s.mae * s.mae <= s.mse * (1 + 1e-12));

		auto doubled = e.windows.pairs;
		doubled.insert(doubled.end(), e.windows.pairs.begin(), e.windows.pairs.end());
		const auto d = metrics::evaluate(e.fn(), doubled);
		CHECK(d.mse == Catch::Approx(s.mse).epsilon(1e-13));
		CHECK(d.mae == Catch::Approx(s.mae).epsilon(1e-13));

		const auto cut = draw_size(rng, 1, n - 1);
		const std::span<const data::WindowPair> all(e.windows.pairs);
		const std::vector<metrics::EvalSummary> parts = {metrics::evaluate(e.fn(), all.first(cut)),
		                                                 metrics::evaluate(e.fn(), all.subspan(cut))};
		const auto joined = metrics::combine(parts);
		CHECK(std::abs(joined.mse - s.mse) <= 1e-12 * std::max(1.0, s.mse));
		CHECK(std::abs(joined.mae - s.mae) <= 1e-12 * std::max(1.0, s.mae));
		CHECK(joined.n_elements == s.n_elements);
	});
}

TEST_CASE("metrics ignore a common shift of prediction and target", "[property][metrics]") {
	for_all(502, 100, [](Rng &rng) {
		const std::uint64_t seed = rng.next_u64();
		const double shift = draw_real(rng, -50, 50);
		Rng a(seed), b(seed);
		const auto base = random_eval(a, 10, 3, 2);
		const auto moved = random_eval(b, 10, 3, 2, shift);
		const auto s0 = metrics::evaluate(base.fn(), base.windows.pairs);
		const auto s1 = metrics::evaluate(moved.fn(), moved.windows.pairs);
		CHECK(s1.mse == Catch::Approx(s0.mse).epsilon(1e-9));
		CHECK(s1.mae == Catch::Approx(s0.mae).epsilon(1e-9));
	});
}

// ---- synthetic ----

TEST_CASE("noiseless sinusoid obeys the two-lag recurrence", "[property][synthetic]") {
	for_all(601, 100, [](Rng &rng) {
		synthetic::SyntheticSpec s;
		s.kind = synthetic::Kind::sinusoid;
		s.period = draw_real(rng, 2.5, 200);
		s.amplitude = draw_real(rng, 0.1, 10);
		s.channels = draw_size(rng, 1, 3);
		s.length = 500;
		const auto x = synthetic::generate(s).values;
		const double a = 2 * std::cos(2 * std::acos(-1.0) / s.period);
		for (std::size_t t = 2; t < s.length; ++t) {
			for (std::size_t j = 0; j < s.channels; ++j) {
				CHECK(std::abs(x(t, j) - (a * x(t - 1, j) - x(t - 2, j))) < 1e-9 * s.amplitude);
			}
		}
	});
}

// ---- bench ----

TEST_CASE("identical configs reproduce identical summaries", "[property][bench]") {
	for_all(701, 4, [](Rng &rng) {
		bench::ExperimentConfig c;
		synthetic::SyntheticSpec s;
		s.kind = synthetic::Kind::trend_plus_seasonal;
		s.slope = draw_real(rng, 0, 0.02);
		s.noise_std = 0.2;
		s.seed = rng.next_u64();
		s.length = 500;
		s.channels = 2;
		c.dataset.synthetic = s;
		c.L = 36;
		c.T = 12;
		c.model = rng.bounded(2) ? bench::ModelKind::dlinear_i : bench::ModelKind::linear;
		c.train.seed = rng.next_u64();
		c.train.max_epochs = 3;
		c.train.patience = 3;
		const auto a = bench::run(c);
		const auto b = bench::run(c);
		CHECK(metrics::to_json_line(a.summary) == metrics::to_json_line(b.summary));
		CHECK(a.report->epoch_train_losses == b.report->epoch_train_losses);
	});
}

TEST_CASE("sweep error falls with look-back up to two periods", "[property][bench]") {
	for_all(709, 3, [](Rng &rng) {
		const std::size_t period = rng.bounded(2) ? 12 : 24;
		bench::ExperimentConfig c;
		synthetic::SyntheticSpec s;
		s.kind = synthetic::Kind::trend_plus_seasonal;
		s.period = static_cast<double>(period);
		s.noise_std = draw_real(rng, 0.1, 0.5);
		s.seed = rng.next_u64();
		s.length = 3000;
		c.dataset.synthetic = s;
		c.T = period;
		c.model = bench::ModelKind::dlinear_s;
		c.train.seed = rng.next_u64();
		c.train.max_epochs = 10;
		const auto r = bench::sweep({c, {period / 4, period / 2, period, 2 * period}, {period}});
		REQUIRE(r.summaries.size() == 4);
		for (std::size_t i = 1; i < r.summaries.size(); ++i) {
			INFO("L=" << r.summaries[i].L << " after L=" << r.summaries[i - 1].L);
			CHECK(r.summaries[i].mse <= 1.05 * r.summaries[i - 1].mse);
		}
	});
}

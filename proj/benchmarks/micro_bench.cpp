#include "dlinear/decompose.hpp"
#include "dlinear/model.hpp"
#include "dlinear/rng.hpp"
#include "dlinear/train.hpp"

#include <benchmark/benchmark.h>

namespace {

dlinear::Matrix random_block(std::size_t rows, std::size_t cols, std::uint64_t seed) {
	dlinear::Rng rng(seed);
	dlinear::Matrix m(rows, cols);
	for (auto &v : m.values()) {
		v = rng.normal();
	}
	return m;
}

void BM_Decompose(benchmark::State &state) {
	const auto x = random_block(static_cast<std::size_t>(state.range(0)), 7, 1);
	for (auto _ : state) {
		benchmark::DoNotOptimize(dlinear::decompose(x, 25));
	}
	state.SetItemsProcessed(state.iterations() * state.range(0) * 7);
}
BENCHMARK(BM_Decompose)->Arg(96)->Arg(336)->Arg(720);

// 321 channels matches the Electricity dataset.
void BM_ForwardShared(benchmark::State &state) {
	const std::size_t c = static_cast<std::size_t>(state.range(0));
	dlinear::model::DLinearModel model(dlinear::model::ChannelMode::shared, 96, 720, c, 25);
	const auto x = random_block(96, c, 2);
	for (auto _ : state) {
		benchmark::DoNotOptimize(dlinear::model::forward(model, x));
	}
	state.counters["MACs"] = static_cast<double>(dlinear::model::count_macs(model, c));
}
BENCHMARK(BM_ForwardShared)->Arg(7)->Arg(321)->Unit(benchmark::kMillisecond);

void BM_ForwardIndividual(benchmark::State &state) {
	dlinear::model::DLinearModel model(dlinear::model::ChannelMode::individual, 96, 96, 7, 25);
	const auto x = random_block(96, 7, 3);
	for (auto _ : state) {
		benchmark::DoNotOptimize(dlinear::model::forward(model, x));
	}
}
BENCHMARK(BM_ForwardIndividual);

void BM_GradBatch(benchmark::State &state) {
	const std::size_t lookback = 96, horizon = 96, c = 7, batch = 32;
	dlinear::model::DLinearModel model(dlinear::model::ChannelMode::shared, lookback, horizon, c, 25);
	const auto series = random_block(lookback + horizon + batch, c, 4);
	std::vector<dlinear::data::WindowPair> pairs;
	for (std::size_t b = 0; b < batch; ++b) {
		pairs.push_back({series.view().slice_rows(b, lookback), series.view().slice_rows(b + lookback, horizon), b});
	}
	for (auto _ : state) {
		benchmark::DoNotOptimize(dlinear::train::grad(model, pairs));
	}
}
BENCHMARK(BM_GradBatch)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();

#pragma once

#include "dlinear/data.hpp"
#include "dlinear/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include <nlohmann/json.hpp>

namespace dlinear::metrics {

/// Pooled point-forecast errors over an evaluation split.
struct EvalSummary {
	double mse = 0.0;
	double mae = 0.0;
	std::size_t n_windows = 0;
	std::uint64_t n_elements = 0;
	std::size_t L = 0;
	std::size_t T = 0;
	std::size_t C = 0;
	std::string dataset_id;
	std::string model_id;

	bool operator==(const EvalSummary &) const = default;
};

/// Maps an L x C input block to a T x C forecast.
using ForecastFn = std::function<Matrix(MatrixView)>;

/**
 * Mean squared and mean absolute error over every window, step and variate,
 * each element weighted equally. Residuals are summed window-major, then by
 * row, then by column. Throws DataError for an empty window set and
 * NumericalError when a forecast is non-finite.
 */
EvalSummary evaluate(const ForecastFn &forecast, std::span<const data::WindowPair> windows);

/// Element-weighted recombination of summaries computed on disjoint window shards.
EvalSummary combine(std::span<const EvalSummary> parts);

nlohmann::json to_json(const EvalSummary &summary);
EvalSummary summary_from_json(const nlohmann::json &doc);

/// Single-line JSON rendering (for JSON-lines files).
std::string to_json_line(const EvalSummary &summary);

} // namespace dlinear::metrics

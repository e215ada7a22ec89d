#pragma once

#include "dlinear/metrics.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dlinear::reference {

/// Which published experiment a reference number comes from.
enum class Setting {
	main,     // look-back 96 (36 for ILI)
	long_lookback, // look-back 336 for the linear models
	ablation, // decomposition-free linear model, look-back 96 (36 for ILI), MSE only
};

/// A published error figure, kept as a constant for side-by-side reports.
struct PublishedResult {
	std::string_view dataset;
	std::string_view model;
	std::size_t lookback;
	std::size_t horizon;
	double mse;
	double mae; // NaN when not published
	Setting setting;
};

std::span<const PublishedResult> published_results();

/// Exact match on dataset, model, look-back and horizon.
std::optional<PublishedResult> find_published(std::string_view dataset, std::string_view model, std::size_t lookback,
                                              std::size_t horizon);

/**
 * @brief Markdown table of measured summaries next to published numbers.
 *
 * Each summary row is matched on (dataset_id, model_id, L, T); the best
 * published transformer results at look-back 96 are appended for the same
 * dataset and horizon. Published columns are labeled as such, and a footnote
 * records that reference rows may use a different look-back than the measured row.
 */
std::string render_comparison(std::span<const metrics::EvalSummary> summaries);

} // namespace dlinear::reference

#pragma once

#include "dlinear/matrix.hpp"

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dlinear::data {

/**
 * @brief Multivariate series: N time steps (rows) by C variates (columns).
 *
 * Timestamps are carried through for bookkeeping only; no model reads them.
 */
struct TimeSeries {
	Matrix values;
	std::vector<std::string> timestamps;
	std::vector<std::string> variate_names;

	std::size_t length() const {
		return values.rows();
	}
	std::size_t channels() const {
		return values.cols();
	}

	/// Throws DataError if shapes disagree or a value is non-finite.
	void validate() const;
};

/// Rows [begin, end) of a series, names preserved.
TimeSeries slice(const TimeSeries &series, std::size_t begin, std::size_t end);

struct CsvSchema {
	/// Name of the timestamp column. When unset, a leading column named
	/// "date" (any case) or holding non-numeric values is treated as the timestamp.
	std::optional<std::string> timestamp_column;
};

TimeSeries load_csv(const std::filesystem::path &path, const CsvSchema &schema = {});

/// Writes the series as CSV with a "date" column when timestamps are present.
void write_csv(const TimeSeries &series, const std::filesystem::path &path);

enum class SplitMode { ratio, ett_calendar };

struct SplitSpec {
	SplitMode mode = SplitMode::ratio;
	double train_fraction = 0.7;
	double val_fraction = 0.1;
	double test_fraction = 0.2;
	std::size_t train_steps = 0;
	std::size_t val_steps = 0;
	std::size_t test_steps = 0;
	std::optional<std::size_t> train_truncate_steps;

	static SplitSpec ratio(double train, double val, double test);
	/// 12/4/4 months in steps; `steps_per_day` is 24 for hourly and 96 for 15-minute data.
	static SplitSpec ett_calendar(std::size_t steps_per_day);

	void validate() const;
};

/// Half-open row ranges of each segment in the source series.
struct SplitBoundaries {
	std::size_t train_begin = 0;
	std::size_t train_end = 0;
	std::size_t val_begin = 0;
	std::size_t val_end = 0;
	std::size_t test_begin = 0;
	std::size_t test_end = 0;
	/// Rows after test_end not assigned to any segment.
	std::size_t unused_tail = 0;
	/// Rows dropped from the front of the train segment by truncation.
	std::size_t truncated_rows = 0;
};

struct SplitResult {
	TimeSeries train;
	TimeSeries val;
	TimeSeries test;
	SplitBoundaries boundaries;
};

/// Computes segment boundaries only; `split` materializes them.
SplitBoundaries split_boundaries(std::size_t length, const SplitSpec &spec);
SplitResult split(const TimeSeries &series, const SplitSpec &spec);

/// Per-variate standardization fitted on training data.
struct Scaler {
	std::vector<double> means;
	std::vector<double> stds;
	double epsilon = 1e-8;
};

enum class Direction { forward, inverse };

Scaler fit_scaler(const TimeSeries &train, double epsilon = 1e-8);
TimeSeries apply_scaler(const TimeSeries &series, const Scaler &scaler, Direction direction);

/// One supervised example. Both blocks are views into storage owned by a WindowSet.
struct WindowPair {
	MatrixView input;
	MatrixView target;
	/// Row of `segment` holding the first target step.
	std::size_t origin_index = 0;
};

/**
 * @brief Sliding windows over one segment.
 *
 * Owns the (context + segment) rows, so WindowPair views stay valid for the
 * lifetime of any copy of the set.
 */
class WindowSet {
public:
	WindowSet() = default;

	std::size_t lookback() const {
		return lookback_;
	}
	std::size_t horizon() const {
		return horizon_;
	}
	std::size_t channels() const {
		return rows_ ? rows_->cols() : 0;
	}
	std::size_t size() const {
		return pairs_.size();
	}
	bool empty() const {
		return pairs_.empty();
	}

	const WindowPair &operator[](std::size_t i) const {
		return pairs_[i];
	}
	std::span<const WindowPair> pairs() const {
		return pairs_;
	}
	auto begin() const {
		return pairs_.begin();
	}
	auto end() const {
		return pairs_.end();
	}

private:
	friend WindowSet make_windows(const TimeSeries &, const TimeSeries *, std::size_t, std::size_t);

	std::shared_ptr<const Matrix> rows_;
	std::vector<WindowPair> pairs_;
	std::size_t lookback_ = 0;
	std::size_t horizon_ = 0;
};

/**
 * @brief All windows whose targets fall inside `segment`.
 *
 * When `context` is given, its trailing rows (up to `lookback`) are prepended so
 * the look-back of early windows may reach into the preceding segment.
 * Throws DataError naming L, T and the available length when no window fits.
 */
WindowSet make_windows(const TimeSeries &segment, const TimeSeries *context, std::size_t lookback,
                       std::size_t horizon);

inline WindowSet make_windows(const TimeSeries &segment, std::size_t lookback, std::size_t horizon) {
	return make_windows(segment, nullptr, lookback, horizon);
}

/// Number of windows `make_windows` would produce, or 0 when infeasible.
std::size_t window_count(std::size_t segment_length, std::size_t context_length, std::size_t lookback,
                         std::size_t horizon);

// Serialization of split and scaler state: {mode, boundaries, means, stds, epsilon}.
nlohmann::json to_json(const SplitSpec &spec, const SplitBoundaries &boundaries, const Scaler &scaler);
Scaler scaler_from_json(const nlohmann::json &doc);
SplitBoundaries boundaries_from_json(const nlohmann::json &doc);

std::string to_string(SplitMode mode);
SplitMode split_mode_from_string(const std::string &name);

} // namespace dlinear::data

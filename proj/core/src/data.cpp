#include "dlinear/data.hpp"

#include "dlinear/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string_view>

namespace dlinear::data {

namespace {

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) {
		s.remove_prefix(1);
	}
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"')) {
		s.remove_suffix(1);
	}
	return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
	std::vector<std::string_view> fields;
	std::size_t start = 0;
	while (true) {
		const auto comma = line.find(',', start);
		if (comma == std::string_view::npos) {
			fields.push_back(trim(line.substr(start)));
			break;
		}
		fields.push_back(trim(line.substr(start, comma - start)));
		start = comma + 1;
	}
	return fields;
}

std::optional<double> parse_real(std::string_view s) {
	if (!s.empty() && s.front() == '+') {
		s.remove_prefix(1);
	}
	if (s.empty()) {
		return std::nullopt;
	}
	double value = 0.0;
	const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
	if (ec != std::errc() || ptr != s.data() + s.size()) {
		return std::nullopt;
	}
	return value;
}

std::string lower(std::string_view s) {
	std::string out(s);
	std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
	return out;
}

// Splits a timestamp like "2016-07-01 02:00:00" or "1990/1/1 0:00" into its
// integer fields. Returns nullopt when anything but digits and separators appears.
std::optional<std::vector<long long>> timestamp_key(const std::string &stamp) {
	std::vector<long long> key;
	long long current = 0;
	bool in_number = false;
	for (const char ch : stamp) {
		if (ch >= '0' && ch <= '9') {
			current = current * 10 + (ch - '0');
			in_number = true;
		} else if (ch == '-' || ch == '/' || ch == ':' || ch == ' ' || ch == 'T' || ch == '.') {
			if (in_number) {
				key.push_back(current);
			}
			current = 0;
			in_number = false;
		} else {
			return std::nullopt;
		}
	}
	if (in_number) {
		key.push_back(current);
	}
	if (key.empty()) {
		return std::nullopt;
	}
	return key;
}

void check_timestamp_order(const std::vector<std::string> &timestamps) {
	std::vector<std::vector<long long>> keys;
	keys.reserve(timestamps.size());
	for (const auto &stamp : timestamps) {
		auto key = timestamp_key(stamp);
		if (!key || (!keys.empty() && key->size() != keys.front().size())) {
			return; // not uniformly parseable: row order is authoritative
		}
		keys.push_back(std::move(*key));
	}
	for (std::size_t i = 1; i < keys.size(); ++i) {
		if (!(keys[i - 1] < keys[i])) {
			throw DataError("timestamps are not strictly increasing at data row " + std::to_string(i + 1) + " (\"" +
			                timestamps[i - 1] + "\" then \"" + timestamps[i] + "\")");
		}
	}
}

} // namespace

void TimeSeries::validate() const {
	if (values.rows() == 0 || values.cols() == 0) {
		throw DataError("time series must have at least one row and one column");
	}
	if (variate_names.size() != values.cols()) {
		throw DataError("time series has " + std::to_string(values.cols()) + " columns but " +
		                std::to_string(variate_names.size()) + " variate names");
	}
	if (!timestamps.empty() && timestamps.size() != values.rows()) {
		throw DataError("time series has " + std::to_string(values.rows()) + " rows but " +
		                std::to_string(timestamps.size()) + " timestamps");
	}
	for (std::size_t r = 0; r < values.rows(); ++r) {
		for (std::size_t c = 0; c < values.cols(); ++c) {
			if (!std::isfinite(values(r, c))) {
				throw DataError("non-finite value at row " + std::to_string(r) + ", column " + variate_names[c]);
			}
		}
	}
}

TimeSeries slice(const TimeSeries &series, std::size_t begin, std::size_t end) {
	if (begin > end || end > series.length()) {
		throw DataError("slice [" + std::to_string(begin) + ", " + std::to_string(end) + ") out of range for " +
		                std::to_string(series.length()) + " rows");
	}
	TimeSeries out;
	out.values = Matrix(series.values.view().slice_rows(begin, end - begin));
	if (!series.timestamps.empty()) {
		out.timestamps.assign(series.timestamps.begin() + static_cast<std::ptrdiff_t>(begin),
		                      series.timestamps.begin() + static_cast<std::ptrdiff_t>(end));
	}
	out.variate_names = series.variate_names;
	return out;
}

TimeSeries load_csv(const std::filesystem::path &path, const CsvSchema &schema) {
	std::ifstream in(path);
	if (!in) {
		throw ConfigError("cannot open CSV file '" + path.string() + "'");
	}

	std::string line;
	if (!std::getline(in, line)) {
		throw DataError("CSV file '" + path.string() + "' is empty");
	}
	if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
		line.erase(0, 3);
	}
	const auto header_views = split_fields(line);
	std::vector<std::string> header(header_views.begin(), header_views.end());

	std::vector<std::string> rows;
	while (std::getline(in, line)) {
		if (trim(line).empty()) {
			continue;
		}
		rows.push_back(line);
	}
	if (rows.size() < 2) {
		throw DataError("CSV file '" + path.string() + "' has " + std::to_string(rows.size()) +
		                " data rows; at least 2 are required");
	}

	std::optional<std::size_t> ts_col;
	if (schema.timestamp_column) {
		const auto it = std::find(header.begin(), header.end(), *schema.timestamp_column);
		if (it == header.end()) {
			throw ConfigError("timestamp column '" + *schema.timestamp_column + "' not found in '" + path.string() +
			                  "'");
		}
		ts_col = static_cast<std::size_t>(it - header.begin());
	} else if (!header.empty()) {
		const auto first = split_fields(rows.front());
		if (lower(header.front()) == "date" || (!first.empty() && !parse_real(first.front()))) {
			ts_col = 0;
		}
	}

	const std::size_t n_cols = header.size();
	const std::size_t n_vars = n_cols - (ts_col ? 1 : 0);
	if (n_vars == 0) {
		throw DataError("CSV file '" + path.string() + "' has no value columns");
	}

	TimeSeries series;
	for (std::size_t c = 0; c < n_cols; ++c) {
		if (!ts_col || c != *ts_col) {
			series.variate_names.push_back(header[c]);
		}
	}
	std::vector<double> values;
	values.reserve(rows.size() * n_vars);
	if (ts_col) {
		series.timestamps.reserve(rows.size());
	}

	for (std::size_t r = 0; r < rows.size(); ++r) {
		const auto fields = split_fields(rows[r]);
		// data row r is line r + 2 of the file (1-based, after the header)
		if (fields.size() != n_cols) {
			throw DataError("'" + path.string() + "' line " + std::to_string(r + 2) + ": expected " +
			                std::to_string(n_cols) + " fields, found " + std::to_string(fields.size()));
		}
		for (std::size_t c = 0; c < n_cols; ++c) {
			if (ts_col && c == *ts_col) {
				series.timestamps.emplace_back(fields[c]);
				continue;
			}
			const auto value = parse_real(fields[c]);
			if (!value || !std::isfinite(*value)) {
				throw DataError("'" + path.string() + "' line " + std::to_string(r + 2) + ", column '" + header[c] +
				                "': cannot parse \"" + std::string(fields[c]) + "\" as a finite number");
			}
			values.push_back(*value);
		}
	}

	series.values = Matrix(rows.size(), n_vars, std::move(values));
	check_timestamp_order(series.timestamps);
	return series;
}

void write_csv(const TimeSeries &series, const std::filesystem::path &path) {
	std::ofstream out(path);
	if (!out) {
		throw ConfigError("cannot write CSV file '" + path.string() + "'");
	}
	const bool with_time = !series.timestamps.empty();
	if (with_time) {
		out << "date";
	}
	for (std::size_t c = 0; c < series.channels(); ++c) {
		if (with_time || c > 0) {
			out << ',';
		}
		out << series.variate_names[c];
	}
	out << '\n';
	out << std::setprecision(std::numeric_limits<double>::max_digits10);
	for (std::size_t r = 0; r < series.length(); ++r) {
		if (with_time) {
			out << series.timestamps[r];
		}
		for (std::size_t c = 0; c < series.channels(); ++c) {
			if (with_time || c > 0) {
				out << ',';
			}
			out << series.values(r, c);
		}
		out << '\n';
	}
	if (!out) {
		throw ConfigError("failed writing CSV file '" + path.string() + "'");
	}
}

SplitSpec SplitSpec::ratio(double train, double val, double test) {
	SplitSpec spec;
	spec.mode = SplitMode::ratio;
	spec.train_fraction = train;
	spec.val_fraction = val;
	spec.test_fraction = test;
	return spec;
}

SplitSpec SplitSpec::ett_calendar(std::size_t steps_per_day) {
	constexpr std::size_t days_per_month = 30;
	SplitSpec spec;
	spec.mode = SplitMode::ett_calendar;
	spec.train_steps = 12 * days_per_month * steps_per_day;
	spec.val_steps = 4 * days_per_month * steps_per_day;
	spec.test_steps = 4 * days_per_month * steps_per_day;
	return spec;
}

void SplitSpec::validate() const {
	if (mode == SplitMode::ratio) {
		for (const double f : {train_fraction, val_fraction, test_fraction}) {
			if (!(f > 0.0 && f < 1.0)) {
				throw ConfigError("split fractions must lie in (0, 1)");
			}
		}
		if (std::abs(train_fraction + val_fraction + test_fraction - 1.0) > 1e-9) {
			throw ConfigError("split fractions must sum to 1");
		}
	} else if (train_steps == 0 || val_steps == 0 || test_steps == 0) {
		throw ConfigError("calendar split segment lengths must be positive");
	}
	if (train_truncate_steps && *train_truncate_steps == 0) {
		throw ConfigError("train_truncate_steps must be positive");
	}
}

SplitBoundaries split_boundaries(std::size_t length, const SplitSpec &spec) {
	spec.validate();
	SplitBoundaries b;
	if (spec.mode == SplitMode::ratio) {
		// floor on train and val, remainder to test; the nudge absorbs 0.7 * 10 = 6.999...
		const auto n = static_cast<double>(length);
		const auto train = static_cast<std::size_t>(std::floor(n * spec.train_fraction + 1e-9));
		const auto val = static_cast<std::size_t>(std::floor(n * spec.val_fraction + 1e-9));
		b.train_end = train;
		b.val_begin = train;
		b.val_end = train + val;
		b.test_begin = b.val_end;
		b.test_end = length;
	} else {
		const std::size_t total = spec.train_steps + spec.val_steps + spec.test_steps;
		if (total > length) {
			throw DataError("calendar split needs " + std::to_string(total) + " rows but the series has " +
			                std::to_string(length));
		}
		b.train_end = spec.train_steps;
		b.val_begin = b.train_end;
		b.val_end = b.val_begin + spec.val_steps;
		b.test_begin = b.val_end;
		b.test_end = b.test_begin + spec.test_steps;
		b.unused_tail = length - total;
	}
	if (spec.train_truncate_steps) {
		const std::size_t keep = *spec.train_truncate_steps;
		if (keep > b.train_end) {
			throw DataError("train_truncate_steps (" + std::to_string(keep) + ") exceeds the train segment length (" +
			                std::to_string(b.train_end) + ")");
		}
		b.truncated_rows = b.train_end - keep;
		b.train_begin = b.truncated_rows;
	}
	return b;
}

SplitResult split(const TimeSeries &series, const SplitSpec &spec) {
	SplitResult result;
	result.boundaries = split_boundaries(series.length(), spec);
	const auto &b = result.boundaries;
	result.train = slice(series, b.train_begin, b.train_end);
	result.val = slice(series, b.val_begin, b.val_end);
	result.test = slice(series, b.test_begin, b.test_end);
	return result;
}

Scaler fit_scaler(const TimeSeries &train, double epsilon) {
	const std::size_t n = train.length();
	const std::size_t c = train.channels();
	if (n < 2) {
		throw DataError("scaler needs at least 2 training rows, got " + std::to_string(n));
	}
	Scaler scaler;
	scaler.epsilon = epsilon;
	scaler.means.assign(c, 0.0);
	scaler.stds.assign(c, 0.0);
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t j = 0; j < c; ++j) {
			scaler.means[j] += train.values(r, j);
		}
	}
	for (auto &m : scaler.means) {
		m /= static_cast<double>(n);
	}
	for (std::size_t r = 0; r < n; ++r) {
		for (std::size_t j = 0; j < c; ++j) {
			const double d = train.values(r, j) - scaler.means[j];
			scaler.stds[j] += d * d;
		}
	}
	for (auto &s : scaler.stds) {
		s = std::sqrt(s / static_cast<double>(n));
	}
	return scaler;
}

TimeSeries apply_scaler(const TimeSeries &series, const Scaler &scaler, Direction direction) {
	const std::size_t c = series.channels();
	if (scaler.means.size() != c || scaler.stds.size() != c) {
		throw DataError("scaler fitted on " + std::to_string(scaler.means.size()) + " variates applied to " +
		                std::to_string(c));
	}
	TimeSeries out = series;
	for (std::size_t r = 0; r < out.length(); ++r) {
		auto row = out.values.row(r);
		for (std::size_t j = 0; j < c; ++j) {
			const double scale = std::max(scaler.stds[j], scaler.epsilon);
			row[j] = direction == Direction::forward ? (row[j] - scaler.means[j]) / scale
			                                         : row[j] * scale + scaler.means[j];
		}
	}
	return out;
}

std::size_t window_count(std::size_t segment_length, std::size_t context_length, std::size_t lookback,
                         std::size_t horizon) {
	if (lookback == 0 || horizon == 0 || segment_length < horizon) {
		return 0;
	}
	const std::size_t ctx = std::min(context_length, lookback);
	const std::size_t first_origin = lookback - ctx; // in segment rows
	const std::size_t last_origin = segment_length - horizon;
	return first_origin > last_origin ? 0 : last_origin - first_origin + 1;
}

WindowSet make_windows(const TimeSeries &segment, const TimeSeries *context, std::size_t lookback,
                       std::size_t horizon) {
	if (lookback == 0 || horizon == 0) {
		throw ConfigError("look-back L and horizon T must be positive");
	}
	const std::size_t ctx_len = context ? std::min(context->length(), lookback) : 0;
	if (context && context->channels() != segment.channels()) {
		throw DataError("context has " + std::to_string(context->channels()) + " variates, segment has " +
		                std::to_string(segment.channels()));
	}
	const std::size_t count = window_count(segment.length(), ctx_len, lookback, horizon);
	if (count == 0) {
		throw DataError("segment too short for L=" + std::to_string(lookback) + ", T=" + std::to_string(horizon) +
		                ": " + std::to_string(segment.length()) + " rows available" +
		                (ctx_len ? " plus " + std::to_string(ctx_len) + " context rows" : std::string()) + ", need " +
		                std::to_string(lookback + horizon) + " in total");
	}

	const std::size_t c = segment.channels();
	std::vector<double> rows;
	rows.reserve((ctx_len + segment.length()) * c);
	if (ctx_len) {
		const auto ctx_view = context->values.view().slice_rows(context->length() - ctx_len, ctx_len);
		rows.insert(rows.end(), ctx_view.data(), ctx_view.data() + ctx_view.size());
	}
	rows.insert(rows.end(), segment.values.data(), segment.values.data() + segment.values.size());

	WindowSet set;
	auto storage = std::make_shared<const Matrix>(ctx_len + segment.length(), c, std::move(rows));
	const MatrixView all = storage->view();
	const std::size_t first_origin = lookback - ctx_len;
	set.pairs_.reserve(count);
	for (std::size_t k = 0; k < count; ++k) {
		const std::size_t origin = first_origin + k;
		const std::size_t at = ctx_len + origin;
		set.pairs_.push_back(WindowPair{all.slice_rows(at - lookback, lookback), all.slice_rows(at, horizon), origin});
	}
	set.rows_ = std::move(storage);
	set.lookback_ = lookback;
	set.horizon_ = horizon;
	return set;
}

std::string to_string(SplitMode mode) {
	return mode == SplitMode::ratio ? "ratio" : "ett-calendar";
}

SplitMode split_mode_from_string(const std::string &name) {
	if (name == "ratio") {
		return SplitMode::ratio;
	}
	if (name == "ett-calendar") {
		return SplitMode::ett_calendar;
	}
	throw ConfigError("unknown split mode '" + name + "' (expected ratio or ett-calendar)");
}

nlohmann::json to_json(const SplitSpec &spec, const SplitBoundaries &b, const Scaler &scaler) {
	nlohmann::json doc;
	doc["mode"] = to_string(spec.mode);
	doc["boundaries"] = {
	    {"train", {b.train_begin, b.train_end}},
	    {"val", {b.val_begin, b.val_end}},
	    {"test", {b.test_begin, b.test_end}},
	    {"unused_tail", b.unused_tail},
	    {"truncated_rows", b.truncated_rows},
	};
	doc["means"] = scaler.means;
	doc["stds"] = scaler.stds;
	doc["epsilon"] = scaler.epsilon;
	return doc;
}

Scaler scaler_from_json(const nlohmann::json &doc) {
	try {
		Scaler scaler;
		scaler.means = doc.at("means").get<std::vector<double>>();
		scaler.stds = doc.at("stds").get<std::vector<double>>();
		scaler.epsilon = doc.at("epsilon").get<double>();
		if (scaler.means.size() != scaler.stds.size()) {
			throw ConfigError("scaler means and stds differ in length");
		}
		return scaler;
	} catch (const nlohmann::json::exception &e) {
		throw ConfigError(std::string("malformed scaler document: ") + e.what());
	}
}

SplitBoundaries boundaries_from_json(const nlohmann::json &doc) {
	try {
		const auto &b = doc.at("boundaries");
		SplitBoundaries out;
		out.train_begin = b.at("train").at(0).get<std::size_t>();
		out.train_end = b.at("train").at(1).get<std::size_t>();
		out.val_begin = b.at("val").at(0).get<std::size_t>();
		out.val_end = b.at("val").at(1).get<std::size_t>();
		out.test_begin = b.at("test").at(0).get<std::size_t>();
		out.test_end = b.at("test").at(1).get<std::size_t>();
		out.unused_tail = b.value("unused_tail", std::size_t{0});
		out.truncated_rows = b.value("truncated_rows", std::size_t{0});
		return out;
	} catch (const nlohmann::json::exception &e) {
		throw ConfigError(std::string("malformed split document: ") + e.what());
	}
}

} // namespace dlinear::data

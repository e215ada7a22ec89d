#include "dlinear/model.hpp"

#include "dlinear/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

namespace dlinear::model {

namespace {

void check_input(MatrixView input, std::size_t lookback, std::size_t channels) {
	if (input.rows() != lookback || (channels != 0 && input.cols() != channels)) {
		throw DataError("input block is " + std::to_string(input.rows()) + "x" + std::to_string(input.cols()) +
		                ", model expects " + std::to_string(lookback) + "x" +
		                (channels ? std::to_string(channels) : std::string("C")));
	}
}

std::string sanitize(const std::string &name) {
	std::string out;
	for (const char ch : name) {
		const bool keep = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') ||
		                  ch == '-' || ch == '_' || ch == '.';
		out.push_back(keep ? ch : '_');
	}
	return out.empty() ? std::string("_") : out;
}

} // namespace

LinearMap LinearMap::initialized(std::size_t lookback, std::size_t horizon) {
	if (lookback == 0 || horizon == 0) {
		throw ConfigError("linear map needs positive look-back and horizon");
	}
	LinearMap map;
	map.weight = Matrix(horizon, lookback, 1.0 / static_cast<double>(lookback));
	map.bias.assign(horizon, 0.0);
	return map;
}

DLinearModel::DLinearModel(ChannelMode mode, std::size_t lookback, std::size_t horizon, std::size_t channels,
                           int kernel_size)
    : mode_(mode), lookback_(lookback), horizon_(horizon), channels_(channels), kernel_size_(kernel_size) {
	check_kernel_size(kernel_size);
	if (channels == 0) {
		throw ConfigError("model needs at least one channel");
	}
	const std::size_t maps = mode == ChannelMode::shared ? 1 : channels;
	trend_maps_.assign(maps, LinearMap::initialized(lookback, horizon));
	remainder_maps_ = trend_maps_;
}

void apply_shared(const LinearMap &map, MatrixView x, Matrix &out, bool accumulate) {
	const std::size_t horizon = map.horizon();
	const std::size_t lookback = map.lookback();
	const std::size_t c = x.cols();
	if (!accumulate) {
		out = Matrix(horizon, c);
	}
	std::vector<double> acc(c);
	for (std::size_t t = 0; t < horizon; ++t) {
		std::fill(acc.begin(), acc.end(), map.bias[t]);
		const auto w = map.weight.row(t);
		for (std::size_t l = 0; l < lookback; ++l) {
			const double wl = w[l];
			const auto xr = x.row(l);
			for (std::size_t j = 0; j < c; ++j) {
				acc[j] += wl * xr[j];
			}
		}
		auto o = out.row(t);
		for (std::size_t j = 0; j < c; ++j) {
			o[j] = accumulate ? o[j] + acc[j] : acc[j];
		}
	}
}

void apply_column(const LinearMap &map, MatrixView x, std::size_t col, Matrix &out, bool accumulate) {
	const std::size_t horizon = map.horizon();
	const std::size_t lookback = map.lookback();
	for (std::size_t t = 0; t < horizon; ++t) {
		double acc = map.bias[t];
		const auto w = map.weight.row(t);
		for (std::size_t l = 0; l < lookback; ++l) {
			acc += w[l] * x(l, col);
		}
		out(t, col) = accumulate ? out(t, col) + acc : acc;
	}
}

ForecastBlock forward(const DLinearModel &model, MatrixView input) {
	check_input(input, model.lookback(), model.channels());
	const auto parts = decompose(input, model.kernel_size());
	ForecastBlock block;
	if (model.mode() == ChannelMode::shared) {
		apply_shared(model.trend_maps().front(), parts.trend, block.values);
		apply_shared(model.remainder_maps().front(), parts.remainder, block.values, true);
	} else {
		block.values = Matrix(model.horizon(), input.cols());
		for (std::size_t j = 0; j < input.cols(); ++j) {
			apply_column(model.trend_map(j), parts.trend, j, block.values);
			apply_column(model.remainder_map(j), parts.remainder, j, block.values, true);
		}
	}
	return block;
}

ForecastBlock forward_linear(const LinearMap &map, MatrixView input) {
	check_input(input, map.lookback(), 0);
	ForecastBlock block;
	apply_shared(map, input, block.values);
	return block;
}

ForecastBlock repeat_c(MatrixView input, std::size_t horizon) {
	if (input.rows() == 0) {
		throw DataError("repeat-c needs at least one input row");
	}
	ForecastBlock block;
	block.values = Matrix(horizon, input.cols());
	const auto last = input.row(input.rows() - 1);
	for (std::size_t t = 0; t < horizon; ++t) {
		std::copy(last.begin(), last.end(), block.values.row(t).begin());
	}
	return block;
}

std::uint64_t count_params(const LinearMap &map) {
	return static_cast<std::uint64_t>(map.weight.size() + map.bias.size());
}

std::uint64_t count_params(const DLinearModel &model) {
	std::uint64_t total = 0;
	for (const auto &m : model.trend_maps()) {
		total += count_params(m);
	}
	for (const auto &m : model.remainder_maps()) {
		total += count_params(m);
	}
	return total;
}

std::uint64_t count_macs(const LinearMap &map, std::size_t channels) {
	return static_cast<std::uint64_t>(map.horizon()) * map.lookback() * channels;
}

std::uint64_t count_macs(const DLinearModel &model, std::size_t channels) {
	return 2ULL * model.horizon() * model.lookback() * channels;
}

void write_weight_csv(const LinearMap &map, const std::filesystem::path &path) {
	std::ofstream out(path);
	if (!out) {
		throw ConfigError("cannot write weight file '" + path.string() + "'");
	}
	out << std::setprecision(std::numeric_limits<double>::max_digits10);
	for (std::size_t t = 0; t < map.horizon(); ++t) {
		const auto row = map.weight.row(t);
		for (std::size_t l = 0; l < row.size(); ++l) {
			if (l) {
				out << ',';
			}
			out << row[l];
		}
		out << '\n';
	}
	if (!out) {
		throw ConfigError("failed writing weight file '" + path.string() + "'");
	}
}

Matrix read_weight_csv(const std::filesystem::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw ConfigError("cannot open weight file '" + path.string() + "'");
	}
	std::vector<double> values;
	std::size_t rows = 0;
	std::size_t cols = 0;
	std::string line;
	while (std::getline(in, line)) {
		if (line.empty()) {
			continue;
		}
		std::stringstream ss(line);
		std::string cell;
		std::size_t n = 0;
		while (std::getline(ss, cell, ',')) {
			values.push_back(std::stod(cell));
			++n;
		}
		if (rows == 0) {
			cols = n;
		} else if (n != cols) {
			throw DataError("ragged weight file '" + path.string() + "'");
		}
		++rows;
	}
	return Matrix(rows, cols, std::move(values));
}

std::vector<std::filesystem::path> export_weights(const DLinearModel &model, const std::filesystem::path &dir,
                                                  std::span<const std::string> variate_names) {
	std::error_code ec;
	std::filesystem::create_directories(dir, ec);
	if (ec) {
		throw ConfigError("cannot create directory '" + dir.string() + "': " + ec.message());
	}
	std::vector<std::filesystem::path> written;
	if (model.mode() == ChannelMode::shared) {
		written.push_back(dir / "trend_weights.csv");
		written.push_back(dir / "remainder_weights.csv");
		write_weight_csv(model.trend_maps().front(), written[0]);
		write_weight_csv(model.remainder_maps().front(), written[1]);
		return written;
	}
	for (std::size_t j = 0; j < model.channels(); ++j) {
		const std::string name =
		    j < variate_names.size() ? sanitize(variate_names[j]) : "ch" + std::to_string(j);
		written.push_back(dir / ("trend_weights_" + name + ".csv"));
		write_weight_csv(model.trend_maps()[j], written.back());
		written.push_back(dir / ("remainder_weights_" + name + ".csv"));
		write_weight_csv(model.remainder_maps()[j], written.back());
	}
	return written;
}

nlohmann::json to_json(const LinearMap &map) {
	const auto w = map.weight.values();
	return {{"L", map.lookback()},
	        {"T", map.horizon()},
	        {"weight", std::vector<double>(w.begin(), w.end())},
	        {"bias", map.bias}};
}

LinearMap linear_map_from_json(const nlohmann::json &doc) {
	try {
		const auto lookback = doc.at("L").get<std::size_t>();
		const auto horizon = doc.at("T").get<std::size_t>();
		LinearMap map;
		map.weight = Matrix(horizon, lookback, doc.at("weight").get<std::vector<double>>());
		map.bias = doc.at("bias").get<std::vector<double>>();
		if (map.bias.size() != horizon) {
			throw ConfigError("bias length does not match horizon");
		}
		return map;
	} catch (const nlohmann::json::exception &e) {
		throw ConfigError(std::string("malformed linear map document: ") + e.what());
	} catch (const std::invalid_argument &e) {
		throw ConfigError(std::string("malformed linear map document: ") + e.what());
	}
}

nlohmann::json to_json(const DLinearModel &model) {
	nlohmann::json doc;
	doc["kind"] = "dlinear";
	doc["mode"] = to_string(model.mode());
	doc["L"] = model.lookback();
	doc["T"] = model.horizon();
	doc["C"] = model.channels();
	doc["kernel_size"] = model.kernel_size();
	doc["trend"] = nlohmann::json::array();
	doc["remainder"] = nlohmann::json::array();
	for (const auto &m : model.trend_maps()) {
		doc["trend"].push_back(to_json(m));
	}
	for (const auto &m : model.remainder_maps()) {
		doc["remainder"].push_back(to_json(m));
	}
	return doc;
}

DLinearModel dlinear_from_json(const nlohmann::json &doc) {
	try {
		DLinearModel model(channel_mode_from_string(doc.at("mode").get<std::string>()), doc.at("L").get<std::size_t>(),
		                   doc.at("T").get<std::size_t>(), doc.at("C").get<std::size_t>(),
		                   doc.at("kernel_size").get<int>());
		const auto load = [&](const nlohmann::json &arr, std::vector<LinearMap> &maps) {
			if (arr.size() != maps.size()) {
				throw ConfigError("expected " + std::to_string(maps.size()) + " maps per branch, found " +
				                  std::to_string(arr.size()));
			}
			for (std::size_t i = 0; i < maps.size(); ++i) {
				auto m = linear_map_from_json(arr[i]);
				if (m.lookback() != model.lookback() || m.horizon() != model.horizon()) {
					throw ConfigError("branch map shape does not match model L/T");
				}
				maps[i] = std::move(m);
			}
		};
		load(doc.at("trend"), model.trend_maps());
		load(doc.at("remainder"), model.remainder_maps());
		return model;
	} catch (const nlohmann::json::exception &e) {
		throw ConfigError(std::string("malformed model document: ") + e.what());
	}
}

std::string to_string(ChannelMode mode) {
	return mode == ChannelMode::shared ? "shared" : "individual";
}

ChannelMode channel_mode_from_string(const std::string &name) {
	if (name == "shared") {
		return ChannelMode::shared;
	}
	if (name == "individual") {
		return ChannelMode::individual;
	}
	throw ConfigError("unknown channel mode '" + name + "' (expected shared or individual)");
}

} // namespace dlinear::model

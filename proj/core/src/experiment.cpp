#include "dlinear/experiment.hpp"

#include "dlinear/error.hpp"
#include "dlinear/rng.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sys/resource.h>

#ifndef DLINEAR_VERSION
#define DLINEAR_VERSION "unknown"
#endif

namespace dlinear::bench {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void write_text(const fs::path &path, const std::string &text) {
	std::ofstream out(path);
	if (!out) {
		throw ConfigError("cannot write '" + path.string() + "'");
	}
	out << text;
	if (!out) {
		throw ConfigError("failed writing '" + path.string() + "'");
	}
}

void write_json(const fs::path &path, const json &doc) {
	write_text(path, doc.dump(2) + "\n");
}

void ensure_dir(const fs::path &dir) {
	std::error_code ec;
	fs::create_directories(dir, ec);
	if (ec) {
		throw ConfigError("cannot create output directory '" + dir.string() + "': " + ec.message());
	}
}

std::string lower(std::string_view s) {
	std::string out(s);
	std::transform(out.begin(), out.end(), out.begin(), [](unsigned char ch) { return std::tolower(ch); });
	return out;
}

data::TimeSeries load_source(const DatasetSource &source) {
	data::TimeSeries series =
	    source.synthetic ? synthetic::generate(*source.synthetic) : data::load_csv(*source.path, source.schema);
	series.validate();
	return series;
}

std::string dataset_id_of(const DatasetSource &source) {
	if (!source.id.empty()) {
		return source.id;
	}
	if (source.synthetic) {
		return "synthetic-" + synthetic::to_string(source.synthetic->kind);
	}
	return canonical_dataset_id(source.path->stem().string());
}

std::string data_fingerprint(const data::TimeSeries &series) {
	std::string bytes;
	for (const auto &name : series.variate_names) {
		bytes += name;
		bytes.push_back('\0');
	}
	const auto values = series.values.values();
	bytes.append(reinterpret_cast<const char *>(values.data()), values.size_bytes());
	return fnv1a_hex(bytes);
}

data::WindowSet windows_for(const char *segment_name, const data::TimeSeries &scaled, std::size_t begin,
                            std::size_t end, bool with_context, std::size_t lookback, std::size_t horizon) {
	try {
		const auto segment = data::slice(scaled, begin, end);
		if (!with_context || begin == 0) {
			return data::make_windows(segment, nullptr, lookback, horizon);
		}
		const auto context = data::slice(scaled, begin - std::min(lookback, begin), begin);
		return data::make_windows(segment, &context, lookback, horizon);
	} catch (const DataError &e) {
		throw DataError(std::string(segment_name) + " segment: " + e.what());
	}
}

json split_to_json(const data::SplitSpec &s) {
	json doc;
	doc["mode"] = data::to_string(s.mode);
	if (s.mode == data::SplitMode::ratio) {
		doc["train_fraction"] = s.train_fraction;
		doc["val_fraction"] = s.val_fraction;
		doc["test_fraction"] = s.test_fraction;
	} else {
		doc["train_steps"] = s.train_steps;
		doc["val_steps"] = s.val_steps;
		doc["test_steps"] = s.test_steps;
	}
	if (s.train_truncate_steps) {
		doc["train_truncate_steps"] = *s.train_truncate_steps;
	}
	return doc;
}

data::SplitSpec split_from_json(const json &doc) {
	if (!doc.is_object()) {
		throw ConfigError("split must be \"auto\" or an object");
	}
	data::SplitSpec s;
	for (const auto &[key, value] : doc.items()) {
		if (key == "mode") {
			s.mode = data::split_mode_from_string(value.get<std::string>());
		} else if (key == "train_fraction") {
			s.train_fraction = value.get<double>();
		} else if (key == "val_fraction") {
			s.val_fraction = value.get<double>();
		} else if (key == "test_fraction") {
			s.test_fraction = value.get<double>();
		} else if (key == "train_steps") {
			s.train_steps = value.get<std::size_t>();
		} else if (key == "val_steps") {
			s.val_steps = value.get<std::size_t>();
		} else if (key == "test_steps") {
			s.test_steps = value.get<std::size_t>();
		} else if (key == "train_truncate_steps") {
			if (!value.is_null()) {
				s.train_truncate_steps = value.get<std::size_t>();
			}
		} else {
			throw ConfigError("unknown split setting '" + key + "'");
		}
	}
	s.validate();
	return s;
}

std::string model_id(const TrainedModel &model) {
	if (std::holds_alternative<RepeatC>(model)) {
		return "repeat-c";
	}
	if (const auto *m = std::get_if<model::DLinearModel>(&model)) {
		return m->mode() == model::ChannelMode::shared ? "dlinear-s" : "dlinear-i";
	}
	return "linear";
}

ExperimentConfig with_subdir(ExperimentConfig config, const std::string &name) {
	if (!config.output_dir.empty()) {
		config.output_dir /= name;
	}
	return config;
}

PairedResult pair(metrics::EvalSummary primary, metrics::EvalSummary baseline) {
	PairedResult r;
	r.delta_mse = primary.mse - baseline.mse;
	r.delta_mae = primary.mae - baseline.mae;
	r.primary = std::move(primary);
	r.baseline = std::move(baseline);
	return r;
}

std::uint64_t peak_resident_bytes() {
	rusage usage{};
	if (getrusage(RUSAGE_SELF, &usage) != 0) {
		return 0;
	}
	return static_cast<std::uint64_t>(usage.ru_maxrss) * 1024; // kilobytes on Linux
}

} // namespace

std::string to_string(ModelKind kind) {
	switch (kind) {
	case ModelKind::dlinear_s:
		return "dlinear-s";
	case ModelKind::dlinear_i:
		return "dlinear-i";
	case ModelKind::linear:
		return "linear";
	case ModelKind::repeat_c:
		return "repeat-c";
	}
	return "";
}

ModelKind model_kind_from_string(const std::string &name) {
	for (const auto k : {ModelKind::dlinear_s, ModelKind::dlinear_i, ModelKind::linear, ModelKind::repeat_c}) {
		if (to_string(k) == name) {
			return k;
		}
	}
	throw ConfigError("unknown model '" + name + "' (expected dlinear-s, dlinear-i, linear or repeat-c)");
}

void ExperimentConfig::validate() const {
	if (dataset.path.has_value() == dataset.synthetic.has_value()) {
		throw ConfigError("dataset needs exactly one of 'path' or 'synthetic'");
	}
	if (L == 0 || T == 0) {
		throw ConfigError("L and T must be positive");
	}
	check_kernel_size(kernel_size);
	if (split) {
		split->validate();
	}
	if (dataset.synthetic) {
		dataset.synthetic->validate();
	}
	if (model != ModelKind::repeat_c) {
		train.validate();
	}
}

ExperimentConfig config_from_json(const json &doc) {
	if (!doc.is_object()) {
		throw ConfigError("config document must be a JSON object");
	}
	ExperimentConfig c;
	try {
		for (const auto &[key, value] : doc.items()) {
			if (key == "dataset") {
				for (const auto &[dkey, dvalue] : value.items()) {
					if (dkey == "path") {
						c.dataset.path = dvalue.get<std::string>();
					} else if (dkey == "timestamp_column") {
						c.dataset.schema.timestamp_column = dvalue.get<std::string>();
					} else if (dkey == "synthetic") {
						c.dataset.synthetic = synthetic::synthetic_spec_from_json(dvalue);
					} else if (dkey == "id") {
						c.dataset.id = dvalue.get<std::string>();
					} else {
						throw ConfigError("unknown dataset setting '" + dkey + "'");
					}
				}
			} else if (key == "split") {
				if (value.is_string() && value.get<std::string>() == "auto") {
					c.split.reset();
				} else {
					c.split = split_from_json(value);
				}
			} else if (key == "L") {
				c.L = value.get<std::size_t>();
			} else if (key == "T") {
				c.T = value.get<std::size_t>();
			} else if (key == "model") {
				c.model = model_kind_from_string(value.get<std::string>());
			} else if (key == "kernel_size") {
				c.kernel_size = value.get<int>();
			} else if (key == "train") {
				c.train = train::train_config_from_json(value);
			} else if (key == "output_dir") {
				c.output_dir = value.get<std::string>();
			} else if (key == "tags") {
				c.tags = value.get<std::vector<std::string>>();
			} else {
				throw ConfigError("unknown config key '" + key + "'");
			}
		}
	} catch (const json::exception &e) {
		throw ConfigError(std::string("invalid config document: ") + e.what());
	}
	c.validate();
	return c;
}

json to_json(const ExperimentConfig &c) {
	json doc;
	json dataset;
	if (c.dataset.path) {
		dataset["path"] = c.dataset.path->string();
	}
	if (c.dataset.schema.timestamp_column) {
		dataset["timestamp_column"] = *c.dataset.schema.timestamp_column;
	}
	if (c.dataset.synthetic) {
		dataset["synthetic"] = synthetic::to_json(*c.dataset.synthetic);
	}
	if (!c.dataset.id.empty()) {
		dataset["id"] = c.dataset.id;
	}
	doc["dataset"] = dataset;
	doc["split"] = c.split ? split_to_json(*c.split) : json("auto");
	doc["L"] = c.L;
	doc["T"] = c.T;
	doc["model"] = to_string(c.model);
	doc["kernel_size"] = c.kernel_size;
	doc["train"] = train::to_json(c.train);
	doc["output_dir"] = c.output_dir.string();
	doc["tags"] = c.tags;
	return doc;
}

ExperimentConfig load_config(const fs::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw ConfigError("cannot open config file '" + path.string() + "'");
	}
	json doc;
	try {
		doc = json::parse(in);
	} catch (const json::exception &e) {
		throw ConfigError("config file '" + path.string() + "' is not valid JSON: " + e.what());
	}
	auto config = config_from_json(doc);
	if (config.dataset.path && config.dataset.path->is_relative()) {
		const auto beside = path.parent_path() / *config.dataset.path;
		if (fs::exists(beside)) {
			config.dataset.path = beside;
		}
	}
	return config;
}

std::string canonical_dataset_id(std::string_view stem) {
	const std::string s = lower(stem);
	if (s == "exchange_rate" || s == "exchange-rate" || s == "exchange") {
		return "Exchange-Rate";
	}
	if (s == "electricity" || s == "ecl") {
		return "Electricity";
	}
	if (s == "traffic") {
		return "Traffic";
	}
	if (s == "weather") {
		return "Weather";
	}
	if (s == "national_illness" || s == "ili") {
		return "ILI";
	}
	for (const char *ett : {"ETTh1", "ETTh2", "ETTm1", "ETTm2"}) {
		if (s == lower(ett)) {
			return ett;
		}
	}
	return std::string(stem);
}

data::SplitSpec default_split(std::string_view dataset_id) {
	const std::string id = lower(dataset_id);
	if (id.rfind("etth", 0) == 0) {
		return data::SplitSpec::ett_calendar(24);
	}
	if (id.rfind("ettm", 0) == 0) {
		return data::SplitSpec::ett_calendar(96);
	}
	return data::SplitSpec::ratio(0.7, 0.1, 0.2);
}

PreparedData prepare(const ExperimentConfig &config) {
	config.validate();
	const auto raw = load_source(config.dataset);

	PreparedData p;
	p.dataset_id = dataset_id_of(config.dataset);
	p.variate_names = raw.variate_names;
	p.channels = raw.channels();
	p.fingerprint = data_fingerprint(raw);
	p.split = config.split.value_or(default_split(p.dataset_id));
	p.boundaries = data::split_boundaries(raw.length(), p.split);
	const auto &b = p.boundaries;

	p.scaler = data::fit_scaler(data::slice(raw, b.train_begin, b.train_end));
	const auto scaled = data::apply_scaler(raw, p.scaler, data::Direction::forward);
	p.train = windows_for("train", scaled, b.train_begin, b.train_end, false, config.L, config.T);
	p.val = windows_for("val", scaled, b.val_begin, b.val_end, true, config.L, config.T);
	p.test = windows_for("test", scaled, b.test_begin, b.test_end, true, config.L, config.T);
	return p;
}

TrainedModel make_model(ModelKind kind, std::size_t lookback, std::size_t horizon, std::size_t channels,
                        int kernel_size) {
	switch (kind) {
	case ModelKind::dlinear_s:
		return model::DLinearModel(model::ChannelMode::shared, lookback, horizon, channels, kernel_size);
	case ModelKind::dlinear_i:
		return model::DLinearModel(model::ChannelMode::individual, lookback, horizon, channels, kernel_size);
	case ModelKind::linear:
		return model::LinearMap::initialized(lookback, horizon);
	case ModelKind::repeat_c:
		return RepeatC{horizon};
	}
	throw ConfigError("unknown model kind");
}

metrics::ForecastFn forecast_fn(const TrainedModel &model) {
	return std::visit(
	    [](const auto &m) -> metrics::ForecastFn {
		    using M = std::decay_t<decltype(m)>;
		    if constexpr (std::is_same_v<M, RepeatC>) {
			    return [h = m.horizon](MatrixView x) { return model::repeat_c(x, h).values; };
		    } else if constexpr (std::is_same_v<M, model::DLinearModel>) {
			    return [&m](MatrixView x) { return model::forward(m, x).values; };
		    } else {
			    return [&m](MatrixView x) { return model::forward_linear(m, x).values; };
		    }
	    },
	    model);
}

std::uint64_t count_params(const TrainedModel &model) {
	return std::visit(
	    [](const auto &m) -> std::uint64_t {
		    if constexpr (std::is_same_v<std::decay_t<decltype(m)>, RepeatC>) {
			    return 0;
		    } else {
			    return model::count_params(m);
		    }
	    },
	    model);
}

std::uint64_t count_macs(const TrainedModel &model, std::size_t channels) {
	return std::visit(
	    [channels](const auto &m) -> std::uint64_t {
		    if constexpr (std::is_same_v<std::decay_t<decltype(m)>, RepeatC>) {
			    return 0;
		    } else {
			    return model::count_macs(m, channels);
		    }
	    },
	    model);
}

json to_json(const TrainedModel &model) {
	if (const auto *r = std::get_if<RepeatC>(&model)) {
		return {{"kind", "repeat-c"}, {"T", r->horizon}};
	}
	if (const auto *d = std::get_if<model::DLinearModel>(&model)) {
		return model::to_json(*d);
	}
	auto doc = model::to_json(std::get<model::LinearMap>(model));
	doc["kind"] = "linear";
	return doc;
}

TrainedModel model_from_json(const json &doc) {
	const std::string kind = doc.value("kind", std::string("dlinear"));
	if (kind == "dlinear") {
		return model::dlinear_from_json(doc);
	}
	if (kind == "linear") {
		return model::linear_map_from_json(doc);
	}
	if (kind == "repeat-c") {
		return RepeatC{doc.at("T").get<std::size_t>()};
	}
	throw ConfigError("unknown checkpoint kind '" + kind + "'");
}

TrainedModel load_checkpoint(const fs::path &path) {
	std::ifstream in(path);
	if (!in) {
		throw ConfigError("cannot open checkpoint '" + path.string() + "'");
	}
	try {
		return model_from_json(json::parse(in));
	} catch (const json::exception &e) {
		throw ConfigError("checkpoint '" + path.string() + "' is malformed: " + e.what());
	}
}

RunResult run(const ExperimentConfig &config) {
	const auto prepared = prepare(config);
	RunResult result;
	result.variate_names = prepared.variate_names;
	result.model = make_model(config.model, config.L, config.T, prepared.channels, config.kernel_size);

	const auto start = std::chrono::steady_clock::now();
	if (auto *d = std::get_if<model::DLinearModel>(&result.model)) {
		result.report = train::fit(*d, prepared.train.pairs(), prepared.val.pairs(), config.train);
	} else if (auto *l = std::get_if<model::LinearMap>(&result.model)) {
		result.report = train::fit(*l, prepared.train.pairs(), prepared.val.pairs(), config.train);
	}
	result.train_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

	result.summary = metrics::evaluate(forecast_fn(result.model), prepared.test.pairs());
	result.summary.dataset_id = prepared.dataset_id;
	result.summary.model_id = model_id(result.model);

	if (config.output_dir.empty()) {
		return result;
	}
	ensure_dir(config.output_dir);
	const auto &dir = config.output_dir;
	std::vector<std::string> artifacts = {"summary.jsonl", "model.json", "split.json", "manifest.json"};
	write_text(dir / "summary.jsonl", metrics::to_json_line(result.summary) + "\n");
	write_json(dir / "model.json", to_json(result.model));
	write_json(dir / "split.json", data::to_json(prepared.split, prepared.boundaries, prepared.scaler));
	if (result.report) {
		result.report->final_params_snapshot_id = (dir / "model.json").string();
		write_json(dir / "train_report.json", train::to_json(*result.report));
		artifacts.push_back("train_report.json");
	}

	auto config_doc = to_json(config);
	config_doc.erase("output_dir");
	json manifest;
	manifest["config"] = to_json(config);
	manifest["config_hash"] = fnv1a_hex(config_doc.dump());
	manifest["seed"] = config.train.seed;
	manifest["dataset_id"] = prepared.dataset_id;
	manifest["data_fingerprint"] = prepared.fingerprint;
	manifest["windows"] = {{"train", prepared.train.size()}, {"val", prepared.val.size()}, {"test", prepared.test.size()}};
	manifest["version"] = DLINEAR_VERSION;
	manifest["compiler"] = __VERSION__;
	manifest["reduction_order"] = "window-row-column";
	if (config.dataset.synthetic) {
		manifest["noise_algorithm"] = std::string(synthetic::noise_algorithm());
	}
	manifest["train_seconds"] = result.train_seconds;
	manifest["artifacts"] = artifacts;
	write_json(dir / "manifest.json", manifest);
	return result;
}

SweepResult sweep(const SweepSpec &spec) {
	if (spec.lookbacks.empty() || spec.horizons.empty()) {
		throw ConfigError("sweep grids must be non-empty");
	}
	SweepResult result;
	for (const auto lookback : spec.lookbacks) {
		for (const auto horizon : spec.horizons) {
			auto config = with_subdir(spec.base, "L" + std::to_string(lookback) + "_T" + std::to_string(horizon));
			config.L = lookback;
			config.T = horizon;
			try {
				result.summaries.push_back(run(config).summary);
			} catch (const DataError &e) {
				result.warnings.push_back("skipping L=" + std::to_string(lookback) + ", T=" + std::to_string(horizon) +
				                          ": " + e.what());
			}
		}
	}

	if (!spec.base.output_dir.empty()) {
		ensure_dir(spec.base.output_dir);
		std::string csv = "L,T,model,mse,mae\n";
		std::string lines;
		for (const auto &s : result.summaries) {
			json row_mse = s.mse;
			json row_mae = s.mae;
			csv += std::to_string(s.L) + "," + std::to_string(s.T) + "," + s.model_id + "," + row_mse.dump() + "," +
			       row_mae.dump() + "\n";
			lines += metrics::to_json_line(s) + "\n";
		}
		write_text(spec.base.output_dir / "sweep.csv", csv);
		write_text(spec.base.output_dir / "summaries.jsonl", lines);
	}
	return result;
}

PairedResult ablate_decomposition(const ExperimentConfig &config) {
	if (config.model != ModelKind::dlinear_s && config.model != ModelKind::dlinear_i) {
		throw ConfigError("decomposition ablation needs a dlinear-s or dlinear-i config");
	}
	auto baseline = with_subdir(config, "linear");
	baseline.model = ModelKind::linear;
	auto result = pair(run(with_subdir(config, "dlinear")).summary, run(baseline).summary);
	if (!config.output_dir.empty()) {
		write_json(config.output_dir / "ablation.json", to_json(result));
	}
	return result;
}

PairedResult ablate_train_size(const ExperimentConfig &config, std::size_t short_steps) {
	if (short_steps == 0) {
		throw ConfigError("short_steps must be positive");
	}
	auto shortened = with_subdir(config, "short");
	shortened.split = config.split.value_or(default_split(dataset_id_of(config.dataset)));
	shortened.split->train_truncate_steps = short_steps;
	auto result = pair(run(with_subdir(config, "full")).summary, run(shortened).summary);
	if (!config.output_dir.empty()) {
		write_json(config.output_dir / "ablation.json", to_json(result));
	}
	return result;
}

EfficiencyRecord efficiency_report(const ExperimentConfig &config, std::optional<std::size_t> channels,
                                   std::size_t runs) {
	if (runs < 5) {
		throw ConfigError("efficiency timing needs at least 5 runs");
	}
	const std::size_t c = channels ? *channels : load_source(config.dataset).channels();
	if (c == 0) {
		throw ConfigError("channel count must be positive");
	}
	const auto model = make_model(config.model, config.L, config.T, c, config.kernel_size);
	const auto forecast = forecast_fn(model);

	Rng rng(config.train.seed);
	const std::size_t batch = config.train.batch_size;
	std::vector<Matrix> inputs;
	inputs.reserve(batch);
	for (std::size_t b = 0; b < batch; ++b) {
		Matrix x(config.L, c);
		for (auto &v : x.values()) {
			v = rng.normal();
		}
		inputs.push_back(std::move(x));
	}

	double sink = 0.0;
	for (const auto &x : inputs) {
		sink += forecast(x)(0, 0);
	}
	std::vector<double> seconds;
	for (std::size_t r = 0; r < runs; ++r) {
		const auto t0 = std::chrono::steady_clock::now();
		for (const auto &x : inputs) {
			sink += forecast(x)(0, 0);
		}
		seconds.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
	}
	if (!std::isfinite(sink)) {
		throw NumericalError("efficiency forward pass produced non-finite values");
	}

	EfficiencyRecord rec;
	rec.model_id = to_string(config.model);
	rec.L = config.L;
	rec.T = config.T;
	rec.C = c;
	rec.batch_size = batch;
	rec.params = count_params(model);
	rec.macs = count_macs(model, c);
	rec.runs = runs;
	const double n = static_cast<double>(runs);
	rec.mean_inference_seconds = std::accumulate(seconds.begin(), seconds.end(), 0.0) / n;
	double ss = 0.0;
	for (const double s : seconds) {
		ss += (s - rec.mean_inference_seconds) * (s - rec.mean_inference_seconds);
	}
	rec.stddev_inference_seconds = std::sqrt(ss / (n - 1.0));
	rec.min_inference_seconds = *std::min_element(seconds.begin(), seconds.end());
	rec.max_inference_seconds = *std::max_element(seconds.begin(), seconds.end());
	rec.peak_resident_bytes = peak_resident_bytes();
	return rec;
}

json to_json(const PairedResult &r) {
	return {{"primary", metrics::to_json(r.primary)},
	        {"baseline", metrics::to_json(r.baseline)},
	        {"delta_mse", r.delta_mse},
	        {"delta_mae", r.delta_mae}};
}

json to_json(const EfficiencyRecord &r) {
	return {{"model_id", r.model_id},
	        {"L", r.L},
	        {"T", r.T},
	        {"C", r.C},
	        {"batch_size", r.batch_size},
	        {"params", r.params},
	        {"macs", r.macs},
	        {"runs", r.runs},
	        {"mean_inference_seconds", r.mean_inference_seconds},
	        {"stddev_inference_seconds", r.stddev_inference_seconds},
	        {"min_inference_seconds", r.min_inference_seconds},
	        {"max_inference_seconds", r.max_inference_seconds},
	        {"peak_resident_bytes", r.peak_resident_bytes}};
}

std::string fnv1a_hex(std::string_view bytes) {
	std::uint64_t h = 0xcbf29ce484222325ULL;
	for (const unsigned char ch : bytes) {
		h ^= ch;
		h *= 0x100000001b3ULL;
	}
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
	return buf;
}

} // namespace dlinear::bench

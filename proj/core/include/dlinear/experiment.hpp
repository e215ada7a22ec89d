#pragma once

#include "dlinear/data.hpp"
#include "dlinear/metrics.hpp"
#include "dlinear/model.hpp"
#include "dlinear/synthetic.hpp"
#include "dlinear/train.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace dlinear::bench {

enum class ModelKind { dlinear_s, dlinear_i, linear, repeat_c };

std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string &name);

/// Either a CSV file or a synthetic generator.
struct DatasetSource {
	std::optional<std::filesystem::path> path;
	data::CsvSchema schema;
	std::optional<synthetic::SyntheticSpec> synthetic;
	/// Label used in summaries; derived from the file name or generator kind when empty.
	std::string id;
};

struct ExperimentConfig {
	DatasetSource dataset;
	/// Unset means the conventional split for the dataset (see default_split).
	std::optional<data::SplitSpec> split;
	std::size_t L = 96;
	std::size_t T = 96;
	ModelKind model = ModelKind::dlinear_s;
	int kernel_size = kDefaultKernelSize;
	train::TrainConfig train;
	/// Artifacts are written here; nothing is written when empty.
	std::filesystem::path output_dir;
	std::vector<std::string> tags;

	void validate() const;
};

ExperimentConfig config_from_json(const nlohmann::json &doc);
nlohmann::json to_json(const ExperimentConfig &config);

/// Reads a JSON config document. Relative dataset paths are tried against the
/// config file's directory first, then the working directory.
ExperimentConfig load_config(const std::filesystem::path &path);

/// Summary label for a dataset, e.g. "exchange_rate" -> "Exchange-Rate".
std::string canonical_dataset_id(std::string_view stem);

/// ETTh*: 12/4/4 months of hourly steps; ETTm*: the same in 15-minute steps; otherwise 0.7/0.1/0.2.
data::SplitSpec default_split(std::string_view dataset_id);

/// Everything `run` needs before fitting: standardized windows for each segment.
struct PreparedData {
	std::string dataset_id;
	std::vector<std::string> variate_names;
	data::SplitSpec split;
	data::SplitBoundaries boundaries;
	data::Scaler scaler;
	data::WindowSet train;
	data::WindowSet val;
	data::WindowSet test;
	std::string fingerprint;
	std::size_t channels = 0;
};

/// load -> split -> scale -> window. Throws DataError when (L, T) does not fit a segment.
PreparedData prepare(const ExperimentConfig &config);

struct RepeatC {
	std::size_t horizon = 0;
	bool operator==(const RepeatC &) const = default;
};

using TrainedModel = std::variant<RepeatC, model::DLinearModel, model::LinearMap>;

/// Freshly initialized model of the configured kind.
TrainedModel make_model(ModelKind kind, std::size_t lookback, std::size_t horizon, std::size_t channels,
                        int kernel_size);

metrics::ForecastFn forecast_fn(const TrainedModel &model);
std::uint64_t count_params(const TrainedModel &model);
std::uint64_t count_macs(const TrainedModel &model, std::size_t channels);

nlohmann::json to_json(const TrainedModel &model);
TrainedModel model_from_json(const nlohmann::json &doc);
TrainedModel load_checkpoint(const std::filesystem::path &path);

struct RunResult {
	metrics::EvalSummary summary;
	std::optional<train::TrainReport> report;
	TrainedModel model;
	std::vector<std::string> variate_names;
	double train_seconds = 0.0;
};

/**
 * @brief One experiment end to end.
 *
 * When output_dir is set, writes summary.jsonl, model.json, split.json,
 * train_report.json (trainable models only) and manifest.json.
 */
RunResult run(const ExperimentConfig &config);

struct SweepSpec {
	ExperimentConfig base;
	std::vector<std::size_t> lookbacks;
	std::vector<std::size_t> horizons;
};

struct SweepResult {
	std::vector<metrics::EvalSummary> summaries;
	std::vector<std::string> warnings;
};

/// Runs every (L, T) pair; infeasible pairs are skipped with a warning.
/// Writes sweep.csv (L,T,model,mse,mae) and summaries.jsonl into base.output_dir.
SweepResult sweep(const SweepSpec &spec);

struct PairedResult {
	metrics::EvalSummary primary;
	metrics::EvalSummary baseline;
	double delta_mse = 0.0; // primary - baseline
	double delta_mae = 0.0;
};

/// The configured DLinear model against the decomposition-free linear model, same data and training.
PairedResult ablate_decomposition(const ExperimentConfig &config);

/// Full training segment (primary) against the most recent `short_steps` rows (baseline).
PairedResult ablate_train_size(const ExperimentConfig &config, std::size_t short_steps);

struct EfficiencyRecord {
	std::string model_id;
	std::size_t L = 0;
	std::size_t T = 0;
	std::size_t C = 0;
	std::size_t batch_size = 0;
	std::uint64_t params = 0;
	std::uint64_t macs = 0;
	std::size_t runs = 0;
	double mean_inference_seconds = 0.0;
	double stddev_inference_seconds = 0.0;
	double min_inference_seconds = 0.0;
	double max_inference_seconds = 0.0;
	/// Peak resident set size of the process; 0 when unavailable.
	std::uint64_t peak_resident_bytes = 0;
};

/**
 * Parameter and MAC counts plus forward-pass timing on one batch of
 * config.train.batch_size random windows: one warm-up pass, then `runs` timed
 * passes. `channels` defaults to the dataset's variate count.
 */
EfficiencyRecord efficiency_report(const ExperimentConfig &config, std::optional<std::size_t> channels = std::nullopt,
                                   std::size_t runs = 5);

nlohmann::json to_json(const PairedResult &result);
nlohmann::json to_json(const EfficiencyRecord &record);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

} // namespace dlinear::bench

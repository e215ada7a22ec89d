// dlinear: command-line experiment runner.
#include "dlinear/error.hpp"
#include "dlinear/experiment.hpp"
#include "dlinear/reference.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using dlinear::ConfigError;
using dlinear::ExitCode;
using nlohmann::json;

namespace {

struct CommonFlags {
	std::string config;
	std::optional<std::uint64_t> seed;
	std::string out;
};

void add_common(CLI::App *cmd, CommonFlags &flags, bool config_required = true) {
	auto *opt = cmd->add_option("--config", flags.config, "JSON experiment config");
	if (config_required) {
		opt->required();
	}
	cmd->add_option("--seed", flags.seed, "override train.seed");
	cmd->add_option("--out", flags.out, "output directory (overrides output_dir)");
}

dlinear::bench::ExperimentConfig resolve(const CommonFlags &flags) {
	auto config = dlinear::bench::load_config(flags.config);
	if (flags.seed) {
		config.train.seed = *flags.seed;
	}
	if (!flags.out.empty()) {
		config.output_dir = flags.out;
	}
	return config;
}

void print_warnings(const std::vector<std::string> &warnings) {
	for (const auto &w : warnings) {
		std::cerr << "warning: " << w << "\n";
	}
}

int run_cmd(const CommonFlags &flags) {
	const auto result = dlinear::bench::run(resolve(flags));
	std::cout << dlinear::metrics::to_json_line(result.summary) << "\n";
	return 0;
}

int sweep_cmd(const CommonFlags &flags, const std::vector<std::size_t> &lookbacks,
              const std::vector<std::size_t> &horizons, bool compare) {
	dlinear::bench::SweepSpec spec{resolve(flags), lookbacks, horizons};
	const auto result = dlinear::bench::sweep(spec);
	print_warnings(result.warnings);
	for (const auto &s : result.summaries) {
		std::cout << dlinear::metrics::to_json_line(s) << "\n";
	}
	if (compare && !result.summaries.empty()) {
		const auto table = dlinear::reference::render_comparison(result.summaries);
		std::cerr << table;
		if (!spec.base.output_dir.empty()) {
			std::ofstream(spec.base.output_dir / "comparison.md") << table;
		}
	}
	if (result.summaries.empty()) {
		std::cerr << "error: no (L, T) pair was feasible\n";
		return static_cast<int>(ExitCode::infeasible_data);
	}
	return 0;
}

int paired_cmd(const dlinear::bench::PairedResult &r) {
	std::cout << dlinear::bench::to_json(r).dump() << "\n";
	return 0;
}

int efficiency_cmd(const CommonFlags &flags, const std::string &model, std::size_t lookback, std::size_t horizon,
                   std::optional<std::size_t> channels, std::size_t runs, std::size_t batch) {
	dlinear::bench::ExperimentConfig config;
	if (!flags.config.empty()) {
		config = resolve(flags);
	} else if (!channels) {
		throw ConfigError("bench-efficiency needs --config or --channels");
	} else {
		config.model = dlinear::bench::model_kind_from_string(model);
		config.L = lookback;
		config.T = horizon;
		if (flags.seed) {
			config.train.seed = *flags.seed;
		}
		config.output_dir = flags.out;
	}
	if (batch) {
		config.train.batch_size = batch;
	}
	const auto rec = dlinear::bench::efficiency_report(config, channels, runs);
	const auto doc = dlinear::bench::to_json(rec);
	std::cout << doc.dump() << "\n";
	if (!config.output_dir.empty()) {
		fs::create_directories(config.output_dir);
		std::ofstream(config.output_dir / "efficiency.json") << doc.dump(2) << "\n";
	}
	return 0;
}

int export_cmd(const std::string &checkpoint, const std::string &out, const std::vector<std::string> &names) {
	if (out.empty()) {
		throw ConfigError("export-weights needs --out");
	}
	const auto model = dlinear::bench::load_checkpoint(checkpoint);
	std::vector<fs::path> written;
	if (const auto *d = std::get_if<dlinear::model::DLinearModel>(&model)) {
		written = dlinear::model::export_weights(*d, out, names);
	} else if (const auto *l = std::get_if<dlinear::model::LinearMap>(&model)) {
		fs::create_directories(out);
		written.push_back(fs::path(out) / "weights.csv");
		dlinear::model::write_weight_csv(*l, written.back());
	} else {
		throw ConfigError("repeat-c has no weights to export");
	}
	for (const auto &p : written) {
		std::cout << p.string() << "\n";
	}
	return 0;
}

int decompose_cmd(const std::string &input, const std::string &out, int kernel) {
	if (out.empty()) {
		throw ConfigError("decompose needs --out");
	}
	auto series = dlinear::data::load_csv(input);
	const auto parts = dlinear::decompose(series.values, kernel);
	fs::create_directories(out);
	auto trend = series;
	trend.values = parts.trend;
	auto remainder = series;
	remainder.values = parts.remainder;
	dlinear::data::write_csv(trend, fs::path(out) / "trend.csv");
	dlinear::data::write_csv(remainder, fs::path(out) / "remainder.csv");
	return 0;
}

int synth_cmd(const CommonFlags &flags, dlinear::synthetic::SyntheticSpec spec, const std::string &kind) {
	if (!flags.config.empty()) {
		std::ifstream in(flags.config);
		if (!in) {
			throw ConfigError("cannot open '" + flags.config + "'");
		}
		try {
			spec = dlinear::synthetic::synthetic_spec_from_json(json::parse(in));
		} catch (const json::exception &e) {
			throw ConfigError(std::string("invalid synthetic spec: ") + e.what());
		}
	} else {
		spec.kind = dlinear::synthetic::kind_from_string(kind);
	}
	if (flags.seed) {
		spec.seed = *flags.seed;
	}
	if (flags.out.empty()) {
		throw ConfigError("synth needs --out <file.csv>");
	}
	spec.validate();
	dlinear::data::write_csv(dlinear::synthetic::generate(spec), flags.out);
	return 0;
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"DLinear long-term forecasting toolkit"};
	app.require_subcommand(1);

	CommonFlags run_flags, sweep_flags, decomp_flags, size_flags, eff_flags, synth_flags;

	auto *run = app.add_subcommand("run", "train and evaluate one configuration");
	add_common(run, run_flags);

	std::vector<std::size_t> lookbacks, horizons;
	bool compare = false;
	auto *sweep = app.add_subcommand("sweep", "evaluate a grid of look-backs and horizons");
	add_common(sweep, sweep_flags);
	sweep->add_option("--lookbacks", lookbacks, "look-back grid, e.g. 24,48,96")->delimiter(',')->required();
	sweep->add_option("--horizons", horizons, "horizon grid, e.g. 96,192")->delimiter(',')->required();
	sweep->add_flag("--compare", compare, "print a table against published numbers");

	auto *ablate_decomp = app.add_subcommand("ablate-decomp", "configured DLinear against plain linear");
	add_common(ablate_decomp, decomp_flags);

	std::size_t short_steps = 0;
	auto *ablate_size = app.add_subcommand("ablate-trainsize", "full against truncated training segment");
	add_common(ablate_size, size_flags);
	ablate_size->add_option("--short-steps", short_steps, "rows kept from the end of the train segment")->required();

	std::string eff_model = "dlinear-s";
	std::size_t eff_l = 96, eff_t = 720, runs = 5, batch = 0;
	std::optional<std::size_t> channels;
	auto *eff = app.add_subcommand("bench-efficiency", "parameter, MAC and inference-time report");
	add_common(eff, eff_flags, false);
	eff->add_option("--model", eff_model, "model kind when no config is given");
	eff->add_option("--L", eff_l, "look-back when no config is given");
	eff->add_option("--T", eff_t, "horizon when no config is given");
	eff->add_option("--channels", channels, "variate count (default: from the dataset)");
	eff->add_option("--runs", runs, "timed passes (at least 5)");
	eff->add_option("--batch", batch, "windows per pass (default: train.batch_size)");

	std::string checkpoint, export_out;
	std::vector<std::string> names;
	auto *exp = app.add_subcommand("export-weights", "write weight grids as CSV");
	exp->add_option("--checkpoint", checkpoint, "model.json from a run")->required()->check(CLI::ExistingFile);
	exp->add_option("--out", export_out, "output directory");
	exp->add_option("--names", names, "variate names for per-channel files")->delimiter(',');

	std::string input, decomp_out;
	int kernel = dlinear::kDefaultKernelSize;
	auto *dec = app.add_subcommand("decompose", "split a CSV series into trend and remainder");
	dec->add_option("--input", input, "CSV series")->required();
	dec->add_option("--kernel", kernel, "odd moving-average kernel size");
	dec->add_option("--out", decomp_out, "output directory");

	dlinear::synthetic::SyntheticSpec synth_spec;
	std::string synth_kind = "sinusoid";
	auto *synth = app.add_subcommand("synth", "generate a synthetic CSV series");
	add_common(synth, synth_flags, false);
	synth->add_option("--kind", synth_kind, "sinusoid, linear_trend, trend_plus_seasonal or white_noise");
	synth->add_option("--length", synth_spec.length);
	synth->add_option("--channels", synth_spec.channels);
	synth->add_option("--period", synth_spec.period);
	synth->add_option("--amplitude", synth_spec.amplitude);
	synth->add_option("--slope", synth_spec.slope);
	synth->add_option("--noise-std", synth_spec.noise_std);

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return static_cast<int>(ExitCode::config_error);
	}

	try {
		if (*run) {
			return run_cmd(run_flags);
		}
		if (*sweep) {
			return sweep_cmd(sweep_flags, lookbacks, horizons, compare);
		}
		if (*ablate_decomp) {
			return paired_cmd(dlinear::bench::ablate_decomposition(resolve(decomp_flags)));
		}
		if (*ablate_size) {
			return paired_cmd(dlinear::bench::ablate_train_size(resolve(size_flags), short_steps));
		}
		if (*eff) {
			return efficiency_cmd(eff_flags, eff_model, eff_l, eff_t, channels, runs, batch);
		}
		if (*exp) {
			return export_cmd(checkpoint, export_out, names);
		}
		if (*dec) {
			return decompose_cmd(input, decomp_out, kernel);
		}
		if (*synth) {
			return synth_cmd(synth_flags, synth_spec, synth_kind);
		}
	} catch (const dlinear::ConfigError &e) {
		std::cerr << "config error: " << e.what() << "\n";
		return static_cast<int>(ExitCode::config_error);
	} catch (const dlinear::DataError &e) {
		std::cerr << "infeasible data: " << e.what() << "\n";
		return static_cast<int>(ExitCode::infeasible_data);
	} catch (const dlinear::NumericalError &e) {
		std::cerr << "numerical failure: " << e.what() << "\n";
		return static_cast<int>(ExitCode::numerical_failure);
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return static_cast<int>(ExitCode::failure);
	}
	return static_cast<int>(ExitCode::failure);
}

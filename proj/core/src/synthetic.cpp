#include "dlinear/synthetic.hpp"

#include "dlinear/error.hpp"
#include "dlinear/rng.hpp"

#include <cmath>
#include <numbers>

namespace dlinear::synthetic {

void SyntheticSpec::validate() const {
	if (length == 0 || channels == 0) {
		throw ConfigError("synthetic series needs positive length and channel count");
	}
	const bool seasonal = kind == Kind::sinusoid || kind == Kind::trend_plus_seasonal;
	if (seasonal && !(period >= 2.0)) {
		throw ConfigError("seasonal synthetic series need period >= 2");
	}
	if (!(noise_std >= 0.0)) {
		throw ConfigError("noise_std must be non-negative");
	}
}

data::TimeSeries generate(const SyntheticSpec &spec) {
	spec.validate();
	data::TimeSeries series;
	series.values = Matrix(spec.length, spec.channels);
	series.timestamps.reserve(spec.length);
	for (std::size_t j = 0; j < spec.channels; ++j) {
		series.variate_names.push_back("ch" + std::to_string(j));
	}

	Rng rng(spec.seed);
	const double omega = 2.0 * std::numbers::pi / spec.period;
	for (std::size_t t = 0; t < spec.length; ++t) {
		series.timestamps.push_back(std::to_string(t));
		for (std::size_t j = 0; j < spec.channels; ++j) {
			const auto x = static_cast<double>(t + j);
			double v = 0.0;
			switch (spec.kind) {
			case Kind::sinusoid:
				v = spec.amplitude * std::sin(omega * x);
				break;
			case Kind::linear_trend:
				v = spec.slope * x;
				break;
			case Kind::trend_plus_seasonal:
				v = spec.slope * x + spec.amplitude * std::sin(omega * x);
				break;
			case Kind::white_noise:
				break;
			}
			if (spec.noise_std > 0.0) {
				v += spec.noise_std * rng.normal();
			}
			series.values(t, j) = v;
		}
	}
	return series;
}

std::string_view noise_algorithm() {
	return Rng::algorithm;
}

std::string to_string(Kind kind) {
	switch (kind) {
	case Kind::sinusoid:
		return "sinusoid";
	case Kind::linear_trend:
		return "linear_trend";
	case Kind::trend_plus_seasonal:
		return "trend_plus_seasonal";
	case Kind::white_noise:
		return "white_noise";
	}
	return "";
}

Kind kind_from_string(const std::string &name) {
	for (const Kind k : {Kind::sinusoid, Kind::linear_trend, Kind::trend_plus_seasonal, Kind::white_noise}) {
		if (to_string(k) == name) {
			return k;
		}
	}
	throw ConfigError("unknown synthetic kind '" + name + "'");
}

nlohmann::json to_json(const SyntheticSpec &s) {
	return {{"kind", to_string(s.kind)}, {"length", s.length},       {"channels", s.channels},
	        {"period", s.period},        {"amplitude", s.amplitude}, {"slope", s.slope},
	        {"noise_std", s.noise_std},  {"seed", s.seed}};
}

SyntheticSpec synthetic_spec_from_json(const nlohmann::json &doc) {
	if (!doc.is_object()) {
		throw ConfigError("synthetic spec must be an object");
	}
	SyntheticSpec s;
	try {
		for (const auto &[key, value] : doc.items()) {
			if (key == "kind") {
				s.kind = kind_from_string(value.get<std::string>());
			} else if (key == "length") {
				s.length = value.get<std::size_t>();
			} else if (key == "channels") {
				s.channels = value.get<std::size_t>();
			} else if (key == "period") {
				s.period = value.get<double>();
			} else if (key == "amplitude") {
				s.amplitude = value.get<double>();
			} else if (key == "slope") {
				s.slope = value.get<double>();
			} else if (key == "noise_std") {
				s.noise_std = value.get<double>();
			} else if (key == "seed") {
				s.seed = value.get<std::uint64_t>();
			} else {
				throw ConfigError("unknown synthetic setting '" + key + "'");
			}
		}
	} catch (const nlohmann::json::exception &e) {
		throw ConfigError(std::string("invalid synthetic spec: ") + e.what());
	}
	s.validate();
	return s;
}

} // namespace dlinear::synthetic

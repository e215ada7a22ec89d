#pragma once

#include "dlinear/data.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace dlinear::synthetic {

enum class Kind { sinusoid, linear_trend, trend_plus_seasonal, white_noise };

struct SyntheticSpec {
	Kind kind = Kind::sinusoid;
	std::size_t length = 1000;
	std::size_t channels = 1;
	double period = 24.0;
	double amplitude = 1.0;
	double slope = 0.0;
	/// Gaussian noise added to every value; white_noise uses it as its standard deviation.
	double noise_std = 0.0;
	std::uint64_t seed = 0;

	void validate() const;
};

/**
 * @brief Deterministic synthetic series.
 *
 * sinusoid: A sin(2 pi t / p); linear_trend: slope * t; trend_plus_seasonal:
 * their sum; white_noise: Gaussian with standard deviation noise_std. Channel
 * j is evaluated at t + j. Timestamps are the step indices.
 */
data::TimeSeries generate(const SyntheticSpec &spec);

/// Identifier of the noise generator, recorded in emitted metadata.
std::string_view noise_algorithm();

std::string to_string(Kind kind);
Kind kind_from_string(const std::string &name);

nlohmann::json to_json(const SyntheticSpec &spec);
SyntheticSpec synthetic_spec_from_json(const nlohmann::json &doc);

} // namespace dlinear::synthetic

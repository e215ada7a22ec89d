#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace dlinear {

/**
 * @brief Seeded generator with a fully specified output sequence.
 *
 * The engine is std::mt19937_64, whose output is fixed by the standard. The
 * standard distributions are implementation-defined, so draws are derived here:
 * 53-bit uniforms, rejection sampling for bounded integers, and Box-Muller
 * Gaussians (both outputs used, cosine first).
 */
class Rng {
public:
	static constexpr std::string_view algorithm = "mt19937_64+uniform53+box-muller";

	explicit Rng(std::uint64_t seed) : engine_(seed) {
	}

	std::uint64_t next_u64() {
		return engine_();
	}

	/// Uniform in [0, 1).
	double uniform() {
		return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
	}

	/// Uniform integer in [0, n); n must be positive.
	std::uint64_t bounded(std::uint64_t n) {
		const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
		std::uint64_t x = engine_();
		while (x >= limit) {
			x = engine_();
		}
		return x % n;
	}

	double normal();

	template <class It>
	void shuffle(It first, It last) {
		const auto n = static_cast<std::uint64_t>(last - first);
		for (std::uint64_t i = n; i > 1; --i) {
			const auto j = bounded(i);
			std::swap(first[static_cast<std::ptrdiff_t>(i - 1)], first[static_cast<std::ptrdiff_t>(j)]);
		}
	}

private:
	std::mt19937_64 engine_;
	double spare_ = 0.0;
	bool has_spare_ = false;
};

} // namespace dlinear

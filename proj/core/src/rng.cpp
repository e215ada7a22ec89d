#include "dlinear/rng.hpp"

#include <cmath>
#include <numbers>

namespace dlinear {

double Rng::normal() {
	if (has_spare_) {
		has_spare_ = false;
		return spare_;
	}
	const double u1 = 1.0 - uniform(); // (0, 1]
	const double u2 = uniform();
	const double radius = std::sqrt(-2.0 * std::log(u1));
	const double angle = 2.0 * std::numbers::pi * u2;
	spare_ = radius * std::sin(angle);
	has_spare_ = true;
	return radius * std::cos(angle);
}

} // namespace dlinear

#include "dlinear/decompose.hpp"

#include "dlinear/error.hpp"

#include <algorithm>
#include <string>

namespace dlinear {

void check_kernel_size(int kernel_size) {
	if (kernel_size < 1 || kernel_size % 2 == 0) {
		throw ConfigError("moving-average kernel size must be odd and positive, got " + std::to_string(kernel_size));
	}
}

void decompose_into(MatrixView input, int kernel_size, Matrix &trend, Matrix &remainder) {
	check_kernel_size(kernel_size);
	const std::size_t len = input.rows();
	const std::size_t c = input.cols();
	if (trend.rows() != len || trend.cols() != c) {
		trend = Matrix(len, c);
	}
	if (remainder.rows() != len || remainder.cols() != c) {
		remainder = Matrix(len, c);
	}
	if (len == 0) {
		return;
	}

	const auto half = static_cast<std::ptrdiff_t>(kernel_size / 2);
	const auto last = static_cast<std::ptrdiff_t>(len) - 1;
	const auto k = static_cast<double>(kernel_size);
	for (std::size_t t = 0; t < len; ++t) {
		auto out = trend.row(t);
		std::fill(out.begin(), out.end(), 0.0);
		const auto center = static_cast<std::ptrdiff_t>(t);
		const auto in = input.row(t);
		// Average deviations from the centre value so a flat window is exact.
		for (std::ptrdiff_t offset = -half; offset <= half; ++offset) {
			const auto src = static_cast<std::size_t>(std::clamp(center + offset, std::ptrdiff_t{0}, last));
			const auto other = input.row(src);
			for (std::size_t j = 0; j < c; ++j) {
				out[j] += other[j] - in[j];
			}
		}
		auto rem = remainder.row(t);
		for (std::size_t j = 0; j < c; ++j) {
			out[j] = in[j] + out[j] / k;
			rem[j] = in[j] - out[j];
		}
	}
}

DecompPair decompose(MatrixView input, int kernel_size) {
	DecompPair pair;
	pair.kernel_size = kernel_size;
	decompose_into(input, kernel_size, pair.trend, pair.remainder);
	return pair;
}

} // namespace dlinear

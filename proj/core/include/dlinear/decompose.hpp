#pragma once

#include "dlinear/matrix.hpp"

#include <cstddef>

namespace dlinear {

/// Moving-average kernel length used unless configured otherwise.
inline constexpr int kDefaultKernelSize = 25;

/// Trend (moving average) and remainder (input minus trend) of an L x C block.
struct DecompPair {
	Matrix trend;
	Matrix remainder;
	int kernel_size = kDefaultKernelSize;
};

/**
 * @brief Splits each column into a smooth trend and the remainder.
 *
 * Columns are padded by replicating their first and last values (kernel_size - 1) / 2
 * times, so the centered moving average keeps the input length. The remainder is
 * computed as input - trend. Throws ConfigError for an even or non-positive kernel.
 */
DecompPair decompose(MatrixView input, int kernel_size = kDefaultKernelSize);

/// Same as decompose, writing into caller-owned buffers (resized as needed).
void decompose_into(MatrixView input, int kernel_size, Matrix &trend, Matrix &remainder);

void check_kernel_size(int kernel_size);

} // namespace dlinear

#include "dlinear/matrix.hpp"

#include <stdexcept>
#include <string>

namespace dlinear {

MatrixView MatrixView::slice_rows(std::size_t begin, std::size_t count) const {
	if (begin > rows_ || count > rows_ - begin) {
		throw std::out_of_range("row slice [" + std::to_string(begin) + ", " + std::to_string(begin + count) +
		                        ") exceeds " + std::to_string(rows_) + " rows");
	}
	return {data_ + begin * cols_, count, cols_};
}

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill) : rows_(rows), cols_(cols), values_(rows * cols, fill) {
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
	if (values_.size() != rows * cols) {
		throw std::invalid_argument("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) +
		                            " cannot hold " + std::to_string(values_.size()) + " values");
	}
}

Matrix::Matrix(MatrixView view)
    : rows_(view.rows()), cols_(view.cols()), values_(view.data(), view.data() + view.size()) {
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
	const std::size_t n = rows.size();
	const std::size_t c = n == 0 ? 0 : rows.begin()->size();
	std::vector<double> values;
	values.reserve(n * c);
	for (const auto &r : rows) {
		if (r.size() != c) {
			throw std::invalid_argument("ragged initializer for Matrix");
		}
		values.insert(values.end(), r.begin(), r.end());
	}
	return Matrix(n, c, std::move(values));
}

Matrix Matrix::column(std::initializer_list<double> values) {
	return Matrix(values.size(), 1, std::vector<double>(values));
}

std::vector<double> Matrix::column_values(std::size_t c) const {
	std::vector<double> out(rows_);
	for (std::size_t r = 0; r < rows_; ++r) {
		out[r] = (*this)(r, c);
	}
	return out;
}

} // namespace dlinear

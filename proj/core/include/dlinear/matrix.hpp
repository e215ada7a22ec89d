#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace dlinear {

/// Non-owning, read-only view of a row-major block of doubles.
class MatrixView {
public:
	MatrixView() = default;
	MatrixView(const double *data, std::size_t rows, std::size_t cols) : data_(data), rows_(rows), cols_(cols) {
	}

	std::size_t rows() const {
		return rows_;
	}
	std::size_t cols() const {
		return cols_;
	}
	std::size_t size() const {
		return rows_ * cols_;
	}
	bool empty() const {
		return size() == 0;
	}
	const double *data() const {
		return data_;
	}

	double operator()(std::size_t r, std::size_t c) const {
		return data_[r * cols_ + c];
	}

	std::span<const double> row(std::size_t r) const {
		return {data_ + r * cols_, cols_};
	}

	std::span<const double> values() const {
		return {data_, size()};
	}

	/// Rows [begin, begin + count). Throws std::out_of_range when the range exceeds the view.
	MatrixView slice_rows(std::size_t begin, std::size_t count) const;

private:
	const double *data_ = nullptr;
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
};

/// Owning row-major matrix.
class Matrix {
public:
	Matrix() = default;
	Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
	Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
	explicit Matrix(MatrixView view);

	static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
	static Matrix column(std::initializer_list<double> values);

	std::size_t rows() const {
		return rows_;
	}
	std::size_t cols() const {
		return cols_;
	}
	std::size_t size() const {
		return values_.size();
	}
	bool empty() const {
		return values_.empty();
	}

	double &operator()(std::size_t r, std::size_t c) {
		return values_[r * cols_ + c];
	}
	double operator()(std::size_t r, std::size_t c) const {
		return values_[r * cols_ + c];
	}

	std::span<double> row(std::size_t r) {
		return {values_.data() + r * cols_, cols_};
	}
	std::span<const double> row(std::size_t r) const {
		return {values_.data() + r * cols_, cols_};
	}

	std::span<double> values() {
		return values_;
	}
	std::span<const double> values() const {
		return values_;
	}
	double *data() {
		return values_.data();
	}
	const double *data() const {
		return values_.data();
	}

	MatrixView view() const {
		return {values_.data(), rows_, cols_};
	}
	operator MatrixView() const {
		return view();
	}

	std::vector<double> column_values(std::size_t c) const;

	bool operator==(const Matrix &other) const = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<double> values_;
};

} // namespace dlinear

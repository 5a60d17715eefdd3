#ifndef DYNA_MATRIX_HPP
#define DYNA_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace dyna {

// Dense row-major matrix of doubles. Row-major so that per-node feature rows
// are contiguous (the hot access pattern in SpMM and the loss kernels).
class Matrix {
public:
    Matrix() = default;
    Matrix(int64_t rows, int64_t cols, double init = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols), init) {}

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }
    int64_t size() const { return rows_ * cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(int64_t i, int64_t j) { return data_[i * cols_ + j]; }
    double operator()(int64_t i, int64_t j) const { return data_[i * cols_ + j]; }

    std::span<double> row(int64_t i) { return {data_.data() + i * cols_, static_cast<size_t>(cols_)}; }
    std::span<const double> row(int64_t i) const {
        return {data_.data() + i * cols_, static_cast<size_t>(cols_)};
    }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

private:
    int64_t rows_ = 0;
    int64_t cols_ = 0;
    std::vector<double> data_;
};

}  // namespace dyna

#endif

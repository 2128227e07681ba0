#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace penmax {

using Vector = std::vector<double>;

/// Dense row-major matrix. Rows are contiguous so per-observation kernels
/// can walk them with a single span.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

    static Matrix from_rows(const std::vector<Vector>& rows) {
        Matrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
        for (int i = 0; i < m.rows_; ++i) {
            assert(static_cast<int>(rows[i].size()) == m.cols_);
            for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    std::span<const double> row(int i) const {
        return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }
    std::span<double> row(int i) {
        return {data_.data() + static_cast<size_t>(i) * cols_, static_cast<size_t>(cols_)};
    }

    Vector col(int j) const {
        Vector out(rows_);
        for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

inline double dot(std::span<const double> a, std::span<const double> b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double l1_norm(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) s += v < 0.0 ? -v : v;
    return s;
}

double mean(std::span<const double> v);
/// Sample standard deviation (n-1 denominator).
double sample_sd(std::span<const double> v);
bool all_finite(std::span<const double> v);

}  // namespace penmax

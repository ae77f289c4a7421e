#ifndef LSC_MATRIX_HPP
#define LSC_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lsc/error.hpp"

namespace lsc {

/// Dense row-major matrix of doubles. All math in the toolkit runs in
/// double precision; float32 appears only at file boundaries.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    std::span<double> row_span(std::size_t i) { return {row(i), cols}; }
    std::span<const double> row_span(std::size_t i) const { return {row(i), cols}; }

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    bool same_shape(const Matrix& other) const {
        return rows == other.rows && cols == other.cols;
    }
};

inline void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (!a.same_shape(b))
        throw error(errc::shape_mismatch, std::string(what) + ": shape mismatch");
}

}  // namespace lsc

#endif  // LSC_MATRIX_HPP

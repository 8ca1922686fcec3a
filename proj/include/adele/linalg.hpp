#pragma once

#include <cstdint>
#include <vector>

namespace adele::linalg {

/// Dense row-major matrix over GF(p).
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    uint32_t modulus() const noexcept { return p_; }

    uint32_t& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    uint32_t operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    uint32_t* row(std::size_t r) { return a_.data() + r * cols_; }
    const uint32_t* row(std::size_t r) const { return a_.data() + r * cols_; }

private:
    std::size_t rows_, cols_;
    uint32_t p_;
    std::vector<uint32_t> a_;
};

/// Reduced row echelon form in place; returns the pivot columns. The row
/// updates below each pivot run as an OpenMP parallel loop.
std::vector<std::size_t> row_reduce(Matrix& m);
/// Same elimination without threading; the reference implementation.
std::vector<std::size_t> row_reduce_serial(Matrix& m);

std::size_t rank(Matrix m);
std::size_t rank_serial(Matrix m);

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<std::vector<uint32_t>> kernel(Matrix m);

}  // namespace adele::linalg

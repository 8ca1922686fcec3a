#include "adele/linalg.hpp"

#include <utility>

#include "adele/field.hpp"

namespace adele::linalg {

namespace {

void eliminate_row(uint32_t* target, const uint32_t* pivot_row, std::size_t from, std::size_t cols, uint32_t p) {
    const uint64_t f = target[from];
    if (!f) return;
    const uint64_t neg = p - f;
    for (std::size_t c = from; c < cols; ++c) target[c] = static_cast<uint32_t>((target[c] + neg * pivot_row[c]) % p);
}

template <bool Threaded>
std::vector<std::size_t> reduce(Matrix& m) {
    const uint32_t p = m.modulus();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != r) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
        }
        const uint64_t inv = gfp::inv(m(r, c), p);
        for (std::size_t j = c; j < cols; ++j) m(r, j) = static_cast<uint32_t>(m(r, j) * inv % p);
        const uint32_t* prow = m.row(r);
        if constexpr (Threaded) {
#pragma omp parallel for schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(rows); ++i) {
                if (static_cast<std::size_t>(i) != r) eliminate_row(m.row(i), prow, c, cols, p);
            }
        } else {
            for (std::size_t i = 0; i < rows; ++i) {
                if (i != r) eliminate_row(m.row(i), prow, c, cols, p);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::vector<std::size_t> row_reduce(Matrix& m) { return reduce<true>(m); }
std::vector<std::size_t> row_reduce_serial(Matrix& m) { return reduce<false>(m); }

std::size_t rank(Matrix m) { return row_reduce(m).size(); }
std::size_t rank_serial(Matrix m) { return row_reduce_serial(m).size(); }

std::vector<std::vector<uint32_t>> kernel(Matrix m) {
    const auto pivots = row_reduce(m);
    const uint32_t p = m.modulus();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<uint32_t> v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            const uint32_t a = m(i, free);
            v[pivots[i]] = a ? p - a : 0;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace adele::linalg

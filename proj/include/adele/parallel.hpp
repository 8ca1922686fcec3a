#pragma once

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adele::parallel {

inline void set_num_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

inline int num_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Evaluates cb(i) for i in [0, n) concurrently and returns the results in index
/// order. Exceptions thrown by cb are captured and the first (by index) rethrown
/// on the calling thread.
template <typename Result, typename Callback>
std::vector<Result> map_indexed(std::size_t n, const Callback& cb) {
    std::vector<Result> out(n);
    std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        try {
            out[i] = cb(static_cast<std::size_t>(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

/// Serial counterpart of map_indexed, kept as the reference path.
template <typename Result, typename Callback>
std::vector<Result> map_indexed_serial(std::size_t n, const Callback& cb) {
    std::vector<Result> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(cb(i));
    return out;
}

}  // namespace adele::parallel

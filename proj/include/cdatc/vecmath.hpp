#pragma once

#include <cstddef>
#include <span>

namespace cdatc::vec {

inline double dot(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

// y += alpha * x
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
#pragma omp simd
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

inline double sq_norm(std::span<const double> a) { return dot(a, a); }

inline double sq_dist(std::span<const double> a, std::span<const double> b) {
    double acc = 0.0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

} // namespace cdatc::vec

#pragma once

// Data-parallel primitives shared by the spectral operators and norms.
//
// All reductions are blocked: the index range is cut into fixed-size
// blocks, block partials are computed in parallel, and the partials are
// folded serially in block order. The result is bit-identical for any
// thread count, including a build without OpenMP, which is what makes
// bit-reproducible CSV output possible.
//
// kernels::serial holds plain-loop reference versions of the concrete
// kernels; the test suite and the benchmark target compare against them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace absq::kernels {

inline constexpr std::size_t kReduceBlock = 4096;

namespace serial {

template <class F>
double indexed_sum(std::size_t lo, std::size_t hi, F&& value_at) {
    double acc = 0.0;
    for (std::size_t i = lo; i < hi; ++i) acc += value_at(i);
    return acc;
}

template <class F>
double indexed_max(std::size_t lo, std::size_t hi, F&& value_at) {
    double m = 0.0;
    for (std::size_t i = lo; i < hi; ++i) m = std::max(m, value_at(i));
    return m;
}

double sum(std::span<const double> v);
double sum_abs2(std::span<const std::complex<double>> v);
double sum_pow(std::span<const double> v, double p);
double max_abs(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);
void advection_product(std::span<const double> ax, std::span<const double> ay,
                       std::span<const double> gx, std::span<const double> gy,
                       std::span<double> out);

}  // namespace serial

/// Parallel loop over [0, n). The body must be free of cross-iteration
/// dependencies.
template <class F>
void parallel_for(std::size_t n, F&& body) {
    const auto sn = static_cast<std::ptrdiff_t>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t i = 0; i < sn; ++i) body(static_cast<std::size_t>(i));
}

/// Deterministic blocked sum of value_at(i) over [0, n).
template <class F>
double blocked_sum(std::size_t n, F&& value_at) {
    if (n <= kReduceBlock) return serial::indexed_sum(0, n, value_at);
    const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(nblocks);
    const auto bn = static_cast<std::ptrdiff_t>(nblocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t b = 0; b < bn; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = std::min(n, lo + kReduceBlock);
        partial[static_cast<std::size_t>(b)] = serial::indexed_sum(lo, hi, value_at);
    }
    double acc = 0.0;
    for (double p : partial) acc += p;
    return acc;
}

/// Deterministic blocked max of value_at(i) over [0, n); values must be
/// nonnegative (returns 0 for an empty range).
template <class F>
double blocked_max(std::size_t n, F&& value_at) {
    if (n <= kReduceBlock) return serial::indexed_max(0, n, value_at);
    const std::size_t nblocks = (n + kReduceBlock - 1) / kReduceBlock;
    std::vector<double> partial(nblocks);
    const auto bn = static_cast<std::ptrdiff_t>(nblocks);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t b = 0; b < bn; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReduceBlock;
        const std::size_t hi = std::min(n, lo + kReduceBlock);
        partial[static_cast<std::size_t>(b)] = serial::indexed_max(lo, hi, value_at);
    }
    double m = 0.0;
    for (double p : partial) m = std::max(m, p);
    return m;
}

double sum(std::span<const double> v);
double sum_abs2(std::span<const std::complex<double>> v);
double sum_pow(std::span<const double> v, double p);
double max_abs(std::span<const double> v);
double dot(std::span<const double> a, std::span<const double> b);

/// out[i] = ax[i]*gx[i] + ay[i]*gy[i]; the hot kernel assembling u.grad(f)
/// from physical-space samples.
void advection_product(std::span<const double> ax, std::span<const double> ay,
                       std::span<const double> gx, std::span<const double> gy,
                       std::span<double> out);

}  // namespace absq::kernels

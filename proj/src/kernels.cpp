#include "absq/kernels.hpp"

namespace absq::kernels {

namespace serial {

double sum(std::span<const double> v) {
    return indexed_sum(0, v.size(), [&](std::size_t i) { return v[i]; });
}

double sum_abs2(std::span<const std::complex<double>> v) {
    return indexed_sum(0, v.size(), [&](std::size_t i) { return std::norm(v[i]); });
}

double sum_pow(std::span<const double> v, double p) {
    return indexed_sum(0, v.size(),
                       [&](std::size_t i) { return std::pow(std::abs(v[i]), p); });
}

double max_abs(std::span<const double> v) {
    return indexed_max(0, v.size(), [&](std::size_t i) { return std::abs(v[i]); });
}

double dot(std::span<const double> a, std::span<const double> b) {
    return indexed_sum(0, a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

void advection_product(std::span<const double> ax, std::span<const double> ay,
                       std::span<const double> gx, std::span<const double> gy,
                       std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = ax[i] * gx[i] + ay[i] * gy[i];
}

}  // namespace serial

double sum(std::span<const double> v) {
    return blocked_sum(v.size(), [&](std::size_t i) { return v[i]; });
}

double sum_abs2(std::span<const std::complex<double>> v) {
    return blocked_sum(v.size(), [&](std::size_t i) { return std::norm(v[i]); });
}

double sum_pow(std::span<const double> v, double p) {
    return blocked_sum(v.size(),
                       [&](std::size_t i) { return std::pow(std::abs(v[i]), p); });
}

double max_abs(std::span<const double> v) {
    return blocked_max(v.size(), [&](std::size_t i) { return std::abs(v[i]); });
}

double dot(std::span<const double> a, std::span<const double> b) {
    return blocked_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

void advection_product(std::span<const double> ax, std::span<const double> ay,
                       std::span<const double> gx, std::span<const double> gy,
                       std::span<double> out) {
    parallel_for(out.size(), [&](std::size_t i) {
        out[i] = ax[i] * gx[i] + ay[i] * gy[i];
    });
}

}  // namespace absq::kernels

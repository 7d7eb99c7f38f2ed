#pragma once

#include <complex>
#include <span>
#include <vector>

#include "absq/grid.hpp"

namespace absq {

using Complex = std::complex<double>;

/// Fourier coefficients of a real scalar field on a periodic grid.
///
/// Coefficients are stored in FFT layout (same flat indexing as the
/// collocation samples) and normalized so that coeff(0,0) is the mean of
/// the field. Values are conjugate-symmetric for fields built from real
/// samples. Fields are value types; operations never mutate their inputs.
class SpectralField {
public:
    explicit SpectralField(const Grid& grid)
        : grid_(grid), c_(grid.size(), Complex(0.0, 0.0)) {}

    const Grid& grid() const { return grid_; }
    std::size_t size() const { return c_.size(); }

    Complex& operator[](std::size_t i) { return c_[i]; }
    const Complex& operator[](std::size_t i) const { return c_[i]; }
    Complex& at(int ix, int iy) { return c_[grid_.at(ix, iy)]; }
    const Complex& at(int ix, int iy) const { return c_[grid_.at(ix, iy)]; }

    std::span<Complex> coeffs() { return c_; }
    std::span<const Complex> coeffs() const { return c_; }

    /// Mean value of the field (the k=0 coefficient).
    double mean() const { return c_[0].real(); }

    bool dealiased() const { return dealiased_; }
    void mark_dealiased(bool v) { dealiased_ = v; }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double s);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) {
        a += b;
        return a;
    }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) {
        a -= b;
        return a;
    }
    friend SpectralField operator*(SpectralField a, double s) {
        a *= s;
        return a;
    }
    friend SpectralField operator*(double s, SpectralField a) {
        a *= s;
        return a;
    }

private:
    Grid grid_;
    std::vector<Complex> c_;
    bool dealiased_ = false;
};

/// A two-component vector field (u^x, u^y) sharing one grid.
struct VectorField {
    SpectralField x;
    SpectralField y;

    explicit VectorField(const Grid& grid) : x(grid), y(grid) {}
    VectorField(SpectralField fx, SpectralField fy);

    const Grid& grid() const { return x.grid(); }

    bool dealiased() const { return x.dealiased() && y.dealiased(); }
    void mark_dealiased(bool v) {
        x.mark_dealiased(v);
        y.mark_dealiased(v);
    }

    VectorField& operator+=(const VectorField& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    VectorField& operator-=(const VectorField& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    VectorField& operator*=(double s) {
        x *= s;
        y *= s;
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) {
        a += b;
        return a;
    }
    friend VectorField operator-(VectorField a, const VectorField& b) {
        a -= b;
        return a;
    }
    friend VectorField operator*(VectorField a, double s) {
        a *= s;
        return a;
    }
};

/// Throws ConfigError unless both fields live on the same grid.
void require_same_grid(const Grid& a, const Grid& b, const char* what);

}  // namespace absq

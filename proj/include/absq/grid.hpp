#pragma once

#include <cstddef>
#include <numbers>

#include "absq/errors.hpp"

namespace absq {

/// Uniform periodic collocation grid on [0,Lx) x [0,Ly).
///
/// Wavenumbers follow the usual FFT layout with a positive Nyquist: the
/// storage index j in [0,n) maps to the integer mode j for j <= n/2 and
/// to j-n above, so the mode set is {-n/2+1, ..., n/2}. Physical
/// wavenumbers carry the 2*pi/L factor.
class Grid {
public:
    static constexpr double two_pi = 2.0 * std::numbers::pi;

    Grid(int nx, int ny, double lx = two_pi, double ly = two_pi)
        : nx_(nx), ny_(ny), lx_(lx), ly_(ly) {
        if (nx < 8 || ny < 8 || nx % 2 != 0 || ny % 2 != 0)
            throw ConfigError("grid resolution must be even and at least 8 per axis");
        if (!(lx > 0.0) || !(ly > 0.0))
            throw ConfigError("grid box lengths must be positive");
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double lx() const { return lx_; }
    double ly() const { return ly_; }

    std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }

    int mode_x(int ix) const { return ix <= nx_ / 2 ? ix : ix - nx_; }
    int mode_y(int iy) const { return iy <= ny_ / 2 ? iy : iy - ny_; }
    double kx(int ix) const { return mode_x(ix) * (two_pi / lx_); }
    double ky(int iy) const { return mode_y(iy) * (two_pi / ly_); }

    double dx() const { return lx_ / nx_; }
    double dy() const { return ly_ / ny_; }
    double x(int ix) const { return ix * dx(); }
    double y(int iy) const { return iy * dy(); }

    double area() const { return lx_ * ly_; }
    double cell_area() const { return dx() * dy(); }

    /// Flat index of the collocation point / coefficient (ix, iy);
    /// row-major with x contiguous.
    std::size_t at(int ix, int iy) const {
        return static_cast<std::size_t>(iy) * nx_ + ix;
    }

    bool operator==(const Grid&) const = default;

private:
    int nx_, ny_;
    double lx_, ly_;
};

}  // namespace absq

#include "absq/field.hpp"

#include "absq/kernels.hpp"

namespace absq {

void require_same_grid(const Grid& a, const Grid& b, const char* what) {
    if (!(a == b)) throw ConfigError(std::string("grid mismatch in ") + what);
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_, "field addition");
    kernels::parallel_for(c_.size(), [&](std::size_t i) { c_[i] += o.c_[i]; });
    dealiased_ = dealiased_ && o.dealiased_;
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(grid_, o.grid_, "field subtraction");
    kernels::parallel_for(c_.size(), [&](std::size_t i) { c_[i] -= o.c_[i]; });
    dealiased_ = dealiased_ && o.dealiased_;
    return *this;
}

SpectralField& SpectralField::operator*=(double s) {
    kernels::parallel_for(c_.size(), [&](std::size_t i) { c_[i] *= s; });
    return *this;
}

VectorField::VectorField(SpectralField fx, SpectralField fy)
    : x(std::move(fx)), y(std::move(fy)) {
    require_same_grid(x.grid(), y.grid(), "vector field construction");
}

}  // namespace absq

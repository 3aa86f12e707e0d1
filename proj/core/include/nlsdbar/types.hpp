#pragma once

#include <complex>
#include <numbers>

namespace nlsdbar {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

}  // namespace nlsdbar

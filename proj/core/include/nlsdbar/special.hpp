#pragma once

#include <utility>

#include "nlsdbar/types.hpp"

namespace nlsdbar {

/// Principal-branch log Gamma(w): log Gamma(w + N) from the Stirling series
/// minus the principal logs of w, w+1, ..., w+N-1. Throws DomainError at the
/// poles w = 0, -1, -2, ...
cplx log_gamma(cplx w);

/// Gamma(w) via exp(log_gamma); throws at poles.
cplx gamma_fn(cplx w);

/// 1/Gamma(w), entire; zero at the poles.
cplx rgamma(cplx w);

/// Parabolic cylinder function D_a(zeta), the solution of
///   D'' + (1/2 - zeta^2/4 + a) D = 0
/// normalised by D_a(zeta) ~ zeta^a exp(-zeta^2/4) for |arg zeta| < 3pi/4.
///
/// |zeta| <= 8: Maclaurin series in __float128 seeded with
///   D_a(0) = 2^{a/2} sqrt(pi) / Gamma((1-a)/2),
///   D_a'(0) = -2^{(a+1)/2} sqrt(pi) / Gamma(-a/2).
/// |zeta| > 8: optimally truncated large-zeta expansion, with the second
/// exponential (Stokes) term added for |arg zeta| > pi/2.
///
/// Throws RangeError when |exp(+-zeta^2/4)| would overflow a double.
cplx pcf_D(cplx a, cplx zeta);

/// (D_a(zeta), dD_a/dzeta), differentiated analytically in both regimes.
std::pair<cplx, cplx> pcf_D_with_derivative(cplx a, cplx zeta);

namespace pcf_detail {
/// Radius separating the series and asymptotic regimes.
inline constexpr double kSeriesRadius = 8.0;
/// Both regimes exposed for the overlap cross-check.
std::pair<cplx, cplx> series(cplx a, cplx zeta);
std::pair<cplx, cplx> asymptotic(cplx a, cplx zeta);
}  // namespace pcf_detail

}  // namespace nlsdbar

#pragma once

#include <vector>

namespace nlsdbar {

/// value ~ exp(intercept) * t^exponent, fitted in log-log space.
struct DecayFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t samples = 0;
};

/// Least-squares slope of log(value) against log(t). Throws DomainError for
/// fewer than min_samples points, mismatched lengths or non-positive entries.
DecayFit fit_decay(const std::vector<double>& ts, const std::vector<double>& values,
                   std::size_t min_samples = 5);

}  // namespace nlsdbar

#include "nlsdbar/fit.hpp"

#include <cmath>

#include "nlsdbar/error.hpp"

namespace nlsdbar {

DecayFit fit_decay(const std::vector<double>& ts, const std::vector<double>& values,
                   std::size_t min_samples) {
  if (ts.size() != values.size()) throw DomainError("fit_decay: length mismatch");
  if (ts.size() < min_samples || ts.size() < 2) throw DomainError("fit_decay: too few samples");
  const double n = static_cast<double>(ts.size());
  double sx = 0, sy = 0;
  std::vector<double> lx(ts.size()), ly(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (!(ts[k] > 0.0) || !(values[k] > 0.0))
      throw DomainError("fit_decay: abscissae and values must be positive");
    lx[k] = std::log(ts[k]);
    ly[k] = std::log(values[k]);
    sx += lx[k];
    sy += ly[k];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    sxx += (lx[k] - mx) * (lx[k] - mx);
    sxy += (lx[k] - mx) * (ly[k] - my);
    syy += (ly[k] - my) * (ly[k] - my);
  }
  if (sxx == 0.0) throw DomainError("fit_decay: abscissae are all equal");
  DecayFit f;
  f.exponent = sxy / sxx;
  f.intercept = my - f.exponent * mx;
  f.samples = ts.size();
  f.r_squared = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return f;
}

}  // namespace nlsdbar

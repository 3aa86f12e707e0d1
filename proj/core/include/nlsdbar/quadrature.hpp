#pragma once

#include <cmath>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

namespace nlsdbar::quad {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point rule, computed once per n by Newton iteration on P_n and cached.
const GaussRule& gauss_legendre(int n);

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  std::size_t evaluations = 0;
  bool converged = true;
};

namespace detail {

// Kronrod 15-point extension of the 7-point Gauss rule (QUADPACK qk15).
inline constexpr double xgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double wgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
auto gk15(F& f, double a, double b, double& err) {
  using T = decltype(f(a));
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = fc * wgk[7];
  T gauss = fc * wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const T s = f(c - dx) + f(c + dx);
    kron += s * wgk[j];
    if (j % 2 == 1) gauss += s * wg[j / 2];
  }
  kron *= h;
  gauss *= h;
  err = std::abs(kron - gauss);
  return kron;
}

template <class T>
struct Interval {
  double a, b;
  T value;
  double error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

// Global adaptive refinement: the interval with the largest error estimate is
// bisected until the summed estimate meets max(abs_tol, rel_tol |I|) or the
// interval budget runs out. Intervals narrower than min_width are frozen;
// they only occur beside integrable endpoint singularities, where the
// estimate is dominated by rounding.
template <class F>
auto refine(F& f, std::span<const double> breaks, double abs_tol, double rel_tol,
            std::size_t max_intervals) {
  using T = decltype(f(0.0));
  Result<T> out;
  std::priority_queue<Interval<T>> heap;
  std::vector<Interval<T>> frozen;
  T total{};
  double err_total = 0.0;
  const double span_len = breaks.back() - breaks.front();
  const double min_width = std::ldexp(span_len, -50);
  auto push = [&](double a, double b) {
    double e = 0.0;
    const T v = gk15(f, a, b, e);
    out.evaluations += 15;
    total += v;
    err_total += e;
    Interval<T> iv{a, b, v, e};
    if (b - a < min_width) frozen.push_back(iv);
    else heap.push(iv);
  };
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i)
    if (breaks[i + 1] > breaks[i]) push(breaks[i], breaks[i + 1]);
  while (!heap.empty() && err_total > std::max(abs_tol, rel_tol * std::abs(total))) {
    if (heap.size() + frozen.size() >= max_intervals) break;
    const Interval<T> worst = heap.top();
    heap.pop();
    total -= worst.value;
    err_total -= worst.error;
    const double m = 0.5 * (worst.a + worst.b);
    push(worst.a, m);
    push(m, worst.b);
  }
  // resum to shed the drift of the running totals
  T sum{};
  double err = 0.0;
  for (const auto& iv : frozen) {
    sum += iv.value;
    err += iv.error;
  }
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  out.value = sum;
  out.error = err;
  out.converged = err <= std::max(abs_tol, rel_tol * std::abs(sum)) * 1.0000001;
  return out;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b], for
/// real or complex integrands. Stops when the summed error estimate is below
/// max(abs_tol, rel_tol |I|); `converged` is false if max_intervals ran out.
template <class F>
auto integrate(F&& f, double a, double b, double abs_tol = 1e-12, double rel_tol = 0.0,
               std::size_t max_intervals = 20000) {
  using T = decltype(f(a));
  if (!(b > a)) return Result<T>{};
  const double br[2] = {a, b};
  return detail::refine(f, std::span<const double>(br, 2), abs_tol, rel_tol, max_intervals);
}

/// As integrate, starting from the panels [breaks[i], breaks[i+1]].
template <class F>
auto integrate_panels(F&& f, std::span<const double> breaks, double abs_tol = 1e-12,
                      double rel_tol = 0.0, std::size_t max_intervals = 20000) {
  using T = decltype(f(0.0));
  if (breaks.size() < 2 || !(breaks.back() > breaks.front())) return Result<T>{};
  return detail::refine(f, breaks, abs_tol, rel_tol, std::max(max_intervals, 2 * breaks.size()));
}

/// Fixed n-point Gauss-Legendre rule on [a, b].
template <class F>
auto fixed_gauss(F&& f, double a, double b, int n) {
  const GaussRule& rule = gauss_legendre(n);
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  decltype(f(a)) s{};
  for (std::size_t j = 0; j < rule.nodes.size(); ++j) s += f(c + h * rule.nodes[j]) * rule.weights[j];
  return s * h;
}

}  // namespace nlsdbar::quad

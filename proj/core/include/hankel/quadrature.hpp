#pragma once

// Adaptive Gauss-Kronrod integration and the quadrature oracles that every
// closed form in the library is checked against.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "hankel/errors.hpp"

namespace hankel::quadrature {

template <class T>
struct QuadratureResult {
  T value{};
  double abs_error_estimate = 0.0;
  int evaluations = 0;
};

struct QuadratureOptions {
  double tol = 1e-12;                 // absolute tolerance on the whole interval
  std::vector<double> breakpoints;    // interior kinks; outside points are ignored
  double max_panel_width = std::numeric_limits<double>::infinity();
  int max_panels = 10000;
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
  double a = 0.0;
  double b = 0.0;
  T value{};
  double error = 0.0;
  double roundoff = 0.0;  // error floor set by cancellation in the rule itself
};

template <class T>
double magnitude(const T& v) {
  return std::abs(v);
}

template <class T, class F>
Panel<T> kronrod_panel(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<T, 15> fv{};
  fv[7] = f(center);
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    fv[j] = f(center - dx);
    fv[14 - j] = f(center + dx);
  }
  T kronrod = fv[7] * kKronrodWeights[7];
  T gauss = fv[7] * kGaussWeights[3];
  double abs_sum = magnitude(fv[7]) * kKronrodWeights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    const T pair = fv[j] + fv[14 - j];
    kronrod += pair * kKronrodWeights[j];
    abs_sum += (magnitude(fv[j]) + magnitude(fv[14 - j])) * kKronrodWeights[j];
    if (j % 2 == 1) gauss += pair * kGaussWeights[j / 2];
  }
  const T mean = kronrod * 0.5;
  double asc = magnitude(fv[7] - mean) * kKronrodWeights[7];
  for (std::size_t j = 0; j < 7; ++j) {
    asc += (magnitude(fv[j] - mean) + magnitude(fv[14 - j] - mean)) * kKronrodWeights[j];
  }
  Panel<T> p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  asc *= std::abs(half);
  abs_sum *= std::abs(half);
  double err = magnitude(kronrod - gauss) * std::abs(half);
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  p.roundoff = 50.0 * eps * abs_sum;
  p.error = std::max(err, p.roundoff);
  return p;
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
///
/// The interval is first cut at opts.breakpoints and into panels no wider than
/// opts.max_panel_width; the panel with the largest error estimate is then
/// bisected until the summed estimate drops below opts.tol or every panel sits
/// at its round-off floor. Panels are summed left to right, so results are
/// deterministic. Throws BudgetExceededError past opts.max_panels panels.
template <class T, class F>
QuadratureResult<T> integrate(F&& f, double a, double b, const QuadratureOptions& opts) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_adaptive: requires finite a < b");
  }
  if (!(opts.tol > 0.0)) throw DomainError("integrate_adaptive: tol must be positive");

  std::vector<double> cuts{a};
  {
    std::vector<double> bp;
    for (double p : opts.breakpoints) {
      if (p > a && p < b) bp.push_back(p);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    bp.push_back(b);
    for (double right : bp) {
      const double left = cuts.back();
      const double width = right - left;
      int pieces = 1;
      if (std::isfinite(opts.max_panel_width) && width > opts.max_panel_width) {
        pieces = static_cast<int>(std::ceil(width / opts.max_panel_width));
      }
      for (int k = 1; k < pieces; ++k) cuts.push_back(left + width * k / pieces);
      cuts.push_back(right);
    }
  }

  using PanelT = detail::Panel<T>;
  std::vector<PanelT> done;
  auto by_error = [](const PanelT& x, const PanelT& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a > y.a;
  };
  std::priority_queue<PanelT, std::vector<PanelT>, decltype(by_error)> active(by_error);

  int evaluations = 0;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    PanelT p = detail::kronrod_panel<T>(f, cuts[i], cuts[i + 1]);
    evaluations += 15;
    total_error += p.error;
    active.push(p);
  }

  auto finish = [&]() {
    while (!active.empty()) {
      done.push_back(active.top());
      active.pop();
    }
    std::sort(done.begin(), done.end(),
              [](const PanelT& x, const PanelT& y) { return x.a < y.a; });
    QuadratureResult<T> r;
    double err = 0.0;
    for (const auto& p : done) {
      r.value += p.value;
      err += p.error;
    }
    r.abs_error_estimate = err;
    r.evaluations = evaluations;
    return r;
  };

  while (total_error > opts.tol && !active.empty()) {
    PanelT worst = active.top();
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (worst.error <= worst.roundoff || !(mid > worst.a && mid < worst.b)) {
      // Cannot improve this one; park it.
      done.push_back(worst);
      continue;
    }
    if (static_cast<int>(active.size() + done.size()) + 2 > opts.max_panels) {
      active.push(worst);
      const auto best = finish();
      double best_real = 0.0;
      if constexpr (std::is_same_v<T, double>) {
        best_real = best.value;
      } else {
        best_real = std::real(best.value);
      }
      throw BudgetExceededError("integrate_adaptive: panel budget of " +
                                    std::to_string(opts.max_panels) + " exceeded",
                                best_real, best.abs_error_estimate);
    }
    PanelT left = detail::kronrod_panel<T>(f, worst.a, mid);
    PanelT right = detail::kronrod_panel<T>(f, mid, worst.b);
    evaluations += 30;
    total_error += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
  }
  return finish();
}

/// Real-valued convenience form.
QuadratureResult<double> integrate_adaptive(const std::function<double(double)>& f, double a,
                                            double b, double tol,
                                            std::span<const double> breakpoints = {});

/// Integral of f over the real line for integrands bounded by
/// C e^{-|y|} (1+|y|)^degree. The tails are dropped where that bound, with
/// C = 1, falls under tol/10; the interior is split at 0 and at `kinks`.
QuadratureResult<double> improper_damped(const std::function<double(double)>& f, double tol,
                                         std::span<const double> kinks = {},
                                         int degree = 0);

/// Truncation half-width used by improper_damped.
double damped_truncation_point(double tol, int degree);

struct SymbolOracleResult {
  double value = 0.0;
  double imag_residue = 0.0;  // |Im| of the raw complex integral before it is dropped
  double abs_error_estimate = 0.0;
  int evaluations = 0;
};

/// (1/2pi) int_{-1}^{1} psi_l(t) e^{-itx} dt with psi_l(t) = 2((1+it)/(1-it))^l,
/// integrated directly as a complex integral. Panels are at most pi/|x| wide.
/// Throws NumericalError if the imaginary residue exceeds 1e-12.
SymbolOracleResult fourier_symbol_oracle(int ell, double x, double tol = 1e-13);

/// (1/sqrt(2pi)) int_R (1+t^2)^{-l} e^{-iwt} dt, 1 <= l <= kMaxOrder.
/// [0, T] by adaptive quadrature; the tail by repeated integration by parts,
/// -Re e^{iwT} sum_k (-1)^k g^{(k)}(T) / (iw)^{k+1}, with the derivatives of
/// g = (1+it)^{-l} (1-it)^{-l} exact. w = 0 is integrated after t = tan(theta).
QuadratureResult<double> rational_power_transform_oracle(int ell, double w, double tol = 1e-13);

/// (1/sqrt(2pi)) int_{-1}^{1} 2 (1+it)^{2l} e^{-itw} dt, a complex integral
/// whose imaginary part is dropped (NumericalError if it exceeds 1e-12).
QuadratureResult<double> polynomial_symbol_transform_oracle(int ell, double w, double tol = 1e-13);

}  // namespace hankel::quadrature

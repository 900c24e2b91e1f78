#include "hankel/quadrature.hpp"

#include <cmath>
#include <complex>

#include "hankel/constants.hpp"

namespace hankel::quadrature {

QuadratureResult<double> integrate_adaptive(const std::function<double(double)>& f, double a,
                                            double b, double tol,
                                            std::span<const double> breakpoints) {
  QuadratureOptions opts;
  opts.tol = tol;
  opts.breakpoints.assign(breakpoints.begin(), breakpoints.end());
  return integrate<double>(f, a, b, opts);
}

double damped_truncation_point(double tol, int degree) {
  const double d = static_cast<double>(std::max(degree, 0));
  double t = 40.0 + d * std::log1p(d);
  // Integrated tail of e^{-y} y^d beyond t is about e^{-t} t^d (for t >> d).
  const double target = std::log(std::max(tol, 1e-300) / 10.0);
  while (-t + d * std::log(t) > target) t += 1.0;
  return t;
}

QuadratureResult<double> improper_damped(const std::function<double(double)>& f, double tol,
                                         std::span<const double> kinks, int degree) {
  const double t = damped_truncation_point(tol, degree);
  QuadratureOptions opts;
  opts.tol = tol;
  opts.breakpoints.push_back(0.0);
  for (double k : kinks) opts.breakpoints.push_back(k);
  // Narrow starting panels keep the exponential decay resolved.
  opts.max_panel_width = 4.0;
  return integrate<double>(f, -t, t, opts);
}

SymbolOracleResult fourier_symbol_oracle(int ell, double x, double tol) {
  if (ell < 0 || ell > kMaxOrder) {
    throw OrderTooLargeError("fourier_symbol_oracle: ell outside [0, " +
                             std::to_string(kMaxOrder) + "]");
  }
  using C = std::complex<double>;
  auto integrand = [ell, x](double t) -> C {
    const C mobius = C(1.0, t) / C(1.0, -t);
    C power = 1.0;
    for (int k = 0; k < ell; ++k) power *= mobius;
    return 2.0 * power * std::polar(1.0, -t * x);
  };
  QuadratureOptions opts;
  opts.tol = tol * 2.0 * kPi;
  opts.breakpoints.push_back(0.0);
  if (x != 0.0) opts.max_panel_width = std::min(2.0, kPi / std::abs(x));
  opts.max_panels = 100000;
  const auto raw = integrate<C>(integrand, -1.0, 1.0, opts);
  SymbolOracleResult r;
  const C value = raw.value / (2.0 * kPi);
  r.value = value.real();
  r.imag_residue = std::abs(value.imag());
  r.abs_error_estimate = raw.abs_error_estimate / (2.0 * kPi);
  r.evaluations = raw.evaluations;
  if (r.imag_residue > 1e-12) {
    throw NumericalError("fourier_symbol_oracle: imaginary residue " +
                         std::to_string(r.imag_residue) + " exceeds 1e-12");
  }
  return r;
}

QuadratureResult<double> rational_power_transform_oracle(int ell, double w, double tol) {
  if (ell < 1 || ell > kMaxOrder) {
    throw OrderTooLargeError("rational_power_transform_oracle: ell outside [1, " +
                             std::to_string(kMaxOrder) + "]");
  }
  const double norm = 2.0 / std::sqrt(2.0 * kPi);  // even integrand: twice the half line
  const double aw = std::abs(w);
  QuadratureOptions opts;
  opts.tol = tol / norm;
  if (aw == 0.0) {
    auto f = [ell](double theta) { return std::pow(std::cos(theta), 2 * ell - 2); };
    auto r = integrate<double>(f, 0.0, kPi / 2.0, opts);
    r.value *= norm;
    r.abs_error_estimate *= norm;
    return r;
  }
  const double upper = std::max(50.0, 200.0 / aw);
  opts.max_panel_width = std::min(4.0, kPi / aw);
  auto f = [ell, aw](double t) { return std::cos(aw * t) / std::pow(1.0 + t * t, ell); };
  auto r = integrate<double>(f, 0.0, upper, opts);

  using C = std::complex<double>;
  const C plus(1.0, upper);
  const C minus(1.0, -upper);
  // d^j/dt^j (1 +- it)^{-l} = (-l)_j (+-i)^j (1 +- it)^{-l-j}, falling factorial (-l)_j.
  auto factor_derivative = [ell](C base, C unit, int j) {
    C d = std::pow(base, -ell - j);
    for (int i = 0; i < j; ++i) d *= static_cast<double>(-ell - i) * unit;
    return d;
  };
  constexpr int kTerms = 24;
  C tail = 0.0;
  C iw_power = C(0.0, aw);
  double last = 0.0;
  for (int k = 0; k < kTerms; ++k) {
    C gk = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= k; ++j) {
      gk += binom * factor_derivative(plus, C(0.0, 1.0), j) *
            factor_derivative(minus, C(0.0, -1.0), k - j);
      binom = binom * (k - j) / (j + 1);
    }
    const C term = ((k % 2) ? -1.0 : 1.0) * gk / iw_power;
    tail += term;
    last = std::abs(term);
    iw_power *= C(0.0, aw);
  }
  tail *= -std::polar(1.0, aw * upper);
  r.value = norm * (r.value + tail.real());
  r.abs_error_estimate = norm * (r.abs_error_estimate + last);
  return r;
}

QuadratureResult<double> polynomial_symbol_transform_oracle(int ell, double w, double tol) {
  if (ell < 0 || ell > kMaxOrder) {
    throw OrderTooLargeError("polynomial_symbol_transform_oracle: ell outside [0, " +
                             std::to_string(kMaxOrder) + "]");
  }
  using C = std::complex<double>;
  auto integrand = [ell, w](double t) -> C {
    return 2.0 * std::pow(C(1.0, t), 2 * ell) * std::polar(1.0, -t * w);
  };
  const double norm = 1.0 / std::sqrt(2.0 * kPi);
  QuadratureOptions opts;
  opts.tol = tol / norm;
  if (w != 0.0) opts.max_panel_width = std::min(2.0, kPi / std::abs(w));
  const auto raw = integrate<C>(integrand, -1.0, 1.0, opts);
  const double imag = std::abs(raw.value.imag()) * norm;
  if (imag > 1e-12) {
    throw NumericalError("polynomial_symbol_transform_oracle: imaginary residue " +
                         std::to_string(imag) + " exceeds 1e-12");
  }
  return {raw.value.real() * norm, raw.abs_error_estimate * norm, raw.evaluations};
}

}  // namespace hankel::quadrature

#include "hankel/kernels.hpp"

#include <array>
#include <cmath>
#include <mutex>
#include <vector>

#include "hankel/combinatorics.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"

namespace hankel::kernels {
namespace {

using combinatorics::Rational;

// Integer-valued helpers; every value used here is far below 2^53.
double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return std::round(c);
}

double falling(int m, int j) {  // m! / (m-j)!
  double f = 1.0;
  for (int i = 0; i < j; ++i) f *= m - i;
  return f;
}

double fact(int n) { return falling(n, n); }

double sign_of(int k) { return (k & 1) ? -1.0 : 1.0; }

// Cached double coefficients of p_l.
const std::vector<double>& p_coefficients(int ell) {
  static std::array<std::vector<double>, kMaxOrder + 1> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int l = 1; l <= kMaxOrder; ++l) cache[static_cast<std::size_t>(l)] =
        combinatorics::p_poly(l).to_double();
  });
  return cache[static_cast<std::size_t>(ell)];
}

double horner(const std::vector<double>& c, double w) {
  double s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * w + *it;
  return s;
}

// (-1)^n C(2l,n) 2^m/m! C(2l-m-2, l-1) / (pi 2^{2l-2}), assembled exactly.
struct ClosedWeights {
  // weight[m][n], m < l, n <= 2l
  std::vector<std::vector<double>> weight;
};

const ClosedWeights& closed_weights(int ell) {
  static std::array<ClosedWeights, kMaxOrder + 1> cache;
  static std::once_flag once;
  std::call_once(once, [] {
    using combinatorics::binomial;
    using combinatorics::factorial;
    for (int l = 1; l <= kMaxOrder; ++l) {
      auto& w = cache[static_cast<std::size_t>(l)].weight;
      w.assign(static_cast<std::size_t>(l), std::vector<double>(2 * static_cast<std::size_t>(l) + 1, 0.0));
      for (int m = 0; m < l; ++m) {
        for (int n = 0; n <= 2 * l; ++n) {
          Rational r = Rational(binomial(2 * l, n) * (combinatorics::BigInt(1) << m) *
                                    binomial(2 * l - m - 2, l - 1),
                                factorial(m));
          r /= Rational(combinatorics::BigInt(1) << (2 * l - 2));
          if (n % 2) r = -r;
          w[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] = r.convert_to<double>() / kPi;
        }
      }
    }
  });
  return cache[static_cast<std::size_t>(ell)];
}

// Everything the closed forms need at one point x > 0.
class ClosedFormContext {
 public:
  ClosedFormContext(double x, int max_sinc_order) : x_(x) {
    a_minus_ = kPi * std::exp(-x) + specfun::e1_left_combination(x);
    a_plus_ = specfun::e1_right_combination(x);
    sinc_.assign(static_cast<std::size_t>(std::max(max_sinc_order, 0)) + 1, 0.0);
    specfun::sinc_derivatives(x, sinc_);
    for (int r = 0; r < static_cast<int>(sin_minus_.size()); ++r) {
      sin_minus_[static_cast<std::size_t>(r)] = std::sin(r * kPi / 4.0 - x);
      sin_plus_[static_cast<std::size_t>(r)] = std::sin(r * kPi / 4.0 + x);
    }
  }

  // int_0^inf e^{-y} y^k sinc(x - y) dy
  double moment_minus(int k) const {
    double s = a_minus_ * std::pow(x_, k);
    for (int r = 1; r <= k; ++r) {
      s += fact(r - 1) * std::pow(2.0, -0.5 * r) * sin_minus_[static_cast<std::size_t>(r)] *
           std::pow(x_, k - r);
    }
    return s;
  }

  // int_0^inf e^{-y} y^k sinc(x + y) dy
  double moment_plus(int k) const {
    double s = sign_of(k) * a_plus_ * std::pow(x_, k);
    for (int r = 1; r <= k; ++r) {
      s += sign_of(k - r) * fact(r - 1) * std::pow(2.0, -0.5 * r) *
           sin_plus_[static_cast<std::size_t>(r)] * std::pow(x_, k - r);
    }
    return s;
  }

  // Shared part of P and Q: derivatives moved onto e^{-y} y^m, j <= min(m, n).
  double main_part(Side side, int m, int n) const {
    double s = 0.0;
    const int jmax = std::min(m, n);
    for (int j = 0; j <= jmax; ++j) {
      const double c = binom(n, j) * falling(m, j);
      if (side == Side::minus) {
        s += sign_of(n - j) * c * moment_minus(m - j);
      } else {
        s += sign_of(j) * c * moment_plus(m - j);
      }
    }
    return s;
  }

  double boundary_part(Side side, int m, int n) const {
    double s = 0.0;
    for (int k = 0; k <= n - m - 1; ++k) {
      const double c = falling(n - k - 1, m);  // (n-k-1)!/(n-m-k-1)!
      const double d = sinc_.at(static_cast<std::size_t>(k));
      s += side == Side::minus ? sign_of(k) * c * d : c * d;
    }
    return side == Side::minus ? sign_of(n - m - 1) * s : sign_of(m + 1) * s;
  }

 private:
  double x_;
  double a_minus_;
  double a_plus_;
  std::vector<double> sinc_;
  std::array<double, kMaxOrder + 1> sin_minus_{};
  std::array<double, kMaxOrder + 1> sin_plus_{};
};

void check_positive_x(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": requires finite x > 0");
  }
}

double k_zero(double x) { return 2.0 / kPi * specfun::sinc(x); }

}  // namespace

std::string_view to_string(Route route) {
  switch (route) {
    case Route::closed: return "closed";
    case Route::convolution: return "conv";
    case Route::oracle: return "oracle";
  }
  return "unknown";
}

std::optional<Route> parse_route(std::string_view name) {
  if (name == "closed") return Route::closed;
  if (name == "conv" || name == "convolution") return Route::convolution;
  if (name == "oracle") return Route::oracle;
  return std::nullopt;
}

Complex symbol_psi_ell(KernelOrder ell, double t) {
  if (std::abs(t) > 1.0) return 0.0;
  const Complex mobius = Complex(1.0, t) / Complex(1.0, -t);
  Complex power = 2.0;
  for (int k = 0; k < ell.value(); ++k) power *= mobius;
  return power;
}

double fourier_xi_pow(int ell, double w) {
  if (ell < 1 || ell > kMaxOrder) {
    throw OrderTooLargeError("fourier_xi_pow: ell outside [1, " + std::to_string(kMaxOrder) + "]");
  }
  const double aw = std::abs(w);
  return kPi / std::ldexp(1.0, ell - 1) / std::sqrt(2.0 * kPi) * std::exp(-aw) *
         horner(p_coefficients(ell), aw);
}

double fourier_psi_tilde(KernelOrder ell, double w) {
  const int l = ell.value();
  std::array<double, 2 * kMaxOrder + 1> d{};
  specfun::sinc_derivatives(w, std::span<double>(d.data(), 2 * static_cast<std::size_t>(l) + 1));
  double s = 0.0;
  for (int n = 0; n <= 2 * l; ++n) s += sign_of(n) * binom(2 * l, n) * d[static_cast<std::size_t>(n)];
  return std::sqrt(8.0 / kPi) * s;
}

double exp_poly_self_convolution(int ell, double y) {
  if (ell < 0 || ell > 2 * kMaxOrder) {
    throw OrderTooLargeError("exp_poly_self_convolution: ell outside [0, " +
                             std::to_string(2 * kMaxOrder) + "]");
  }
  const double ay = std::abs(y);
  const double f1 = fact(ell + 1);
  double s = std::pow(ay, ell + 1) + f1 / std::ldexp(1.0, ell);
  for (int j = 0; j < ell; ++j) {
    s += f1 / fact(ell - j) * std::pow(ay, ell - j) / std::ldexp(1.0, 1 + j);
  }
  return std::exp(-ay) / (ell + 1) * s;
}

KernelEvaluation k_conv(KernelOrder ell, double x, double tol) {
  const int l = ell.value();
  KernelEvaluation ev{x, 0.0, Route::convolution, 0.0};
  if (l == 0) {
    ev.value = k_zero(x);
    return ev;
  }
  const auto& p = p_coefficients(l);
  std::array<double, 2 * kMaxOrder + 1> weights{};
  for (int n = 0; n <= 2 * l; ++n) weights[static_cast<std::size_t>(n)] = sign_of(n) * binom(2 * l, n);
  const auto n_orders = 2 * static_cast<std::size_t>(l) + 1;
  auto integrand = [&](double y) {
    std::array<double, 2 * kMaxOrder + 1> d{};
    specfun::sinc_derivatives(x - y, std::span<double>(d.data(), n_orders));
    double s = 0.0;
    for (std::size_t n = 0; n < n_orders; ++n) s += weights[n] * d[n];
    const double ay = std::abs(y);
    return std::exp(-ay) * horner(p, ay) * s;
  };
  const double prefactor = 1.0 / (kPi * std::ldexp(1.0, l - 1));
  const auto r = quadrature::improper_damped(integrand, tol / prefactor, {}, l - 1);
  ev.value = prefactor * r.value;
  ev.error_estimate = prefactor * r.abs_error_estimate;
  return ev;
}

double p_term(Side side, int m, int n, double x) {
  if (m < 0 || m > kMaxOrder - 1 || n < 0 || n > m) {
    throw DomainError("p_term: requires 0 <= n <= m <= " + std::to_string(kMaxOrder - 1));
  }
  check_positive_x(x, "p_term");
  const ClosedFormContext ctx(x, 0);
  return ctx.main_part(side, m, n);
}

double q_term(Side side, int m, int n, double x) {
  if (m < 0 || m > kMaxOrder - 1 || n <= m || n > 2 * kMaxOrder) {
    throw DomainError("q_term: requires 0 <= m < n <= " + std::to_string(2 * kMaxOrder) +
                      ", m <= " + std::to_string(kMaxOrder - 1));
  }
  check_positive_x(x, "q_term");
  const ClosedFormContext ctx(x, n);
  return ctx.boundary_part(side, m, n) + ctx.main_part(side, m, n);
}

KernelEvaluation k_closed(KernelOrder ell, double x) {
  const int l = ell.value();
  if (!(x >= kClosedFormMinX) || !std::isfinite(x)) {
    throw DomainError("k_closed: x must be >= " + std::to_string(kClosedFormMinX) +
                      " (use the convolution route below)");
  }
  KernelEvaluation ev{x, 0.0, Route::closed, 0.0};
  if (l == 0) {
    ev.value = k_zero(x);
    return ev;
  }
  const auto& w = closed_weights(l);
  const ClosedFormContext ctx(x, 2 * l);
  double sum = 0.0;
  double magnitude = 0.0;
  for (int m = 0; m < l; ++m) {
    for (int n = 0; n <= 2 * l; ++n) {
      double term = ctx.main_part(Side::minus, m, n) + ctx.main_part(Side::plus, m, n);
      if (n > m) {
        term += ctx.boundary_part(Side::minus, m, n) + ctx.boundary_part(Side::plus, m, n);
      }
      const double contribution = w.weight[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] * term;
      sum += contribution;
      magnitude += std::abs(contribution);
    }
  }
  ev.value = sum;
  // Rounding bound from the size of the cancelling terms.
  ev.error_estimate = 64.0 * std::numeric_limits<double>::epsilon() * magnitude *
                      std::max(1.0, std::pow(x, l - 1));
  return ev;
}

KernelEvaluation k_oracle(KernelOrder ell, double x) {
  const auto r = quadrature::fourier_symbol_oracle(ell.value(), x);
  return {x, r.value, Route::oracle, r.abs_error_estimate};
}

KernelEvaluation evaluate_kernel(KernelOrder ell, double x, std::optional<Route> route) {
  if (!std::isfinite(x)) throw DomainError("evaluate_kernel: x must be finite");
  const Route chosen =
      route.value_or(x >= kDefaultClosedFromX ? Route::closed : Route::convolution);
  KernelEvaluation ev;
  switch (chosen) {
    case Route::closed: ev = k_closed(ell, x); break;
    case Route::convolution: ev = k_conv(ell, x); break;
    case Route::oracle: ev = k_oracle(ell, x); break;
  }
  return ev;
}

double k_asymptotic(KernelOrder ell, double x) {
  if (x == 0.0 || !std::isfinite(x)) throw DomainError("k_asymptotic: x must be finite and nonzero");
  return 2.0 / kPi * std::sin(x - ell.value() * kPi / 2.0) / x;
}

double lp_diagnostic(int ell, double p, double upper) {
  if (ell < 1 || ell > kMaxOrder) {
    throw OrderTooLargeError("lp_diagnostic: ell outside [1, " + std::to_string(kMaxOrder) + "]");
  }
  if (!(p >= 1.0)) throw DomainError("lp_diagnostic: p must be >= 1");
  if (!(upper > 0.0) || !std::isfinite(upper)) throw DomainError("lp_diagnostic: X must be > 0");
  const KernelOrder order(ell);
  auto k = [&](double x) { return evaluate_kernel(order, x).value; };

  // |k|^p has corners at the sign changes of k; locate them on a fine grid,
  // refine by bisection, and integrate the smooth pieces in between.
  std::vector<double> cuts{0.0};
  const double step = kPi / 8.0;
  double left = 0.0;
  double f_left = k(0.0);
  while (left < upper) {
    const double right = std::min(upper, left + step);
    const double f_right = k(right);
    if ((f_left < 0.0) != (f_right < 0.0) && f_left != 0.0 && f_right != 0.0) {
      double a = left, b = right, fa = f_left;
      for (int it = 0; it < 60 && b - a > 1e-14 * std::max(1.0, b); ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = k(mid);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      cuts.push_back(0.5 * (a + b));
    }
    left = right;
    f_left = f_right;
  }
  cuts.push_back(upper);

  auto integrand = [&](double x) { return std::pow(std::abs(k(x)), p); };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (!(cuts[i + 1] > cuts[i])) continue;
    quadrature::QuadratureOptions opts;
    opts.tol = 1e-11;
    opts.breakpoints = {kDefaultClosedFromX};
    total += quadrature::integrate<double>(integrand, cuts[i], cuts[i + 1], opts).value;
  }
  return total;
}

}  // namespace hankel::kernels

#include "hankel/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "gauss_legendre.hpp"
#include "hankel/errors.hpp"

namespace hankel::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Radius below which E1 is taken from the Ein series (see e1_uses_continued_fraction).
constexpr double kSeriesRadius = 12.0;
// In the right half plane the continued fraction is already fast here, and the
// series would lose digits to cancellation against the small E1 value.
constexpr double kRightHalfRadius = 2.0;

// sin^{(k)}(x) from precomputed sin/cos.
double sin_derivative(int k, double s, double c) {
  switch (k & 3) {
    case 0: return s;
    case 1: return c;
    case 2: return -s;
    default: return -c;
  }
}

// cos(x + k pi/2) from precomputed sin/cos.
double cos_shifted(int k, double s, double c) {
  switch (k & 3) {
    case 0: return c;
    case 1: return -s;
    case 2: return -c;
    default: return s;
  }
}

double sinc_derivative_taylor(int n, double x) {
  // sum_{k >= ceil(n/2)} (-1)^k x^{2k-n} / ((2k+1) (2k-n)!)
  const double x2 = x * x;
  int k = (n + 1) / 2;
  int power = 2 * k - n;  // 0 or 1
  double mono = power == 0 ? 1.0 : x;  // x^{2k-n} / (2k-n)!
  double sum = 0.0;
  for (; k < 200; ++k) {
    const double term = mono / static_cast<double>(2 * k + 1);
    sum += (k & 1) ? -term : term;
    if (std::abs(term) < 1e-18 && k > n) break;
    mono *= x2 / (static_cast<double>(power + 1) * static_cast<double>(power + 2));
    power += 2;
  }
  return sum;
}

double sinc_derivative_leibniz(int n, double x, double s, double c) {
  double sum = 0.0;
  double coeff = 1.0;  // C(n,j) j! = n! / (n-j)!
  double inv_pow = 1.0 / x;
  for (int j = 0; j <= n; ++j) {
    const double term = coeff * inv_pow * sin_derivative(n - j, s, c);
    sum += (j & 1) ? -term : term;
    coeff *= static_cast<double>(n - j);
    inv_pow /= x;
  }
  return sum;
}

bool on_branch_cut(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0; }

void require_off_cut(Complex z, const char* who) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(who) + ": argument must be finite");
  }
  if (on_branch_cut(z)) {
    throw BranchCutError(std::string(who) + ": argument on the branch cut (-inf, 0]");
  }
}

// e^z E1(z) by the modified Lentz evaluation of
//   1/(z+1- 1/(z+3- 4/(z+5- 9/(z+7- ...))))
Complex e1_scaled_continued_fraction(Complex z) {
  constexpr double tiny = 1e-300;
  Complex b = z + 1.0;
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i < 20000; ++i) {
    const double an = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    d = 1.0 / d;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    const Complex del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 2.0 * kEps) return h;
  }
  throw NonConvergenceError("e1: continued fraction did not converge");
}

Complex ein_series(Complex z) {
  // sum_{k>=1} (-1)^{k+1} z^k / (k k!)
  Complex power = 1.0;  // (-1)^{k+1} z^k / k!
  Complex sum = 0.0;
  const double az = std::abs(z);
  for (int k = 1; k < 1000; ++k) {
    power *= -z / static_cast<double>(k);
    const Complex term = power / static_cast<double>(k);
    sum -= term;
    if (static_cast<double>(k) > az && std::abs(term) <= kEps * 0.25 * std::abs(sum)) break;
  }
  return sum;
}

// Series is well conditioned when the result is not much smaller than the
// largest term (~e^{|z|}); far left, e^{-z} dominates and keeps it so.
bool ein_series_ok(Complex z) {
  const double az = std::abs(z);
  return az <= kSeriesRadius || (z.real() < 0.0 && az + z.real() <= 4.0);
}

}  // namespace

double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double sinc_derivative(int n, double x) {
  if (n < 0 || n > kMaxSincDerivative) {
    throw OrderTooLargeError("sinc_derivative: order " + std::to_string(n) +
                             " outside [0, " + std::to_string(kMaxSincDerivative) + "]");
  }
  std::array<double, kMaxSincDerivative + 1> buf{};
  sinc_derivatives(x, std::span<double>(buf.data(), static_cast<std::size_t>(n) + 1));
  return buf[static_cast<std::size_t>(n)];
}

void sinc_derivatives(double x, std::span<double> out) {
  if (out.size() > static_cast<std::size_t>(kMaxSincDerivative) + 1) {
    throw OrderTooLargeError("sinc_derivatives: too many orders requested");
  }
  if (out.empty()) return;
  const int max_n = static_cast<int>(out.size()) - 1;

  // Odd derivatives are odd functions of x.
  const double ax = std::abs(x);
  const double sign_flip = x < 0.0 ? -1.0 : 1.0;

  if (ax < 1.0) {
    for (int n = 0; n <= max_n; ++n) {
      out[static_cast<std::size_t>(n)] = sinc_derivative_taylor(n, ax);
    }
  } else {
    const double s = std::sin(ax);
    const double c = std::cos(ax);
    const int leibniz_max = std::min(max_n, static_cast<int>(std::floor(ax)));
    for (int n = 0; n <= leibniz_max; ++n) {
      out[static_cast<std::size_t>(n)] = sinc_derivative_leibniz(n, ax, s, c);
    }
    if (leibniz_max < max_n) {
      const auto& rule = detail::gauss_legendre_unit<64>();
      for (int n = leibniz_max + 1; n <= max_n; ++n) out[static_cast<std::size_t>(n)] = 0.0;
      for (std::size_t q = 0; q < rule.node.size(); ++q) {
        const double t = rule.node[q];
        const double st = std::sin(ax * t);
        const double ct = std::cos(ax * t);
        double tn = rule.weight[q] * std::pow(t, leibniz_max + 1);
        for (int n = leibniz_max + 1; n <= max_n; ++n) {
          out[static_cast<std::size_t>(n)] += tn * cos_shifted(n, st, ct);
          tn *= t;
        }
      }
    }
  }
  if (sign_flip < 0.0) {
    for (int n = 1; n <= max_n; n += 2) out[static_cast<std::size_t>(n)] = -out[static_cast<std::size_t>(n)];
  }
}

Complex ein(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("ein: argument must be finite");
  }
  if (z == Complex(0.0, 0.0)) return 0.0;
  if (ein_series_ok(z) || on_branch_cut(z)) return ein_series(z);
  return e1(z) + std::log(z) + kEulerGamma;
}

bool e1_uses_continued_fraction(Complex z) {
  const double az = std::abs(z);
  if (z.real() > 0.0 && az > kRightHalfRadius) return true;
  return !ein_series_ok(z);
}

Complex e1(Complex z) {
  require_off_cut(z, "e1");
  if (e1_uses_continued_fraction(z)) {
    const Complex scaled = e1_scaled_continued_fraction(z);
    if (z.real() > 700.0) return 0.0;
    return std::exp(-z) * scaled;
  }
  return ein_series(z) - std::log(z) - kEulerGamma;
}

Complex e1_scaled(Complex z) {
  require_off_cut(z, "e1_scaled");
  if (e1_uses_continued_fraction(z)) return e1_scaled_continued_fraction(z);
  return std::exp(z) * (ein_series(z) - std::log(z) - kEulerGamma);
}

double e1_left_combination(double x) {
  // e^{-x} E1(-x+ix) = e^{-ix} [e^z E1(z)],  z = -x + ix
  const Complex z(-x, x);
  return (std::polar(1.0, -x) * e1_scaled(z)).imag();
}

double e1_right_combination(double x) {
  // e^{x} E1(x+ix) = e^{-ix} [e^z E1(z)],  z = x + ix
  const Complex z(x, x);
  return -(std::polar(1.0, -x) * e1_scaled(z)).imag();
}

double log_gamma_abs_sq(double p, double y) {
  if (!(p <= 0.5) || !(y > 0.0) || !std::isfinite(p) || !std::isfinite(y)) {
    throw DomainError("gamma_abs_sq: requires p <= 1/2 and y > 0");
  }
  // |Gamma(a + iy)| = |Gamma(a - iy)|, a = 1/2 - p >= 0.
  double a = 0.5 - p;
  double shift = 0.0;  // sum log |a + k + iy|^2 over the upward recurrence
  while (a < 15.0) {
    shift += std::log(a * a + y * y);
    a += 1.0;
  }
  // Stirling series for Re log Gamma(z), z = a + iy.
  static constexpr std::array<double, 8> bernoulli = {
      1.0 / 6.0,          -1.0 / 30.0,  1.0 / 42.0,          -1.0 / 30.0,
      5.0 / 66.0,         -691.0 / 2730.0, 7.0 / 6.0,        -3617.0 / 510.0};
  const Complex z(a, y);
  Complex log_gamma = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
  const Complex inv_z = 1.0 / z;
  const Complex inv_z2 = inv_z * inv_z;
  Complex zpow = inv_z;
  for (std::size_t k = 1; k <= bernoulli.size(); ++k) {
    const double kk = static_cast<double>(k);
    log_gamma += bernoulli[k - 1] / (2.0 * kk * (2.0 * kk - 1.0)) * zpow;
    zpow *= inv_z2;
  }
  return 2.0 * log_gamma.real() - shift;
}

double gamma_abs_sq(double p, double y) { return std::exp(log_gamma_abs_sq(p, y)); }

Complex damped_moment_shifted(int n, Complex a, double x) {
  if (n < 0) throw DomainError("damped_moment_shifted: n must be non-negative");
  if (!(a.real() > 0.0)) throw DomainError("damped_moment_shifted: requires Re a > 0");
  if (!(x > 0.0)) throw DomainError("damped_moment_shifted: requires x > 0");
  const Complex ax = a * x;
  const double sign_n = (n & 1) ? -1.0 : 1.0;
  Complex result = sign_n * std::pow(x, n) * e1_scaled(ax);
  double fact = 1.0;  // (r-1)!
  Complex inv_a_pow = 1.0;
  for (int r = 1; r <= n; ++r) {
    inv_a_pow /= a;
    const double sign = ((n - r) & 1) ? -1.0 : 1.0;
    result += sign * fact * inv_a_pow * std::pow(x, n - r);
    fact *= static_cast<double>(r);
  }
  return result;
}

double damped_trig_moment(int m, double x, Trig kind) {
  if (m < 0 || m > 2 * kMaxOrder) {
    throw OrderTooLargeError("damped_trig_moment: m outside [0, " +
                             std::to_string(2 * kMaxOrder) + "]");
  }
  // cos((m+1) pi/4) = c * sqrt(2)^{-s}, s in {0, 1}, from the residue mod 8.
  static constexpr std::array<int, 8> cos_sign = {1, 1, 0, -1, -1, -1, 0, 1};
  static constexpr std::array<bool, 8> has_sqrt = {false, true, false, true,
                                                   false, true, false, true};
  const int residue = (m + 1) % 8;
  if (cos_sign[static_cast<std::size_t>(residue)] == 0) return 0.0;
  // m! 2^{-(m-1)/2} 2^{-s/2}; exponent of sqrt(2) is 1 - m - s, always even when s matches parity
  const int sqrt2_exponent = 1 - m - (has_sqrt[static_cast<std::size_t>(residue)] ? 1 : 0);
  double fact = 1.0;
  for (int k = 2; k <= m; ++k) fact *= static_cast<double>(k);
  const double coeff = cos_sign[static_cast<std::size_t>(residue)] * fact *
                       std::ldexp(1.0, sqrt2_exponent / 2);
  return coeff * (kind == Trig::sin ? std::sin(x) : std::cos(x));
}

}  // namespace hankel::specfun

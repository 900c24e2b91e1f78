#include "hankel/combinatorics.hpp"

#include <array>
#include <cmath>
#include <string>

#include "hankel/constants.hpp"
#include "hankel/errors.hpp"

namespace hankel::combinatorics {
namespace {

Rational pow2(int e) {
  BigInt one = 1;
  if (e >= 0) return Rational(one << e);
  return Rational(BigInt(1), one << (-e));
}

// 2^{-e/2} as an element of Q(sqrt 2).
QuadraticSurd inverse_sqrt2_power(int e) {
  if (e % 2 == 0) return {pow2(-e / 2), 0};
  // odd e: 2^{-e/2} = 2^{-(e+1)/2} sqrt 2
  return {0, pow2(-(e + 1) / 2)};
}

// cos(k pi/4) in Q(sqrt 2).
QuadraticSurd cos_quarter_pi(int k) {
  static const std::array<QuadraticSurd, 8> table = {
      QuadraticSurd{1, 0},  QuadraticSurd{0, Rational(1, 2)},
      QuadraticSurd{0, 0},  QuadraticSurd{0, Rational(-1, 2)},
      QuadraticSurd{-1, 0}, QuadraticSurd{0, Rational(-1, 2)},
      QuadraticSurd{0, 0},  QuadraticSurd{0, Rational(1, 2)}};
  return table[static_cast<std::size_t>(((k % 8) + 8) % 8)];
}

}  // namespace

std::vector<double> RationalPoly::to_double() const {
  std::vector<double> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.push_back(c.convert_to<double>());
  return out;
}

QuadraticSurd& QuadraticSurd::operator+=(const QuadraticSurd& o) {
  rational += o.rational;
  sqrt2 += o.sqrt2;
  return *this;
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  return {a.rational * b.rational + 2 * a.sqrt2 * b.sqrt2,
          a.rational * b.sqrt2 + a.sqrt2 * b.rational};
}

double QuadraticSurd::to_double() const {
  return rational.convert_to<double>() + std::sqrt(2.0) * sqrt2.convert_to<double>();
}

BigInt factorial(int n) {
  if (n < 0) throw DomainError("factorial: negative argument");
  BigInt f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (int i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

RationalPoly p_poly_unbounded(int ell) {
  if (ell < 1) throw DomainError("p_poly: ell must be >= 1");
  RationalPoly p;
  p.coefficients.assign(static_cast<std::size_t>(ell), Rational(0));
  for (int j = 0; j < ell; ++j) {
    const int deg = ell - j - 1;
    p.coefficients[static_cast<std::size_t>(deg)] =
        pow2(-j) * Rational(binomial(ell + j - 1, ell - 1), factorial(deg));
  }
  return p;
}

RationalPoly p_poly(int ell) {
  if (ell < 1 || ell > kMaxOrder) {
    throw DomainError("p_poly: ell = " + std::to_string(ell) + " outside [1, " +
                      std::to_string(kMaxOrder) + "]");
  }
  return p_poly_unbounded(ell);
}

RationalPoly exp_convolution_poly(int degree) {
  if (degree < 0) throw DomainError("exp_convolution_poly: negative degree");
  const int d = degree;
  // (1/(d+1)) { |y|^{d+1} + sum_{j<d} (d+1)!/(d-j)! |y|^{d-j} / 2^{1+j} + (d+1)!/2^d }
  RationalPoly q;
  q.coefficients.assign(static_cast<std::size_t>(d) + 2, Rational(0));
  const Rational inv = Rational(1, d + 1);
  q.coefficients[static_cast<std::size_t>(d) + 1] += inv;
  const BigInt fd1 = factorial(d + 1);
  for (int j = 0; j < d; ++j) {
    q.coefficients[static_cast<std::size_t>(d - j)] +=
        inv * Rational(fd1, factorial(d - j)) * pow2(-1 - j);
  }
  q.coefficients[0] += inv * Rational(fd1) * pow2(-d);
  return q;
}

RationalPoly convolve_with_exponential(const RationalPoly& poly) {
  RationalPoly out;
  out.coefficients.assign(poly.coefficients.size() + 1, Rational(0));
  for (std::size_t d = 0; d < poly.coefficients.size(); ++d) {
    if (poly.coefficients[d] == 0) continue;
    const RationalPoly term = exp_convolution_poly(static_cast<int>(d));
    for (std::size_t k = 0; k < term.coefficients.size(); ++k) {
      out.coefficients[k] += poly.coefficients[d] * term.coefficients[k];
    }
  }
  while (out.coefficients.size() > 1 && out.coefficients.back() == 0) out.coefficients.pop_back();
  return out;
}

ExactIdentity sum_identity(SumKind kind, int ell) {
  if (ell < 1) throw DomainError("sum_identity: ell must be >= 1");
  ExactIdentity id;
  switch (kind) {
    case SumKind::cosine_weighted: {
      for (int j = 0; j < ell; ++j) {
        QuadraticSurd term = cos_quarter_pi(ell - j) * inverse_sqrt2_power(ell + j - 2);
        term = term * QuadraticSurd{Rational(binomial(ell + j - 1, ell - 1)), 0};
        id.lhs += term;
      }
      id.rhs = {1, 0};
      break;
    }
    case SumKind::even_binomial: {
      BigInt s = 0;
      for (int n = 0; n <= ell; ++n) s += (n % 2 ? -1 : 1) * binomial(2 * ell, 2 * n);
      id.lhs = {Rational(s), 0};
      static constexpr std::array<int, 4> cos_half_pi = {1, 0, -1, 0};
      id.rhs = {Rational(cos_half_pi[static_cast<std::size_t>(ell % 4)] * (BigInt(1) << ell)), 0};
      break;
    }
    case SumKind::odd_binomial: {
      BigInt s = 0;
      for (int n = 0; n < ell; ++n) s += (n % 2 ? 1 : -1) * binomial(2 * ell, 2 * n + 1);
      id.lhs = {Rational(s), 0};
      static constexpr std::array<int, 4> minus_sin_half_pi = {0, -1, 0, 1};
      id.rhs = {Rational(minus_sin_half_pi[static_cast<std::size_t>(ell % 4)] * (BigInt(1) << ell)), 0};
      break;
    }
    default:
      throw DomainError("sum_identity: kind must be 1, 2 or 3");
  }
  return id;
}

IntegerIdentity alternating_factorial_identity(int m, int r) {
  if (m < 1) throw DomainError("alternating_factorial_identity: m must be >= 1");
  if (r < 1 || r > m) {
    throw DomainError("alternating_factorial_identity: r must lie in [1, m]");
  }
  IntegerIdentity id;
  for (int j = r; j <= m; ++j) {
    BigInt term = binomial(m, j) * factorial(j - 1) / factorial(j - r);
    id.lhs += (j % 2 ? -term : term);
  }
  id.rhs = (r % 2 ? -factorial(r - 1) : factorial(r - 1));
  return id;
}

}  // namespace hankel::combinatorics

#pragma once

// Exact evaluation of the polynomial p_l and of the finite binomial/factorial
// identities that the closed-form kernels depend on. Nothing in this header
// decides an identity in floating point.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace hankel::combinatorics {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Polynomial with exact rational coefficients, ascending degree.
struct RationalPoly {
  std::vector<Rational> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  std::vector<double> to_double() const;
  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;
};

/// Element a + b sqrt(2) of Q(sqrt 2).
struct QuadraticSurd {
  Rational rational{0};
  Rational sqrt2{0};

  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
  QuadraticSurd& operator+=(const QuadraticSurd& o);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  double to_double() const;
};

struct ExactIdentity {
  QuadraticSurd lhs;
  QuadraticSurd rhs;
  bool holds() const { return lhs == rhs; }
};

struct IntegerIdentity {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// p_l(w) = sum_{j=0}^{l-1} 2^{-j} C(l+j-1, l-1) w^{l-j-1} / (l-j-1)!,
/// for 1 <= l <= kMaxOrder (DomainError otherwise).
RationalPoly p_poly(int ell);

/// Same polynomial without the kMaxOrder bound; used by the identity checks.
RationalPoly p_poly_unbounded(int ell);

/// Coefficients (in |y|) of e^{|y|} * int |x|^d e^{-|x|} e^{-|y-x|} dx.
RationalPoly exp_convolution_poly(int degree);

/// q with e^{-|y|} q(|y|) = (e^{-|x|} poly(|x|)) * e^{-|x|}.
RationalPoly convolve_with_exponential(const RationalPoly& poly);

enum class SumKind { cosine_weighted = 1, even_binomial = 2, odd_binomial = 3 };

/// Both sides of one of the three finite sums, exactly:
///  1: sum_{j<l} cos((l-j) pi/4) / 2^{(l+j-2)/2} C(l+j-1, l-1) = 1
///  2: sum_{n<=l} (-1)^n C(2l, 2n) = cos(l pi/2) 2^l
///  3: sum_{n<l} (-1)^{n+1} C(2l, 2n+1) = sin(-l pi/2) 2^l
ExactIdentity sum_identity(SumKind kind, int ell);

/// sum_{j=r}^m (-1)^j C(m,j) (j-1)!/(j-r)!  vs  (-1)^r (r-1)!,  1 <= r <= m.
IntegerIdentity alternating_factorial_identity(int m, int r);

}  // namespace hankel::combinatorics

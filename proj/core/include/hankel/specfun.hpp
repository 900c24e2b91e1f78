#pragma once

// Special functions behind the closed-form kernel representation: sinc and its
// derivatives, the exponential integrals E1/Ein on the principal branch, squared
// Gamma magnitudes on vertical lines, and two damped moment integrals.

#include <complex>
#include <span>

#include "hankel/constants.hpp"

namespace hankel::specfun {

using Complex = std::complex<double>;

/// sin(x)/x with the removable singularity at 0 filled by 1.
double sinc(double x);

/// n-th derivative of sinc at x, 0 <= n <= kMaxSincDerivative.
///
/// Three evaluation paths, chosen per (n, x):
///   |x| < 1          termwise-differentiated Taylor series,
///   1 <= |x| < n     Gauss-Legendre on  int_0^1 t^n cos(x t + n pi/2) dt,
///   |x| >= max(1,n)  Leibniz closed form  sum_j C(n,j) (-1)^j j! x^{-j-1} sin^{(n-j)}(x).
/// Throws OrderTooLargeError for n outside the supported range.
double sinc_derivative(int n, double x);

/// Fills out[k] = sinc^{(k)}(x) for k = 0 .. out.size()-1, sharing trig work.
void sinc_derivatives(double x, std::span<double> out);

/// Complementary exponential integral Ein(z) = int_0^1 (1 - e^{-tz})/t dt (entire).
Complex ein(Complex z);

/// Principal-branch E1(z). Throws BranchCutError for real z <= 0.
Complex e1(Complex z);

/// e^z E1(z), evaluated without forming e^z where the continued fraction applies.
Complex e1_scaled(Complex z);

/// True when e1/e1_scaled evaluate z by continued fraction rather than the
/// Ein power series.
bool e1_uses_continued_fraction(Complex z);

/// e^{-x} Im E1(-x + i x), x > 0. Equals (i/2) e^{-x} [E1(-x-ix) - E1(-x+ix)].
double e1_left_combination(double x);

/// -e^{x} Im E1(x + i x), x > 0. Equals (i/2) e^{x} [E1(x+ix) - E1(x-ix)].
double e1_right_combination(double x);

/// log |Gamma(1/2 - p - i y)|^2 for p <= 1/2, y > 0.
double log_gamma_abs_sq(double p, double y);

/// |Gamma(1/2 - p - i y)|^2 for p <= 1/2, y > 0 (DomainError otherwise).
double gamma_abs_sq(double p, double y);

/// int_0^inf y^n e^{-a y} / (x + y) dy for Re a > 0, x > 0, via
/// (-1)^n x^n e^{ax} E1(ax) + sum_{r=1}^n (-1)^{n-r} (r-1)! a^{-r} x^{n-r}.
Complex damped_moment_shifted(int n, Complex a, double x);

enum class Trig { sin, cos };

/// int_R e^{-|y|} |y|^m trig(x - y) dy
///   = m! / 2^{(m-1)/2} cos((m+1) pi/4) trig(x),  0 <= m <= 2 kMaxOrder.
double damped_trig_moment(int m, double x, Trig kind);

}  // namespace hankel::specfun

#pragma once

// The kernel functions k^(l) of the Hankel integral operators K^(l), by three
// independent routes:
//
//   closed       finite sums of E1 / sinc-derivative terms (x > 0),
//   convolution  (1/(pi 2^{l-1})) sum_n (-1)^n C(2l,n) (e^{-|w|} p_l(|w|)) * sinc^{(n)},
//   oracle       (1/2pi) int_{-1}^{1} psi_l(t) e^{-itx} dt by direct quadrature,
//
// plus the large-|x| asymptotic form. k^(0) is (2/pi) sinc on every route.

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include "hankel/constants.hpp"
#include "hankel/errors.hpp"

namespace hankel::kernels {

using Complex = std::complex<double>;

/// Kernel index l in [0, kMaxOrder].
class KernelOrder {
 public:
  explicit KernelOrder(int ell) : ell_(ell) {
    if (ell < 0 || ell > kMaxOrder) {
      throw OrderTooLargeError("kernel order " + std::to_string(ell) + " outside [0, " +
                               std::to_string(kMaxOrder) + "]");
    }
  }
  int value() const noexcept { return ell_; }
  friend bool operator==(KernelOrder, KernelOrder) = default;

 private:
  int ell_;
};

enum class Route { closed, convolution, oracle };

std::string_view to_string(Route route);
std::optional<Route> parse_route(std::string_view name);

struct KernelEvaluation {
  double x = 0.0;
  double value = 0.0;
  Route route = Route::closed;
  double error_estimate = 0.0;
};

/// Below this the closed form is refused; the E1(-x +- ix) logarithms only
/// cancel across the full sum.
inline constexpr double kClosedFormMinX = 1e-3;
/// Default routing: closed form from here on, convolution below.
inline constexpr double kDefaultClosedFromX = 0.1;

/// psi_l(t) = ((1+it)/(1-it))^l * 2 * 1_{[-1,1]}(t).
Complex symbol_psi_ell(KernelOrder ell, double t);

/// Fourier transform of (1+t^2)^{-l}: (1/sqrt(2pi)) (pi/2^{l-1}) e^{-|w|} p_l(|w|), 1 <= l <= kMaxOrder.
double fourier_xi_pow(int ell, double w);

/// Fourier transform of (1+it)^{2l} psi(t): sqrt(8/pi) sum_n C(2l,n) (-1)^n sinc^{(n)}(w).
double fourier_psi_tilde(KernelOrder ell, double w);

/// int |x|^l e^{-|x|} e^{-|y-x|} dx in closed form, 0 <= l <= 2 kMaxOrder.
double exp_poly_self_convolution(int ell, double y);

/// Convolution route. tol is the absolute target on the returned value.
KernelEvaluation k_conv(KernelOrder ell, double x, double tol = 1e-12);

enum class Side { minus, plus };

/// P^{-/+}_{m,n}(x) = int_0^inf e^{-y} y^m d^n/dx^n sinc(x -/+ y) dy for n <= m,
/// m <= kMaxOrder - 1, x > 0, in closed form.
double p_term(Side side, int m, int n, double x);

/// Q^{-/+}_{m,n}(x): the same integral for m < n <= 2 kMaxOrder, with the
/// boundary terms from moving derivatives onto e^{-y} y^m.
double q_term(Side side, int m, int n, double x);

/// Closed-form route, x >= kClosedFormMinX (DomainError below).
KernelEvaluation k_closed(KernelOrder ell, double x);

/// Oracle route (quadrature of the symbol).
KernelEvaluation k_oracle(KernelOrder ell, double x);

/// Evaluates k^(l)(x) on the requested route, or by the default policy
/// (closed for x >= kDefaultClosedFromX, convolution otherwise). The closed
/// route is only defined for x >= kClosedFormMinX.
KernelEvaluation evaluate_kernel(KernelOrder ell, double x,
                                 std::optional<Route> route = std::nullopt);

/// (2/pi) sin(x - l pi/2) / x, x != 0.
double k_asymptotic(KernelOrder ell, double x);

/// int_0^X |k^(l)(x)|^p dx for l >= 1, p >= 1, X > 0.
double lp_diagnostic(int ell, double p, double upper);

}  // namespace hankel::kernels

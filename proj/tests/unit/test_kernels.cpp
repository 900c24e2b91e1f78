#include <doctest.h>

#include <cmath>

#include "hankel/errors.hpp"
#include "hankel/kernels.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"
#include "oracles.hpp"

using namespace hankel;
using namespace hankel::kernels;
using doctest::Approx;

namespace {

// int_0^inf e^{-y} y^m sinc^{(n)}(x -/+ y) dy by plain adaptive quadrature.
double pq_oracle(Side side, int m, int n, double x) {
  const double s = side == Side::minus ? -1.0 : 1.0;
  auto f = [=](double y) { return std::exp(-y) * std::pow(y, m) * specfun::sinc_derivative(n, x + s * y); };
  quadrature::QuadratureOptions opts;
  opts.tol = 1e-14;
  opts.max_panel_width = 1.0;
  return quadrature::integrate<double>(f, 0.0, 80.0, opts).value;
}

}  // namespace

TEST_CASE("KernelOrder range") {
  CHECK(KernelOrder(0).value() == 0);
  CHECK(KernelOrder(8).value() == 8);
  CHECK_THROWS_AS(KernelOrder(9), OrderTooLargeError);
  CHECK_THROWS_AS(KernelOrder(-1), OrderTooLargeError);
}

TEST_CASE("route names") {
  CHECK(parse_route("closed") == Route::closed);
  CHECK(parse_route("conv") == Route::convolution);
  CHECK(parse_route("oracle") == Route::oracle);
  CHECK_FALSE(parse_route("fast").has_value());
  CHECK(to_string(Route::convolution) == "conv");
}

TEST_CASE("symbol_psi_ell") {
  CHECK(symbol_psi_ell(KernelOrder(5), 0.0) == Complex(2.0, 0.0));
  CHECK(symbol_psi_ell(KernelOrder(0), 0.5) == Complex(2.0, 0.0));
  CHECK(std::abs(symbol_psi_ell(KernelOrder(3), 0.5)) == Approx(2.0).epsilon(1e-15));
  CHECK(symbol_psi_ell(KernelOrder(3), 1.5) == Complex(0.0, 0.0));
}

TEST_CASE("fourier_xi_pow") {
  CHECK(fourier_xi_pow(1, 0.0) == Approx(std::sqrt(kPi / 2)).epsilon(1e-15));
  CHECK(fourier_xi_pow(2, 0.0) == Approx(kPi / 2 / std::sqrt(2 * kPi)).epsilon(1e-15));
  CHECK(std::abs(fourier_xi_pow(3, 1.0) - quadrature::rational_power_transform_oracle(3, 1.0).value) <
        1e-12);
  CHECK(fourier_xi_pow(4, -2.0) == fourier_xi_pow(4, 2.0));
  CHECK_THROWS_AS(fourier_xi_pow(0, 1.0), OrderTooLargeError);
}

TEST_CASE("fourier_psi_tilde") {
  CHECK(fourier_psi_tilde(KernelOrder(0), 0.0) == Approx(std::sqrt(8 / kPi)).epsilon(1e-15));
  CHECK(fourier_psi_tilde(KernelOrder(1), 0.0) == Approx(2.0 / 3.0 * std::sqrt(8 / kPi)).epsilon(1e-15));
  CHECK(std::abs(fourier_psi_tilde(KernelOrder(2), 1.5) -
                 quadrature::polynomial_symbol_transform_oracle(2, 1.5).value) < 1e-12);
}

TEST_CASE("exp_poly_self_convolution") {
  CHECK(exp_poly_self_convolution(0, 0.0) == 1.0);
  CHECK(exp_poly_self_convolution(0, 2.0) == Approx(3 * std::exp(-2.0)).epsilon(1e-15));
  CHECK(exp_poly_self_convolution(1, 0.0) == 0.5);
  CHECK(exp_poly_self_convolution(3, -1.5) == exp_poly_self_convolution(3, 1.5));
  CHECK_THROWS_AS(exp_poly_self_convolution(17, 0.0), OrderTooLargeError);
}

TEST_CASE("P terms against quadrature") {
  CHECK(std::abs(p_term(Side::minus, 0, 0, 1.0) -
                 (kPi * std::exp(-1.0) + std::exp(-1.0) * specfun::e1({-1.0, 1.0}).imag())) < 1e-14);
  CHECK(std::abs(p_term(Side::minus, 0, 0, 1.0) - pq_oracle(Side::minus, 0, 0, 1.0)) < 1e-12);
  CHECK(std::abs(p_term(Side::plus, 0, 0, 1.0) - pq_oracle(Side::plus, 0, 0, 1.0)) < 1e-12);
  CHECK(std::abs(p_term(Side::minus, 2, 1, 2.0) - pq_oracle(Side::minus, 2, 1, 2.0)) < 1e-11);
  CHECK(std::abs(p_term(Side::plus, 7, 7, 3.0) - pq_oracle(Side::plus, 7, 7, 3.0)) < 1e-9);
  CHECK_THROWS_AS(p_term(Side::minus, 1, 2, 1.0), DomainError);
  CHECK_THROWS_AS(p_term(Side::minus, 0, 0, 0.0), DomainError);
}

TEST_CASE("Q terms against quadrature") {
  CHECK(std::abs(q_term(Side::minus, 0, 1, 1.0) - pq_oracle(Side::minus, 0, 1, 1.0)) < 1e-12);
  CHECK(std::abs(q_term(Side::plus, 0, 1, 1.0) - pq_oracle(Side::plus, 0, 1, 1.0)) < 1e-12);
  CHECK(std::abs(q_term(Side::minus, 1, 2, 2.0) - pq_oracle(Side::minus, 1, 2, 2.0)) < 1e-12);
  CHECK(std::abs(q_term(Side::plus, 3, 16, 6.0) - pq_oracle(Side::plus, 3, 16, 6.0)) < 1e-9);
  CHECK_THROWS_AS(q_term(Side::plus, 2, 2, 1.0), DomainError);
}

TEST_CASE("kernel values against 40-digit references") {
  // (2/pi) int_0^1 cos(2 l atan t - t x) dt
  CHECK(k_closed(KernelOrder(1), 1.0).value == Approx(0.58273111339598976206).epsilon(1e-13));
  CHECK(k_conv(KernelOrder(1), 1.0).value == Approx(0.58273111339598976206).epsilon(1e-13));
  CHECK(k_conv(KernelOrder(3), 0.05).value == Approx(-0.18732084802778943558).epsilon(1e-12));
  CHECK(k_conv(KernelOrder(6), 20.0).value == Approx(-0.037817801277674685912).epsilon(1e-11));
  CHECK(k_closed(KernelOrder(8), 3.0).value == Approx(-0.043111157664052884654).epsilon(1e-9));
  CHECK(k_conv(KernelOrder(1), 0.0).value == Approx(0.36338022763241865692).epsilon(1e-13));
}

TEST_CASE("k^(0) is (2/pi) sinc on every route") {
  const KernelOrder zero(0);
  for (double x : {0.3, kPi / 2, 7.0}) {
    const double expected = 2.0 / kPi * specfun::sinc(x);
    CHECK(k_closed(zero, x).value == expected);
    CHECK(k_conv(zero, x).value == expected);
    CHECK(k_oracle(zero, x).value == Approx(expected).epsilon(1e-13));
  }
  CHECK(k_conv(zero, kPi / 2).value == Approx(4 / (kPi * kPi)).epsilon(1e-15));
}

TEST_CASE("three routes agree") {
  for (int ell = 1; ell <= kMaxOrder; ++ell) {
    for (double x : {0.5, 3.0, 20.0}) {
      const KernelOrder o(ell);
      const double c = k_closed(o, x).value;
      CAPTURE(ell);
      CAPTURE(x);
      CHECK(std::abs(c - k_conv(o, x).value) < 1e-8);
      CHECK(std::abs(c - k_oracle(o, x).value) < 1e-8);
    }
  }
}

TEST_CASE("closed form refuses tiny x") {
  CHECK_THROWS_AS(k_closed(KernelOrder(2), 5e-4), DomainError);
  CHECK_NOTHROW(k_closed(KernelOrder(2), kClosedFormMinX));
}

TEST_CASE("default routing") {
  const KernelOrder o(2);
  CHECK(evaluate_kernel(o, 0.05).route == Route::convolution);
  CHECK(evaluate_kernel(o, 0.5).route == Route::closed);
  CHECK(evaluate_kernel(o, -0.5).route == Route::convolution);
  CHECK(evaluate_kernel(o, -0.5).x == -0.5);
  CHECK_THROWS_AS(evaluate_kernel(o, -2.0, Route::closed), DomainError);
  // k^(l) is not even for l >= 1; the two independent routes agree off the half-line.
  CHECK(std::abs(evaluate_kernel(o, -2.0).value - evaluate_kernel(o, -2.0, Route::oracle).value) < 1e-9);
  CHECK(std::abs(evaluate_kernel(o, -2.0).value - evaluate_kernel(o, 2.0).value) > 0.1);
  CHECK(evaluate_kernel(KernelOrder(0), -2.0).value == Approx(evaluate_kernel(KernelOrder(0), 2.0).value).epsilon(1e-14));
  CHECK(evaluate_kernel(o, 1.0, Route::oracle).route == Route::oracle);
}

TEST_CASE("kernel is smooth across the route switch") {
  const KernelOrder o(3);
  const double x = kDefaultClosedFromX;
  const double below = evaluate_kernel(o, std::nextafter(x, 0.0)).value;
  const double above = evaluate_kernel(o, x).value;
  CHECK(std::abs(below - above) < 1e-11);
}

TEST_CASE("derivative of k stays bounded") {
  auto f = [](double x) { return evaluate_kernel(KernelOrder(2), x).value; };
  for (double x : {0.2, 1.0, 4.0, 15.0}) {
    CHECK(std::abs(test::central_difference(f, x, 1e-3)) < 1.0);
  }
}

TEST_CASE("asymptotic form") {
  CHECK(k_asymptotic(KernelOrder(0), kPi / 2) == Approx(4 / (kPi * kPi)).epsilon(1e-15));
  CHECK(k_asymptotic(KernelOrder(2), 3.3) == Approx(-k_asymptotic(KernelOrder(0), 3.3)).epsilon(1e-15));
  CHECK(k_asymptotic(KernelOrder(1), kPi) == Approx(2 / (kPi * kPi)).epsilon(1e-15));
  CHECK_THROWS_AS(k_asymptotic(KernelOrder(1), 0.0), DomainError);
  const double x = 100.3;
  CHECK(std::abs(x * k_closed(KernelOrder(1), x).value - 2 / kPi * std::sin(x - kPi / 2)) < 0.05);
  // 40-digit reference at the same scale
  CHECK(k_closed(KernelOrder(2), x).value == Approx(0.0014838349691351821739).epsilon(1e-9));
}

TEST_CASE("lp_diagnostic") {
  const double a = lp_diagnostic(1, 1.0, 10.0);
  CHECK(a > 0.0);
  CHECK(std::isfinite(a));
  const double b = lp_diagnostic(1, 1.0, 100.0);
  const double c = lp_diagnostic(1, 1.0, 1000.0);
  CHECK(b > a);
  CHECK(c > b);
  // |k^(1)(x)| ~ (2/pi)|cos x|/x, whose mean over a period gives 4/pi^2 per unit of log x.
  CHECK((c - b) / std::log(10.0) == Approx(4 / (kPi * kPi)).epsilon(0.02));
  CHECK(std::abs(lp_diagnostic(1, 2.0, 1000.0) - lp_diagnostic(1, 2.0, 100.0)) < 0.05);
  CHECK_THROWS_AS(lp_diagnostic(1, 0.5, 10.0), DomainError);
  CHECK_THROWS_AS(lp_diagnostic(0, 1.0, 10.0), OrderTooLargeError);
}

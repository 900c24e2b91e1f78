#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "hankel/combinatorics.hpp"
#include "hankel/kernels.hpp"
#include "hankel/operators.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/specfun.hpp"
#include "hankel/spectral.hpp"

namespace hankel::cli {
namespace {

using kernels::KernelOrder;
using Complex = std::complex<double>;

class Recorder {
 public:
  explicit Recorder(std::optional<double> tol) : tol_(tol) {}

  void check(std::string name, std::string anchor, double measured, double threshold) {
    const double t = tol_.value_or(threshold);
    records_.push_back({std::move(name), std::move(anchor), measured, t,
                        std::isfinite(measured) && measured <= t});
  }

  // Checks whose pass condition is not a single threshold comparison.
  void check_if(std::string name, std::string anchor, double measured, double threshold,
                bool pass) {
    records_.push_back({std::move(name), std::move(anchor), measured, threshold, pass});
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  std::optional<double> tol_;
  std::vector<CheckRecord> records_;
};

std::string fmt(double v) { return format_double(v); }

double exact_gap(const combinatorics::ExactIdentity& id) {
  return std::abs(id.lhs.to_double() - id.rhs.to_double()) + (id.holds() ? 0.0 : 1.0);
}

void identities(Recorder& rec) {
  using combinatorics::SumKind;
  const std::array<std::string, 3> anchors = {
      "sum_{j<l} cos((l-j)pi/4) 2^{-(l+j-2)/2} C(l+j-1,l-1) = 1",
      "sum_{n<=l} (-1)^n C(2l,2n) = cos(l pi/2) 2^l",
      "sum_{n<l} (-1)^{n+1} C(2l,2n+1) = sin(-l pi/2) 2^l"};
  for (int kind = 1; kind <= 3; ++kind) {
    for (int ell = 1; ell <= 20; ++ell) {
      const auto id = combinatorics::sum_identity(static_cast<SumKind>(kind), ell);
      rec.check("sum_identity kind=" + std::to_string(kind) + " l=" + std::to_string(ell),
                anchors[static_cast<std::size_t>(kind - 1)], exact_gap(id), 0.0);
    }
  }
  for (int m = 1; m <= 16; ++m) {
    for (int r = 1; r <= m; ++r) {
      const auto id = combinatorics::alternating_factorial_identity(m, r);
      const double gap = (id.lhs - id.rhs).convert_to<double>();
      rec.check("alternating_factorial m=" + std::to_string(m) + " r=" + std::to_string(r),
                "sum_{j=r}^m (-1)^j C(m,j) (j-1)!/(j-r)! = (-1)^r (r-1)!", std::abs(gap), 0.0);
    }
  }
}

constexpr std::array<double, 4> kFourierGrid = {0.0, 0.5, 1.0, 3.0};

void fourier(Recorder& rec) {
  for (int ell = 1; ell <= 6; ++ell) {
    for (double w : kFourierGrid) {
      const double closed = kernels::fourier_xi_pow(ell, w);
      const double oracle = quadrature::rational_power_transform_oracle(ell, w).value;
      rec.check("xi_pow l=" + std::to_string(ell) + " w=" + fmt(w),
                "F[(1+t^2)^{-l}](w) = (1/sqrt(2pi)) (pi/2^{l-1}) e^{-|w|} p_l(|w|)",
                std::abs(closed - oracle), 1e-10);
    }
  }
  for (int ell = 0; ell <= 6; ++ell) {
    for (double w : kFourierGrid) {
      const double closed = kernels::fourier_psi_tilde(KernelOrder(ell), w);
      const double oracle = quadrature::polynomial_symbol_transform_oracle(ell, w).value;
      rec.check("psi_tilde l=" + std::to_string(ell) + " w=" + fmt(w),
                "F[(1+it)^{2l} psi](w) = sqrt(8/pi) sum_n C(2l,n) (-1)^n sinc^{(n)}(w)",
                std::abs(closed - oracle), 1e-10);
    }
  }
  for (int ell = 0; ell <= 4; ++ell) {
    for (double y : {0.0, 0.5, 2.0, 5.0}) {
      auto f = [ell, y](double x) {
        return std::pow(std::abs(x), ell) * std::exp(-std::abs(x) - std::abs(y - x));
      };
      const std::array<double, 1> kinks = {y};
      const double oracle = quadrature::improper_damped(f, 1e-13, kinks, ell).value;
      rec.check("exp_self_convolution l=" + std::to_string(ell) + " y=" + fmt(y),
                "int |x|^l e^{-|x|} e^{-|y-x|} dx in closed form",
                std::abs(kernels::exp_poly_self_convolution(ell, y) - oracle), 1e-9);
    }
  }
  for (int m = 0; m <= 4; ++m) {
    for (double x : {0.7, 1.0, 2.5}) {
      for (auto kind : {specfun::Trig::sin, specfun::Trig::cos}) {
        const bool is_sin = kind == specfun::Trig::sin;
        auto f = [m, x, is_sin](double y) {
          const double t = is_sin ? std::sin(x - y) : std::cos(x - y);
          return std::exp(-std::abs(y)) * std::pow(std::abs(y), m) * t;
        };
        const double oracle = quadrature::improper_damped(f, 1e-13, {}, m).value;
        rec.check(std::string("trig_moment ") + (is_sin ? "sin" : "cos") + " m=" +
                      std::to_string(m) + " x=" + fmt(x),
                  "int e^{-|y|} |y|^m trig(x-y) dy = m!/2^{(m-1)/2} cos((m+1)pi/4) trig(x)",
                  std::abs(specfun::damped_trig_moment(m, x, kind) - oracle), 1e-9);
      }
    }
  }
}

double sinc_derivative_integral(kernels::Side side, int m, int n, double x) {
  const double sign = side == kernels::Side::minus ? -1.0 : 1.0;
  auto f = [=](double y) {
    return std::exp(-y) * std::pow(y, m) * specfun::sinc_derivative(n, x + sign * y);
  };
  quadrature::QuadratureOptions opts;
  opts.tol = 1e-13;
  opts.max_panel_width = 2.0;
  return quadrature::integrate<double>(f, 0.0, quadrature::damped_truncation_point(1e-14, m), opts)
      .value;
}

void kernels_suite(Recorder& rec) {
  for (int n = 0; n <= 4; ++n) {
    for (Complex a : {Complex(1.0, 0.0), Complex(1.0, 1.0), Complex(2.0, -1.0)}) {
      for (double x : {0.5, 1.0, 2.0, 5.0}) {
        auto f = [=](double y) { return std::pow(y, n) * std::exp(-a * y) / (x + y); };
        quadrature::QuadratureOptions opts;
        opts.tol = 1e-13;
        opts.max_panel_width = 1.0;
        const double upper = quadrature::damped_truncation_point(1e-15, n) / a.real();
        const Complex oracle = quadrature::integrate<Complex>(f, 0.0, upper, opts).value;
        rec.check("damped_moment_shifted n=" + std::to_string(n) + " a=" + fmt(a.real()) +
                      (a.imag() < 0 ? "" : "+") + fmt(a.imag()) + "i x=" + fmt(x),
                  "int_0^inf y^n e^{-ay}/(x+y) dy = (-1)^n x^n e^{ax} E1(ax) + sum_r ...",
                  std::abs(specfun::damped_moment_shifted(n, a, x) - oracle), 1e-9);
      }
    }
  }
  for (auto side : {kernels::Side::minus, kernels::Side::plus}) {
    const std::string s = side == kernels::Side::minus ? "-" : "+";
    for (int m = 0; m <= 3; ++m) {
      for (int n = 0; n <= 2 * m + 2; ++n) {
        for (double x : {0.5, 2.0, 5.0}) {
          const double closed =
              n <= m ? kernels::p_term(side, m, n, x) : kernels::q_term(side, m, n, x);
          rec.check(std::string(n <= m ? "P" : "Q") + s + " m=" + std::to_string(m) +
                        " n=" + std::to_string(n) + " x=" + fmt(x),
                    "int_0^inf e^{-y} y^m d^n/dx^n sinc(x -/+ y) dy in closed form",
                    std::abs(closed - sinc_derivative_integral(side, m, n, x)), 1e-9);
        }
      }
    }
  }
  for (int ell = 1; ell <= 6; ++ell) {
    const KernelOrder order(ell);
    for (double x : {0.5, 1.0, 2.0, 5.0, 10.0, 20.0}) {
      const double c = kernels::k_closed(order, x).value;
      const double v = kernels::k_conv(order, x).value;
      const double o = kernels::k_oracle(order, x).value;
      const double dev = std::max({std::abs(c - v), std::abs(c - o), std::abs(v - o)});
      rec.check("triple_route l=" + std::to_string(ell) + " x=" + fmt(x),
                "closed form = convolution = (1/2pi) int psi_l(t) e^{-itx} dt", dev, 1e-8);
    }
  }
  for (int ell = 1; ell <= 4; ++ell) {
    const KernelOrder order(ell);
    auto err = [&](double x) {
      return std::abs(x * kernels::evaluate_kernel(order, x).value -
                      2.0 / kPi * std::sin(x - ell * kPi / 2.0));
    };
    const double near = err(10.0);
    const double far = err(1000.0);
    rec.check_if("asymptotic l=" + std::to_string(ell),
                 "x k^(l)(x) - (2/pi) sin(x - l pi/2) -> 0 as |x| -> inf", far, 0.01,
                 far <= 0.01 && far < near);
  }
  {
    const std::array<double, 3> upper = {1e2, 1e3, 1e4};
    std::array<double, 3> y{};
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      y[i] = kernels::lp_diagnostic(1, 1.0, upper[i]);
      num += y[i] * std::log(upper[i]);
      den += std::log(upper[i]) * std::log(upper[i]);
    }
    const double c = num / den;
    double res = 0.0, norm = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      res += std::pow(y[i] - c * std::log(upper[i]), 2);
      norm += y[i] * y[i];
    }
    const double rel = std::sqrt(res / norm);
    rec.check_if("l1_log_growth", "int_0^X |k^(1)| ~ c log X (k^(1) not in L^1)", rel, 0.2,
                 c > 0.0 && rel < 0.2);
    const double l2 =
        std::abs(kernels::lp_diagnostic(1, 2.0, 1e3) - kernels::lp_diagnostic(1, 2.0, 1e2));
    rec.check("l2_tail", "k^(l) in L^p for p > 1", l2, 0.05);
  }
}

void operators_suite(Recorder& rec) {
  for (int m = 0; m <= 3; ++m) {
    for (auto parity : {operators::Parity::even, operators::Parity::odd}) {
      const bool even = parity == operators::Parity::even;
      const auto cert = even ? operators::block_decompose_even(m, 64)
                             : operators::block_decompose_odd(m, 64);
      const std::string tag = std::string(even ? "even" : "odd") + " m=" + std::to_string(m);
      rec.check("block_deviation " + tag,
                even ? "S_{2m} ~ ((-1)^m/pi H_{1/2-m}) + ((-1)^{m+1}/pi H_{-1/2-m})"
                     : "S_{2m+1} ~ ((-1)^{m+1}/pi H_{-1/2-m}) + ((-1)^m/pi H_{-1/2-m})",
                cert.max_abs_deviation, 1e-13);
      rec.check_if("vanishing_blocks " + tag,
                   even ? "P+ S_{2m} P- = 0 = P- S_{2m} P+" : "P+ S_{2m+1} P+ = 0 = P- S_{2m+1} P-",
                   cert.cross_block_max, 0.0, cert.cross_block_max == 0.0);
    }
  }
  for (double p : {0.5, -0.5, -1.5}) {
    const auto alt = operators::hilbert_type(p, 64, true).entries;
    const auto plain = operators::hilbert_type(p, 64, false).entries;
    const double d =
        operators::max_abs_difference(operators::conjugate_by_sign_alternation(alt), plain);
    rec.check_if("sign_conjugation p=" + fmt(p), "V H~_p V = H_p", d, 0.0, d == 0.0);
  }
  for (int ell = 0; ell <= 4; ++ell) {
    const auto r = operators::spectrum_report(KernelOrder(ell), 512);
    rec.check("containment l=" + std::to_string(ell) + " N=512",
              "spectrum of K^(l) is [-1, 1]", r.containment_violation, 1e-9);
    if (ell % 2 == 1) {
      double asym = 0.0;
      const auto& e = r.eigenvalues;
      for (std::size_t i = 0; i < e.size(); ++i) {
        asym = std::max(asym, std::abs(e[i] + e[e.size() - 1 - i]));
      }
      rec.check("negation_symmetry l=" + std::to_string(ell) + " N=512",
                "odd l: blocks -T and +T give a spectrum symmetric under negation", asym,
                1e-10);
    }
  }
}

void spectral_suite(Recorder& rec) {
  for (double lambda : {0.01, 0.1, 1.0, 4.0, 25.0}) {
    const double a = kPi * std::sqrt(lambda);
    const double r0 = spectral::density_rho(0.0, lambda).rho * kPi;
    rec.check("rho_0 lambda=" + fmt(lambda), "rho_0(lambda) = sinh(pi sqrt(lambda))/pi",
              std::abs(r0 - std::sinh(a)) / std::sinh(a), 1e-12);
    const double r1 = spectral::density_rho(0.5, lambda).rho * a;
    rec.check("rho_half lambda=" + fmt(lambda),
              "rho_{1/2}(lambda) = cosh(pi sqrt(lambda))/(pi sqrt(lambda))",
              std::abs(r1 - std::cosh(a)) / std::cosh(a), 1e-12);
  }
  for (double y : {0.1, 1.0, 2.0, 5.0}) {
    const double py = kPi * y;
    rec.check("gamma_reflection p=0 y=" + fmt(y), "|Gamma(1/2 - iy)|^2 = pi/cosh(pi y)",
              std::abs(specfun::gamma_abs_sq(0.0, y) * std::cosh(py) / kPi - 1.0), 1e-12);
    rec.check("gamma_reflection p=1/2 y=" + fmt(y), "|Gamma(-iy)|^2 = pi/(y sinh(pi y))",
              std::abs(specfun::gamma_abs_sq(0.5, y) * y * std::sinh(py) / kPi - 1.0), 1e-12);
    rec.check("gamma_reflection p=-1/2 y=" + fmt(y), "|Gamma(1 - iy)|^2 = pi y/sinh(pi y)",
              std::abs(specfun::gamma_abs_sq(-0.5, y) * std::sinh(py) / py - 1.0), 1e-12);
  }
  {
    double worst = 0.0;
    for (double r : {2.25, 3.0, 4.0}) {
      for (int k = -15; k <= 15; ++k) {
        const Complex z = std::polar(r, k * kPi / 16.0);
        const Complex e1 = specfun::e1(z);
        const Complex rel = specfun::ein(z) - std::log(z) - kEulerGamma;
        worst = std::max(worst, std::abs(e1 - rel) / std::abs(e1));
      }
    }
    rec.check("e1_ein_relation", "E1(z) = Ein(z) - log z - gamma", worst, 1e-11);
  }
  {
    double prev = kPi;
    bool ok = true;
    for (double lambda : {1e-6, 1e-3, 0.1, 1.0, 4.0, 25.0, 100.0}) {
      const double h = spectral::multiplier_h(lambda);
      ok = ok && h > 0.0 && h < kPi && h < prev;
      prev = h;
    }
    rec.check_if("multiplier_range", "h(lambda) = pi/cosh(pi sqrt(lambda)) in (0, pi), decreasing",
                 spectral::multiplier_h(1e-6), kPi, ok);
  }
  for (int ell = 0; ell <= kMaxOrder; ++ell) {
    const auto d = spectral::diagonalization_of(KernelOrder(ell));
    const auto t = operators::block_targets(KernelOrder(ell));
    double gap = 0.0;
    for (std::size_t b = 0; b < 2; ++b) {
      gap = std::max({gap, std::abs(static_cast<double>(d.blocks[b].sign - t[b].sign)),
                      std::abs(d.blocks[b].p - t[b].p), std::abs(d.blocks[b].scale - 1.0 / kPi)});
    }
    rec.check_if("diagonalization_consistency l=" + std::to_string(ell),
                 "K^(l) blocks match the block-decomposition targets", gap, 0.0, gap == 0.0);
  }
  for (double p : {0.5, -0.5, -1.5}) {
    const auto piv = operators::hilbert_cauchy_pivots(p, 512);
    rec.check_if("hilbert_positive p=" + fmt(p) + " N=512",
                 "H_p is a Gram matrix, hence positive definite", piv.min_log10_pivot, 0.0,
                 piv.positive_definite);
    const auto eig = operators::symm_eigen(operators::hilbert_type(p, 512, false).entries);
    rec.check_if("hilbert_norm p=" + fmt(p) + " N=512", "H_p ~ M_h with 0 < h < pi", eig.back(),
                 kPi - 1e-6, eig.back() < kPi - 1e-6);
  }
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "identities") return Suite::identities;
  if (name == "fourier") return Suite::fourier;
  if (name == "kernels") return Suite::kernels;
  if (name == "operators") return Suite::operators;
  if (name == "spectral") return Suite::spectral;
  return std::nullopt;
}

std::string_view to_string(Suite suite) {
  switch (suite) {
    case Suite::identities: return "identities";
    case Suite::fourier: return "fourier";
    case Suite::kernels: return "kernels";
    case Suite::operators: return "operators";
    case Suite::spectral: return "spectral";
  }
  return "unknown";
}

std::vector<CheckRecord> run_suite(Suite suite, std::optional<double> tol) {
  Recorder rec(tol);
  switch (suite) {
    case Suite::identities: identities(rec); break;
    case Suite::fourier: fourier(rec); break;
    case Suite::kernels: kernels_suite(rec); break;
    case Suite::operators: operators_suite(rec); break;
    case Suite::spectral: spectral_suite(rec); break;
  }
  return rec.take();
}

Json to_json(const CheckRecord& r) {
  Json j;
  j["name"] = r.name;
  j["anchor"] = r.anchor;
  j["measured"] = r.measured;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  return j;
}

}  // namespace hankel::cli

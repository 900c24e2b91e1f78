#include "hankel/spectral.hpp"

#include <cmath>

#include "hankel/errors.hpp"
#include "hankel/specfun.hpp"

namespace hankel::spectral {
namespace {

// log sinh(t) for t > 0 without overflow.
double log_sinh(double t) {
  if (t > 20.0) return t - std::log(2.0) + std::log1p(-std::exp(-2.0 * t));
  return std::log(std::sinh(t));
}

}  // namespace

double multiplier_h(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("multiplier_h: lambda must be finite and > 0");
  }
  const double a = kPi * std::sqrt(lambda);
  if (a > 700.0) return 2.0 * kPi * std::exp(-a);
  return kPi / std::cosh(a);
}

SpectralDensityPoint density_rho(double p, double lambda) {
  if (!(p <= 0.5)) throw DomainError("density_rho: p must be <= 1/2");
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("density_rho: lambda must be finite and > 0");
  }
  const double y = std::sqrt(lambda);
  const double log_rho =
      log_sinh(2.0 * kPi * y) + specfun::log_gamma_abs_sq(p, y) - std::log(2.0 * kPi * kPi);
  return {p, lambda, std::exp(log_rho)};
}

DiagonalizationDescriptor diagonalization_of(KernelOrder ell) {
  const int l = ell.value();
  const int m = l / 2;
  const int sm = (m % 2 == 0) ? 1 : -1;
  DiagonalizationDescriptor d;
  d.ell = l;
  if (l % 2 == 0) {
    d.blocks = {MultiplicationBlock{sm, 1.0 / kPi, 0.5 - m},
                MultiplicationBlock{-sm, 1.0 / kPi, -0.5 - m}};
  } else {
    d.blocks = {MultiplicationBlock{-sm, 1.0 / kPi, -0.5 - m},
                MultiplicationBlock{sm, 1.0 / kPi, -0.5 - m}};
  }
  return d;
}

}  // namespace hankel::spectral

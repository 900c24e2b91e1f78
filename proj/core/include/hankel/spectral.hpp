#pragma once

// Spectral data of the diagonalized operators: the multiplier h, the densities
// rho_p of the weighted spaces L^2((0, inf); rho_p d lambda), and the per-l
// description of the two multiplication blocks.

#include <array>

#include "hankel/kernels.hpp"

namespace hankel::spectral {

using kernels::KernelOrder;

/// h(lambda) = pi / cosh(pi sqrt(lambda)), lambda > 0.
double multiplier_h(double lambda);

struct SpectralDensityPoint {
  double p = 0.0;
  double lambda = 0.0;
  double rho = 0.0;
};

/// rho_p(lambda) = (1/(2 pi^2)) sinh(2 pi sqrt(lambda)) |Gamma(1/2 - p - i sqrt(lambda))|^2,
/// for p <= 1/2 and lambda > 0. Assembled in log space.
SpectralDensityPoint density_rho(double p, double lambda);

/// One multiplication block sign/pi * h on L^2((0, inf); rho_p d lambda).
struct MultiplicationBlock {
  int sign = 1;
  double scale = 1.0 / kPi;
  double p = 0.5;
};

struct DiagonalizationDescriptor {
  int ell = 0;
  std::array<MultiplicationBlock, 2> blocks{};
};

/// l = 2m:   blocks (-1)^m/pi on p = 1/2 - m and (-1)^{m+1}/pi on p = -1/2 - m.
/// l = 2m+1: blocks (-1)^{m+1}/pi and (-1)^m/pi, both on p = -1/2 - m.
DiagonalizationDescriptor diagonalization_of(KernelOrder ell);

}  // namespace hankel::spectral

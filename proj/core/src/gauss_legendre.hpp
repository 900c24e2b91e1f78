#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "hankel/constants.hpp"

namespace hankel::detail {

// Gauss-Legendre rule mapped to [0, 1]. Nodes by Newton iteration on P_n.
template <std::size_t N>
struct GaussLegendreUnit {
  std::array<double, N> node{};
  std::array<double, N> weight{};

  GaussLegendreUnit() {
    for (std::size_t i = 0; i < (N + 1) / 2; ++i) {
      double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(N) + 0.5));
      double dp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= N; ++k) {
          const double kk = static_cast<double>(k);
          const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-17) break;
      }
      const double w = 2.0 / ((1.0 - x * x) * dp * dp);
      // map [-1, 1] -> [0, 1]
      node[i] = 0.5 * (1.0 - x);
      node[N - 1 - i] = 0.5 * (1.0 + x);
      weight[i] = 0.5 * w;
      weight[N - 1 - i] = 0.5 * w;
    }
  }
};

template <std::size_t N>
const GaussLegendreUnit<N>& gauss_legendre_unit() {
  static const GaussLegendreUnit<N> rule;
  return rule;
}

}  // namespace hankel::detail

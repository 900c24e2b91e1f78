#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hankel/errors.hpp"
#include "hankel/operators.hpp"
#include "oracles.hpp"

using namespace hankel;
using namespace hankel::operators;
using doctest::Approx;

TEST_CASE("fourier coefficients") {
  CHECK(fourier_coefficient(1) == Approx(2 / kPi).epsilon(1e-16));
  CHECK(fourier_coefficient(2) == 0.0);
  CHECK(fourier_coefficient(3) == Approx(-2 / (3 * kPi)).epsilon(1e-16));
  CHECK(fourier_coefficient(5) > 0.0);
  CHECK_THROWS_AS(fourier_coefficient(0), DomainError);
}

TEST_CASE("hankel truncation entries") {
  const auto h0 = hankel_truncation(KernelOrder(0), 1);
  CHECK(h0.entries(0, 0) == fourier_coefficient(1));
  const auto h1 = hankel_truncation(KernelOrder(1), 2);
  CHECK(h1.entries(0, 0) == 0.0);
  CHECK(h1.entries(1, 1) == 0.0);
  CHECK(h1.entries(0, 1) == fourier_coefficient(3));
  CHECK(h1.entries(1, 0) == fourier_coefficient(3));
}

TEST_CASE("hankel truncation is exactly symmetric with exact zeros") {
  for (int ell = 0; ell <= kMaxOrder; ++ell) {
    const auto h = hankel_truncation(KernelOrder(ell), 33);
    CHECK(h.entries == h.entries.transposed());
    for (std::size_t i = 0; i < 33; ++i) {
      for (std::size_t j = 0; j < 33; ++j) {
        if ((i + j + ell + 1) % 2 == 0) CHECK(h.entries(i, j) == 0.0);
      }
    }
  }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(hankel_truncation(KernelOrder(0), 0), SizeError);
  CHECK_THROWS_AS(hankel_truncation(KernelOrder(0), 4097), SizeError);
  setenv("HANKEL_SPECTRA_MAX_N", "16", 1);
  CHECK(max_matrix_size() == 16);
  CHECK_THROWS_AS(hankel_truncation(KernelOrder(0), 17), SizeError);
  CHECK_THROWS_AS(block_decompose_even(0, 9), SizeError);
  setenv("HANKEL_SPECTRA_MAX_N", "abc", 1);
  CHECK_THROWS_AS(max_matrix_size(), SizeError);
  unsetenv("HANKEL_SPECTRA_MAX_N");
  CHECK(max_matrix_size() == 4096);
}

TEST_CASE("hilbert-type matrices") {
  CHECK(hilbert_type(0.5, 1, false).entries(0, 0) == 2.0);
  const auto h = hilbert_type(-0.5, 2, false).entries;
  CHECK(h(0, 0) == 1 / 1.5);
  CHECK(h(0, 1) == 1 / 2.5);
  CHECK(h(1, 0) == 1 / 2.5);
  CHECK(h(1, 1) == 1 / 3.5);
  CHECK_THROWS_AS(hilbert_type(0.75, 2, false), DomainError);
}

TEST_CASE("V conjugation maps the alternating form to the plain form exactly") {
  for (double p : {0.5, -0.5, -1.5, -2.5}) {
    for (std::size_t n : {1U, 2U, 17U, 64U}) {
      const auto alt = hilbert_type(p, n, true).entries;
      const auto plain = hilbert_type(p, n, false).entries;
      CHECK(conjugate_by_sign_alternation(alt) == plain);
      const auto v = sign_alternation(n);
      CHECK(conjugate(alt, v) == plain);
    }
  }
}

TEST_CASE("coordinate maps are isometries") {
  const std::size_t n = 5;
  const auto id = Matrix::identity(n);
  CHECK(interleave_even(n).transposed() * interleave_even(n) == id);
  CHECK(interleave_odd(n).transposed() * interleave_odd(n) == id);
  CHECK(max_abs_difference(interleave_even(n).transposed() * interleave_odd(n), Matrix(n, n)) == 0.0);
  const auto r = rotation(n);
  CHECK(max_abs_difference(r.transposed() * r, Matrix::identity(2 * n)) < 1e-15);
  for (int ell : {0, 1, 4, 7}) {
    const auto w = block_unitary(KernelOrder(ell), n);
    CHECK(max_abs_difference(w.transposed() * w, Matrix::identity(2 * n)) < 1e-15);
  }
}

TEST_CASE("even block decomposition") {
  const auto c0 = block_decompose_even(0, 4);
  CHECK(c0.max_abs_deviation <= 1e-15);
  CHECK(c0.cross_block_max == 0.0);
  CHECK(c0.parity == Parity::even);
  CHECK(block_decompose_even(1, 8).max_abs_deviation <= 1e-15);
  // n = k = m = 0: c_1 = 2/pi = (1/pi)/(1/2)
  const auto s = hankel_truncation(KernelOrder(0), 2).entries;
  CHECK(s(0, 0) == Approx((1 / kPi) / 0.5).epsilon(1e-16));
  CHECK_THROWS_AS(block_decompose_even(5, 4), OrderTooLargeError);
}

TEST_CASE("odd block decomposition") {
  const auto c0 = block_decompose_odd(0, 4);
  CHECK(c0.max_abs_deviation <= 1e-14);
  CHECK(c0.cross_block_max == 0.0);
  CHECK(c0.parity == Parity::odd);
  CHECK(block_decompose_odd(1, 8).max_abs_deviation <= 1e-14);
  CHECK_THROWS_AS(block_decompose_odd(4, 4), OrderTooLargeError);
}

TEST_CASE("block certificates for all orders") {
  for (int ell = 0; ell <= kMaxOrder; ++ell) {
    for (std::size_t n : {1U, 16U, 64U}) {
      const auto c = block_decompose(KernelOrder(ell), n);
      CAPTURE(ell);
      CAPTURE(n);
      CHECK(c.max_abs_deviation <= 1e-13);
      CHECK(c.cross_block_max == 0.0);
      CHECK(c.m == ell / 2);
    }
  }
}

TEST_CASE("odd spectrum is the union of the rotated block spectra") {
  const std::size_t n = 32;
  const KernelOrder ell(1);
  const auto s = hankel_truncation(ell, 2 * n).entries;
  const auto d = conjugate(s, block_unitary(ell, n));
  auto both = symm_eigen(d.block(0, 0, n, n));
  const auto second = symm_eigen(d.block(n, n, n, n));
  both.insert(both.end(), second.begin(), second.end());
  std::sort(both.begin(), both.end());
  const auto full = symm_eigen(s);
  REQUIRE(full.size() == both.size());
  for (std::size_t i = 0; i < full.size(); ++i) CHECK(std::abs(full[i] - both[i]) <= 1e-10);
}

TEST_CASE("symm_eigen small cases") {
  Matrix a(2, 2);
  a(0, 1) = a(1, 0) = 1.0;
  const auto e = symm_eigen(a);
  CHECK(e[0] == Approx(-1.0).epsilon(1e-15));
  CHECK(e[1] == Approx(1.0).epsilon(1e-15));
  Matrix d(3, 3);
  d(0, 0) = 3;
  d(1, 1) = 1;
  d(2, 2) = 2;
  CHECK(symm_eigen(d) == std::vector<double>{1, 2, 3});
  CHECK(symm_eigen(Matrix()).empty());
}

TEST_CASE("symm_eigen against the characteristic cubic of H_{1/2}") {
  const auto h = hilbert_type(0.5, 3, false).entries;
  // char poly x^3 - tr x^2 + (sum of principal 2x2 minors) x - det
  const double tr = h(0, 0) + h(1, 1) + h(2, 2);
  const double m2 = h(0, 0) * h(1, 1) - h(0, 1) * h(1, 0) + h(0, 0) * h(2, 2) - h(0, 2) * h(2, 0) +
                    h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1);
  const double det = h(0, 0) * (h(1, 1) * h(2, 2) - h(1, 2) * h(2, 1)) -
                     h(0, 1) * (h(1, 0) * h(2, 2) - h(1, 2) * h(2, 0)) +
                     h(0, 2) * (h(1, 0) * h(2, 1) - h(1, 1) * h(2, 0));
  const auto roots = test::cubic_real_roots(-tr, m2, -det);
  const auto e = symm_eigen(h);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(e[i] - roots[i]) <= 1e-12);
}

TEST_CASE("symm_eigen rejects bad input") {
  Matrix a(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(symm_eigen(a), NonSymmetricError);
  CHECK_THROWS_AS(symm_eigen(Matrix(2, 3)), NonSymmetricError);
  auto h = hankel_truncation(KernelOrder(0), 40).entries;
  CHECK_THROWS_AS(symm_eigen(h, 1e-14, 1), NonConvergenceError);
}

TEST_CASE("symm_eigen is deterministic") {
  const auto h = hankel_truncation(KernelOrder(2), 70).entries;
  CHECK(symm_eigen(h) == symm_eigen(h));
}

TEST_CASE("spectrum reports") {
  const auto r0 = spectrum_report(KernelOrder(0), 256);
  CHECK(r0.containment_violation <= 1e-9);
  CHECK(std::is_sorted(r0.eigenvalues.begin(), r0.eigenvalues.end()));
  CHECK(r0.min == r0.eigenvalues.front());
  CHECK(r0.max == r0.eigenvalues.back());
  const auto r1 = spectrum_report(KernelOrder(1), 256);
  const auto& e = r1.eigenvalues;
  for (std::size_t i = 0; i < e.size(); ++i) CHECK(std::abs(e[i] + e[e.size() - 1 - i]) <= 1e-10);
  const auto r2 = spectrum_report(KernelOrder(0), 2);
  CHECK(r2.eigenvalues[0] == Approx(-2 / (3 * kPi)).epsilon(1e-15));
  CHECK(r2.eigenvalues[1] == Approx(2 / kPi).epsilon(1e-15));
}

TEST_CASE("largest truncation eigenvalues, regression pins") {
  // Reference values from LAPACK (numpy eigvalsh) on the same matrices.
  CHECK(spectrum_report(KernelOrder(0), 512).max == Approx(0.9051124328722902).epsilon(1e-12));
  CHECK(spectrum_report(KernelOrder(1), 512).max == Approx(0.6820809294899539).epsilon(1e-12));
  CHECK(spectrum_report(KernelOrder(0), 1024).max == Approx(0.915532).epsilon(1e-6));
}

TEST_CASE("coverage gap shrinks as the truncation grows") {
  // Only a few eigenvalues lie away from 0 and they move out logarithmically in N,
  // so for l = 1, 3, 4 the largest interior gap can widen slightly between doublings.
  for (int ell = 0; ell <= 4; ++ell) {
    std::vector<double> gaps;
    for (std::size_t n : {64U, 128U, 256U, 512U}) gaps.push_back(spectrum_report(KernelOrder(ell), n).coverage_gap);
    CAPTURE(ell);
    CHECK(gaps.back() < gaps.front());
    if (ell == 0 || ell == 2) CHECK(std::is_sorted(gaps.rbegin(), gaps.rend()));
  }
  const auto g1 = spectrum_report(KernelOrder(1), 64).coverage_gap;
  CHECK(spectrum_report(KernelOrder(1), 128).coverage_gap > g1);
  CHECK(coverage_gap({}, 0.95) == Approx(1.9));
  CHECK(coverage_gap({-0.5, 0.0, 0.9}, 0.95) == Approx(0.9));
  CHECK(coverage_gap({-0.99, 0.99}, 0.95) == Approx(1.9));
}

TEST_CASE("Cauchy pivots equal exact rational LDL^T pivots") {
  for (auto [num, den] : {std::pair{1, 2}, std::pair{-1, 2}, std::pair{-3, 2}, std::pair{0, 1}}) {
    const double p = static_cast<double>(num) / den;
    const auto exact = test::exact_hilbert_pivots(num, den, 12);
    const auto piv = hilbert_cauchy_pivots(p, 12);
    for (std::size_t k = 0; k < 12; ++k) {
      CHECK(piv.log_pivots[k] == Approx(std::log(exact[k].convert_to<double>())).epsilon(1e-12));
    }
  }
}

TEST_CASE("Hilbert-type matrices are positive definite with norm below pi") {
  for (double p : {0.5, -0.5, -1.5, -2.5}) {
    const auto piv = hilbert_cauchy_pivots(p, 512);
    CHECK(piv.positive_definite);
    CHECK(piv.min_log10_pivot < -300.0);  // far below double range, hence the log form
    const auto e = symm_eigen(hilbert_type(p, 256, false).entries);
    CHECK(e.back() < kPi);
    CHECK(e.back() > 1.0);
  }
}

#include "hankel/operators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>
#include <string_view>

#include "hankel/constants.hpp"

namespace hankel::operators {
namespace {

void check_size(std::size_t n, std::string_view who) {
  const std::size_t cap = max_matrix_size();
  if (n == 0 || n > cap) {
    throw SizeError(std::string(who) + ": size " + std::to_string(n) + " outside [1, " +
                    std::to_string(cap) + "]");
  }
}

double parity_sign(std::size_t k) { return (k & 1U) ? -1.0 : 1.0; }

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw SizeError("Matrix::block: out of range");
  Matrix b(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  }
  return b;
}

double Matrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw SizeError("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double max_abs_difference(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw SizeError("max_abs_difference: shapes differ");
  }
  double d = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    d = std::max(d, std::abs(a.data()[i] - b.data()[i]));
  }
  return d;
}

std::size_t max_matrix_size() {
  constexpr std::size_t kDefault = 4096;
  const char* env = std::getenv("HANKEL_SPECTRA_MAX_N");
  if (env == nullptr || *env == '\0') return kDefault;
  std::size_t value = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    throw SizeError("HANKEL_SPECTRA_MAX_N is not a positive integer: " + std::string(s));
  }
  return value;
}

double fourier_coefficient(long k) {
  if (k < 1) throw DomainError("fourier_coefficient: k must be >= 1");
  if (k % 2 == 0) return 0.0;
  const double sign = ((k - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * 2.0 / (kPi * static_cast<double>(k));
}

HankelTruncation hankel_truncation(KernelOrder ell, std::size_t n) {
  check_size(n, "hankel_truncation");
  const int l = ell.value();
  // One coefficient per anti-diagonal, so the matrix is symmetric bit for bit.
  std::vector<double> c(2 * n);
  for (std::size_t s = 0; s + 1 < 2 * n; ++s) {
    c[s] = fourier_coefficient(static_cast<long>(s) + l + 1);
  }
  HankelTruncation h{l, n, Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.entries(i, j) = c[i + j];
  }
  return h;
}

HilbertTypeMatrix hilbert_type(double p, std::size_t n, bool alternating) {
  if (!(p <= 0.5)) throw DomainError("hilbert_type: p must be <= 1/2");
  check_size(n, "hilbert_type");
  HilbertTypeMatrix h{p, n, alternating, Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = 1.0 / (1.0 + static_cast<double>(i + j) - p);
      h.entries(i, j) = alternating ? parity_sign(i + j) * v : v;
    }
  }
  return h;
}

Matrix sign_alternation(std::size_t n) {
  Matrix v(n, n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = parity_sign(i);
  return v;
}

Matrix interleave_even(std::size_t n) {
  Matrix u(2 * n, n);
  for (std::size_t k = 0; k < n; ++k) u(2 * k, k) = 1.0;
  return u;
}

Matrix interleave_odd(std::size_t n) {
  Matrix u(2 * n, n);
  for (std::size_t k = 0; k < n; ++k) u(2 * k + 1, k) = 1.0;
  return u;
}

Matrix rotation(std::size_t n) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix w(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    w(i, i) = r;
    w(i, n + i) = -r;
    w(n + i, i) = r;
    w(n + i, n + i) = r;
  }
  return w;
}

Matrix conjugate_by_sign_alternation(const Matrix& a) {
  if (a.rows() != a.cols()) throw SizeError("conjugate_by_sign_alternation: not square");
  Matrix b = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if ((i + j) & 1U) b(i, j) = -a(i, j);
    }
  }
  return b;
}

Matrix conjugate(const Matrix& a, const Matrix& w) { return w.transposed() * (a * w); }

std::array<BlockTarget, 2> block_targets(KernelOrder ell) {
  const int l = ell.value();
  const int m = l / 2;
  const int s = (m % 2 == 0) ? 1 : -1;  // (-1)^m
  const double half = 0.5;
  if (l % 2 == 0) return {BlockTarget{s, half - m}, BlockTarget{-s, -half - m}};
  return {BlockTarget{-s, -half - m}, BlockTarget{s, -half - m}};
}

namespace {

Matrix scaled_hilbert(const BlockTarget& t, std::size_t n) {
  Matrix h = hilbert_type(t.p, n, false).entries;
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = t.sign / kPi * h(i, j);
  }
  return out;
}

// Rows/columns of the 2n-section at coordinates of the given parities.
Matrix parity_block(const Matrix& s, std::size_t row_parity, std::size_t col_parity) {
  const std::size_t n = s.rows() / 2;
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) b(i, j) = s(2 * i + row_parity, 2 * j + col_parity);
  }
  return b;
}

std::size_t doubled_size(std::size_t n, std::string_view who) {
  if (n == 0 || n > max_matrix_size() / 2) {
    throw SizeError(std::string(who) + ": 2N must lie in [2, " + std::to_string(max_matrix_size()) +
                    "]");
  }
  return 2 * n;
}

}  // namespace

BlockCertificate block_decompose_even(int m, std::size_t n) {
  if (m < 0 || 2 * m > kMaxOrder) throw OrderTooLargeError("block_decompose_even: 2m > max order");
  const KernelOrder ell(2 * m);
  const Matrix s = hankel_truncation(ell, doubled_size(n, "block_decompose_even")).entries;
  const Matrix u_even = interleave_even(n);
  const Matrix u_odd = interleave_odd(n);

  BlockCertificate cert;
  cert.parity = Parity::even;
  cert.m = m;
  cert.size = n;
  cert.blocks = block_targets(ell);
  cert.cross_block_max = std::max((u_even.transposed() * s * u_odd).max_abs(),
                                  (u_odd.transposed() * s * u_even).max_abs());
  const Matrix even_block = conjugate_by_sign_alternation(conjugate(s, u_even));
  const Matrix odd_block = conjugate_by_sign_alternation(conjugate(s, u_odd));
  cert.max_abs_deviation =
      std::max(max_abs_difference(even_block, scaled_hilbert(cert.blocks[0], n)),
               max_abs_difference(odd_block, scaled_hilbert(cert.blocks[1], n)));
  return cert;
}

Matrix block_unitary(KernelOrder ell, std::size_t n) {
  const std::size_t two_n = doubled_size(n, "block_unitary");
  // Columns 0..n-1 pick the even coordinates, n..2n-1 the odd ones.
  Matrix perm(two_n, two_n);
  for (std::size_t k = 0; k < n; ++k) {
    perm(2 * k, k) = 1.0;
    perm(2 * k + 1, n + k) = 1.0;
  }
  Matrix v2(two_n, two_n);
  for (std::size_t k = 0; k < n; ++k) {
    v2(k, k) = parity_sign(k);
    v2(n + k, n + k) = parity_sign(k);
  }
  Matrix w = perm * v2;
  if (ell.value() % 2 == 1) w = w * rotation(n);
  return w;
}

BlockCertificate block_decompose_odd(int m, std::size_t n) {
  if (m < 0 || 2 * m + 1 > kMaxOrder) {
    throw OrderTooLargeError("block_decompose_odd: 2m+1 > max order");
  }
  const KernelOrder ell(2 * m + 1);
  const Matrix s = hankel_truncation(ell, doubled_size(n, "block_decompose_odd")).entries;

  BlockCertificate cert;
  cert.parity = Parity::odd;
  cert.m = m;
  cert.size = n;
  cert.blocks = block_targets(ell);
  cert.cross_block_max = std::max(parity_block(s, 0, 0).max_abs(), parity_block(s, 1, 1).max_abs());

  const Matrix d = conjugate(s, block_unitary(ell, n));
  const double off = std::max(d.block(0, n, n, n).max_abs(), d.block(n, 0, n, n).max_abs());
  cert.max_abs_deviation =
      std::max({max_abs_difference(d.block(0, 0, n, n), scaled_hilbert(cert.blocks[0], n)),
                max_abs_difference(d.block(n, n, n, n), scaled_hilbert(cert.blocks[1], n)), off});
  return cert;
}

BlockCertificate block_decompose(KernelOrder ell, std::size_t n) {
  const int l = ell.value();
  return l % 2 == 0 ? block_decompose_even(l / 2, n) : block_decompose_odd(l / 2, n);
}

std::vector<double> symm_eigen(const Matrix& input, double tol, int max_sweeps) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw NonSymmetricError("symm_eigen: matrix is not square");
  if (n == 0) return {};
  const double scale = input.max_abs();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!std::isfinite(input(i, j)) || std::abs(input(i, j) - input(j, i)) > 1e-12 * scale) {
        throw NonSymmetricError("symm_eigen: matrix is not symmetric");
      }
    }
  }
  Matrix a = input;
  double frob_sq = 0.0;
  for (double v : a.data()) frob_sq += v * v;
  const double target = tol * std::sqrt(frob_sq);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    }
    return std::sqrt(2.0 * s);
  };

  std::vector<double> row_p(n), row_q(n);
  bool converged = off_norm() <= target;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    // Entries this small cannot move the off-diagonal norm past the target.
    const double skip = target / static_cast<double>(n) * 1e-2;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= skip) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        double* rp = &a(p, 0);
        double* rq = &a(q, 0);
        for (std::size_t k = 0; k < n; ++k) {
          const double x = rp[k];
          const double y = rq[k];
          rp[k] = c * x - s * y;
          rq[k] = s * x + c * y;
        }
        for (std::size_t k = 0; k < n; ++k) {
          a(k, p) = rp[k];
          a(k, q) = rq[k];
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    converged = off_norm() <= target;
  }
  if (!converged) {
    throw NonConvergenceError("symm_eigen: no convergence after " + std::to_string(max_sweeps) +
                              " sweeps");
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

double coverage_gap(const std::vector<double>& sorted, double window) {
  std::vector<double> pts{-window};
  for (double e : sorted) {
    if (e > -window && e < window) pts.push_back(e);
  }
  pts.push_back(window);
  double gap = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) gap = std::max(gap, pts[i] - pts[i - 1]);
  return gap;
}

SpectrumReport spectrum_report(KernelOrder ell, std::size_t n) {
  SpectrumReport r;
  r.eigenvalues = symm_eigen(hankel_truncation(ell, n).entries);
  r.min = r.eigenvalues.front();
  r.max = r.eigenvalues.back();
  r.containment_violation = std::max(0.0, std::max(std::abs(r.min), std::abs(r.max)) - 1.0);
  r.coverage_gap = coverage_gap(r.eigenvalues);
  return r;
}

CauchyPivots hilbert_cauchy_pivots(double p, std::size_t n) {
  if (!(p <= 0.5)) throw DomainError("hilbert_cauchy_pivots: p must be <= 1/2");
  check_size(n, "hilbert_cauchy_pivots");
  const double shift = (1.0 - p) / 2.0;
  CauchyPivots out;
  out.log_pivots.resize(n);
  out.positive_definite = true;
  out.min_log10_pivot = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double xk = static_cast<double>(k) + shift;
    double lp = -std::log(2.0 * xk);
    for (std::size_t j = 0; j < k; ++j) {
      const double xj = static_cast<double>(j) + shift;
      lp += 2.0 * (std::log(xk - xj) - std::log(xk + xj));
    }
    out.log_pivots[k] = lp;
    if (!std::isfinite(lp)) out.positive_definite = false;
    out.min_log10_pivot = std::min(out.min_log10_pivot, lp / std::log(10.0));
  }
  return out;
}

}  // namespace hankel::operators

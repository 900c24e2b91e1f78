#pragma once

// Finite sections of the Hankel matrices S_l = [c_{n+k+l+1}] and of the
// Hilbert-type matrices H_p, the coordinate unitaries that block-diagonalize
// them, and a dense symmetric eigensolver.

#include <array>
#include <cstddef>
#include <vector>

#include "hankel/errors.hpp"
#include "hankel/kernels.hpp"

namespace hankel::operators {

using kernels::KernelOrder;

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<double>& data() const noexcept { return data_; }

  Matrix transposed() const;
  /// Sub-block of `rows` x `cols` starting at (r0, c0).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  double max_abs() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// max |a_ij - b_ij|; SizeError on shape mismatch.
double max_abs_difference(const Matrix& a, const Matrix& b);

/// Size cap for every constructed matrix: $HANKEL_SPECTRA_MAX_N or 4096.
std::size_t max_matrix_size();

/// c_k = (2/(pi k)) sin(pi k / 2): 0 for even k, (-1)^{(k-1)/2} 2/(pi k) for odd k.
double fourier_coefficient(long k);

struct HankelTruncation {
  int ell = 0;
  std::size_t size = 0;
  Matrix entries;  // entries(n, k) = c_{n+k+ell+1}
};

HankelTruncation hankel_truncation(KernelOrder ell, std::size_t n);

struct HilbertTypeMatrix {
  double p = 0.5;
  std::size_t size = 0;
  bool alternating = false;
  Matrix entries;  // 1/(1+n+k-p), times (-1)^{n+k} when alternating
};

/// DomainError for p > 1/2.
HilbertTypeMatrix hilbert_type(double p, std::size_t n, bool alternating);

// Coordinate maps. Each returns the matrix of the map in the natural basis.

/// V = diag(1, -1, 1, -1, ...), n x n.
Matrix sign_alternation(std::size_t n);
/// U+ : x -> (x0, 0, x1, 0, ...), a 2n x n isometry onto the even coordinates.
Matrix interleave_even(std::size_t n);
/// U- : x -> (0, x0, 0, x1, ...), a 2n x n isometry onto the odd coordinates.
Matrix interleave_odd(std::size_t n);
/// (1/sqrt 2) [[I, -I], [I, I]], 2n x 2n.
Matrix rotation(std::size_t n);

/// V A V, done by sign flips (exact).
Matrix conjugate_by_sign_alternation(const Matrix& a);
/// W^T A W.
Matrix conjugate(const Matrix& a, const Matrix& w);

enum class Parity { even, odd };

/// One diagonal block of a decomposition: sign/pi * H_p.
struct BlockTarget {
  int sign = 1;
  double p = 0.5;
};

/// Predicted diagonal blocks of S_l: first block, then second block.
std::array<BlockTarget, 2> block_targets(KernelOrder ell);

struct BlockCertificate {
  Parity parity = Parity::even;
  int m = 0;
  std::size_t size = 0;            // size of each block; S_l is 2 size x 2 size
  double max_abs_deviation = 0.0;  // vs. the sign/pi * H_p targets
  double cross_block_max = 0.0;    // largest |entry| of the blocks that must vanish
  std::array<BlockTarget, 2> blocks{};
};

/// l = 2m: S_l splits by parity into the two target blocks; the mixed-parity
/// blocks are exactly zero.
BlockCertificate block_decompose_even(int m, std::size_t n);

/// l = 2m+1: the equal-parity blocks of S_l are exactly zero; after
/// interleaving, V on both halves and the rotation the result is block-diagonal.
BlockCertificate block_decompose_odd(int m, std::size_t n);

/// Parity dispatch on l.
BlockCertificate block_decompose(KernelOrder ell, std::size_t n);

/// The orthogonal W (2n x 2n) with W^T S_l W = blockdiag(targets) for the
/// 2n-section S_l.
Matrix block_unitary(KernelOrder ell, std::size_t n);

/// All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi.
/// Converges when the off-diagonal norm falls below tol * Frobenius norm
/// (tol defaults to 1e-14). NonSymmetricError if |a_ij - a_ji| exceeds
/// 1e-12 * max|a|; NonConvergenceError after max_sweeps sweeps.
std::vector<double> symm_eigen(const Matrix& a, double tol = 1e-14, int max_sweeps = 60);

struct SpectrumReport {
  std::vector<double> eigenvalues;  // ascending
  double min = 0.0;
  double max = 0.0;
  double containment_violation = 0.0;  // max(0, max |eig| - 1)
  double coverage_gap = 0.0;
};

/// Largest gap in [-0.95, 0.95] left uncovered by the eigenvalues; the window
/// ends count as points, so edge gaps are included.
double coverage_gap(const std::vector<double>& sorted_eigenvalues, double window = 0.95);

SpectrumReport spectrum_report(KernelOrder ell, std::size_t n);

/// Positivity of H_p (p < 1) from its Cauchy structure: with x_j = j + (1-p)/2,
/// H_p = [1/(x_j + x_k)] has LDL^T pivots
///   d_k = 1/(2 x_k) prod_{j<k} ((x_k - x_j)/(x_k + x_j))^2,
/// evaluated in log space so that pivots far below the double range are still
/// resolved.
struct CauchyPivots {
  std::vector<double> log_pivots;
  bool positive_definite = false;  // every pivot finite and > 0
  double min_log10_pivot = 0.0;
};

CauchyPivots hilbert_cauchy_pivots(double p, std::size_t n);

}  // namespace hankel::operators

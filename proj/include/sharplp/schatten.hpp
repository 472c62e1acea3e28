#pragma once

// Schatten norms of positive matrices and the trace analogue of the sharpened
// triangle inequality,
//   tr (A+B)^p <= (1 + (tr[B^(p/4) A^(p/2) B^(p/4)] / (tr A^p/2 + tr B^p/2))^(2/p))^(p-1) tr(A^p + B^p),
// proven for p = 2^k.

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "sharplp/doubling.hpp"

namespace sharplp {

using ComplexMatrix = Eigen::MatrixXcd;

class PSDMatrix {
 public:
  /// Validates Hermitian symmetry (1e-12 relative) and the spectrum
  /// (min eigenvalue >= -1e-10 spectral norm); small negative eigenvalues are clamped to 0.
  explicit PSDMatrix(const ComplexMatrix& m);

  static PSDMatrix identity(Eigen::Index dim);
  static PSDMatrix diagonal(const std::vector<double>& entries);

  Eigen::Index dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Eigen::VectorXd& eigenvalues() const noexcept { return eigenvalues_; }
  double spectral_norm() const;

  /// A^s through the spectral decomposition, s > 0.
  ComplexMatrix power(double s) const;
  /// tr A^s = sum of eigenvalue^s.
  double trace_power(double s) const;

  PSDMatrix scaled(double lambda) const;
  friend PSDMatrix operator+(const PSDMatrix& a, const PSDMatrix& b);

 private:
  ComplexMatrix matrix_;
  ComplexMatrix eigenvectors_;
  Eigen::VectorXd eigenvalues_;
};

/// G G* with G filled from a seeded standard complex normal stream; dim in [1, 64].
PSDMatrix random_psd(int dim, std::uint64_t seed);

/// (sum eigenvalue^p)^(1/p), p >= 1.
double schatten_norm(const PSDMatrix& a, double p);

/// Schatten p-norm of an arbitrary square matrix through its singular values.
double schatten_norm(const ComplexMatrix& m, double p);

/// tr[B^(p/4) A^(p/2) B^(p/4)] with its imaginary residue.
std::complex<double> mixed_trace_complex(const PSDMatrix& a, const PSDMatrix& b, double p);

/// Real part of mixed_trace_complex; throws DomainError if the residue exceeds 1e-10 relative.
double mixed_trace(const PSDMatrix& a, const PSDMatrix& b, double p);

bool is_power_of_two_exponent(double p);

struct SchattenReport {
  double p = 0;
  double lhs = 0;
  double rhs = 0;
  double mixed = 0;
  double gamma_tilde = 0;
  bool satisfied = false;
  double slack = 0;
  /// Set when p is not a power of two and the evaluation was requested anyway.
  bool conjectural = false;
};

/// Both sides of the trace inequality. p must be 2^k, k >= 1, unless
/// allow_conjectural is set (then any p >= 1, and the report is labelled).
SchattenReport schatten_verify(const PSDMatrix& a, const PSDMatrix& b, double p, bool allow_conjectural = false);

struct LiebThirring {
  double lhs = 0;  // ||AB||_p^p = tr[(B A^2 B)^(p/2)]
  double rhs = 0;  // tr[B^(p/2) A^p B^(p/2)]
  bool holds = false;
};

LiebThirring lieb_thirring_check(const PSDMatrix& a, const PSDMatrix& b, double p);

struct SchattenDoublingReport {
  double p = 0;
  double scale = 0;  // normalises tr A^(2p) + tr B^(2p) to 2
  double gamma = 0;  // tr[B^(p/2) A^p B^(p/2)]^(1/p) after scaling
  double lhs = 0;    // ||A+B||_(2p)^2 after scaling
  double final_bound = 0;
  std::vector<ChainLink> links;
  bool all_hold = false;
};

/// The chain proving the trace inequality at 2p from the one at p.
SchattenDoublingReport schatten_doubling(const PSDMatrix& a, const PSDMatrix& b, double p);

}  // namespace sharplp

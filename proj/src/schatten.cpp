#include "sharplp/schatten.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sharplp/errors.hpp"
#include "sharplp/inequality.hpp"

namespace sharplp {

PSDMatrix::PSDMatrix(const ComplexMatrix& m) {
  require(m.rows() == m.cols() && m.rows() >= 1, Errc::NotPSD, "matrix must be square and nonempty");
  const double norm = m.norm();
  const double asym = (m - m.adjoint()).norm();
  require(asym <= 1e-12 * std::max(norm, 1e-300), Errc::NotPSD, "matrix is not Hermitian");
  matrix_ = 0.5 * (m + m.adjoint());

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(matrix_);
  require(es.info() == Eigen::Success, Errc::NotPSD, "eigendecomposition failed");
  eigenvalues_ = es.eigenvalues();
  eigenvectors_ = es.eigenvectors();
  const double top = eigenvalues_.cwiseAbs().maxCoeff();
  const double lowest = eigenvalues_.minCoeff();
  require(lowest >= -1e-10 * top, Errc::NotPSD, "matrix has a negative eigenvalue " + std::to_string(lowest));
  eigenvalues_ = eigenvalues_.cwiseMax(0.0);
}

PSDMatrix PSDMatrix::identity(Eigen::Index dim) { return PSDMatrix(ComplexMatrix::Identity(dim, dim)); }

PSDMatrix PSDMatrix::diagonal(const std::vector<double>& entries) {
  ComplexMatrix m = ComplexMatrix::Zero(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return PSDMatrix(m);
}

double PSDMatrix::spectral_norm() const { return eigenvalues_.maxCoeff(); }

ComplexMatrix PSDMatrix::power(double s) const {
  require(s > 0, Errc::OutOfDomain, "matrix powers need s > 0");
  Eigen::VectorXd d(eigenvalues_.size());
  for (Eigen::Index i = 0; i < d.size(); ++i) d(i) = eigenvalues_(i) > 0 ? std::pow(eigenvalues_(i), s) : 0.0;
  return eigenvectors_ * d.asDiagonal() * eigenvectors_.adjoint();
}

double PSDMatrix::trace_power(double s) const {
  require(s > 0, Errc::OutOfDomain, "trace powers need s > 0");
  double acc = 0;
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    if (eigenvalues_(i) > 0) acc += std::pow(eigenvalues_(i), s);
  }
  return acc;
}

PSDMatrix PSDMatrix::scaled(double lambda) const {
  require(lambda >= 0, Errc::NotPSD, "negative multiples are not positive");
  return PSDMatrix(lambda * matrix_);
}

PSDMatrix operator+(const PSDMatrix& a, const PSDMatrix& b) {
  require(a.dim() == b.dim(), Errc::MisalignedFunction, "matrix dimensions differ");
  return PSDMatrix(a.matrix_ + b.matrix_);
}

PSDMatrix random_psd(int dim, std::uint64_t seed) {
  require(dim >= 1 && dim <= 64, Errc::DimOutOfRange, "dim must lie in [1, 64]");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < dim; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = {re, im};
    }
  }
  return PSDMatrix(g * g.adjoint());
}

double schatten_norm(const PSDMatrix& a, double p) {
  require(p >= 1, Errc::ExponentOutOfRange, "Schatten norms need p >= 1");
  return std::pow(a.trace_power(p), 1 / p);
}

double schatten_norm(const ComplexMatrix& m, double p) {
  require(p >= 1, Errc::ExponentOutOfRange, "Schatten norms need p >= 1");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  double acc = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) acc += std::pow(svd.singularValues()(i), p);
  return std::pow(acc, 1 / p);
}

std::complex<double> mixed_trace_complex(const PSDMatrix& a, const PSDMatrix& b, double p) {
  require(a.dim() == b.dim(), Errc::MisalignedFunction, "matrix dimensions differ");
  require(p > 0, Errc::ExponentOutOfRange, "mixed trace needs p > 0");
  const ComplexMatrix bq = b.power(p / 4);
  return (bq * a.power(p / 2) * bq).trace();
}

double mixed_trace(const PSDMatrix& a, const PSDMatrix& b, double p) {
  const std::complex<double> z = mixed_trace_complex(a, b, p);
  const double scale = std::sqrt(a.trace_power(p) * b.trace_power(p));
  require(std::abs(z.imag()) <= 1e-10 * std::max({std::abs(z.real()), scale, 1e-300}), Errc::DomainError,
          "trace of a Hermitian product has an imaginary part");
  require(z.real() >= -1e-12 * std::max(scale, 1e-300), Errc::DomainError, "mixed trace is negative");
  return std::max(z.real(), 0.0);
}

bool is_power_of_two_exponent(double p) {
  if (!(p >= 2) || !std::isfinite(p)) return false;
  int e = 0;
  const double m = std::frexp(p, &e);
  return m == 0.5;
}

SchattenReport schatten_verify(const PSDMatrix& a, const PSDMatrix& b, double p, bool allow_conjectural) {
  const bool dyadic = is_power_of_two_exponent(p);
  if (!dyadic) {
    require(allow_conjectural, Errc::UnsupportedExponent, "the trace inequality is proven only for p = 2^k");
    require(p >= 1, Errc::ExponentOutOfRange, "exploratory evaluation needs p >= 1");
  }
  require(a.dim() == b.dim(), Errc::MisalignedFunction, "matrix dimensions differ");
  const double s = a.trace_power(p) + b.trace_power(p);
  require(s > 0, Errc::ZeroPair, "A and B both vanish");

  SchattenReport rep;
  rep.p = p;
  rep.conjectural = !dyadic;
  rep.lhs = (a + b).trace_power(p);
  rep.mixed = mixed_trace(a, b, p);
  rep.gamma_tilde = std::pow(rep.mixed / (s / 2), 2 / p);
  rep.rhs = std::pow(1 + rep.gamma_tilde, p - 1) * s;
  rep.slack = rep.rhs - rep.lhs;
  rep.satisfied = rep.slack >= -kInequalitySlack * std::max(rep.lhs, rep.rhs);
  return rep;
}

LiebThirring lieb_thirring_check(const PSDMatrix& a, const PSDMatrix& b, double p) {
  require(p >= 1, Errc::ExponentOutOfRange, "the Lieb-Thirring step needs p >= 1");
  require(a.dim() == b.dim(), Errc::MisalignedFunction, "matrix dimensions differ");
  const ComplexMatrix a2 = a.matrix() * a.matrix();
  const PSDMatrix bab(b.matrix() * a2 * b.matrix());
  LiebThirring lt;
  lt.lhs = bab.trace_power(p / 2);
  lt.rhs = mixed_trace(a, b, 2 * p);
  lt.holds = lt.lhs <= lt.rhs * (1 + kInequalitySlack) + 1e-300;
  return lt;
}

SchattenDoublingReport schatten_doubling(const PSDMatrix& a, const PSDMatrix& b, double p) {
  require(is_power_of_two_exponent(p), Errc::UnsupportedExponent, "the doubling chain runs from p = 2^k");
  require(a.dim() == b.dim(), Errc::MisalignedFunction, "matrix dimensions differ");
  const double q = 2 * p;
  const double s = a.trace_power(q) + b.trace_power(q);
  require(s > 0, Errc::ZeroPair, "A and B both vanish");

  SchattenDoublingReport rep;
  rep.p = p;
  rep.scale = std::pow(2 / s, 1 / q);
  const PSDMatrix as = a.scaled(rep.scale);
  const PSDMatrix bs = b.scaled(rep.scale);
  const ComplexMatrix ab = as.matrix() * bs.matrix();
  const ComplexMatrix x = 0.5 * (ab + ab.adjoint());
  const PSDMatrix a2(as.matrix() * as.matrix());
  const PSDMatrix b2(bs.matrix() * bs.matrix());
  const PSDMatrix y = a2 + b2;

  const double norm_x = schatten_norm(x, p);
  const double norm_y = schatten_norm(y, p);
  const double norm_ab = schatten_norm(ab, p);
  const double norm_ba = schatten_norm(ComplexMatrix(bs.matrix() * as.matrix()), p);
  const LiebThirring lt = lieb_thirring_check(as, bs, p);
  rep.gamma = std::pow(lt.rhs, 1 / p);
  rep.lhs = std::pow(schatten_norm(as + bs, q), 2);
  const double two_root = std::pow(2.0, 1 / p);
  const double level_p = two_root * std::pow(1 + rep.gamma * rep.gamma, 1 - 1 / p);
  rep.final_bound = two_root * std::pow(1 + rep.gamma, 2 - 1 / p);

  rep.links.push_back(make_link("triangle", rep.lhs, norm_y + 2 * norm_x));
  rep.links.push_back(make_link("symmetrised_product", norm_x, 0.5 * (norm_ab + norm_ba)));
  rep.links.push_back(make_link("lieb_thirring", lt.lhs, lt.rhs));
  const SchattenReport level = schatten_verify(a2, b2, p);
  rep.links.push_back(make_link("level_p", level.lhs, level.rhs));
  rep.links.push_back(make_link("psi", level_p + 2 * rep.gamma, rep.final_bound));
  rep.all_hold = std::all_of(rep.links.begin(), rep.links.end(), [](const ChainLink& l) { return l.holds; });
  return rep;
}

}  // namespace sharplp

#ifndef LIECHAN_MATCORE_HPP
#define LIECHAN_MATCORE_HPP

// Dense complex matrix kernel. Storage and products go through Eigen; every
// routine here validates shapes and throws liechan::Error on violation.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "liechan/error.hpp"

namespace liechan {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

namespace tol {
inline constexpr double kHermitian = 1e-10;
inline constexpr double kTrace = 1e-10;
inline constexpr double kPositive = 1e-10;
inline constexpr double kEigenInput = 1e-8;
inline constexpr double kEigenResidual = 1e-9;
}  // namespace tol

inline ComplexMatrix identity(Eigen::Index d) { return ComplexMatrix::Identity(d, d); }

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline bool is_finite(const ComplexMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const Complex z = m.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

inline void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " must be a non-empty square matrix, got " +
                    std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  if (!is_finite(m)) throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
}

inline void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square(a, "left operand");
  require_square(b, "right operand");
  if (a.rows() != b.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "dimension " + std::to_string(a.rows()) + " vs " + std::to_string(b.rows()));
}

inline ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a * b;
}

inline Complex trace(const ComplexMatrix& m) {
  require_square(m, "trace argument");
  return m.trace();
}

inline ComplexMatrix dagger(const ComplexMatrix& m) { return m.adjoint(); }

inline ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a * b - b * a;
}

inline ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return a * b + b * a;
}

/// Hilbert-Schmidt inner product tr(a^dagger b).
inline Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b);
  return (a.adjoint() * b).trace();
}

inline double hermiticity_defect(const ComplexMatrix& m) { return max_abs(m - m.adjoint()); }

inline bool is_hermitian(const ComplexMatrix& m, double tolerance = tol::kHermitian) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tolerance;
}

/// Traceless part m - tr(m)/d I.
inline ComplexMatrix traceless_part(const ComplexMatrix& m) {
  require_square(m, "matrix");
  return m - (m.trace() / static_cast<double>(m.rows())) * identity(m.rows());
}

struct HermitianEigen {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // columns, same order as values
};

/// Spectral decomposition of a Hermitian matrix. The reconstruction residual
/// is checked against tol::kEigenResidual (relative to the entry scale).
inline HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  require_square(m, "eigenvalue argument");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_defect(m) > tol::kEigenInput * scale)
    throw Error(ErrorKind::NotHermitian,
                "hermiticity defect " + std::to_string(hermiticity_defect(m)));
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::ConvergenceFailure, "self-adjoint eigensolver did not converge");
  HermitianEigen out{solver.eigenvalues(), solver.eigenvectors()};
  const ComplexMatrix rebuilt =
      out.vectors * out.values.cast<Complex>().asDiagonal() * out.vectors.adjoint();
  const double residual = max_abs(sym - rebuilt);
  if (residual > tol::kEigenResidual * scale)
    throw Error(ErrorKind::ConvergenceFailure,
                "reconstruction residual " + std::to_string(residual));
  return out;
}

inline RealVector hermitian_eigenvalues(const ComplexMatrix& m) { return hermitian_eigen(m).values; }

inline double min_eigenvalue(const ComplexMatrix& m) { return hermitian_eigenvalues(m)(0); }

namespace detail {

inline bool lex_less(const ComplexMatrix& a, const ComplexMatrix& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    const Complex x = a.data()[i];
    const Complex y = b.data()[i];
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace detail

/// Symmetrized product (1/n!) sum over orderings of m_1 ... m_n.
///
/// The ordered products are summed in a canonical (lexicographic) order, so
/// the result is bit-identical under any permutation of the input list.
inline ComplexMatrix sym_product(std::span<const ComplexMatrix> mats) {
  if (mats.empty()) throw Error(ErrorKind::InvalidArgument, "sym_product needs at least one matrix");
  for (const auto& m : mats) require_same_dim(mats.front(), m);
  if (mats.size() == 1) return mats.front();

  std::vector<std::size_t> order(mats.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<ComplexMatrix> terms;
  do {
    ComplexMatrix prod = mats[order[0]];
    for (std::size_t i = 1; i < order.size(); ++i) prod = prod * mats[order[i]];
    terms.push_back(std::move(prod));
  } while (std::next_permutation(order.begin(), order.end()));

  std::sort(terms.begin(), terms.end(), detail::lex_less);
  ComplexMatrix sum = ComplexMatrix::Zero(mats.front().rows(), mats.front().cols());
  for (const auto& t : terms) sum += t;
  return sum / static_cast<double>(terms.size());
}

inline ComplexMatrix sym_product(std::initializer_list<ComplexMatrix> mats) {
  const std::vector<ComplexMatrix> v(mats);
  return sym_product(std::span<const ComplexMatrix>(v));
}

/// Newton recursion a_k = (1/k) sum_{q=1..k} (-1)^{q-1} c_q a_{k-q} with a_0 = 1,
/// from power sums c_q. The a_k are the signed coefficients of the monic
/// polynomial prod (x - x_i) = sum_j (-1)^j a_j x^{d-j}.
inline std::vector<double> newton_coefficients(std::span<const double> power_sums) {
  const std::size_t d = power_sums.size();
  std::vector<double> a(d + 1, 0.0);
  a[0] = 1.0;
  for (std::size_t k = 1; k <= d; ++k) {
    double acc = 0.0;
    for (std::size_t q = 1; q <= k; ++q) {
      const double sign = (q % 2 == 1) ? 1.0 : -1.0;
      acc += sign * power_sums[q - 1] * a[k - q];
    }
    a[k] = acc / static_cast<double>(k);
  }
  return a;
}

/// Characteristic-polynomial coefficients a_0..a_d of a Hermitian matrix,
/// computed from the power traces tr(m^q).
inline std::vector<double> char_poly_coeffs(const ComplexMatrix& m) {
  require_square(m, "char_poly argument");
  if (hermiticity_defect(m) > tol::kEigenInput * std::max(1.0, max_abs(m)))
    throw Error(ErrorKind::NotHermitian, "char_poly_coeffs requires a Hermitian matrix");
  const auto d = static_cast<std::size_t>(m.rows());
  std::vector<double> c(d);
  ComplexMatrix power = m;
  for (std::size_t q = 0; q < d; ++q) {
    c[q] = power.trace().real();
    if (q + 1 < d) power = power * m;
  }
  return newton_coefficients(c);
}

/// Hermitian, unit-trace, positive-semidefinite matrix. Construction
/// validates all three invariants.
class DensityMatrix {
 public:
  static DensityMatrix from(ComplexMatrix m) {
    require_square(m, "density matrix");
    const double herm = hermiticity_defect(m);
    if (herm > tol::kHermitian)
      throw Error(ErrorKind::NotDensityMatrix, "not Hermitian (defect " + std::to_string(herm) + ")");
    const Complex tr = m.trace();
    if (std::abs(tr - 1.0) > tol::kTrace)
      throw Error(ErrorKind::NotDensityMatrix, "trace " + std::to_string(tr.real()) + " != 1");
    const double lo = min_eigenvalue(m);
    if (lo < -tol::kPositive)
      throw Error(ErrorKind::NotDensityMatrix, "min eigenvalue " + std::to_string(lo) + " < 0");
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix maximally_mixed(Eigen::Index d) {
    return DensityMatrix(identity(d) / static_cast<double>(d));
  }

  const ComplexMatrix& mat() const noexcept { return mat_; }
  Eigen::Index dim() const noexcept { return mat_.rows(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : mat_(std::move(m)) {}
  ComplexMatrix mat_;
};

/// Von Neumann entropy -sum x ln x with 0 ln 0 = 0; tiny negative
/// eigenvalues from rounding are clamped to zero.
inline double von_neumann_entropy(const ComplexMatrix& rho) {
  const RealVector ev = hermitian_eigenvalues(rho);
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > 0.0) s -= ev(i) * std::log(ev(i));
  return s;
}

/// Schatten q-norm (tr |m|^q)^{1/q} of a Hermitian matrix.
inline double schatten_norm(const ComplexMatrix& m, double q) {
  if (!(q >= 1.0)) throw Error(ErrorKind::InvalidArgument, "Schatten norm needs q >= 1");
  const RealVector ev = hermitian_eigenvalues(m);
  double acc = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) acc += std::pow(std::abs(ev(i)), q);
  return std::pow(acc, 1.0 / q);
}

}  // namespace liechan

#endif

#ifndef LIECHAN_OCTONION_HPP
#define LIECHAN_OCTONION_HPP

// Octonions and the 7-dimensional representation of g2 as the derivation
// algebra of the octonions, acting on the imaginary octonions.

#include <array>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "liechan/repgen.hpp"

namespace liechan {

namespace detail {

// e_i e_j = sign * e_k stored as sign * (k + 1). Quaternionic lines
// (e_a e_b = e_c): 123, 145, 176, 246, 257, 347, 365.
inline constexpr int kOctonionProduct[8][8] = {
    {+1, +2, +3, +4, +5, +6, +7, +8},
    {+2, -1, +4, -3, +6, -5, -8, +7},
    {+3, -4, -1, +2, +7, +8, -5, -6},
    {+4, +3, -2, -1, +8, -7, +6, -5},
    {+5, -6, -7, -8, -1, +2, +3, +4},
    {+6, +5, -8, +7, -2, -1, -4, +3},
    {+7, +8, +5, -6, -3, +4, -1, -2},
    {+8, -7, +6, +5, -4, -3, +2, -1},
};

}  // namespace detail

using Octonion = std::array<double, 8>;
using OctonionTable = std::array<std::array<std::array<double, 8>, 8>, 8>;

/// Structure array c with e_i e_j = sum_k c[i][j][k] e_k; e_0 is the unit.
inline OctonionTable octonion_table() {
  OctonionTable c{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int code = detail::kOctonionProduct[i][j];
      c[i][j][std::abs(code) - 1] = code > 0 ? 1.0 : -1.0;
    }
  return c;
}

inline Octonion octonion_basis(int i) {
  Octonion e{};
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

inline Octonion oct_mul(const Octonion& x, const Octonion& y) {
  Octonion out{};
  for (int i = 0; i < 8; ++i) {
    if (x[i] == 0.0) continue;
    for (int j = 0; j < 8; ++j) {
      if (y[j] == 0.0) continue;
      const int code = detail::kOctonionProduct[i][j];
      out[std::abs(code) - 1] += (code > 0 ? 1.0 : -1.0) * x[i] * y[j];
    }
  }
  return out;
}

inline Octonion oct_add(Octonion x, const Octonion& y, double scale = 1.0) {
  for (int i = 0; i < 8; ++i) x[i] += scale * y[i];
  return x;
}

inline Octonion oct_commutator(const Octonion& x, const Octonion& y) {
  return oct_add(oct_mul(x, y), oct_mul(y, x), -1.0);
}

/// Associator [x, y, z] = (xy)z - x(yz).
inline Octonion oct_associator(const Octonion& x, const Octonion& y, const Octonion& z) {
  return oct_add(oct_mul(oct_mul(x, y), z), oct_mul(x, oct_mul(y, z)), -1.0);
}

/// D(x, y) a = [[x, y], a] - 3 [x, y, a].
inline Octonion oct_derivation(const Octonion& x, const Octonion& y, const Octonion& a) {
  return oct_add(oct_commutator(oct_commutator(x, y), a), oct_associator(x, y, a), -3.0);
}

/// Real 8x8 matrix of D(e_i, e_j) acting on the full octonion basis.
inline RealMatrix derivation_matrix(int i, int j) {
  RealMatrix m = RealMatrix::Zero(8, 8);
  for (int a = 0; a < 8; ++a) {
    const Octonion image = oct_derivation(octonion_basis(i), octonion_basis(j), octonion_basis(a));
    for (int b = 0; b < 8; ++b) m(b, a) = image[b];
  }
  return m;
}

/// Largest violation of D(ab) = D(a)b + aD(b) over all basis pairs.
inline double leibniz_defect(const RealMatrix& d) {
  auto apply = [&](const Octonion& x) {
    Octonion out{};
    for (int b = 0; b < 8; ++b)
      for (int a = 0; a < 8; ++a) out[b] += d(b, a) * x[a];
    return out;
  };
  double worst = 0.0;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const Octonion ea = octonion_basis(a), eb = octonion_basis(b);
      const Octonion lhs = apply(oct_mul(ea, eb));
      const Octonion rhs = oct_add(oct_mul(apply(ea), eb), oct_mul(ea, apply(eb)));
      for (int k = 0; k < 8; ++k) worst = std::max(worst, std::abs(lhs[k] - rhs[k]));
    }
  return worst;
}

/// Worst residual of fitting each [b_a, b_b] by least squares in span{b_i}.
inline double closure_residual(const GeneratorSet& g) {
  const auto d2 = g.dim() * g.dim();
  const auto k = static_cast<Eigen::Index>(g.count());
  ComplexMatrix basis(d2, k);
  for (Eigen::Index i = 0; i < k; ++i)
    basis.col(i) = Eigen::Map<const ComplexVector>(g[static_cast<std::size_t>(i)].data(), d2);
  const auto qr = basis.colPivHouseholderQr();
  double worst = 0.0;
  for (std::size_t a = 0; a < g.count(); ++a)
    for (std::size_t b = a + 1; b < g.count(); ++b) {
      const ComplexMatrix c = g[a] * g[b] - g[b] * g[a];
      const ComplexVector rhs = Eigen::Map<const ComplexVector>(c.data(), d2);
      const ComplexVector coef = qr.solve(rhs);
      worst = std::max(worst, (basis * coef - rhs).cwiseAbs().maxCoeff());
    }
  return worst;
}

/// Fourteen Hermitian 7x7 generators of g2 on Im(O), orthonormal for the
/// trace form: tr(b_a b_b) = delta_ab / 2 and sum b_i^2 = I_7.
///
/// With d_ij = D(e_i, e_j) / 2 restricted to e_1..e_7, the basis is
/// m_i = d_{1,i+1} (i = 1..6) and
///   h1 = d12 + 2 d47, h2 = d13 - 2 d46, h3 = d14 - 2 d27, h4 = d15 + 2 d26,
///   h5 = d16 - 2 d25, h6 = d17 + 2 d24, h7 = sqrt3 d23, h8 = d23 + 2 d45,
/// scaled as b = (i / sqrt24) ({m} u {h / sqrt3}).
inline GeneratorSet g2_rep() {
  auto d = [](int i, int j) -> RealMatrix {
    const RealMatrix full = derivation_matrix(i, j);
    if (leibniz_defect(full) > 1e-12)
      throw Error(ErrorKind::ConstructionFailure,
                  "D(e" + std::to_string(i) + ", e" + std::to_string(j) + ") is not a derivation");
    if (full.row(0).cwiseAbs().maxCoeff() > 0.0 || full.col(0).cwiseAbs().maxCoeff() > 0.0)
      throw Error(ErrorKind::ConstructionFailure, "derivation does not preserve Im(O)");
    return 0.5 * full.block(1, 1, 7, 7);
  };

  std::vector<RealMatrix> m;
  for (int i = 2; i <= 7; ++i) m.push_back(d(1, i));
  const double r3 = std::sqrt(3.0);
  const std::vector<RealMatrix> h = {
      d(1, 2) + 2.0 * d(4, 7), d(1, 3) - 2.0 * d(4, 6), d(1, 4) - 2.0 * d(2, 7), d(1, 5) + 2.0 * d(2, 6),
      d(1, 6) - 2.0 * d(2, 5), d(1, 7) + 2.0 * d(2, 4), r3 * d(2, 3),           d(2, 3) + 2.0 * d(4, 5),
  };

  const Complex scale = kI / std::sqrt(24.0);
  std::vector<ComplexMatrix> gens;
  for (const auto& x : m) gens.push_back(scale * x.cast<Complex>());
  for (const auto& x : h) gens.push_back((scale / r3) * x.cast<Complex>());
  for (const auto& x : gens)
    if (hermiticity_defect(x) > tol::kGenerator)
      throw Error(ErrorKind::ConstructionFailure, "scaled derivation is not Hermitian");

  GeneratorSet g = GeneratorSet::make(AlgebraTag::G2Fundamental, 0, std::move(gens));
  const double closure = closure_residual(g);
  if (closure > 1e-8)
    throw Error(ErrorKind::ConstructionFailure, "g2 basis does not close under commutators (residual " +
                                                    std::to_string(closure) + ")");
  return g;
}

}  // namespace liechan

#endif

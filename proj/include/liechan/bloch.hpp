#ifndef LIECHAN_BLOCH_HPP
#define LIECHAN_BLOCH_HPP

// Generalized Bloch parameterizations: membership oracles for the Bloch
// manifold, the su(3) closed form, Cartan polytopes, spin (v, w) coordinates,
// decomposition into symmetrized-monomial sectors, and pure-state families.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "liechan/channel.hpp"
#include "liechan/matcore.hpp"
#include "liechan/polynomial.hpp"
#include "liechan/repgen.hpp"
#include "liechan/rng.hpp"
#include "liechan/tensor.hpp"

namespace liechan {

namespace tol {
inline constexpr double kMembership = 1e-10;
inline constexpr double kSpan = 1e-8;
inline constexpr double kDependent = 1e-10;
inline constexpr double kPure = 1e-9;
}  // namespace tol

// -- Bloch vectors ------------------------------------------------------------

/// (1/d)(I + sum v_i X_i). Hermitian with unit trace; not necessarily positive.
inline ComplexMatrix bloch_rho(const GeneratorSet& g, const RealVector& v) {
  const auto d = g.dim();
  return (identity(d) + linear_combination(g, v)) / static_cast<double>(d);
}

/// Coefficients v with rho = (1/d)(I + v.X), by trace projection.
inline RealVector bloch_vector(const GeneratorSet& g, const ComplexMatrix& rho) {
  const double nd = trace_form_N(g) * static_cast<double>(g.dim());
  RealVector v(static_cast<Eigen::Index>(g.count()));
  for (std::size_t i = 0; i < g.count(); ++i)
    v(static_cast<Eigen::Index>(i)) = static_cast<double>(g.dim()) * (rho * g[i]).trace().real() / nd;
  return v;
}

inline bool membership_eig(const GeneratorSet& g, const RealVector& v) {
  return min_eigenvalue(bloch_rho(g, v)) >= -tol::kMembership;
}

/// Positivity through the signs of the characteristic-polynomial
/// coefficients (all roots real, so all a_j >= 0 iff all roots >= 0).
inline bool membership_charpoly(const GeneratorSet& g, const RealVector& v) {
  for (double a : char_poly_coeffs(bloch_rho(g, v)))
    if (a < -tol::kMembership) return false;
  return true;
}

/// (d - 1) / N: every valid Bloch vector has v^2 at most this.
inline double norm_bound(const GeneratorSet& g) {
  return (static_cast<double>(g.dim()) - 1.0) / trace_form_N(g);
}

/// Random vector uniform in the ball of radius sqrt((d - 1) / N).
inline RealVector sample_bloch_vector(const GeneratorSet& g, rng::Engine& gen) {
  return rng::in_ball(gen, static_cast<Eigen::Index>(g.count()), std::sqrt(norm_bound(g)));
}

// -- su(3) closed form ------------------------------------------------------

/// (2/3) d_ijk v_i v_j v_k, equal to det(v.lambda) for su(3).
inline double su3_cubic_invariant(const RealVector& v) {
  static const StructureTensors st = structure_tensors(3);
  if (v.size() != 8) throw Error(ErrorKind::DimensionMismatch, "su(3) Bloch vectors have 8 components");
  double acc = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      for (int k = 0; k < 8; ++k) acc += st.d_sym(i, j, k) * v(i) * v(j) * v(k);
  return 2.0 * acc / 3.0;
}

/// v^2 <= min(3, 1 + det(v.lambda)).
inline bool su3_membership_closed(const RealVector& v) {
  const double v2 = v.squaredNorm();
  return v2 <= std::min(3.0, 1.0 + su3_cubic_invariant(v));
}

// -- Cartan polytope --------------------------------------------------------

/// Indices of generators that are diagonal in the given basis.
inline std::vector<std::size_t> diagonal_slots(const GeneratorSet& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.count(); ++i) {
    const ComplexMatrix off = g[i] - ComplexMatrix(g[i].diagonal().asDiagonal());
    if (max_abs(off) <= tol::kGenerator) out.push_back(i);
  }
  return out;
}

inline RealVector embed_cartan(const GeneratorSet& g, const std::vector<std::size_t>& slots,
                               const RealVector& v_cartan) {
  if (static_cast<std::size_t>(v_cartan.size()) != slots.size())
    throw Error(ErrorKind::DimensionMismatch, "Cartan vector length differs from slot count");
  RealVector v = RealVector::Zero(static_cast<Eigen::Index>(g.count()));
  for (std::size_t i = 0; i < slots.size(); ++i) v(static_cast<Eigen::Index>(slots[i])) = v_cartan(static_cast<Eigen::Index>(i));
  return v;
}

/// v . h^j >= -1 for every weight h^j (the diagonals of the Cartan slots).
inline bool cartan_polytope_membership(const GeneratorSet& g, const RealVector& v_cartan,
                                       std::vector<std::size_t> slots = {}) {
  if (slots.empty()) slots = diagonal_slots(g);
  if (slots.empty()) throw Error(ErrorKind::InvalidArgument, "no diagonal generators in this basis");
  for (auto s : slots) {
    if (s >= g.count()) throw Error(ErrorKind::InvalidArgument, "Cartan slot out of range");
    const ComplexMatrix off = g[s] - ComplexMatrix(g[s].diagonal().asDiagonal());
    if (max_abs(off) > tol::kGenerator)
      throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(s) + " is not diagonal");
  }
  if (static_cast<std::size_t>(v_cartan.size()) != slots.size())
    throw Error(ErrorKind::DimensionMismatch, "Cartan vector length differs from slot count");
  for (Eigen::Index j = 0; j < g.dim(); ++j) {
    double dot = 0.0;
    for (std::size_t i = 0; i < slots.size(); ++i) dot += v_cartan(static_cast<Eigen::Index>(i)) * g[slots[i]](j, j).real();
    if (dot < -1.0 - tol::kMembership) return false;
  }
  return true;
}

// -- spin (v, w) coordinates ------------------------------------------------

/// v.J + sum w_ab J_(a J_b), without the trace check.
inline ComplexMatrix vw_matrix(const GeneratorSet& j, const Eigen::Vector3d& v, const Eigen::Matrix3d& w) {
  if (j.count() != 3) throw Error(ErrorKind::DimensionMismatch, "(v, w) form needs three generators");
  ComplexMatrix rho = ComplexMatrix::Zero(j.dim(), j.dim());
  for (std::size_t a = 0; a < 3; ++a) {
    rho += v(static_cast<Eigen::Index>(a)) * j[a];
    for (std::size_t b = 0; b < 3; ++b)
      rho += w(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) * 0.5 * (j[a] * j[b] + j[b] * j[a]);
  }
  return rho;
}

inline ComplexMatrix rho_vw(int two_s, const Eigen::Vector3d& v, const Eigen::Matrix3d& w) {
  require_spin_trace(two_s, w);
  return vw_matrix(spin_rep(two_s), v, w);
}

/// Inverts rho_vw: v_a = (3/(d lambda)) tr(rho J_a) and
/// w_jk = tr(rho J_(j J_k)) / f1 - (f2 / f1) tr(w) delta_jk with
/// f1 = lambda d (d^2 - 4) / 30, f2 = lambda d (1 + 2 lambda) / 30.
/// Spin 1/2 is excluded: J_(a J_b) is a multiple of I there, so w is not
/// determined by rho.
inline VW extract_vw(const ComplexMatrix& rho, int two_s) {
  if (two_s < 2) throw Error(ErrorKind::InvalidArgument, "w is not recoverable for spin 1/2");
  const GeneratorSet j = spin_rep(two_s);
  require_square(rho, "density matrix");
  if (rho.rows() != j.dim()) throw Error(ErrorKind::DimensionMismatch, "dimension does not match spin");
  const double d = j.dim();
  const double lambda = spin_lambda(two_s);
  const double f1 = lambda * d * (d * d - 4.0) / 30.0;
  const double f2 = lambda * d * (1.0 + 2.0 * lambda) / 30.0;
  const double trw = 3.0 * rho.trace().real() / (d * lambda);
  VW out;
  for (int a = 0; a < 3; ++a) out.v(a) = 3.0 / (d * lambda) * (rho * j[a]).trace().real();
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      const ComplexMatrix jab = 0.5 * (j[a] * j[b] + j[b] * j[a]);
      out.w(a, b) = (rho * jab).trace().real() / f1 - (a == b ? f2 / f1 * trw : 0.0);
    }
  const double residual = max_abs(rho - vw_matrix(j, out.v, out.w));
  if (residual > tol::kSpan)
    throw Error(ErrorKind::SpanDeficient,
                "rho is not in span{J_a, J_(a J_b)} (residual " + std::to_string(residual) + ")");
  return out;
}

// -- sector decomposition ---------------------------------------------------

struct BlochState {
  enum class Form { Bloch, VW, Sectors };

  Form form = Form::Sectors;
  AlgebraTag tag = AlgebraTag::Custom;
  int param = 0;
  Eigen::Index dim = 0;
  /// Rank-r coefficient tensors, r = 1, 2, ... (v, w, u, ...).
  std::vector<RealTensor> sectors;
  double residual = 0.0;
};

inline std::string_view to_string(BlochState::Form f) {
  switch (f) {
    case BlochState::Form::Bloch: return "bloch";
    case BlochState::Form::VW: return "vw";
    case BlochState::Form::Sectors: return "sectors";
  }
  return "sectors";
}

/// Matrix represented by a BlochState:
///   Bloch:   (1/d)(I + v.X)
///   VW:      v.X + w_ab X_(a X_b) + u_abc X_(a X_b X_c) + ...
///   Sectors: I/d + sum_r t_r . (traceless part of X_(i1 ... X_ir))
inline ComplexMatrix reconstruct(const BlochState& s, const GeneratorSet& g) {
  const auto d = g.dim();
  if (s.dim != 0 && s.dim != d) throw Error(ErrorKind::DimensionMismatch, "state and generators differ in dimension");
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  if (s.form != BlochState::Form::VW) out = identity(d) / static_cast<double>(d);
  for (std::size_t r = 1; r <= s.sectors.size(); ++r) {
    const RealTensor& t = s.sectors[r - 1];
    if (t.rank() != r) throw Error(ErrorKind::DimensionMismatch, "sector tensor has wrong rank");
    for (const auto& idx : sorted_multi_indices(g.count(), r)) {
      const double c = t[idx] * static_cast<double>(distinct_permutations(idx));
      if (c == 0.0) continue;
      ComplexMatrix m = sym_monomial(g, idx);
      if (s.form == BlochState::Form::Sectors) m = traceless_part(m);
      if (s.form == BlochState::Form::Bloch) m /= static_cast<double>(d);
      out += c * m;
    }
  }
  return out;
}

inline BlochState make_bloch_state(const GeneratorSet& g, const RealVector& v) {
  if (static_cast<std::size_t>(v.size()) != g.count()) throw Error(ErrorKind::DimensionMismatch, "Bloch vector length");
  BlochState s;
  s.form = BlochState::Form::Bloch;
  s.tag = g.tag();
  s.param = g.param();
  s.dim = g.dim();
  s.sectors.emplace_back(std::vector<std::size_t>{g.count()}, std::vector<double>(v.data(), v.data() + v.size()));
  return s;
}

inline BlochState make_vw_state(const GeneratorSet& g, const Eigen::Vector3d& v, const Eigen::Matrix3d& w) {
  BlochState s;
  s.form = BlochState::Form::VW;
  s.tag = g.tag();
  s.param = g.param();
  s.dim = g.dim();
  s.sectors.emplace_back(std::vector<std::size_t>{3}, std::vector<double>(v.data(), v.data() + 3));
  RealTensor wt = RealTensor::cube(3, 2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) wt(a, b) = w(a, b);
  s.sectors.push_back(std::move(wt));
  return s;
}

/// Least-squares coefficients of rho - I/d over the traceless parts of the
/// symmetrized monomials of rank 1..max_rank. Monomials that are linearly
/// dependent on lower ones (Gram-Schmidt in order of increasing rank) are
/// dropped and get coefficient zero. Throws SpanDeficient if the residual
/// exceeds 1e-8.
inline BlochState decompose_density(const ComplexMatrix& rho, const GeneratorSet& g, int max_rank) {
  require_square(rho, "density matrix");
  if (rho.rows() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "rho and generators differ in dimension");
  if (max_rank < 1) throw Error(ErrorKind::InvalidArgument, "max_rank must be >= 1");
  const auto d = g.dim();
  const auto n2 = d * d;

  auto realify = [n2](const ComplexMatrix& m) {
    RealVector x(2 * n2);
    for (Eigen::Index i = 0; i < n2; ++i) {
      x(i) = m.data()[i].real();
      x(n2 + i) = m.data()[i].imag();
    }
    return x;
  };

  struct Column {
    std::size_t rank;
    std::vector<std::size_t> idx;
    RealVector vec;
  };
  std::vector<Column> kept;
  std::vector<RealVector> ortho;
  for (int r = 1; r <= max_rank; ++r)
    for (const auto& idx : sorted_multi_indices(g.count(), static_cast<std::size_t>(r))) {
      const RealVector x = realify(traceless_part(sym_monomial(g, idx)));
      RealVector y = x;
      for (const auto& q : ortho) y -= q.dot(y) * q;
      const double scale = std::max(1.0, x.squaredNorm());
      if (y.squaredNorm() <= tol::kDependent * scale) continue;
      ortho.push_back(y / y.norm());
      kept.push_back({static_cast<std::size_t>(r), idx, x});
    }

  const ComplexMatrix target = rho - (rho.trace() / static_cast<double>(d)) * identity(d);
  const RealVector b = realify(target);
  RealVector coef = RealVector::Zero(static_cast<Eigen::Index>(kept.size()));
  if (!kept.empty()) {
    RealMatrix a(2 * n2, static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) a.col(static_cast<Eigen::Index>(c)) = kept[c].vec;
    coef = a.colPivHouseholderQr().solve(b);
  }

  BlochState s;
  s.form = BlochState::Form::Sectors;
  s.tag = g.tag();
  s.param = g.param();
  s.dim = d;
  for (int r = 1; r <= max_rank; ++r) s.sectors.push_back(RealTensor::cube(g.count(), static_cast<std::size_t>(r)));
  for (std::size_t c = 0; c < kept.size(); ++c) {
    const double per = coef(static_cast<Eigen::Index>(c)) / static_cast<double>(distinct_permutations(kept[c].idx));
    set_symmetric(s.sectors[kept[c].rank - 1], kept[c].idx, per);
  }
  const ComplexMatrix rebuilt = reconstruct(s, g) - identity(d) / static_cast<double>(d);
  s.residual = max_abs(target - rebuilt);
  if (s.residual > tol::kSpan)
    throw Error(ErrorKind::SpanDeficient, "monomials up to rank " + std::to_string(max_rank) +
                                              " miss rho by " + std::to_string(s.residual));
  return s;
}

// -- pure states --------------------------------------------------------------

struct PureTest {
  double norm_defect = 0.0;   // |1 + beta v^2 - d|
  double cubic_defect = 0.0;  // max_c |v_a v_b Q_abc - (d - 2) v_c|
  bool pure = false;
};

/// Purity of (1/d)(I + v.X) from the 2 -> 1 product identity:
/// 1 + beta v^2 = d and sum v_a v_b Q_abc = (d - 2) v_c.
inline PureTest pure_bloch_test(const GeneratorSet& g, const RealVector& v) {
  const StructureTensors st = structure_tensors(g);
  const auto k = g.count();
  if (static_cast<std::size_t>(v.size()) != k) throw Error(ErrorKind::DimensionMismatch, "Bloch vector length");
  const double d = static_cast<double>(g.dim());
  PureTest t;
  t.norm_defect = std::abs(1.0 + st.beta * v.squaredNorm() - d);
  for (std::size_t c = 0; c < k; ++c) {
    double acc = 0.0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) acc += v(static_cast<Eigen::Index>(a)) * v(static_cast<Eigen::Index>(b)) * st.d_sym(a, b, c);
    t.cubic_defect = std::max(t.cubic_defect, std::abs(acc - (d - 2.0) * v(static_cast<Eigen::Index>(c))));
  }
  t.pure = t.norm_defect <= tol::kPure && t.cubic_defect <= tol::kPure;
  return t;
}

inline double purity_defect(const ComplexMatrix& rho) { return max_abs(rho * rho - rho); }

/// Spin-1 generators in the Cartesian basis, (S_a)_bc = -i eps_abc.
inline GeneratorSet spin1_s_basis() {
  std::vector<ComplexMatrix> s;
  for (std::size_t a = 0; a < 3; ++a) {
    ComplexMatrix m = ComplexMatrix::Zero(3, 3);
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t c = 0; c < 3; ++c) m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(c)) = -kI * levi_civita(a, b, c);
    s.push_back(m);
  }
  return GeneratorSet::make(AlgebraTag::Custom, 2, std::move(s));
}

/// Unitary V with J_a = V^dagger S_a V; its columns are |+1> = -(x + iy)/sqrt2,
/// |0> = z, |-1> = (x - iy)/sqrt2.
inline ComplexMatrix spin1_j_to_s() {
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix v(3, 3);
  v << -r, 0.0, r, -kI * r, 0.0, -kI * r, 0.0, 1.0, 0.0;
  return v;
}

enum class SignPattern { None, Flip12_13, Flip12_23, Flip13_23 };

/// P_ij = +-a_i a_j with a = (sqrt(w22 + w33), sqrt(1/2 - w22), sqrt(1/2 - w33)).
/// The point (w22, w33) must lie inside the triangle w22 < 1/2, w33 < 1/2,
/// w22 + w33 > 0.
inline ComplexMatrix spin1_pure_family(double w22, double w33, SignPattern signs = SignPattern::None) {
  if (!(w22 < 0.5 && w33 < 0.5 && w22 + w33 > 0.0))
    throw Error(ErrorKind::TriangleConstraint, "(w22, w33) = (" + std::to_string(w22) + ", " + std::to_string(w33) +
                                                   ") is outside the open triangle");
  Eigen::Vector3d a(std::sqrt(w22 + w33), std::sqrt(0.5 - w22), std::sqrt(0.5 - w33));
  switch (signs) {
    case SignPattern::None: break;
    case SignPattern::Flip12_13: a(0) = -a(0); break;
    case SignPattern::Flip12_23: a(1) = -a(1); break;
    case SignPattern::Flip13_23: a(2) = -a(2); break;
  }
  return (a * a.transpose()).cast<Complex>();
}

/// One-parameter family with P_11 = 1/2 + omega, P_33 = 1/2 - omega and
/// P_13 = P_31 = sqrt(1 - 4 omega^2) / 2.
inline ComplexMatrix spin1_pure_omega(double omega) {
  if (!(std::abs(omega) <= 0.5)) throw Error(ErrorKind::InvalidArgument, "omega must lie in [-1/2, 1/2]");
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 0) = 0.5 + omega;
  p(2, 2) = 0.5 - omega;
  p(0, 2) = p(2, 0) = 0.5 * std::sqrt(1.0 - 4.0 * omega * omega);
  return p;
}

/// (v, w) of |psi><psi| in the S basis: v = Re(psi) x Im(psi) and
/// w_ab = delta_ab / 2 - Re(psi_a conj(psi_b)).
inline VW pure_from_psi(const ComplexVector& psi) {
  if (psi.size() != 3) throw Error(ErrorKind::DimensionMismatch, "psi must have three components");
  if (std::abs(psi.squaredNorm() - 1.0) > 1e-10) throw Error(ErrorKind::InvalidArgument, "psi is not normalized");
  const Eigen::Vector3d re = psi.real();
  const Eigen::Vector3d im = psi.imag();
  VW out;
  out.v = re.cross(im);
  out.w = 0.5 * Eigen::Matrix3d::Identity() - (psi * psi.adjoint()).real();
  return out;
}

// -- g2 radius bounds ---------------------------------------------------------

/// tr((v.X)^q).
inline double power_trace(const GeneratorSet& g, const RealVector& v, int q) {
  const ComplexMatrix x = linear_combination(g, v);
  ComplexMatrix p = identity(g.dim());
  for (int i = 0; i < q; ++i) p = p * x;
  return p.trace().real();
}

struct RadiusBound {
  int order = 0;           // which coefficient a_k was enforced
  Polynomial a;            // a_k as a polynomial in x = v^2
  std::optional<double> x_max;  // smallest positive root, if any
  std::optional<double> radius;
};

/// Bounds on x = v^2 from the characteristic-polynomial coefficients of
/// (1/d)(I + v.X), given the moment law tr((v.X)^q) = m_q x^{q/2} for even q
/// and 0 for odd q (m_0 = d). Each a_k is a polynomial in x with a_k(0) > 0;
/// the bound is its smallest positive root.
inline std::vector<RadiusBound> radius_bound_chain(Eigen::Index d, const std::vector<double>& even_moments,
                                                   int max_order) {
  auto moment = [&](int q) -> Polynomial {
    if (q == 0) return Polynomial{static_cast<double>(d)};
    if (q % 2 == 1) return {};
    const auto i = static_cast<std::size_t>(q / 2 - 1);
    if (i >= even_moments.size())
      throw Error(ErrorKind::InvalidArgument, "moment of order " + std::to_string(q) + " not supplied");
    std::vector<double> c(static_cast<std::size_t>(q / 2) + 1, 0.0);
    c.back() = even_moments[i];
    return Polynomial(std::move(c));
  };
  auto binom = [](int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
  };
  const double inv_d = 1.0 / static_cast<double>(d);

  // c_q = tr(rho^q) = d^{-q} sum_j C(q, j) tr((v.X)^j)
  std::vector<Polynomial> c(static_cast<std::size_t>(max_order) + 1);
  for (int q = 1; q <= max_order; ++q) {
    Polynomial acc;
    for (int j = 0; j <= q; ++j) acc = acc + Polynomial{binom(q, j) * std::pow(inv_d, q)} * moment(j);
    c[static_cast<std::size_t>(q)] = acc;
  }
  std::vector<Polynomial> a(static_cast<std::size_t>(max_order) + 1);
  a[0] = Polynomial{1.0};
  for (int k = 1; k <= max_order; ++k) {
    Polynomial acc;
    for (int q = 1; q <= k; ++q) {
      const double sign = (q % 2 == 1 ? 1.0 : -1.0) / k;
      acc = acc + Polynomial{sign} * c[static_cast<std::size_t>(q)] * a[static_cast<std::size_t>(k - q)];
    }
    a[static_cast<std::size_t>(k)] = acc;
  }

  std::vector<RadiusBound> out;
  for (int k = 2; k <= max_order; ++k) {
    RadiusBound b;
    b.order = k;
    b.a = a[static_cast<std::size_t>(k)];
    const double c0 = b.a.coefficient(0), c1 = b.a.coefficient(1), c2 = b.a.coefficient(2);
    if (b.a.degree() > 2) throw Error(ErrorKind::InvalidArgument, "closed-form roots need degree <= 2");
    std::vector<double> roots;
    if (b.a.degree() == 1) {
      roots.push_back(-c0 / c1);
    } else if (b.a.degree() == 2) {
      const double disc = c1 * c1 - 4.0 * c2 * c0;
      if (disc >= 0.0) {
        const double sq = std::sqrt(disc);
        // numerically stable pair
        const double qv = -0.5 * (c1 + std::copysign(sq, c1));
        if (qv != 0.0) {
          roots.push_back(qv / c2);
          roots.push_back(c0 / qv);
        }
      }
    }
    for (double r : roots)
      if (r > 0.0 && (!b.x_max || r < *b.x_max)) b.x_max = r;
    if (b.x_max) b.radius = std::sqrt(*b.x_max);
    out.push_back(b);
  }
  return out;
}

struct G2Moments {
  double m2 = 0.0;          // tr((v.b)^2) / v^2
  double m4 = 0.0;          // tr((v.b)^4) / v^4
  double odd_defect = 0.0;  // max |tr((v.b)^q)| for q = 1, 3, 5 over the samples
};

/// Measures the quadratic and quartic trace laws on random unit vectors.
inline G2Moments measure_moments(const GeneratorSet& g, int n_samples = 16, std::uint64_t seed = 0) {
  G2Moments m;
  for (int i = 0; i < n_samples; ++i) {
    auto gen = rng::stream(seed, static_cast<std::uint64_t>(i));
    const RealVector v = rng::unit_vector(gen, static_cast<Eigen::Index>(g.count()));
    m.m2 += power_trace(g, v, 2) / n_samples;
    m.m4 += power_trace(g, v, 4) / n_samples;
    for (int q : {1, 3, 5}) m.odd_defect = std::max(m.odd_defect, std::abs(power_trace(g, v, q)));
  }
  return m;
}

/// Radius bounds for the g2 Bloch manifold from a_2, a_3, a_4 using the
/// measured trace laws of the given generator set.
inline std::vector<RadiusBound> g2_bound_refine(const GeneratorSet& g, int max_order = 4) {
  const G2Moments m = measure_moments(g);
  return radius_bound_chain(g.dim(), {m.m2, m.m4}, max_order);
}

}  // namespace liechan

#endif

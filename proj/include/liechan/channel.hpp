#ifndef LIECHAN_CHANNEL_HPP
#define LIECHAN_CHANNEL_HPP

// Kraus channels built from generator sets: construction, application,
// extensions, closed-form spin actions, identity discovery, critical values,
// and entropy / l_q diagnostics.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "liechan/matcore.hpp"
#include "liechan/polynomial.hpp"
#include "liechan/repgen.hpp"
#include "liechan/rng.hpp"
#include "liechan/tensor.hpp"

namespace liechan {

namespace tol {
inline constexpr double kKraus = 1e-9;
inline constexpr double kDepolarizing = 1e-8;
inline constexpr double kSpecial = 1e-8;
inline constexpr double kDegenerateMonomial = 1e-10;
inline constexpr double kCritical = 1e-8;
}  // namespace tol

/// max |sum M^dagger M - I|.
inline double normalization_defect(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) throw Error(ErrorKind::InvalidArgument, "empty Kraus set");
  const Eigen::Index d = ops.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(d, d);
  for (const auto& m : ops) {
    require_square(m, "Kraus operator");
    if (m.rows() != d) throw Error(ErrorKind::DimensionMismatch, "Kraus operators differ in dimension");
    sum += m.adjoint() * m;
  }
  return max_abs(sum - identity(d));
}

class KrausChannel {
 public:
  static KrausChannel make(std::vector<ComplexMatrix> ops, double p, std::string source) {
    const double defect = normalization_defect(ops);
    if (defect > tol::kKraus)
      throw Error(ErrorKind::Unnormalized, "sum of M^dagger M differs from I by " + std::to_string(defect));
    KrausChannel ch;
    ch.ops_ = std::move(ops);
    ch.p_ = p;
    ch.source_ = std::move(source);
    return ch;
  }

  const std::vector<ComplexMatrix>& ops() const noexcept { return ops_; }
  double p() const noexcept { return p_; }
  const std::string& source() const noexcept { return source_; }
  Eigen::Index dim() const noexcept { return ops_.front().rows(); }

 private:
  KrausChannel() = default;

  std::vector<ComplexMatrix> ops_;
  double p_ = 0.0;
  std::string source_;
};

/// Linear map sum M X M^dagger on an arbitrary square matrix.
inline ComplexMatrix apply_map(const KrausChannel& ch, const ComplexMatrix& x) {
  require_square(x, "channel input");
  if (x.rows() != ch.dim())
    throw Error(ErrorKind::DimensionMismatch, "channel acts on dimension " + std::to_string(ch.dim()) +
                                                  ", input has " + std::to_string(x.rows()));
  ComplexMatrix out = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& m : ch.ops()) out.noalias() += m * x * m.adjoint();
  return out;
}

inline DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
  return DensityMatrix::from(apply_map(ch, rho.mat()));
}

inline ComplexMatrix apply_n(const KrausChannel& ch, ComplexMatrix x, int n) {
  for (int i = 0; i < n; ++i) x = apply_map(ch, x);
  return x;
}

/// M_0 = sqrt(1 - p) I, M_i = sqrt(p / Z) X_i. Zero-weight operators are
/// omitted, so p = 0 yields the single operator I.
inline KrausChannel build_channel(const GeneratorSet& g, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::POutOfRange,
                "p = " + std::to_string(p) + " outside [0, 1]; trace preservation with positive weights needs p in [0, 1]");
  const double z = casimir_Z(g);
  std::vector<ComplexMatrix> ops;
  if (p < 1.0) ops.push_back(std::sqrt(1.0 - p) * identity(g.dim()));
  if (p > 0.0)
    for (const auto& x : g.generators()) ops.push_back(std::sqrt(p / z) * x);
  return KrausChannel::make(std::move(ops), p, g.label());
}

inline KrausChannel identity_channel(Eigen::Index d) {
  return KrausChannel::make({identity(d)}, 0.0, "identity");
}

/// Depolarizing factor of the su(n) channel: ((1 - p) n^2 - 1) / (n^2 - 1).
inline double su_n_factor(double p, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "su_n_factor requires n >= 2");
  const double n2 = static_cast<double>(n) * n;
  return ((1.0 - p) * n2 - 1.0) / (n2 - 1.0);
}

inline ComplexMatrix depolarize(const ComplexMatrix& rho, double lambda) {
  require_square(rho, "depolarize input");
  const auto d = rho.rows();
  return lambda * rho + ((1.0 - lambda) * rho.trace() / static_cast<double>(d)) * identity(d);
}

/// Fits lambda from the first random density matrix and checks every sample
/// against lambda rho + (1 - lambda) I / d. Returns nothing if any sample
/// deviates by more than 1e-8.
inline std::optional<double> detect_depolarizing(const KrausChannel& ch, int n_samples = 32,
                                                 std::uint64_t seed = 0) {
  if (n_samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  const auto d = ch.dim();
  double lambda = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    auto gen = rng::stream(seed, static_cast<std::uint64_t>(i));
    const ComplexMatrix rho = rng::density(gen, d);
    const ComplexMatrix out = apply_map(ch, rho);
    if (i == 0) {
      const ComplexMatrix r0 = traceless_part(rho);
      const double denom = r0.squaredNorm();
      if (denom == 0.0) return std::nullopt;
      lambda = hs_inner(r0, traceless_part(out)).real() / denom;
    }
    if (max_abs(out - depolarize(rho, lambda)) > tol::kDepolarizing) return std::nullopt;
  }
  return lambda;
}

// -- spin channels ----------------------------------------------------------

struct VW {
  Eigen::Vector3d v;
  Eigen::Matrix3d w;
};

inline void require_spin_trace(int two_s, const Eigen::Matrix3d& w) {
  const double d = two_s + 1.0;
  const double expect = 3.0 / (d * spin_lambda(two_s));
  if (std::abs(w.trace() - expect) > 1e-10)
    throw Error(ErrorKind::TraceCondition,
                "tr(w) = " + std::to_string(w.trace()) + ", unit trace needs " + std::to_string(expect));
}

/// Closed-form action of the spin-s channel on rho = v.J + w_ab J_(a J_b):
/// v' = (1 - p/lambda) v, w' = (1 - 3p/lambda) w + (p tr(w) / lambda) delta.
inline VW spin_channel_vw(int two_s, double p, const Eigen::Vector3d& v, const Eigen::Matrix3d& w) {
  if (two_s < 1) throw Error(ErrorKind::InvalidArgument, "two_s must be >= 1");
  require_spin_trace(two_s, w);
  const double lambda = spin_lambda(two_s);
  VW out;
  out.v = (1.0 - p / lambda) * v;
  out.w = (1.0 - 3.0 * p / lambda) * w + (p * w.trace() / lambda) * Eigen::Matrix3d::Identity();
  return out;
}

/// Coefficient polynomial G_n(p) of the n-fold spin-1 channel on W-states,
/// w -> G_n(p) (delta - 6w) + w. G_1 = p/4 and
/// G_{n+1} = (1 - 3p/2) G_n + p/4.
inline Polynomial iterate_w_polynomial(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "iteration count must be >= 1");
  const Polynomial shrink{1.0, -1.5};
  const Polynomial step{0.0, 0.25};
  Polynomial g = step;
  for (int i = 1; i < n; ++i) g = shrink * g + step;
  return g;
}

inline Eigen::Matrix3d iterate_w(double p, int n, const Eigen::Matrix3d& w) {
  const double g = iterate_w_polynomial(n)(p);
  return g * (Eigen::Matrix3d::Identity() - 6.0 * w) + w;
}

// -- extensions -------------------------------------------------------------

/// Extension on element r (0-based) of the A set by the B set:
/// {A_i : i != r} followed by {B_j A_r}.
inline KrausChannel extend(const std::vector<ComplexMatrix>& a_ops, const std::vector<ComplexMatrix>& b_ops,
                           std::size_t r, double p = 0.0, std::string source = "extension") {
  if (normalization_defect(a_ops) > tol::kKraus) throw Error(ErrorKind::Unnormalized, "A operators");
  if (normalization_defect(b_ops) > tol::kKraus) throw Error(ErrorKind::Unnormalized, "B operators");
  if (r >= a_ops.size()) throw Error(ErrorKind::InvalidArgument, "extension index out of range");
  if (a_ops.front().rows() != b_ops.front().rows())
    throw Error(ErrorKind::DimensionMismatch, "A and B act on different spaces");
  std::vector<ComplexMatrix> ops;
  for (std::size_t i = 0; i < a_ops.size(); ++i)
    if (i != r) ops.push_back(a_ops[i]);
  for (const auto& b : b_ops) ops.push_back(b * a_ops[r]);
  return KrausChannel::make(std::move(ops), p, std::move(source));
}

/// Kraus operators X_i X_j / Z for all ordered pairs.
inline KrausChannel double_channel(const GeneratorSet& g) {
  const double z = casimir_Z(g);
  std::vector<ComplexMatrix> ops;
  for (const auto& x : g.generators())
    for (const auto& y : g.generators()) ops.push_back((x * y) / z);
  return KrausChannel::make(std::move(ops), 1.0, "double " + g.label());
}

/// rho -> (sum |x_i|^2)^{-1} sum gamma(x_i) rho gamma(x_i). With
/// <x, y> = 2 x.y this prefactor is (sum <x_i, x_i> / 2)^{-1}, since
/// gamma(x)^2 = <x, x> I / 2.
inline KrausChannel clifford_channel(const CliffordWeyl& rep, const std::vector<RealVector>& xs) {
  if (xs.empty()) throw Error(ErrorKind::InvalidArgument, "need at least one vector");
  double norm = 0.0;
  for (const auto& x : xs) {
    if (x.size() != static_cast<Eigen::Index>(rep.gammas.count()))
      throw Error(ErrorKind::DimensionMismatch, "Clifford vector has wrong length");
    if (x.squaredNorm() == 0.0) throw Error(ErrorKind::InvalidArgument, "Clifford vectors must be nonzero");
    norm += 0.5 * clifford_form(x, x);
  }
  std::vector<ComplexMatrix> ops;
  for (const auto& x : xs) ops.push_back(gamma_of(rep, x) / std::sqrt(norm));
  return KrausChannel::make(std::move(ops), 1.0, "clifford");
}

// -- identity discovery -----------------------------------------------------

/// Symmetrized monomial X_(i1 ... X_ir).
inline ComplexMatrix sym_monomial(const GeneratorSet& g, const std::vector<std::size_t>& idx) {
  std::vector<ComplexMatrix> factors;
  for (auto i : idx) factors.push_back(g[i]);
  return sym_product(std::span<const ComplexMatrix>(factors));
}

/// sum_i X_i M X_i.
inline ComplexMatrix adjoint_sandwich(const GeneratorSet& g, const ComplexMatrix& m) {
  ComplexMatrix s = ComplexMatrix::Zero(m.rows(), m.cols());
  for (const auto& x : g.generators()) s.noalias() += x * m * x;
  return s;
}

struct MonomialFit {
  std::vector<std::size_t> index;
  double f = 0.0;
  std::optional<double> g;  // absent when the monomial is a multiple of I
  double residual = 0.0;
};

/// Fit of sum_i X_i M X_i = f_M I + g_M M over every rank-r symmetrized
/// monomial M. Tensors f and g are fully symmetric; g is NaN where M is a
/// multiple of the identity and so leaves g_M free.
struct IdentityReport {
  int rank = 0;
  std::vector<MonomialFit> monomials;
  RealTensor f;
  RealTensor g;
  std::optional<double> g_scalar;
  bool special = false;
  bool degenerate = false;  // no monomial constrains g
  double spread = 0.0;
  double residual = 0.0;
};

inline IdentityReport find_identity(const GeneratorSet& g, int r) {
  if (r < 1 || r > 3) throw Error(ErrorKind::InvalidArgument, "identity rank must be 1, 2 or 3");
  const auto d = static_cast<double>(g.dim());
  IdentityReport rep;
  rep.rank = r;
  rep.f = RealTensor::cube(g.count(), static_cast<std::size_t>(r));
  rep.g = RealTensor::cube(g.count(), static_cast<std::size_t>(r), std::numeric_limits<double>::quiet_NaN());

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  int constrained = 0;
  for (const auto& idx : sorted_multi_indices(g.count(), static_cast<std::size_t>(r))) {
    const ComplexMatrix m = sym_monomial(g, idx);
    const ComplexMatrix s = adjoint_sandwich(g, m);
    const ComplexMatrix m0 = traceless_part(m);
    MonomialFit fit;
    fit.index = idx;
    double gm = 0.0;
    if (m0.norm() > tol::kDegenerateMonomial) {
      gm = hs_inner(m0, traceless_part(s)).real() / m0.squaredNorm();
      fit.g = gm;
      lo = std::min(lo, gm);
      hi = std::max(hi, gm);
      sum += gm;
      ++constrained;
      set_symmetric(rep.g, idx, gm);
    }
    fit.f = ((s.trace() - gm * m.trace()) / d).real();
    fit.residual = max_abs(s - fit.f * identity(g.dim()) - gm * m);
    set_symmetric(rep.f, idx, fit.f);
    rep.residual = std::max(rep.residual, fit.residual);
    rep.monomials.push_back(std::move(fit));
  }

  rep.degenerate = constrained == 0;
  if (!rep.degenerate) {
    rep.spread = hi - lo;
    rep.special = rep.spread <= tol::kSpecial;
    if (rep.special) rep.g_scalar = sum / constrained;
  }
  return rep;
}

/// Residual of sum_i X_i M X_i = f_M I + g M for a prescribed scalar g,
/// with f_M fitted per monomial.
inline double identity_residual(const GeneratorSet& g, int r, double gval) {
  const auto d = static_cast<double>(g.dim());
  double worst = 0.0;
  for (const auto& idx : sorted_multi_indices(g.count(), static_cast<std::size_t>(r))) {
    const ComplexMatrix m = sym_monomial(g, idx);
    const ComplexMatrix s = adjoint_sandwich(g, m);
    const Complex f = (s.trace() - gval * m.trace()) / d;
    worst = std::max(worst, max_abs(s - f * identity(g.dim()) - gval * m));
  }
  return worst;
}

// -- critical values --------------------------------------------------------

struct CriticalEntry {
  int rank = 0;
  std::optional<double> g;
  std::optional<double> p;
  bool in_range = false;
  std::optional<double> max_deviation;  // sampled check at p_r, in-range entries only
  bool verified = false;
};

struct CriticalDecomposition {
  double Z = 0.0;
  std::vector<CriticalEntry> entries;
};

/// p_r = Z / (Z - g_r) for each rank with a special identity. An entry is in
/// range when p_r lies in [0, 1] (g_r <= 0); in that case random states in
/// R_0 + R_r are pushed through the channel at p_r and compared with I/d.
inline CriticalDecomposition critical_values(const GeneratorSet& g, int max_rank, int n_samples = 8,
                                             std::uint64_t seed = 0) {
  CriticalDecomposition out;
  out.Z = casimir_Z(g);
  const auto d = g.dim();
  for (int r = 1; r <= max_rank; ++r) {
    CriticalEntry e;
    e.rank = r;
    const IdentityReport rep = find_identity(g, r);
    if (rep.special && rep.g_scalar) {
      e.g = *rep.g_scalar;
      if (std::abs(out.Z - *e.g) > 1e-12) e.p = out.Z / (out.Z - *e.g);
      e.in_range = e.p && *e.p >= -1e-12 && *e.p <= 1.0 + 1e-12;
    }
    if (e.in_range) {
      const double p = std::clamp(*e.p, 0.0, 1.0);
      const KrausChannel ch = build_channel(g, p);
      std::vector<ComplexMatrix> sector;
      for (const auto& idx : sorted_multi_indices(g.count(), static_cast<std::size_t>(r)))
        sector.push_back(traceless_part(sym_monomial(g, idx)));
      double worst = 0.0;
      for (int i = 0; i < n_samples; ++i) {
        auto gen = rng::stream(seed, static_cast<std::uint64_t>(i));
        ComplexMatrix rho = identity(d) / static_cast<double>(d);
        for (const auto& m : sector) rho += rng::normal(gen) * 0.1 * m;
        worst = std::max(worst, max_abs(apply_map(ch, rho) - identity(d) / static_cast<double>(d)));
      }
      e.max_deviation = worst;
      e.verified = worst <= tol::kCritical;
    }
    out.entries.push_back(e);
  }
  return out;
}

// -- entropy and l_q norms ----------------------------------------------------

namespace detail {
inline double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }
}  // namespace detail

/// Minimal output von Neumann entropy of the su(n) channel:
/// -(np/(n+1)) ln(np/(n^2-1)) - (1 - np/(n+1)) ln(1 - np/(n+1)).
inline double min_entropy_su_n(double p, int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "n must be >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::POutOfRange, "p outside [0, 1]");
  const double nn = n;
  const double small = nn * p / (nn * nn - 1.0);
  const double big = 1.0 - nn * p / (nn + 1.0);
  return -(nn - 1.0) * detail::xlogx(small) - detail::xlogx(big);
}

/// Smallest output entropy over random pure inputs.
inline double sampled_min_entropy(const KrausChannel& ch, int n_samples, std::uint64_t seed) {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    auto gen = rng::stream(seed, static_cast<std::uint64_t>(i));
    best = std::min(best, von_neumann_entropy(apply_map(ch, rng::pure_density(gen, ch.dim()))));
  }
  return best;
}

/// Lower bound on the maximal l_q norm: the largest Schatten q-norm of the
/// output over random pure inputs.
inline double max_lq_norm(const KrausChannel& ch, double q, int n_samples, std::uint64_t seed) {
  if (!(q >= 1.0)) throw Error(ErrorKind::InvalidArgument, "q must be >= 1");
  if (n_samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  double best = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    auto gen = rng::stream(seed, static_cast<std::uint64_t>(i));
    best = std::max(best, schatten_norm(apply_map(ch, rng::pure_density(gen, ch.dim())), q));
  }
  return best;
}

/// (tr(rho) I - rho^T) / (d - 1).
inline ComplexMatrix werner_holevo_map(const ComplexMatrix& rho) {
  require_square(rho, "Werner-Holevo input");
  const auto d = rho.rows();
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "Werner-Holevo channel needs d >= 2");
  return (rho.trace() * identity(d) - rho.transpose()) / static_cast<double>(d - 1);
}

inline DensityMatrix werner_holevo(const DensityMatrix& rho) {
  return DensityMatrix::from(werner_holevo_map(rho.mat()));
}

}  // namespace liechan

#endif

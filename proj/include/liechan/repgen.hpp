#ifndef LIECHAN_REPGEN_HPP
#define LIECHAN_REPGEN_HPP

// Representation factories: Gell-Mann generators of su(n), spin-s generators
// of su(2), the Euclidean Weyl representation of the Clifford algebra on R^4,
// plus user-supplied (custom) sets. The g2 factory lives in octonion.hpp.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liechan/matcore.hpp"
#include "liechan/tensor.hpp"

namespace liechan {

enum class AlgebraTag { SuNDefining, Su2Spin, G2Fundamental, CliffordWeyl, Custom };

inline std::string_view to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::SuNDefining: return "su_n_defining";
    case AlgebraTag::Su2Spin: return "su2_spin";
    case AlgebraTag::G2Fundamental: return "g2_fundamental";
    case AlgebraTag::CliffordWeyl: return "clifford_weyl";
    case AlgebraTag::Custom: return "custom";
  }
  return "custom";
}

inline AlgebraTag algebra_tag_from_string(std::string_view s) {
  if (s == "su_n_defining") return AlgebraTag::SuNDefining;
  if (s == "su2_spin") return AlgebraTag::Su2Spin;
  if (s == "g2_fundamental") return AlgebraTag::G2Fundamental;
  if (s == "clifford_weyl") return AlgebraTag::CliffordWeyl;
  if (s == "custom") return AlgebraTag::Custom;
  throw Error(ErrorKind::Parse, "unknown algebra tag '" + std::string(s) + "'");
}

namespace tol {
inline constexpr double kGenerator = 1e-10;
inline constexpr double kNormalization = 1e-9;
}  // namespace tol

/// k Hermitian d x d generators with trace-form constant N
/// (tr(X_a X_b) = N d delta_ab) and Casimir constant Z (sum X_i^2 = Z I).
///
/// N and Z are always present for the built-in families. A custom set may
/// lack either one (a reducible set with unequal Casimirs has no Z); the
/// channel constructors then refuse it through casimir_Z().
class GeneratorSet {
 public:
  static GeneratorSet make(AlgebraTag tag, int param, std::vector<ComplexMatrix> generators) {
    if (generators.empty()) throw Error(ErrorKind::InvalidArgument, "generator set is empty");
    const Eigen::Index d = generators.front().rows();
    for (std::size_t i = 0; i < generators.size(); ++i) {
      const auto& x = generators[i];
      require_square(x, "generator");
      if (x.rows() != d) throw Error(ErrorKind::DimensionMismatch, "generators differ in dimension");
      if (hermiticity_defect(x) > tol::kGenerator)
        throw Error(ErrorKind::NotHermitian, "generator " + std::to_string(i) + " is not Hermitian");
      if (tag != AlgebraTag::CliffordWeyl && std::abs(x.trace()) > tol::kGenerator)
        throw Error(ErrorKind::InvalidArgument, "generator " + std::to_string(i) + " is not traceless");
    }

    GeneratorSet g;
    g.tag_ = tag;
    g.param_ = param;
    g.d_ = d;
    g.generators_ = std::move(generators);

    const std::size_t k = g.generators_.size();
    const double n0 = g.generators_[0].squaredNorm() / static_cast<double>(d);
    bool orthogonal = true;
    for (std::size_t a = 0; a < k && orthogonal; ++a)
      for (std::size_t b = 0; b < k; ++b) {
        const Complex t = (g.generators_[a] * g.generators_[b]).trace();
        const double expect = (a == b) ? n0 * static_cast<double>(d) : 0.0;
        if (std::abs(t - expect) > tol::kNormalization) {
          orthogonal = false;
          break;
        }
      }
    if (orthogonal) g.N_ = n0;

    ComplexMatrix casimir = ComplexMatrix::Zero(d, d);
    for (const auto& x : g.generators_) casimir += x * x;
    const double z = casimir.trace().real() / static_cast<double>(d);
    if (max_abs(casimir - z * identity(d)) <= tol::kNormalization) g.Z_ = z;

    if (tag != AlgebraTag::Custom && (!g.N_ || !g.Z_))
      throw Error(ErrorKind::ConstructionFailure,
                  std::string(to_string(tag)) + " set violates trace-form or Casimir normalization");
    return g;
  }

  AlgebraTag tag() const noexcept { return tag_; }
  /// n for su(n), 2s for spin-s, 0 otherwise.
  int param() const noexcept { return param_; }
  Eigen::Index dim() const noexcept { return d_; }
  std::size_t count() const noexcept { return generators_.size(); }
  const std::vector<ComplexMatrix>& generators() const noexcept { return generators_; }
  const ComplexMatrix& operator[](std::size_t i) const { return generators_.at(i); }
  std::optional<double> N() const noexcept { return N_; }
  std::optional<double> Z() const noexcept { return Z_; }

  std::string label() const {
    switch (tag_) {
      case AlgebraTag::SuNDefining: return "su(" + std::to_string(param_) + ")";
      case AlgebraTag::Su2Spin:
        return param_ % 2 == 0 ? "spin-" + std::to_string(param_ / 2) : "spin-" + std::to_string(param_) + "/2";
      case AlgebraTag::G2Fundamental: return "g2";
      case AlgebraTag::CliffordWeyl: return "clifford";
      case AlgebraTag::Custom: return "custom";
    }
    return "custom";
  }

 private:
  GeneratorSet() = default;

  AlgebraTag tag_ = AlgebraTag::Custom;
  int param_ = 0;
  Eigen::Index d_ = 0;
  std::vector<ComplexMatrix> generators_;
  std::optional<double> N_;
  std::optional<double> Z_;
};

/// Z with sum X_i^2 = Z I. Throws NotScalar when the Casimir is not a
/// multiple of the identity (a direct sum with unequal Casimirs).
inline double casimir_Z(const GeneratorSet& g) {
  if (!g.Z()) throw Error(ErrorKind::NotScalar, "sum of squared generators is not proportional to the identity");
  return *g.Z();
}

inline double trace_form_N(const GeneratorSet& g) {
  if (!g.N()) throw Error(ErrorKind::InvalidArgument, "generators are not trace-orthogonal with a common norm");
  return *g.N();
}

inline ComplexMatrix linear_combination(const GeneratorSet& g, const RealVector& v) {
  if (static_cast<std::size_t>(v.size()) != g.count())
    throw Error(ErrorKind::DimensionMismatch,
                "coefficient vector has length " + std::to_string(v.size()) + ", expected " +
                    std::to_string(g.count()));
  ComplexMatrix out = ComplexMatrix::Zero(g.dim(), g.dim());
  for (std::size_t i = 0; i < g.count(); ++i) out += v(static_cast<Eigen::Index>(i)) * g[i];
  return out;
}

/// Same algebra in the basis X'_i = sum_j O_ij X_j.
inline GeneratorSet rotate_basis(const GeneratorSet& g, const RealMatrix& o) {
  const auto k = static_cast<Eigen::Index>(g.count());
  if (o.rows() != k || o.cols() != k) throw Error(ErrorKind::DimensionMismatch, "basis change has wrong size");
  std::vector<ComplexMatrix> out;
  for (Eigen::Index i = 0; i < k; ++i) out.push_back(linear_combination(g, o.row(i).transpose()));
  return GeneratorSet::make(g.tag(), g.param(), std::move(out));
}

// -- su(n) ------------------------------------------------------------------

/// Generalized Gell-Mann matrices, tr(l_a l_b) = 2 delta_ab. Ordering: for
/// each column c = 1..n-1, the symmetric and antisymmetric pairs (r, c) for
/// r < c, then the c-th diagonal generator. n = 2 gives the Pauli matrices
/// and n = 3 the standard Gell-Mann ordering.
inline GeneratorSet gell_mann(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "gell_mann requires n >= 2");
  std::vector<ComplexMatrix> gens;
  for (int c = 1; c < n; ++c) {
    for (int r = 0; r < c; ++r) {
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(r, c) = 1.0;
      s(c, r) = 1.0;
      gens.push_back(s);
      ComplexMatrix a = ComplexMatrix::Zero(n, n);
      a(r, c) = -kI;
      a(c, r) = kI;
      gens.push_back(a);
    }
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (static_cast<double>(c) * (c + 1)));
    for (int i = 0; i < c; ++i) h(i, i) = scale;
    h(c, c) = -scale * c;
    gens.push_back(h);
  }
  return GeneratorSet::make(AlgebraTag::SuNDefining, n, std::move(gens));
}

/// Product tensors of a set obeying X_i X_j = beta delta_ij I + sum_k Q_ijk X_k.
struct StructureTensors {
  RealTensor f;      // antisymmetric
  RealTensor d_sym;  // fully symmetric
  Tensor<Complex> Q;  // d_sym + i f
  double beta = 0.0;
  double product_residual = 0.0;  // worst entry of X_i X_j - (beta delta I + Q X)
};

/// Structure tensors from trace formulas, normalized by the trace form:
/// d_ijk = tr({X_i,X_j} X_k) / (2Nd) and f_ijk = -i tr([X_i,X_j] X_k) / (2Nd).
/// For Gell-Mann matrices (Nd = 2) these are the usual 1/4-normalized traces.
/// Throws NoTwoToOneIdentity if the products do not close on {I, X_k}.
inline StructureTensors structure_tensors(const GeneratorSet& g) {
  const double nd = trace_form_N(g) * static_cast<double>(g.dim());
  const std::size_t k = g.count();
  StructureTensors st{RealTensor::cube(k, 3), RealTensor::cube(k, 3), Tensor<Complex>::cube(k, 3), trace_form_N(g), 0.0};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const ComplexMatrix prod = g[i] * g[j];
      const ComplexMatrix anti = prod + g[j] * g[i];
      const ComplexMatrix comm = prod - g[j] * g[i];
      for (std::size_t l = 0; l < k; ++l) {
        st.d_sym(i, j, l) = (anti * g[l]).trace().real() / (2.0 * nd);
        st.f(i, j, l) = (-kI * (comm * g[l]).trace()).real() / (2.0 * nd);
        st.Q(i, j, l) = Complex(st.d_sym(i, j, l), st.f(i, j, l));
      }
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      ComplexMatrix rebuilt = (i == j ? st.beta : 0.0) * identity(g.dim());
      for (std::size_t l = 0; l < k; ++l) rebuilt += st.Q(i, j, l) * g[l];
      st.product_residual = std::max(st.product_residual, max_abs(g[i] * g[j] - rebuilt));
    }
  if (st.product_residual > tol::kNormalization)
    throw Error(ErrorKind::NoTwoToOneIdentity,
                "products of generators leave span{I, X} (residual " + std::to_string(st.product_residual) + ")");
  return st;
}

inline StructureTensors structure_tensors(int n) { return structure_tensors(gell_mann(n)); }

// -- su(2), spin s ----------------------------------------------------------

/// Spin-s generators in the J_3 eigenbasis m = s, s-1, ..., -s with the
/// Condon-Shortley phase: J_+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>.
/// Z = s(s+1) and tr(J_a J_b) = (d s(s+1)/3) delta_ab.
inline GeneratorSet spin_rep(int two_s) {
  if (two_s < 1) throw Error(ErrorKind::InvalidArgument, "spin_rep requires two_s >= 1");
  const int d = two_s + 1;
  const double s = two_s / 2.0;
  const double lambda = s * (s + 1.0);
  ComplexMatrix jp = ComplexMatrix::Zero(d, d);
  ComplexMatrix j3 = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    const double m = s - i;
    j3(i, i) = m;
    if (i > 0) jp(i - 1, i) = std::sqrt(lambda - m * (m + 1.0));
  }
  const ComplexMatrix jm = jp.adjoint();
  ComplexMatrix j1 = 0.5 * (jp + jm);
  ComplexMatrix j2 = (jp - jm) / (2.0 * kI);
  return GeneratorSet::make(AlgebraTag::Su2Spin, two_s, {j1, j2, j3});
}

inline double spin_lambda(int two_s) {
  const double s = two_s / 2.0;
  return s * (s + 1.0);
}

/// Levi-Civita symbol on {0,1,2}.
inline double levi_civita(std::size_t a, std::size_t b, std::size_t c) {
  if (a == b || b == c || a == c) return 0.0;
  return ((a + 1) % 3 == b) ? 1.0 : -1.0;
}

// -- Clifford algebra, Euclidean Weyl representation ------------------------

/// Bilinear form <x, y> = 2 sum x_i y_i, so {gamma(x), gamma(y)} = <x, y> I
/// and each basis gamma squares to the identity.
inline double clifford_form(const RealVector& x, const RealVector& y) { return 2.0 * x.dot(y); }

struct CliffordWeyl {
  GeneratorSet gammas;                 // gamma_1..gamma_4, Hermitian 4x4
  std::vector<ComplexMatrix> basis;   // 1, g^mu, g^{mu nu}, g^{mu nu rho}, g^{mu nu rho sigma}
  std::vector<std::string> labels;
};

/// Chiral (Weyl) gammas: gamma_k = [[0, -i sigma_k], [i sigma_k, 0]] for
/// k = 1..3 and gamma_4 = [[0, I], [I, 0]].
inline CliffordWeyl clifford_weyl() {
  const GeneratorSet pauli = gell_mann(2);
  auto block = [](const ComplexMatrix& upper, const ComplexMatrix& lower) {
    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g.block(0, 2, 2, 2) = upper;
    g.block(2, 0, 2, 2) = lower;
    return g;
  };
  std::vector<ComplexMatrix> gammas;
  for (std::size_t k = 0; k < 3; ++k) gammas.push_back(block(-kI * pauli[k], kI * pauli[k]));
  gammas.push_back(block(identity(2), identity(2)));

  CliffordWeyl out{GeneratorSet::make(AlgebraTag::CliffordWeyl, 4, gammas), {}, {}};
  out.basis.push_back(identity(4));
  out.labels.emplace_back("1");
  // For distinct indices the gammas anticommute, so the antisymmetrized
  // product over an increasing index set equals the ordered product.
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    for (unsigned mask = 0; mask < 16u; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != rank) continue;
      ComplexMatrix prod = identity(4);
      std::string label = "g";
      for (std::size_t mu = 0; mu < 4; ++mu)
        if (mask & (1u << mu)) {
          prod = prod * gammas[mu];
          label += std::to_string(mu + 1);
        }
      out.basis.push_back(prod);
      out.labels.push_back(label);
    }
  }
  return out;
}

inline ComplexMatrix gamma_of(const CliffordWeyl& rep, const RealVector& x) {
  return linear_combination(rep.gammas, x);
}

}  // namespace liechan

#endif

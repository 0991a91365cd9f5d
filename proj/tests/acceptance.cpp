// Acceptance suite: one [PASS]/[FAIL] line per criterion, followed by the
// measured value of every sub-check.

#include <cstdio>
#include <string>
#include <vector>

#include "liechan/liechan.hpp"

using namespace liechan;

namespace {

struct Check {
  std::string what;
  double measured;
  double tolerance;
  bool ok;
};

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  /// measured <= tolerance
  void within(std::string what, double measured, double tolerance) {
    checks_.push_back({std::move(what), measured, tolerance, measured <= tolerance});
  }

  void expect(std::string what, bool ok) { checks_.push_back({std::move(what), ok ? 1.0 : 0.0, -1.0, ok}); }

  void note(std::string what) { notes_.push_back(std::move(what)); }

  bool report() const {
    bool ok = true;
    for (const auto& c : checks_) ok = ok && c.ok;
    std::printf("[%s] %2d %s\n", ok ? "PASS" : "FAIL", id_, title_.c_str());
    for (const auto& c : checks_) {
      if (c.tolerance < 0.0)
        std::printf("         %-4s %s\n", c.ok ? "ok" : "FAIL", c.what.c_str());
      else
        std::printf("         %-4s %s: %.3e (tol %.0e)\n", c.ok ? "ok" : "FAIL", c.what.c_str(), c.measured,
                    c.tolerance);
    }
    for (const auto& n : notes_) std::printf("         note %s\n", n.c_str());
    return ok;
  }

 private:
  int id_;
  std::string title_;
  std::vector<Check> checks_;
  std::vector<std::string> notes_;
};

Eigen::Matrix3d random_w(rng::Engine& gen, int two_s) {
  Eigen::Matrix3d a;
  for (int i = 0; i < 9; ++i) a.data()[i] = 0.05 * rng::normal(gen);
  Eigen::Matrix3d w = 0.5 * (a + a.transpose());
  w += ((3.0 / ((two_s + 1.0) * spin_lambda(two_s)) - w.trace()) / 3.0) * Eigen::Matrix3d::Identity();
  return w;
}

Criterion depolarizing() {
  Criterion c(1, "su(n) channel is depolarizing with the closed-form factor");
  double worst = 0.0, worst_critical = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const GeneratorSet g = gell_mann(n);
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const KrausChannel ch = build_channel(g, p);
      const double lambda = ((1.0 - p) * n * n - 1.0) / (n * n - 1.0);
      for (int i = 0; i < 20; ++i) {
        auto gen = rng::stream(101, static_cast<std::uint64_t>(1000 * n + 100 * p + i));
        const ComplexMatrix rho = rng::density(gen, n);
        const ComplexMatrix expect = lambda * rho + ((1.0 - lambda) / n) * identity(n);
        worst = std::max(worst, max_abs(apply_map(ch, rho) - expect));
      }
    }
    const KrausChannel crit = build_channel(g, 1.0 - 1.0 / (n * n));
    for (int i = 0; i < 20; ++i) {
      auto gen = rng::stream(102, static_cast<std::uint64_t>(100 * n + i));
      worst_critical = std::max(worst_critical, max_abs(apply_map(crit, rng::density(gen, n)) - identity(n) / n));
    }
  }
  c.within("Kraus output vs lambda rho + (1 - lambda) I/n, n = 2..5", worst, 1e-9);
  c.within("output at p = 1 - 1/n^2 vs I/n", worst_critical, 1e-9);
  return c;
}

Criterion structure() {
  Criterion c(2, "structure-tensor contractions");
  double ff = 0.0, qq = 0.0, dd = 0.0;
  for (int n = 2; n <= 5; ++n) {
    const StructureTensors st = structure_tensors(n);
    const std::size_t k = static_cast<std::size_t>(n * n - 1);
    for (std::size_t i = 0; i < k; ++i) {
      double dtr = 0.0;
      for (std::size_t j = 0; j < k; ++j) dtr += st.d_sym(j, j, i);
      dd = std::max(dd, std::abs(dtr));
      for (std::size_t l = 0; l < k; ++l) {
        double f = 0.0;
        Complex q = 0.0;
        for (std::size_t j = 0; j < k; ++j)
          for (std::size_t m = 0; m < k; ++m) {
            f += st.f(i, j, m) * st.f(l, j, m);
            q += st.Q(i, j, m) * st.Q(l, j, m);
          }
        ff = std::max(ff, std::abs(f - (i == l ? n : 0.0)));
        qq = std::max(qq, std::abs(q - (i == l ? -4.0 / n : 0.0)));
      }
    }
  }
  c.within("sum f_ijk f_ljk - n delta_il", ff, 1e-8);
  c.within("sum Q_ijm Q_ljm + (4/n) delta_il", qq, 1e-8);
  c.within("sum d_iik", dd, 1e-9);
  return c;
}

Criterion spin_closed_form() {
  Criterion c(3, "spin-s channel closed form on (v, w)");
  double worst = 0.0;
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const GeneratorSet j = spin_rep(two_s);
    for (int i = 0; i < 10; ++i) {
      auto gen = rng::stream(103, static_cast<std::uint64_t>(100 * two_s + i));
      const Eigen::Vector3d v = 0.05 * rng::gaussian_vector(gen, 3);
      const Eigen::Matrix3d w = random_w(gen, two_s);
      const double p = rng::uniform(gen, 0.0, 1.0);
      const VW out = spin_channel_vw(two_s, p, v, w);
      worst = std::max(worst, max_abs(apply_map(build_channel(j, p), rho_vw(two_s, v, w)) - vw_matrix(j, out.v, out.w)));
    }
  }
  c.within("closed form vs Kraus, two_s = 1..6", worst, 1e-8);
  double spec = 0.0;
  for (int i = 0; i < 10; ++i) {
    auto gen = rng::stream(104, static_cast<std::uint64_t>(i));
    const Eigen::Vector3d v = rng::gaussian_vector(gen, 3);
    const Eigen::Matrix3d w = random_w(gen, 2);
    const double p = rng::uniform(gen, 0.0, 1.0);
    const VW out = spin_channel_vw(2, p, v, w);
    spec = std::max(spec, (out.v - (1.0 - p / 2.0) * v).cwiseAbs().maxCoeff());
    spec = std::max(spec, (out.w - (1.0 - 1.5 * p) * w - (p / 4.0) * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
  }
  c.within("spin-1: v' = (1 - p/2) v, w' = (1 - 3p/2) w + (p/4) delta", spec, 1e-8);
  return c;
}

Criterion iteration() {
  Criterion c(4, "iteration formula for W-states");
  const GeneratorSet j = spin_rep(2);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    auto gen = rng::stream(105, static_cast<std::uint64_t>(i));
    const Eigen::Matrix3d w = random_w(gen, 2);
    const double p = rng::uniform(gen, 0.0, 1.0);
    const KrausChannel ch = build_channel(j, p);
    ComplexMatrix rho = rho_vw(2, Eigen::Vector3d::Zero(), w);
    for (int n = 1; n <= 6; ++n) {
      rho = apply_map(ch, rho);
      worst = std::max(worst, max_abs(rho - vw_matrix(j, Eigen::Vector3d::Zero(), iterate_w(p, n, w))));
    }
  }
  c.within("recursion vs n-fold Kraus, n <= 6", worst, 1e-9);
  return c;
}

Criterion special_identities() {
  Criterion c(5, "special identities and critical values");
  double g1 = 0.0, g2 = 0.0, res = 0.0;
  for (int two_s = 1; two_s <= 6; ++two_s) {
    const GeneratorSet j = spin_rep(two_s);
    const double lambda = spin_lambda(two_s);
    const IdentityReport r1 = find_identity(j, 1);
    const IdentityReport r2 = find_identity(j, 2);
    g1 = std::max(g1, r1.g_scalar ? std::abs(*r1.g_scalar - (lambda - 1.0)) : 1.0);
    res = std::max(res, r1.residual);
    if (r2.degenerate) {
      // spin 1/2: every rank-2 monomial is a multiple of I, so g_2 is free
      res = std::max(res, identity_residual(j, 2, lambda - 3.0));
    } else {
      g2 = std::max(g2, r2.g_scalar ? std::abs(*r2.g_scalar - (lambda - 3.0)) : 1.0);
      res = std::max(res, r2.residual);
    }
  }
  c.within("|g_1 - (lambda - 1)|, two_s = 1..6", g1, 1e-9);
  c.within("|g_2 - (lambda - 3)|, two_s = 2..6", g2, 1e-9);
  c.within("max identity residual, ranks 1-2 (spin 1/2 rank 2 at g = lambda - 3)", res, 1e-9);
  const CriticalDecomposition cd = critical_values(spin_rep(2), 2);
  const CriticalEntry& e1 = cd.entries[0];
  const CriticalEntry& e2 = cd.entries[1];
  c.within("spin-1 |p_2 - 2/3|", e2.p ? std::abs(*e2.p - 2.0 / 3.0) : 1.0, 1e-9);
  c.expect("spin-1 p_2 in range and verified", e2.in_range && e2.verified);
  c.within("spin-1 |p_1 - 2|", e1.p ? std::abs(*e1.p - 2.0) : 1.0, 1e-9);
  c.expect("spin-1 p_1 out of range", !e1.in_range);
  return c;
}

Criterion g2_suite() {
  Criterion c(6, "g2 representation suite");
  const GeneratorSet g = g2_rep();
  ComplexMatrix sq = ComplexMatrix::Zero(7, 7);
  double form = 0.0, sandwich = 0.0;
  for (std::size_t a = 0; a < 14; ++a) {
    sq += g[a] * g[a];
    sandwich = std::max(sandwich, max_abs(adjoint_sandwich(g, g[a])));
    for (std::size_t b = 0; b < 14; ++b) form = std::max(form, std::abs((g[a] * g[b]).trace() - (a == b ? 0.5 : 0.0)));
  }
  c.within("sum beta_i^2 - I_7", max_abs(sq - identity(7)), 1e-9);
  c.within("tr(beta_a beta_b) - delta/2", form, 1e-9);
  c.within("max_a |sum_i beta_i beta_a beta_i|", sandwich, 1e-10);

  double scale = 0.0;
  for (int i = 0; i < 20; ++i) {
    auto gen = rng::stream(106, static_cast<std::uint64_t>(i));
    const RealVector v = rng::in_ball(gen, 14, 1.0);
    const double p = rng::uniform(gen, 0.0, 1.0);
    const ComplexMatrix out = apply_map(build_channel(g, p), bloch_rho(g, v));
    scale = std::max(scale, max_abs(out - bloch_rho(g, (1.0 - p) * v)));
  }
  c.within("channel scales v by (1 - p)", scale, 1e-9);

  double odd = 0.0, quad = 0.0, quart = 0.0, quart16 = 0.0;
  for (int i = 0; i < 100; ++i) {
    auto gen = rng::stream(107, static_cast<std::uint64_t>(i));
    const RealVector v = rng::gaussian_vector(gen, 14);
    const double v2 = v.squaredNorm();
    for (int q : {1, 3, 5}) odd = std::max(odd, std::abs(power_trace(g, v, q)));
    quad = std::max(quad, std::abs(power_trace(g, v, 2) - v2 / 2.0));
    const double t4 = power_trace(g, v, 4);
    quart = std::max(quart, std::abs(t4 - v2 * v2 / 4.0));
    quart16 = std::max(quart16, std::abs(t4 - v2 * v2 / 16.0));
  }
  c.within("tr(v.beta)^q for q = 1, 3, 5", odd, 1e-8);
  c.within("tr(v.beta)^2 - v^2/2", quad, 1e-8);
  c.within("tr(v.beta)^4 - v^4/4", quart, 1e-8);
  char buf[96];
  std::snprintf(buf, sizeof buf, "tr(v.beta)^4 - v^4/16 on the same samples: %.3e", quart16);
  c.note(buf);

  const G2Moments m = measure_moments(g);
  const auto chain = radius_bound_chain(7, {m.m2, m.m4}, 4);
  const double target[] = {84.0, 28.0, 8.0 * (10.0 - std::sqrt(65.0))};
  for (int k = 0; k < 3; ++k) {
    const auto& b = chain[static_cast<std::size_t>(k)];
    c.within("bound chain a_" + std::to_string(b.order) + " root vs " + io::format_double(target[k]),
             b.x_max ? std::abs(*b.x_max - target[k]) : 1.0, 1e-9);
  }
  return c;
}

Criterion bloch_manifolds() {
  Criterion c(7, "Bloch manifold membership oracles");
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const GeneratorSet j = spin_rep(two_s);
    const double radius = 2.0 / two_s;
    int wrong = 0;
    for (int i = 0; i < 1000; ++i) {
      auto gen = rng::stream(108, static_cast<std::uint64_t>(10000 * two_s + i));
      const RealVector v = rng::in_ball(gen, 3, 2.0 * radius);
      if (std::abs(v.norm() - radius) <= 1e-7) continue;
      wrong += membership_eig(j, v) != (v.norm() <= radius);
    }
    c.within("spin-" + std::to_string(two_s) + "/2: mismatches with |v| <= 1/j", wrong, 0.0);
  }
  {
    const GeneratorSet g = gell_mann(3);
    int wrong = 0;
    for (int i = 0; i < 1000; ++i) {
      auto gen = rng::stream(109, static_cast<std::uint64_t>(i));
      const RealVector v = sample_bloch_vector(g, gen);
      if (std::abs(min_eigenvalue(bloch_rho(g, v))) <= 1e-9) continue;
      wrong += su3_membership_closed(v) != membership_eig(g, v);
    }
    c.within("su(3) closed form vs eigenvalues: mismatches", wrong, 0.0);
  }
  for (const GeneratorSet& g : {gell_mann(2), gell_mann(3), gell_mann(4), spin_rep(2), spin_rep(3), g2_rep()}) {
    int wrong = 0;
    for (int i = 0; i < 1000; ++i) {
      auto gen = rng::stream(110, static_cast<std::uint64_t>(i));
      const RealVector v = sample_bloch_vector(g, gen);
      if (std::abs(min_eigenvalue(bloch_rho(g, v))) <= 1e-9) continue;
      wrong += membership_charpoly(g, v) != membership_eig(g, v);
    }
    c.within(g.label() + " charpoly vs eigenvalues: mismatches", wrong, 0.0);
  }
  return c;
}

Criterion pure_states() {
  Criterion c(8, "pure-state conditions");
  const GeneratorSet g = gell_mann(3);
  int wrong = 0;
  for (int i = 0; i < 200; ++i) {
    auto gen = rng::stream(111, static_cast<std::uint64_t>(i));
    const ComplexMatrix rho = i % 2 == 0 ? rng::pure_density(gen, 3) : rng::density(gen, 3);
    wrong += pure_bloch_test(g, bloch_vector(g, rho)).pure != (purity_defect(rho) <= 1e-9);
  }
  c.within("su(3) conditions vs rho^2 = rho: mismatches", wrong, 0.0);

  double fam = 0.0;
  int points = 0;
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) {
      const double w22 = -0.5 + (a + 0.5) / 20.0, w33 = -0.5 + (b + 0.5) / 20.0;
      if (a + b < 20) continue;
      ++points;
      for (auto s : {SignPattern::None, SignPattern::Flip12_13, SignPattern::Flip12_23, SignPattern::Flip13_23}) {
        const ComplexMatrix p = spin1_pure_family(w22, w33, s);
        fam = std::max({fam, purity_defect(p), std::abs(p.trace().real() - 1.0)});
      }
    }
  c.within("spin-1 P(w22, w33) over " + std::to_string(points) + " triangle points: P^2 - P, tr P - 1", fam, 1e-10);
  double omega = 0.0;
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix p = spin1_pure_omega(-0.5 + i / 49.0);
    omega = std::max({omega, purity_defect(p), std::abs(p.trace().real() - 1.0)});
  }
  c.within("spin-1 P(omega), 50 values: P^2 - P, tr P - 1", omega, 1e-10);
  double cross = 0.0;
  for (int i = 0; i < 1000; ++i) {
    auto gen = rng::stream(112, static_cast<std::uint64_t>(i));
    cross = std::max(cross, pure_from_psi(rng::pure_state(gen, 3)).v.norm());
  }
  c.within("max |Re psi x Im psi| (must not exceed 1/2)", cross, 0.5);
  return c;
}

Criterion clifford() {
  Criterion c(9, "Clifford channel trace preservation");
  const CliffordWeyl rep = clifford_weyl();
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m) {
    auto gen = rng::stream(113, static_cast<std::uint64_t>(m));
    std::vector<RealVector> xs;
    for (int i = 0; i < m; ++i) xs.push_back(rng::gaussian_vector(gen, 4));
    const KrausChannel ch = clifford_channel(rep, xs);
    for (int i = 0; i < 20; ++i) worst = std::max(worst, std::abs(apply_map(ch, rng::density(gen, 4)).trace() - 1.0));
  }
  c.within("|tr out - 1| over 1..4 vectors", worst, 1e-10);
  return c;
}

Criterion werner_holevo_check() {
  Criterion c(10, "spin-1 channel at p = 1 vs Werner-Holevo");
  const KrausChannel ch = build_channel(spin_rep(2), 1.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    auto gen = rng::stream(114, static_cast<std::uint64_t>(i));
    const ComplexMatrix rho = rng::density(gen, 3);
    const RealVector a = hermitian_eigenvalues(apply_map(ch, rho));
    const RealVector b = hermitian_eigenvalues(werner_holevo_map(rho));
    worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
  }
  c.within("sorted spectrum difference", worst, 1e-9);
  return c;
}

Criterion entropy() {
  Criterion c(11, "minimal output entropy of the su(n) channel");
  double worst = 0.0;
  for (int n : {2, 3})
    for (double p : {0.2, 0.5, 0.8}) {
      const double sampled = sampled_min_entropy(build_channel(gell_mann(n), p), 10000, 115);
      worst = std::max(worst, std::abs(sampled - min_entropy_su_n(p, n)));
    }
  c.within("closed form vs sampled minimum, 10^4 inputs", worst, 1e-6);
  double crit = 0.0;
  for (int n : {2, 3}) crit = std::max(crit, std::abs(min_entropy_su_n(1.0 - 1.0 / (n * n), n) - std::log(n)));
  c.within("value at p = 1 - 1/n^2 vs ln n", crit, 1e-9);
  return c;
}

}  // namespace

int main() {
  int failed = 0;
  for (auto make : {depolarizing, structure, spin_closed_form, iteration, special_identities, g2_suite, bloch_manifolds,
                    pure_states, clifford, werner_holevo_check, entropy}) {
    try {
      failed += !make().report();
    } catch (const std::exception& e) {
      std::printf("[FAIL] exception: %s\n", e.what());
      ++failed;
    }
  }
  std::printf("%d of 11 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}

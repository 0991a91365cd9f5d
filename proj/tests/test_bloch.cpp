#include <gtest/gtest.h>

#include "liechan/liechan.hpp"

using namespace liechan;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no exception";
  return ErrorKind::Parse;
}

}  // namespace

TEST(Bloch, RoundTrip) {
  for (const GeneratorSet& g : {gell_mann(3), spin_rep(1), g2_rep()}) {
    auto gen = rng::stream(40, static_cast<std::uint64_t>(g.dim()));
    const RealVector v = rng::gaussian_vector(gen, static_cast<Eigen::Index>(g.count()));
    EXPECT_LT((bloch_vector(g, bloch_rho(g, v)) - v).norm(), 1e-12);
    EXPECT_NEAR(bloch_rho(g, v).trace().real(), 1.0, 1e-14);
  }
}

TEST(Bloch, QubitBall) {
  const GeneratorSet s = gell_mann(2);
  EXPECT_TRUE(membership_eig(s, RealVector::Unit(3, 0)));
  EXPECT_FALSE(membership_eig(s, 1.01 * RealVector::Unit(3, 0)));
  EXPECT_NEAR(norm_bound(s), 1.0, 1e-15);
}

TEST(Bloch, NormBound) {
  EXPECT_NEAR(norm_bound(gell_mann(3)), 3.0, 1e-14);
  EXPECT_NEAR(norm_bound(spin_rep(1)), 4.0, 1e-14);
  EXPECT_NEAR(norm_bound(g2_rep()), 84.0, 1e-12);
}

TEST(Bloch, SpinBall) {
  for (int two_s = 1; two_s <= 4; ++two_s) {
    const GeneratorSet j = spin_rep(two_s);
    const double radius = 2.0 / two_s;
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
      auto gen = rng::stream(41, static_cast<std::uint64_t>(1000 * two_s + i));
      const RealVector v = rng::in_ball(gen, 3, 2.0 * radius);
      if (std::abs(v.norm() - radius) < 1e-7) continue;
      EXPECT_EQ(membership_eig(j, v), v.norm() <= radius);
      ++checked;
    }
    EXPECT_GT(checked, 990);
  }
}

TEST(Bloch, CharPolyAgreesWithEig) {
  for (const GeneratorSet& g : {gell_mann(3), gell_mann(4), spin_rep(3), g2_rep()}) {
    int disagreements = 0;
    for (int i = 0; i < 300; ++i) {
      auto gen = rng::stream(42, static_cast<std::uint64_t>(i));
      const RealVector v = sample_bloch_vector(g, gen);
      if (std::abs(min_eigenvalue(bloch_rho(g, v))) < 1e-8) continue;
      disagreements += membership_eig(g, v) != membership_charpoly(g, v);
    }
    EXPECT_EQ(disagreements, 0) << g.label();
  }
}

TEST(Su3, CubicInvariantIsDeterminant) {
  const GeneratorSet g = gell_mann(3);
  for (int i = 0; i < 20; ++i) {
    auto gen = rng::stream(43, static_cast<std::uint64_t>(i));
    const RealVector v = rng::gaussian_vector(gen, 8);
    EXPECT_NEAR(su3_cubic_invariant(v), linear_combination(g, v).determinant().real(), 1e-10);
  }
}

TEST(Su3, ClosedFormAgreesWithEig) {
  const GeneratorSet g = gell_mann(3);
  int members = 0;
  for (int i = 0; i < 1000; ++i) {
    auto gen = rng::stream(44, static_cast<std::uint64_t>(i));
    const RealVector v = sample_bloch_vector(g, gen);
    if (std::abs(min_eigenvalue(bloch_rho(g, v))) < 1e-8) continue;
    EXPECT_EQ(su3_membership_closed(v), membership_eig(g, v));
    members += membership_eig(g, v);
  }
  EXPECT_GT(members, 0);
}

TEST(Cartan, PolytopeMatchesEig) {
  for (int n = 2; n <= 5; ++n) {
    const GeneratorSet g = gell_mann(n);
    const auto slots = diagonal_slots(g);
    ASSERT_EQ(slots.size(), static_cast<std::size_t>(n - 1));
    for (int i = 0; i < 200; ++i) {
      auto gen = rng::stream(45, static_cast<std::uint64_t>(100 * n + i));
      const RealVector c = rng::in_ball(gen, n - 1, std::sqrt(norm_bound(g)));
      const RealVector v = embed_cartan(g, slots, c);
      if (std::abs(min_eigenvalue(bloch_rho(g, v))) < 1e-9) continue;
      EXPECT_EQ(cartan_polytope_membership(g, c), membership_eig(g, v));
    }
  }
  EXPECT_EQ(kind_of([] { cartan_polytope_membership(gell_mann(3), RealVector::Zero(2), {0}); }),
            ErrorKind::InvalidArgument);
}

TEST(VW, RoundTrip) {
  for (int two_s = 2; two_s <= 6; ++two_s) {
    auto gen = rng::stream(46, static_cast<std::uint64_t>(two_s));
    const Eigen::Vector3d v = 0.05 * rng::gaussian_vector(gen, 3);
    Eigen::Matrix3d a;
    for (int i = 0; i < 9; ++i) a.data()[i] = 0.05 * rng::normal(gen);
    Eigen::Matrix3d w = 0.5 * (a + a.transpose());
    w += ((3.0 / ((two_s + 1.0) * spin_lambda(two_s)) - w.trace()) / 3.0) * Eigen::Matrix3d::Identity();
    const ComplexMatrix rho = rho_vw(two_s, v, w);
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    const VW back = extract_vw(rho, two_s);
    EXPECT_LT((back.v - v).norm(), 1e-10);
    EXPECT_LT((back.w - w).norm(), 1e-10);
  }
}

TEST(VW, Errors) {
  EXPECT_EQ(kind_of([] { extract_vw(identity(2) / 2.0, 1); }), ErrorKind::InvalidArgument);
  auto gen = rng::stream(47, 0);
  // a generic spin-3/2 state has a rank-3 component
  EXPECT_EQ(kind_of([&] { extract_vw(rng::density(gen, 4), 3); }), ErrorKind::SpanDeficient);
}

TEST(Decompose, SpinOneAndThreeHalves) {
  auto gen = rng::stream(48, 0);
  const ComplexMatrix rho3 = rng::density(gen, 3);
  const BlochState s = decompose_density(rho3, spin_rep(2), 2);
  EXPECT_LT(s.residual, 1e-12);
  EXPECT_LT(max_abs(reconstruct(s, spin_rep(2)) - rho3), 1e-12);

  const ComplexMatrix rho4 = rng::density(gen, 4);
  EXPECT_EQ(kind_of([&] { decompose_density(rho4, spin_rep(3), 2); }), ErrorKind::SpanDeficient);
  const BlochState t = decompose_density(rho4, spin_rep(3), 3);
  EXPECT_LT(max_abs(reconstruct(t, spin_rep(3)) - rho4), 1e-12);
}

TEST(Decompose, BlochRankOneForSuN) {
  auto gen = rng::stream(49, 0);
  const GeneratorSet g = gell_mann(3);
  const ComplexMatrix rho = rng::density(gen, 3);
  const BlochState s = decompose_density(rho, g, 1);
  const RealVector v = bloch_vector(g, rho);
  // sector coefficient is v_i / d
  for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(s.sectors[0](i), v(static_cast<Eigen::Index>(i)) / 3.0, 1e-12);
}

TEST(Reconstruct, Forms) {
  const GeneratorSet g = gell_mann(3);
  auto gen = rng::stream(50, 0);
  const RealVector v = 0.3 * rng::gaussian_vector(gen, 8);
  EXPECT_LT(max_abs(reconstruct(make_bloch_state(g, v), g) - bloch_rho(g, v)), 1e-14);
  const GeneratorSet j = spin_rep(2);
  const Eigen::Vector3d u(0.1, -0.2, 0.05);
  Eigen::Matrix3d w = Eigen::Matrix3d::Identity() * (1.0 / 6.0);
  w(0, 1) = w(1, 0) = 0.02;
  EXPECT_LT(max_abs(reconstruct(make_vw_state(j, u, w), j) - rho_vw(2, u, w)), 1e-14);
}

TEST(Pure, Su3ConditionsMatchProjector) {
  const GeneratorSet g = gell_mann(3);
  int pure_seen = 0;
  for (int i = 0; i < 200; ++i) {
    auto gen = rng::stream(51, static_cast<std::uint64_t>(i));
    const ComplexMatrix rho = i % 2 == 0 ? rng::pure_density(gen, 3) : rng::density(gen, 3);
    const PureTest t = pure_bloch_test(g, bloch_vector(g, rho));
    EXPECT_EQ(t.pure, purity_defect(rho) <= 1e-9);
    pure_seen += t.pure;
  }
  EXPECT_EQ(pure_seen, 100);
}

TEST(Pure, SpinOneFamilies) {
  int points = 0;
  for (int a = 0; a < 20; ++a)
    for (int b = 0; b < 20; ++b) {
      const double w22 = -0.5 + (a + 0.5) / 20.0, w33 = -0.5 + (b + 0.5) / 20.0;
      if (a + b < 20) continue;  // on or below the w22 + w33 = 0 edge
      ++points;
      for (auto s : {SignPattern::None, SignPattern::Flip12_13, SignPattern::Flip12_23, SignPattern::Flip13_23}) {
        const ComplexMatrix p = spin1_pure_family(w22, w33, s);
        EXPECT_LT(purity_defect(p), 1e-10);
        EXPECT_NEAR(p.trace().real(), 1.0, 1e-10);
      }
    }
  EXPECT_EQ(points, 190);
  for (int i = 0; i < 50; ++i) {
    const ComplexMatrix p = spin1_pure_omega(-0.5 + i / 49.0);
    EXPECT_LT(purity_defect(p), 1e-10);
    EXPECT_NEAR(p.trace().real(), 1.0, 1e-10);
  }
  EXPECT_EQ(kind_of([] { spin1_pure_family(0.6, 0.1); }), ErrorKind::TriangleConstraint);
  EXPECT_EQ(kind_of([] { spin1_pure_omega(0.7); }), ErrorKind::InvalidArgument);
}

TEST(Pure, SpinBasisChange) {
  const ComplexMatrix v = spin1_j_to_s();
  EXPECT_LT(max_abs(v.adjoint() * v - identity(3)), 1e-15);
  const GeneratorSet s = spin1_s_basis(), j = spin_rep(2);
  for (std::size_t a = 0; a < 3; ++a) EXPECT_LT(max_abs(v.adjoint() * s[a] * v - j[a]), 1e-15);
}

TEST(Pure, FromPsi) {
  const GeneratorSet s = spin1_s_basis();
  for (int i = 0; i < 1000; ++i) {
    auto gen = rng::stream(52, static_cast<std::uint64_t>(i));
    const ComplexVector psi = rng::pure_state(gen, 3);
    const VW vw = pure_from_psi(psi);
    EXPECT_LE(vw.v.norm(), 0.5 + 1e-12);
    if (i < 20) {
      EXPECT_LT(max_abs(vw_matrix(s, vw.v, vw.w) - psi * psi.adjoint()), 1e-12);
    }
  }
}

TEST(Bounds, G2Moments) {
  const G2Moments m = measure_moments(g2_rep());
  EXPECT_NEAR(m.m2, 0.5, 1e-10);
  EXPECT_NEAR(m.m4, 1.0 / 16.0, 1e-10);
  EXPECT_LT(m.odd_defect, 1e-10);
}

TEST(Bounds, G2Chain) {
  const auto chain = radius_bound_chain(7, {0.5, 1.0 / 16.0}, 4);
  ASSERT_EQ(chain.size(), 3u);
  EXPECT_NEAR(*chain[0].x_max, 84.0, 1e-10);
  EXPECT_NEAR(*chain[1].x_max, 28.0, 1e-10);
  EXPECT_NEAR(*chain[2].x_max, 8.0 * (10.0 - std::sqrt(65.0)), 1e-10);
  // boundary radius along random directions stays inside the refined bound
  const GeneratorSet g = g2_rep();
  double widest = 0.0;
  for (int i = 0; i < 200; ++i) {
    auto gen = rng::stream(53, static_cast<std::uint64_t>(i));
    const RealVector u = rng::unit_vector(gen, 14);
    const RealVector ev = hermitian_eigenvalues(linear_combination(g, u));
    widest = std::max(widest, 1.0 / (ev(0) * ev(0)));
  }
  EXPECT_LE(widest, 8.0 + 1e-9);
  EXPECT_LT(widest, *chain[2].x_max);
}

TEST(Bounds, QubitChain) {
  const auto chain = radius_bound_chain(2, {2.0}, 2);
  EXPECT_NEAR(*chain[0].x_max, 1.0, 1e-14);
}

TEST(Polynomial, Arithmetic) {
  const Polynomial a{1.0, 2.0}, b{0.0, 0.0, 3.0};
  EXPECT_EQ(a + b, (Polynomial{1.0, 2.0, 3.0}));
  EXPECT_EQ(a * a, (Polynomial{1.0, 4.0, 4.0}));
  EXPECT_DOUBLE_EQ(b(2.0), 12.0);
  EXPECT_EQ((Polynomial{1.0, 0.0, 0.0}).degree(), 0);
}

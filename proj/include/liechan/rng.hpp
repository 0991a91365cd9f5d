#ifndef LIECHAN_RNG_HPP
#define LIECHAN_RNG_HPP

// Seeded sampling helpers. Each sample index gets its own generator derived
// from (seed, index), so results never depend on evaluation order.

#include <cmath>
#include <cstdint>
#include <random>

#include "liechan/matcore.hpp"

namespace liechan::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

using Engine = std::mt19937_64;

inline Engine stream(std::uint64_t seed, std::uint64_t index) {
  return Engine(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

inline double normal(Engine& g) { return std::normal_distribution<double>(0.0, 1.0)(g); }

inline double uniform(Engine& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

inline RealVector gaussian_vector(Engine& g, Eigen::Index n) {
  RealVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = normal(g);
  return v;
}

inline RealVector unit_vector(Engine& g, Eigen::Index n) {
  RealVector v = gaussian_vector(g, n);
  while (v.norm() == 0.0) v = gaussian_vector(g, n);
  return v / v.norm();
}

/// Uniform sample from the closed ball of the given radius in R^n.
inline RealVector in_ball(Engine& g, Eigen::Index n, double radius) {
  const double r = radius * std::pow(uniform(g, 0.0, 1.0), 1.0 / static_cast<double>(n));
  return r * unit_vector(g, n);
}

inline ComplexMatrix ginibre(Engine& g, Eigen::Index d) {
  ComplexMatrix m(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = Complex(normal(g), normal(g));
  return m;
}

/// Haar-random unit vector in C^d.
inline ComplexVector pure_state(Engine& g, Eigen::Index d) {
  ComplexVector psi(d);
  for (Eigen::Index i = 0; i < d; ++i) psi(i) = Complex(normal(g), normal(g));
  return psi / psi.norm();
}

inline ComplexMatrix pure_density(Engine& g, Eigen::Index d) {
  const ComplexVector psi = pure_state(g, d);
  return psi * psi.adjoint();
}

/// Full-rank random density matrix G G^dagger / tr(G G^dagger).
inline ComplexMatrix density(Engine& g, Eigen::Index d) {
  const ComplexMatrix m = ginibre(g, d);
  ComplexMatrix rho = m * m.adjoint();
  rho = 0.5 * (rho + rho.adjoint());
  return rho / rho.trace().real();
}

inline ComplexMatrix hermitian(Engine& g, Eigen::Index d) {
  const ComplexMatrix m = ginibre(g, d);
  return 0.5 * (m + m.adjoint());
}

/// Random orthogonal matrix from the QR factor of a Gaussian matrix.
inline RealMatrix orthogonal(Engine& g, Eigen::Index n) {
  RealMatrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = normal(g);
  Eigen::HouseholderQR<RealMatrix> qr(a);
  return qr.householderQ() * RealMatrix::Identity(n, n);
}

}  // namespace liechan::rng

#endif

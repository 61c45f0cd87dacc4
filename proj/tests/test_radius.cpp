#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "accretive/loewner.hpp"
#include "accretive/radius.hpp"
#include "accretive/sectorial.hpp"

using namespace accretive;

namespace {

Matrix gaussian(Index n, Rng& rng) {
  Matrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = rng.complex_normal();
  return m;
}

Matrix normal_matrix(Index n, Rng& rng, Vector* spectrum = nullptr) {
  const Matrix u = random_unitary(n, rng);
  Vector d(n);
  for (Index k = 0; k < n; ++k) d(k) = rng.complex_normal();
  if (spectrum) *spectrum = d;
  return u * d.asDiagonal() * u.adjoint();
}

// Lower bound by brute force: max |<Ax, x>| over random unit vectors.
double sampled_radius(const Matrix& a, Rng& rng, int samples) {
  double best = 0.0;
  for (int k = 0; k < samples; ++k) {
    const Vector x = random_unit_vector(a.rows(), rng);
    best = std::max(best, std::abs(x.dot(a * x)));
  }
  return best;
}

}  // namespace

TEST(NumericalRadius, NilpotentJordanBlock) {
  Matrix j = Matrix::Zero(2, 2);
  j(0, 1) = 1;
  EXPECT_NEAR(numerical_radius(j).omega, 0.5, 1e-6);
}

TEST(NumericalRadius, NormalEqualsSpectralRadius) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    Vector d;
    const Matrix a = normal_matrix(2 + trial % 10, rng, &d);
    EXPECT_NEAR(numerical_radius(a).omega, d.cwiseAbs().maxCoeff(), 1e-7);
  }
}

TEST(NumericalRadius, ThetaStarIsConsistent) {
  Rng rng(32);
  const Matrix a = gaussian(5, rng);
  const RadiusResult r = numerical_radius(a);
  EXPECT_TRUE(r.refined);
  EXPECT_EQ(r.grid_points, 720);
  EXPECT_GE(r.theta_star, 0.0);
  EXPECT_LT(r.theta_star, 2 * std::numbers::pi);
  EXPECT_NEAR(hermitian_part(std::polar(1.0, r.theta_star) * a).max_eigenvalue(), r.omega, 1e-12);
  EXPECT_LE(r.omega, op_norm(a) + 1e-9);
  EXPECT_GE(r.omega, op_norm(a) / 2 - 1e-9);
}

TEST(NumericalRadius, DominatesSampledQuadraticForms) {
  Rng rng(33);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = gaussian(2 + trial % 4, rng);
    const double omega = numerical_radius(a).omega;
    const double sampled = sampled_radius(a, rng, 20000);
    EXPECT_LE(sampled, omega + 1e-12);
    // Brute force over a dense angle grid, no local refinement.
    double dense = 0.0;
    for (int k = 0; k < 20000; ++k) {
      dense = std::max(dense, hermitian_part(std::polar(1.0, 2 * std::numbers::pi * k / 20000) * a).max_eigenvalue());
    }
    EXPECT_LE(dense, omega + 1e-12);
    EXPECT_GE(dense, omega - 1e-7 * op_norm(a));
  }
}

TEST(NumericalRadius, PhaseAndUnitaryInvariance) {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = gaussian(6, rng);
    const double omega = numerical_radius(a).omega;
    const Complex phase = std::polar(1.0, rng.uniform(0, 2 * std::numbers::pi));
    EXPECT_NEAR(numerical_radius(phase * a).omega, omega, 1e-9);
    const Matrix u = random_unitary(6, rng);
    EXPECT_NEAR(numerical_radius(u.adjoint() * a * u).omega, omega, 1e-8);
  }
}

TEST(Bounds, ChainAndKittanehEquality) {
  Rng rng(35);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix a = trial % 2 ? gaussian(4, rng) : Matrix(gaussian(4, rng).triangularView<Eigen::StrictlyUpper>());
    const double omega = numerical_radius(a).omega;
    for (double p : {1.0, 2.0}) {
      for (double t : {0.1, 0.5, 0.9}) {
        const WeightParam w(t);
        const double refined = refined_bound(a, p, w);
        EXPECT_LE(omega, refined + 1e-8);
        EXPECT_LE(refined, power_bound(a, p, w) + 1e-8);
      }
    }
    EXPECT_NEAR(refined_bound(a, 1.0, kMidpoint), kittaneh_bound(a), 1e-9 * std::max(1.0, op_norm(a)));
  }
  for (int trial = 0; trial < 10; ++trial) {
    Vector d;
    const Matrix a = normal_matrix(5, rng, &d);
    EXPECT_NEAR(kittaneh_bound(a), d.cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_NEAR(refined_bound(a, 1.0, kMidpoint), kittaneh_bound(a), 1e-9);
  }
}

TEST(Bounds, RefinedMatrixBetweenZeroAndPowerMatrix) {
  Rng rng(36);
  const Matrix a = gaussian(5, rng);
  const WeightParam w(0.3);
  const HermitianMatrix m = refined_bound_matrix(a, 2.0, w);
  const HermitianMatrix pw = 0.7 * abs_power(a.adjoint(), 4.0) + 0.3 * abs_power(a, 4.0);
  EXPECT_GE(loewner_margin(m, HermitianMatrix::zero(5)), -1e-12);
  EXPECT_GE(loewner_margin(pw, m), -1e-12);
}

TEST(Bounds, RejectSmallPower) {
  const Matrix a = Matrix::Identity(2, 2);
  EXPECT_THROW(power_bound(a, 0.5, kMidpoint), NumericError);
  EXPECT_THROW(refined_bound(a, 0.0, kMidpoint), NumericError);
}

#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <numbers>

#include "accretive/means.hpp"
#include "accretive/quadrature.hpp"

using namespace accretive;

TEST(GaussJacobi, LegendreCaseIntegratesPolynomials) {
  const QuadratureRule r = gauss_jacobi(5, 0.0, 0.0);
  double m4 = 0.0, m9 = 0.0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) {
    m4 += r.weights[k] * std::pow(r.nodes[k], 4);
    m9 += r.weights[k] * std::pow(r.nodes[k], 9);
  }
  EXPECT_NEAR(r.total_weight(), 2.0, 1e-14);
  EXPECT_NEAR(m4, 0.4, 1e-14);
  EXPECT_NEAR(m9, 0.0, 1e-14);
}

class GaussJacobiMoments : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(GaussJacobiMoments, MatchesTanhSinh) {
  const auto [a, b] = GetParam();
  boost::math::quadrature::tanh_sinh<double> ts;
  const QuadratureRule r = gauss_jacobi(12, a, b);
  for (int k = 0; k <= 10; ++k) {
    double rule = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) rule += r.weights[i] * std::pow(r.nodes[i], k);
    const double exact = ts.integrate([&](double x, double xc) {
      // xc is the signed distance to the nearer endpoint; it keeps the singular factors accurate.
      const double om = x > 0 ? xc : 1.0 - x;
      const double op = x < 0 ? -xc : 1.0 + x;
      return std::pow(om, a) * std::pow(op, b) * std::pow(x, k);
    }, -1.0, 1.0);
    EXPECT_NEAR(rule, exact, 1e-9 * std::max(1.0, std::abs(exact))) << "a=" << a << " b=" << b << " k=" << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Exponents, GaussJacobiMoments,
                         ::testing::Values(std::pair{0.0, 0.0}, std::pair{-0.5, -0.5}, std::pair{-0.3, -0.7},
                                           std::pair{-0.8, -0.2}, std::pair{0.5, 1.5}, std::pair{-0.25, 0.0}));

TEST(GaussJacobi, RejectsBadArguments) {
  EXPECT_THROW(gauss_jacobi(0, 0.0, 0.0), NumericError);
  EXPECT_THROW(gauss_jacobi(4, -1.0, 0.0), NumericError);
}

TEST(AffineMap, ScalesWeights) {
  const QuadratureRule r = affine_map(gauss_jacobi(6, 0.0, 0.0), 2.0, 5.0);
  EXPECT_NEAR(r.total_weight(), 3.0, 1e-14);
  for (double x : r.nodes) {
    EXPECT_GT(x, 2.0);
    EXPECT_LT(x, 5.0);
  }
}

// The scalar identity behind the power-density measure:
//   x^a = int_0^1 (1 !_t x) dnu_a(t),  dnu_a = (sin(a pi)/pi) t^(a-1) (1-t)^(-a) dt,
// checked by an independent quadrature before trusting the Gauss-Jacobi rule.
TEST(PowerDensity, ScalarIdentityByTanhSinh) {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double a : {0.2, 0.5, 0.8}) {
    const double c = std::sin(a * std::numbers::pi) / std::numbers::pi;
    for (double x : {0.05, 0.7, 3.0, 40.0}) {
      const double value = ts.integrate([&](double t, double tc) {
        const double one_minus_t = t > 0.5 ? tc : 1.0 - t;
        const double harmonic = 1.0 / (one_minus_t + t / x);
        return c * std::pow(t, a - 1.0) * std::pow(one_minus_t, -a) * harmonic;
      }, 0.0, 1.0);
      EXPECT_NEAR(value, std::pow(x, a), 1e-9 * std::pow(x, a)) << "a=" << a << " x=" << x;
    }
  }
}

TEST(PowerDensity, GaussJacobiReproducesScalarPower) {
  for (double a : {0.2, 0.5, 0.8}) {
    const RepresentingMeasure m = RepresentingMeasure::power_density(a);
    EXPECT_NEAR(m.total_mass(), 1.0, 1e-10);
    const QuadratureRule r = m.discretize(256);
    for (double x : {0.05, 0.7, 3.0, 40.0}) {
      double value = 0.0;
      for (std::size_t k = 0; k < r.nodes.size(); ++k) value += r.weights[k] / ((1.0 - r.nodes[k]) + r.nodes[k] / x);
      EXPECT_NEAR(value, std::pow(x, a), 1e-9 * std::pow(x, a)) << "a=" << a << " x=" << x;
    }
    const QuadratureRule split = m.discretize_split(64);
    EXPECT_NEAR(split.total_weight(), 1.0, 1e-10);
  }
}

TEST(Adaptive, MatrixIntegrandWithKnownIntegral) {
  // int_0^1 diag(e^t, cos t) + [[0, t^2],[0, 0]] dt
  const AdaptiveIntegral r = integrate_adaptive(
      [](double t) {
        Matrix m = Matrix::Zero(2, 2);
        m(0, 0) = std::exp(t);
        m(1, 1) = std::cos(t);
        m(0, 1) = t * t;
        return m;
      },
      0.0, 1.0, 1e-12);
  EXPECT_NEAR(r.value(0, 0).real(), std::exp(1.0) - 1.0, 1e-12);
  EXPECT_NEAR(r.value(1, 1).real(), std::sin(1.0), 1e-12);
  EXPECT_NEAR(r.value(0, 1).real(), 1.0 / 3.0, 1e-12);
  EXPECT_GT(r.evaluations, 0);
}

TEST(Adaptive, HandlesKinkBySubdivision) {
  const AdaptiveIntegral r = integrate_adaptive(
      [](double t) { return Matrix::Constant(1, 1, Complex(std::abs(t - 0.3), 0.0)); }, 0.0, 1.0, 1e-10);
  EXPECT_NEAR(r.value(0, 0).real(), 0.5 * (0.09 + 0.49), 1e-10);
}

TEST(Adaptive, ThrowsWhenBudgetExhausted) {
  EXPECT_THROW(integrate_adaptive([](double t) { return Matrix::Constant(1, 1, Complex(1.0 / std::sqrt(t + 1e-300), 0)); },
                                  0.0, 1.0, 1e-15, 2),
               NumericError);
}

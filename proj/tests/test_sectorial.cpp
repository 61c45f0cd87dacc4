#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "accretive/loewner.hpp"
#include "accretive/sectorial.hpp"

using namespace accretive;

TEST(Accretive, Examples) {
  Matrix a(2, 2);
  a << 1, 10, 0, 1;
  const AccretivityTest r = is_accretive(a);
  EXPECT_FALSE(r.accretive);
  EXPECT_NEAR(r.margin, -4.0, 1e-12);
  EXPECT_TRUE(is_accretive(Matrix::Identity(3, 3)).accretive);
}

TEST(SectorialIndex, KnownValue) {
  Matrix a(2, 2);
  a << 1, Complex(0, 1), Complex(0, 1), 1;
  EXPECT_NEAR(sectorial_index(a), std::numbers::pi / 4, 1e-12);
  EXPECT_NEAR(sectorial_index(Matrix::Identity(3, 3)), 0.0, 1e-14);
  Matrix bad(2, 2);
  bad << 1, 10, 0, 1;
  EXPECT_THROW(sectorial_index(bad), NumericError);
}

TEST(SectorialIndex, NumericalRangeStaysInSector) {
  // Sample <Ax, x> and compare |Im| / Re against tan(index).
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_accretive(5, rng);
    const double tan_alpha = std::tan(sectorial_index(a));
    double worst = 0.0;
    for (int k = 0; k < 2000; ++k) {
      const Vector x = random_unit_vector(5, rng);
      const Complex z = x.dot(a * x);
      worst = std::max(worst, std::abs(z.imag()) / z.real());
    }
    EXPECT_LE(worst, tan_alpha * (1 + 1e-12));
  }
}

TEST(SectorialCert, CertifiesAndRejects) {
  Rng rng(22);
  const Matrix a = random_sectorial(4, 0.7, rng);
  EXPECT_NEAR(sectorial_index(a), std::atan(0.95 * std::tan(0.7)), 1e-10);
  const SectorialCert c = SectorialCert::certify(a, 0.7);
  EXPECT_DOUBLE_EQ(c.alpha(), 0.7);
  EXPECT_NEAR(c.sec2(), 1.0 / std::pow(std::cos(0.7), 2), 1e-14);
  EXPECT_THROW(SectorialCert::certify(a, 0.3), NumericError);
  EXPECT_NEAR(SectorialCert::certify(a).alpha(), sectorial_index(a), 1e-14);
}

TEST(Rng, DeterministicAndStreamSeparated) {
  Rng a(42, 3), b(42, 3), c(42, 4);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(a.next_u64(), b.next_u64());
  Rng d(42, 3);
  EXPECT_NE(d.next_u64(), c.next_u64());
  EXPECT_NE(mix_seed(1, 0), mix_seed(0, 1));
}

TEST(Rng, Ranges) {
  Rng rng(1);
  std::set<std::int64_t> seen;
  double sum = 0, sum2 = 0;
  for (int k = 0; k < 20000; ++k) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    seen.insert(rng.uniform_int(2, 8));
    const double g = rng.normal();
    sum += g;
    sum2 += g * g;
  }
  EXPECT_EQ(seen.size(), 7u);
  EXPECT_EQ(*seen.begin(), 2);
  EXPECT_NEAR(sum / 20000, 0.0, 0.05);
  EXPECT_NEAR(sum2 / 20000, 1.0, 0.05);
}

TEST(Generators, Properties) {
  Rng rng(23);
  for (Index n : {1, 3, 8, 16}) {
    const Matrix u = random_unitary(n, rng);
    EXPECT_LE((u.adjoint() * u - Matrix::Identity(n, n)).norm(), 1e-12);
    const HermitianMatrix pd(random_positive_definite(n, rng));
    EXPECT_GE(pd.min_eigenvalue(), 0.1 - 1e-12);
    EXPECT_LE(pd.max_eigenvalue(), 1.0 + 1e-12);
    EXPECT_GE(HermitianMatrix(random_psd(n, rng)).min_eigenvalue(), -1e-12);
    EXPECT_NEAR(random_unit_vector(n, rng).norm(), 1.0, 1e-14);
    EXPECT_TRUE(is_accretive(random_accretive(n, rng)).accretive);
    for (double alpha : {0.2, 0.9, 1.4}) {
      const Matrix s = random_sectorial(n, alpha, rng);
      EXPECT_NO_THROW(SectorialCert::certify(s, alpha));
    }
  }
}

TEST(Ensemble, PairsAndValidation) {
  EnsembleSpec spec{5, EnsembleClass::loewner_pair, 0.5, 9, 1.0};
  const auto [a, b] = std::get<MatrixPair>(generate(spec));
  EXPECT_GE(loewner_gap(HermitianMatrix(b), HermitianMatrix(a)), -1e-12);
  spec.cls = EnsembleClass::sectorial;
  spec.alpha = 0.7;
  const Matrix s = std::get<Matrix>(generate(spec));
  EXPECT_NO_THROW(SectorialCert::certify(s, 0.7));
  EXPECT_EQ(std::get<Matrix>(generate(spec)), s);
  const MatrixPair pair = generate_pair(spec);
  EXPECT_EQ(pair.first, s);
  EXPECT_NE(pair.second, s);
  spec.dim = 17;
  EXPECT_THROW(spec.validate(), NumericError);
  spec.dim = 4;
  spec.alpha = 1.6;
  EXPECT_THROW(spec.validate(), NumericError);
  EXPECT_EQ(parse_ensemble_class("positive_pair"), EnsembleClass::positive_pair);
  EXPECT_THROW(parse_ensemble_class("wishart"), NumericError);
}

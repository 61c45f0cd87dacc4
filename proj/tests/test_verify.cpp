#include <gtest/gtest.h>

#include <cmath>

#include "accretive/report.hpp"
#include "accretive/verify.hpp"

using namespace accretive;

namespace accretive {
void PrintTo(CaseId id, std::ostream* os) { *os << case_info(id).name; }
}  // namespace accretive

namespace {

SuiteConfig small_config(const std::string& case_name, int trials) {
  SuiteConfig c;
  c.cases = {case_name};
  c.trials = trials;
  c.dim_min = 2;
  c.dim_max = 5;
  return c;
}

}  // namespace

TEST(LemmaScalar, EqualityCases) {
  // The lower refinement is an equality at t = 0, 1/2, 1; the upper one only at
  // t = 1/2, and at the endpoints its slack is exactly 2D.
  for (ConvexFunction f : {ConvexFunction::exp, ConvexFunction::square, ConvexFunction::reciprocal}) {
    const double a = 0.3, b = 2.1;
    const double d = 0.5 * (evaluate(f, a) + evaluate(f, b)) - evaluate(f, 0.5 * (a + b));
    for (double t : {0.0, 0.5, 1.0}) {
      const MarginPair m = check_lemma_scalar(f, a, b, WeightParam(t));
      EXPECT_NEAR(m.first, 0.0, 1e-12);
      EXPECT_NEAR(m.second, t == 0.5 ? 0.0 : 2.0 * d, 1e-12);
    }
  }
}

TEST(LemmaScalar, SquareClosedForm) {
  // f = x^2: chord - f(mix) = t(1-t)(a-b)^2 and D = (a-b)^2/4.
  const double a = 1.0, b = 3.0, t = 0.2;
  const MarginPair m = check_lemma_scalar(ConvexFunction::square, a, b, WeightParam(t));
  EXPECT_NEAR(m.first, t * (1 - t) * 4 - 2 * t * 1.0, 1e-13);
  EXPECT_NEAR(m.second, 2 * (1 - t) * 1.0 - t * (1 - t) * 4, 1e-13);
  EXPECT_THROW(evaluate(ConvexFunction::neg_log, -1.0), NumericError);
}

TEST(PathConvexity, ArithmeticPathIsAffine) {
  Rng rng(51);
  const Matrix a = random_positive_definite(3, rng), b = random_positive_definite(3, rng);
  const Vector x = random_unit_vector(3, rng);
  const std::vector<double> grid{0.0, 0.5, 1.0};
  const PathConvexity pc = check_path_convexity(a, b, MeanFamily::arithmetic, x, grid);
  EXPECT_NEAR(pc.convexity, 0.0, 1e-14);
  EXPECT_FALSE(pc.log_convexity.has_value());
  const PathConvexity g = check_path_convexity(a, b, MeanFamily::geometric, x, grid);
  EXPECT_GE(g.convexity, -1e-10);
  ASSERT_TRUE(g.log_convexity.has_value());
  EXPECT_GE(*g.log_convexity, -1e-10);
}

TEST(McCarthy, IdentityGivesEquality) {
  const Matrix b = Matrix::Identity(3, 3) * 2.0;
  Rng rng(52);
  const MarginPair m = check_mccarthy(b, random_unit_vector(3, rng), WeightParam(0.3));
  EXPECT_NEAR(m.first, 0.0, 1e-14);
  EXPECT_NEAR(m.second, 0.0, 1e-14);
}

TEST(Checks, CertificateMismatchIsReported) {
  Rng rng(53);
  const SectorialCert a = SectorialCert::certify(random_sectorial(3, 0.5, rng), 0.5);
  const SectorialCert b = SectorialCert::certify(random_sectorial(3, 0.5, rng), 0.6);
  try {
    check_thm_sec2_reverse(a, b, MeanFamily::geometric, kMidpoint);
    FAIL();
  } catch (const NumericError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CertificateMismatch);
  }
  EXPECT_THROW(check_concave_sec2(a, SectorialCert::certify(a.matrix(), 0.5), 1.5, kMidpoint), NumericError);
}

TEST(Checks, HarmonicRefineOnPositiveDefiniteIsTight) {
  // For Hermitian A, B the refined term collapses to Re A !_t Re B.
  Rng rng(54);
  const Matrix a = random_positive_definite(4, rng), b = random_positive_definite(4, rng);
  const HarmonicRefineMargins m = check_harmonic_refine(a, b, WeightParam(0.3));
  EXPECT_NEAR(m.refine, 0.0, 1e-12);
  EXPECT_NEAR(m.baseline, 0.0, 1e-12);
}

TEST(Checks, ScaleInvariance) {
  // Scaling both inputs by c leaves the sign of every normalized margin unchanged.
  Rng rng(55);
  const Matrix a = random_sectorial(4, 0.9, rng), b = random_sectorial(4, 0.9, rng);
  const WeightParam w(0.25);
  const double base = check_thm_nabla_vs_sigma(a, b, MeanFamily::geometric, w);
  const double base2 = check_thm_sec2_reverse(SectorialCert::certify(a, 0.9), SectorialCert::certify(b, 0.9),
                                              MeanFamily::harmonic, w);
  for (double c : {1e-3, 1e3}) {
    const Matrix ca = c * a, cb = c * b;
    const double scaled = check_thm_nabla_vs_sigma(ca, cb, MeanFamily::geometric, w);
    EXPECT_EQ(std::signbit(scaled), std::signbit(base));
    EXPECT_GE(scaled, -1e-8);
    const double scaled2 = check_thm_sec2_reverse(SectorialCert::certify(ca, 0.9), SectorialCert::certify(cb, 0.9),
                                                  MeanFamily::harmonic, w);
    EXPECT_EQ(std::signbit(scaled2), std::signbit(base2));
    EXPECT_GE(scaled2, -1e-8);
  }
}

TEST(Cases, TableIsConsistent) {
  for (const CaseInfo& c : all_cases()) {
    EXPECT_EQ(parse_case_id(c.name), c.id);
    EXPECT_EQ(case_info(c.id).name, c.name);
  }
  EXPECT_THROW(parse_case_id("no_such_case"), NumericError);
  SuiteConfig c;
  EXPECT_EQ(c.selected_cases().size(), all_cases().size());
}

TEST(Suite, ZeroTrialsIsEmptyPass) {
  SuiteConfig c;
  c.trials = 0;
  const auto reports = run_suite(c);
  EXPECT_TRUE(reports.empty());
  EXPECT_TRUE(all_pass(reports));
  EXPECT_EQ(exit_code(reports), 0);
}

TEST(Suite, DeterministicModuloWallTime) {
  SuiteConfig c;
  c.cases = {"thm_nabla_vs_sigma", "radius_refine", "tsallis_monotone"};
  c.trials = 6;
  const auto r1 = run_suite(c);
  const auto r2 = run_suite(c);
  EXPECT_EQ(reports_to_json(r1, false), reports_to_json(r2, false));
  c.seed = 43;
  EXPECT_NE(reports_to_json(run_suite(c), false), reports_to_json(r1, false));
}

TEST(Suite, ReplayReproducesTrialMargin) {
  const SuiteConfig c = small_config("thm_sec2_reverse", 5);
  const InequalityReport r = run_case(CaseId::thm_sec2_reverse, c);
  std::vector<double> replayed;
  for (int k = 0; k < 5; ++k) replayed.push_back(run_trial(CaseId::thm_sec2_reverse, c, k).margin);
  std::sort(replayed.begin(), replayed.end());
  EXPECT_EQ(replayed, r.margins);
}

TEST(Suite, FailuresAreRecordedWithSeeds) {
  // The sandwich on unordered positive pairs fails; the report must carry replayable seeds.
  const InequalityReport r = run_case(CaseId::tsallis_sandwich, small_config("tsallis_sandwich", 40));
  EXPECT_FALSE(r.pass);
  ASSERT_FALSE(r.failures.empty());
  EXPECT_LT(r.min_margin, -r.tol);
  const TrialResult t = run_trial(CaseId::tsallis_sandwich, small_config("tsallis_sandwich", 40), r.failures[0].trial);
  EXPECT_LT(t.margin, -r.tol);
}

class CaseSmoke : public ::testing::TestWithParam<CaseId> {};

TEST_P(CaseSmoke, PassesOnSmallRun) {
  const CaseInfo& info = case_info(GetParam());
  const InequalityReport r = run_case(info.id, small_config(std::string(info.name), 8));
  EXPECT_TRUE(r.pass) << info.name << " min_margin=" << r.min_margin;
  EXPECT_EQ(static_cast<int>(r.margins.size()), 8);
  EXPECT_TRUE(std::is_sorted(r.margins.begin(), r.margins.end()));
  EXPECT_EQ(r.tol, info.quadrature ? 1e-6 : 1e-8);
}

INSTANTIATE_TEST_SUITE_P(
    AllButSandwich, CaseSmoke,
    ::testing::Values(CaseId::lemma_scalar, CaseId::prop_path_convex, CaseId::prop_path_logconvex,
                      CaseId::mccarthy_lower, CaseId::mccarthy_upper, CaseId::baseline_real_part,
                      CaseId::baseline_sec2_reverse, CaseId::thm_nabla_vs_sigma, CaseId::thm_sec2_reverse,
                      CaseId::remark_positive_sandwich, CaseId::thm_harmonic_refine, CaseId::cor_integral_refine,
                      CaseId::thm_concave_sec2, CaseId::thm_hermite_hadamard, CaseId::radius_refine,
                      CaseId::lnt_convexity, CaseId::tsallis_param_convex, CaseId::tsallis_sandwich_ordered,
                      CaseId::tsallis_monotone, CaseId::tsallis_half_identity),
    [](const ::testing::TestParamInfo<CaseId>& info) { return std::string(case_info(info.param).name); });

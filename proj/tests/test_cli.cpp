#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "accretive/config.hpp"
#include "accretive/matrix_io.hpp"
#include "accretive/report.hpp"
#include "accretive/sectorial.hpp"

using namespace accretive;

TEST(Config, EmptyArgsGiveDefaults) {
  const VerifyOptions o = parse_verify_args({});
  EXPECT_EQ(o.config.trials, 500);
  EXPECT_EQ(o.config.dim_min, 2);
  EXPECT_EQ(o.config.dim_max, 8);
  EXPECT_EQ(o.config.tol, 1e-8);
  EXPECT_EQ(o.config.seed, 42u);
  EXPECT_EQ(o.config.t_grid, (std::vector<double>{0.1, 0.25, 0.5, 0.75, 0.9}));
  EXPECT_FALSE(o.replay.has_value());
}

TEST(Config, OutOfRangeWeightIsRejected) {
  EXPECT_THROW(parse_verify_args({"--t", "1.5"}), ConfigError);
  EXPECT_THROW(parse_verify_args({"--alpha", "1.6"}), ConfigError);
  EXPECT_THROW(parse_verify_args({"--p", "0.5"}), ConfigError);
  EXPECT_THROW(parse_verify_args({"--s", "0"}), ConfigError);
  EXPECT_THROW(parse_verify_args({"--dim", "3..20"}), ConfigError);
  EXPECT_THROW(parse_verify_args({"--case", "bogus"}), ConfigError);
  EXPECT_THROW(parse_verify_args({"--frobnicate"}), ConfigError);
}

TEST(Config, SingleCase) {
  const VerifyOptions o = parse_verify_args({"--case", "thm_nabla_vs_sigma", "--trials", "10"});
  ASSERT_EQ(o.config.selected_cases().size(), 1u);
  EXPECT_EQ(o.config.selected_cases()[0], CaseId::thm_nabla_vs_sigma);
  EXPECT_EQ(o.config.trials, 10);
}

TEST(Config, ListsRangesAndReplay) {
  const VerifyOptions o = parse_verify_args(
      {"--case", "lemma_scalar,radius_refine", "--dim", "3..6", "--t", "0.2,0.4", "--replay", "17:4"});
  EXPECT_EQ(o.config.selected_cases().size(), 2u);
  EXPECT_EQ(o.config.dim_min, 3);
  EXPECT_EQ(o.config.dim_max, 6);
  EXPECT_EQ(o.config.t_grid, (std::vector<double>{0.2, 0.4}));
  ASSERT_TRUE(o.replay.has_value());
  EXPECT_EQ(o.replay->seed, 17u);
  EXPECT_EQ(o.replay->trial, 4);
  EXPECT_THROW(parse_replay("17"), ConfigError);
  EXPECT_THROW(parse_replay("x:1"), ConfigError);
}

TEST(Config, Precedence) {
  const auto path = std::filesystem::temp_directory_path() / "accretive_lab_config_test.json";
  {
    std::ofstream out(path);
    out << R"({"seed": 7, "trials": 3, "t_grid": [0.3], "dims": "2..4"})";
  }
  // Environment only.
  EXPECT_EQ(parse_verify_args({}, "99").config.seed, 99u);
  // File beats environment.
  VerifyOptions o = parse_verify_args({"--config", path.string()}, "99");
  EXPECT_EQ(o.config.seed, 7u);
  EXPECT_EQ(o.config.trials, 3);
  EXPECT_EQ(o.config.dim_max, 4);
  // Flag beats file.
  o = parse_verify_args({"--config", path.string(), "--seed", "5", "--trials", "4"}, "99");
  EXPECT_EQ(o.config.seed, 5u);
  EXPECT_EQ(o.config.trials, 4);
  EXPECT_EQ(o.config.t_grid, (std::vector<double>{0.3}));
  std::filesystem::remove(path);
  EXPECT_THROW(parse_verify_args({}, "not-a-number"), ConfigError);
}

TEST(Config, FileErrors) {
  SuiteConfig c;
  EXPECT_THROW(apply_config_json("{", c), ConfigError);
  EXPECT_THROW(apply_config_json(R"({"trails": 3})", c), ConfigError);
  EXPECT_THROW(apply_config_json(R"({"trials": "many"})", c), ConfigError);
  EXPECT_THROW(parse_verify_args({"--config", "/nonexistent/config.json"}), ConfigError);
}

TEST(Config, Help) {
  const VerifyOptions o = parse_verify_args({"--help"});
  EXPECT_TRUE(o.help_requested);
  EXPECT_NE(o.help.find("--replay"), std::string::npos);
}

TEST(MatrixIo, RoundTrip) {
  Rng rng(61);
  const Matrix a = random_accretive(4, rng);
  EXPECT_EQ(parse_matrix(format_matrix(a)), a);
  const Matrix real = parse_matrix(R"({"n": 2, "re": [[1, 2], [3, 4]]})");
  EXPECT_EQ(real(1, 0), Complex(3, 0));
  EXPECT_EQ(real(0, 1).imag(), 0.0);
}

TEST(MatrixIo, Malformed) {
  EXPECT_THROW(parse_matrix("[1,2]"), NumericError);
  EXPECT_THROW(parse_matrix(R"({"n": 2, "re": [[1, 2]]})"), NumericError);
  EXPECT_THROW(parse_matrix(R"({"n": 2, "re": [[1, 2], [3]]})"), NumericError);
  EXPECT_THROW(parse_matrix(R"({"n": 1, "re": [["a"]]})"), NumericError);
  EXPECT_THROW(parse_matrix(R"({"n": 0, "re": []})"), NumericError);
  EXPECT_THROW(read_matrix("/nonexistent/a.json"), std::runtime_error);
}

TEST(Report, JsonRoundTripAndSchema) {
  SuiteConfig c;
  c.cases = {"lemma_scalar", "mccarthy_upper"};
  c.trials = 5;
  const auto reports = run_suite(c);
  const std::string text = reports_to_json(reports);
  EXPECT_EQ(reports_from_json(text), reports);
  for (const char* key : {"\"case\"", "\"trials\"", "\"dims\"", "\"seed\"", "\"min_margin\"", "\"margins_histogram\"",
                          "\"failures\"", "\"pass\"", "\"wall_time\""}) {
    EXPECT_NE(text.find(key), std::string::npos) << key;
  }
  EXPECT_THROW(reports_from_json("{}"), NumericError);
}

TEST(Report, NonFiniteMarginsSurvive) {
  InequalityReport r;
  r.case_id = "x";
  r.margins = {std::nan(""), 1.0};
  r.min_margin = std::nan("");
  r.pass = false;
  r.failures = {{1, 0}};
  const auto back = reports_from_json(reports_to_json(std::vector{r}));
  ASSERT_EQ(back.size(), 1u);
  EXPECT_TRUE(std::isnan(back[0].margins[0]));
  EXPECT_TRUE(std::isnan(back[0].min_margin));
}

TEST(Report, HistogramCountsEverything) {
  const std::vector<double> m{-1.0, 0.0, 0.5, 1.0, 1.0};
  const Histogram h = margin_histogram(m, 4);
  ASSERT_EQ(h.edges.size(), 5u);
  EXPECT_DOUBLE_EQ(h.edges.front(), -1.0);
  EXPECT_DOUBLE_EQ(h.edges.back(), 1.0);
  int total = 0;
  for (int c : h.counts) total += c;
  EXPECT_EQ(total, 5);
  EXPECT_EQ(h.counts.back(), 3);  // 0.5, 1.0, 1.0
  const Histogram single = margin_histogram(std::vector<double>{2.0, 2.0}, 3);
  EXPECT_EQ(single.counts[0], 2);
  EXPECT_TRUE(margin_histogram(std::vector<double>{}).counts.empty());
}

TEST(Report, SummaryAndExitCode) {
  InequalityReport good, bad;
  good.case_id = "alpha";
  bad.case_id = "beta";
  bad.pass = false;
  const std::vector<InequalityReport> both{good, bad};
  const std::string table = summary_table(both);
  EXPECT_NE(table.find("alpha"), std::string::npos);
  EXPECT_NE(table.find("FAIL"), std::string::npos);
  EXPECT_EQ(exit_code(both), 1);
  EXPECT_EQ(exit_code(std::vector{good}), 0);
}

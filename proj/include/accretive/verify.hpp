#pragma once

// One check per inequality, each returning signed Loewner (or scalar)
// margins where >= 0 means the inequality holds, and the seeded trial loop
// that runs them over random ensembles.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accretive/linalg.hpp"
#include "accretive/loewner.hpp"
#include "accretive/means.hpp"
#include "accretive/sectorial.hpp"

namespace accretive {

struct MarginPair {
  double first = 0.0;
  double second = 0.0;
  double min() const noexcept { return first < second ? first : second; }
};

// ---------------------------------------------------------------------------
// Scalar kernel

enum class ConvexFunction { exp, square, quartic, neg_log, reciprocal };

std::string_view to_string(ConvexFunction f) noexcept;
double evaluate(ConvexFunction f, double x);

/// Refined convexity inequalities with r = min{t,1-t}, R = max{t,1-t}, D = (f(a)+f(b))/2 - f((a+b)/2):
///   first:  f((1-t)a+tb) + 2rD <= (1-t)f(a) + t f(b)
///   second: (1-t)f(a) + t f(b) <= f((1-t)a+tb) + 2RD
/// Margins are RHS - LHS.
MarginPair check_lemma_scalar(ConvexFunction f, double a, double b, const WeightParam& w);

struct PathConvexity {
  /// min over grid pairs of (g(a)+g(b))/2 - g((a+b)/2), g(t) = <(A s_t B)x, x>.
  double convexity = 0.0;
  /// Same for log g; only for the geometric and harmonic paths.
  std::optional<double> log_convexity;
};

PathConvexity check_path_convexity(const Matrix& a, const Matrix& b, MeanFamily family, const Vector& x,
                                   std::span<const double> grid);

/// McCarthy refinements for g(t) = <B^t x, x>, ||x|| = 1:
///   first:  g(t) <= (g(1/2)/g(1)^{1/2})^{2r} g(1)^t
///   second: g(1)^t <= (g(1)^{1/2}/g(1/2))^{2R} g(t)
MarginPair check_mccarthy(const Matrix& b, const Vector& x, const WeightParam& w);

// ---------------------------------------------------------------------------
// Accretive means. `family` selects the interpolational path s_t; the
// unweighted s is the same family at t = 1/2.

/// Re(A s_t B) >= Re A s_t Re B.
double check_real_part_mean(const Matrix& a, const Matrix& b, MeanFamily family, const WeightParam& w);

/// Re(A s_t B) <= sec^2(alpha) (Re A s_t Re B).
double check_real_part_sec2(const SectorialCert& a, const SectorialCert& b, MeanFamily family,
                            const WeightParam& w);

/// Re(A nabla_t B) <= Re(A s_t B) + 2R (Re(A nabla B) - Re A s Re B).
double check_thm_nabla_vs_sigma(const Matrix& a, const Matrix& b, MeanFamily family, const WeightParam& w);

/// Re(A s_t B) <= sec^2(alpha) (Re(A nabla_t B) - 2r (Re(A nabla B) - Re A s Re B)).
double check_thm_sec2_reverse(const SectorialCert& a, const SectorialCert& b, MeanFamily family,
                              const WeightParam& w);

/// For positive definite A, B:
///   first:  2r (A nabla B - A s B) <= A nabla_t B - A s_t B
///   second: A nabla_t B - A s_t B <= 2R (A nabla B - A s B)
MarginPair check_remark_sandwich(const Matrix& a, const Matrix& b, MeanFamily family, const WeightParam& w);

/// ((Re A !_t Re B)^{-1} - 2r ((Re A ! Re B)^{-1} - (Re(A ! B))^{-1}))^{-1}
/// Throws HypothesisViolated if the bracket is not positive definite.
HermitianMatrix harmonic_refined_term(const Matrix& a, const Matrix& b, const WeightParam& w);

struct HarmonicRefineMargins {
  /// Re(A !_t B) >= refined term
  double refine = 0.0;
  /// refined term >= Re A !_t Re B
  double baseline = 0.0;
  /// Re(A !_t B) >= Re A !_t Re B, the unrefined inequality
  double direct = 0.0;
  /// (lambda_min(top - bottom) - lambda_min(top - refined)) / max(1, sum of norms):
  /// >= 0 when the refinement is at least as strong as the direct inequality.
  double chain = 0.0;
};

HarmonicRefineMargins check_harmonic_refine(const Matrix& a, const Matrix& b, const WeightParam& w);

/// Integrated form against a representing measure:
///   first:  Re(A s B) >= \int refined term dnu
///   second: \int refined term dnu >= Re A s Re B
MarginPair check_cor_integral(const Matrix& a, const Matrix& b, const RepresentingMeasure& m,
                              const MeasureQuadratureOptions& options = {});

/// With f(x) = x^s, s in (0, 1]:
///   Re(f(A) nabla_t f(B)) + 2r sec^2(alpha) (f(Re(A nabla B)) - f(Re A) nabla f(Re B))
///     <= sec^2(alpha) Re f(A nabla_t B)
double check_concave_sec2(const SectorialCert& a, const SectorialCert& b, double s, const WeightParam& w);

/// With f(x) = x^s:
///   first:  Re((f(A)+f(B))/2) <= sec^2(alpha) \int_0^1 Re f((1-t)A + tB) dt
///   second: sec^2(alpha) \int_0^1 Re f((1-t)A + tB) dt <= sec^4(alpha) Re f((A+B)/2)
MarginPair check_hermite_hadamard(const SectorialCert& a, const SectorialCert& b, double s,
                                  double rel_tol = 1e-8);

struct RadiusChainMargins {
  /// (refined_bound - omega) / max(1, ||A||)
  double omega_below_refined = 0.0;
  /// (power_bound - refined_bound) / max(1, ||A||)
  double refined_below_power = 0.0;
};

RadiusChainMargins check_radius_chain(const Matrix& a, double omega, double p, const WeightParam& w);

// ---------------------------------------------------------------------------
// Trial loop

enum class CaseId {
  lemma_scalar,
  prop_path_convex,
  prop_path_logconvex,
  mccarthy_lower,
  mccarthy_upper,
  baseline_real_part,
  baseline_sec2_reverse,
  thm_nabla_vs_sigma,
  thm_sec2_reverse,
  remark_positive_sandwich,
  thm_harmonic_refine,
  cor_integral_refine,
  thm_concave_sec2,
  thm_hermite_hadamard,
  radius_refine,
  lnt_convexity,
  tsallis_param_convex,
  tsallis_sandwich,
  tsallis_sandwich_ordered,
  tsallis_monotone,
  tsallis_half_identity,
};

struct CaseInfo {
  CaseId id;
  std::string_view name;
  /// The inequality the case checks, in words.
  std::string_view statement;
  /// Quadrature-bearing cases are judged at 100 * tol.
  bool quadrature;
};

std::span<const CaseInfo> all_cases() noexcept;
const CaseInfo& case_info(CaseId id);
CaseId parse_case_id(std::string_view name);

struct SuiteConfig {
  /// Case names, or {"all"}.
  std::vector<std::string> cases{"all"};
  int trials = 500;
  int dim_min = 2;
  int dim_max = 8;
  std::vector<double> alpha_grid{0.2, 0.5, 0.9, 1.2};
  std::vector<double> t_grid{0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<double> p_grid{1.0, 2.0};
  std::vector<double> s_grid{0.25, 0.5, 1.0};
  std::uint64_t seed = 42;
  double tol = 1e-8;
  std::string out;

  /// Throws InvalidArgument on out-of-range grids or dimensions.
  void validate() const;
  std::vector<CaseId> selected_cases() const;
};

struct Failure {
  std::uint64_t seed = 0;
  int trial = 0;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct InequalityReport {
  std::string case_id;
  int trials = 0;
  int dim_min = 0;
  int dim_max = 0;
  std::uint64_t seed = 0;
  /// Tolerance the case was judged at.
  double tol = 0.0;
  /// One normalized margin per trial (the minimum over that trial's sub-checks), ascending.
  std::vector<double> margins;
  double min_margin = 0.0;
  std::vector<Failure> failures;
  double wall_time = 0.0;
  bool pass = true;

  friend bool operator==(const InequalityReport&, const InequalityReport&) = default;
};

struct SubMargin {
  std::string label;
  double margin;
};

struct TrialResult {
  int dim = 0;
  double margin = 0.0;
  std::vector<SubMargin> parts;
};

/// Re-runs a single trial: the draw depends only on (seed, case, trial).
TrialResult run_trial(CaseId id, const SuiteConfig& config, int trial);

InequalityReport run_case(CaseId id, const SuiteConfig& config);

/// Runs every selected case; deterministic in config.seed. trials == 0
/// yields an empty list.
std::vector<InequalityReport> run_suite(const SuiteConfig& config);

bool all_pass(std::span<const InequalityReport> reports) noexcept;

}  // namespace accretive

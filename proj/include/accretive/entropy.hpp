#pragma once

// Deformed logarithm ln_t, the Tsallis relative operator entropy
// T_t(A|B) = (A #_t B - A)/t and the relative operator entropy S(A|B).

#include <span>

#include "accretive/linalg.hpp"
#include "accretive/means.hpp"

namespace accretive {

/// t in (0, 1].
class EntropyParam {
 public:
  explicit EntropyParam(double t);
  double t() const noexcept { return t_; }

 private:
  double t_;
};

/// (x^t - 1)/t for x > 0; t = 0 gives log x.
double ln_t(double x, double t);

/// Throws NotPositiveDefinite unless `a` is Hermitian with lambda_min > 0.
HermitianMatrix require_positive_definite(const Matrix& a, const char* who);

/// (A #_t B - A)/t
HermitianMatrix tsallis(const Matrix& a, const Matrix& b, const EntropyParam& t);
/// A^{1/2} ln_t(A^{-1/2} B A^{-1/2}) A^{1/2}; same value as tsallis().
HermitianMatrix tsallis_log_form(const Matrix& a, const Matrix& b, const EntropyParam& t);
/// A^{1/2} log(A^{-1/2} B A^{-1/2}) A^{1/2}
HermitianMatrix relative_entropy(const Matrix& a, const Matrix& b);

struct LntConvexityReport {
  /// Over all grid pairs (a, b): (ln_a x + ln_b x)/2 - ln_{(a+b)/2} x.
  double min_second_difference = 0.0;
  double max_second_difference = 0.0;
  /// Signed so that >= 0 means the expected shape holds: convex in t for
  /// x >= 1, concave for x <= 1.
  double margin = 0.0;
};

LntConvexityReport check_lnt_convexity(double x, std::span<const double> grid);

/// Convexity in the entropy parameter: for A <= B,
///   T_{(1-t)a+tb}(A|B) <= (1-t) T_a(A|B) + t T_b(A|B),
/// reversed for B <= A. Returns the Loewner margin oriented so that >= 0
/// passes; throws HypothesisViolated when the pair is not ordered.
double check_tsallis_param_convexity(const Matrix& a, const Matrix& b, double pa, double pb, const WeightParam& w);

struct SandwichMargins {
  double lower = 0.0;
  double upper = 0.0;
};

/// With C = (B - A + S(A|B))/2 - 2(A # B - A) and
/// M = (1-t) S(A|B) + t (B - A) - T_t(A|B): margins of 2 min{t,1-t} C <= M
/// and M <= 2 max{t,1-t} C.
SandwichMargins check_tsallis_sandwich(const Matrix& a, const Matrix& b, const WeightParam& w);

/// min over consecutive grid points t < s of the margin of T_t <= T_s.
double check_tsallis_monotone(const Matrix& a, const Matrix& b, std::span<const double> grid);

}  // namespace accretive

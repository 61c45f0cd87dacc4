#include "accretive/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "accretive/loewner.hpp"

namespace accretive {

EntropyParam::EntropyParam(double t) : t_(t) {
  if (!(t > 0.0 && t <= 1.0)) {
    std::ostringstream msg;
    msg << "entropy parameter t = " << t << " outside (0, 1]";
    throw NumericError(ErrorKind::InvalidArgument, msg.str());
  }
}

double ln_t(double x, double t) {
  if (!(x > 0.0)) throw NumericError(ErrorKind::InvalidArgument, "ln_t needs x > 0");
  if (!(t >= 0.0)) throw NumericError(ErrorKind::InvalidArgument, "ln_t needs t >= 0");
  const double log_x = std::log(x);
  if (t == 0.0) return log_x;
  return std::expm1(t * log_x) / t;
}

HermitianMatrix require_positive_definite(const Matrix& a, const char* who) {
  require_square(a, who);
  require_finite(a, who);
  if ((a - a.adjoint()).norm() > 1e-12 * scale_of(a)) {
    throw NumericError(ErrorKind::NotPositiveDefinite, std::string(who) + ": input is not Hermitian");
  }
  HermitianMatrix h(a);
  if (!(h.min_eigenvalue() > 0.0)) {
    throw NumericError(ErrorKind::NotPositiveDefinite, std::string(who) + ": input is not positive definite");
  }
  return h;
}

namespace {

struct Congruence {
  Matrix root;      // A^{1/2}
  HermitianMatrix inner;  // A^{-1/2} B A^{-1/2}
};

Congruence congruence(const Matrix& a, const Matrix& b, const char* who) {
  const HermitianMatrix ha = require_positive_definite(a, who);
  const HermitianMatrix hb = require_positive_definite(b, who);
  require_same_dim(a, b, who);
  Matrix root = ha.apply([](double x) { return std::sqrt(x); }).matrix();
  const Matrix inv_root = ha.apply([](double x) { return 1.0 / std::sqrt(x); }).matrix();
  return {std::move(root), HermitianMatrix::symmetrize(inv_root * hb.matrix() * inv_root)};
}

HermitianMatrix sandwich(const Matrix& root, const HermitianMatrix& middle) {
  return HermitianMatrix::symmetrize(root * middle.matrix() * root);
}

}  // namespace

HermitianMatrix tsallis(const Matrix& a, const Matrix& b, const EntropyParam& t) {
  require_positive_definite(a, "tsallis");
  require_positive_definite(b, "tsallis");
  return HermitianMatrix::symmetrize((geom_mean(a, b, WeightParam(t.t())) - a) / t.t());
}

HermitianMatrix tsallis_log_form(const Matrix& a, const Matrix& b, const EntropyParam& t) {
  const Congruence c = congruence(a, b, "tsallis_log_form");
  const double s = t.t();
  return sandwich(c.root, c.inner.apply([s](double x) { return ln_t(x, s); }));
}

HermitianMatrix relative_entropy(const Matrix& a, const Matrix& b) {
  const Congruence c = congruence(a, b, "relative_entropy");
  return sandwich(c.root, c.inner.apply([](double x) { return std::log(x); }));
}

LntConvexityReport check_lnt_convexity(double x, std::span<const double> grid) {
  if (!(x > 0.0)) throw NumericError(ErrorKind::InvalidArgument, "check_lnt_convexity needs x > 0");
  LntConvexityReport report;
  report.min_second_difference = std::numeric_limits<double>::infinity();
  report.max_second_difference = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double a = grid[i];
      const double b = grid[j];
      const double d = 0.5 * (ln_t(x, a) + ln_t(x, b)) - ln_t(x, 0.5 * (a + b));
      report.min_second_difference = std::min(report.min_second_difference, d);
      report.max_second_difference = std::max(report.max_second_difference, d);
    }
  }
  if (grid.size() < 2) {
    report.min_second_difference = report.max_second_difference = 0.0;
  }
  // x = 1 is both convex and concave (ln_t 1 = 0).
  report.margin = x >= 1.0 ? report.min_second_difference : -report.max_second_difference;
  if (x == 1.0) report.margin = std::min(report.min_second_difference, -report.max_second_difference);
  return report;
}

double check_tsallis_param_convexity(const Matrix& a, const Matrix& b, double pa, double pb,
                                     const WeightParam& w) {
  const HermitianMatrix ha = require_positive_definite(a, "check_tsallis_param_convexity");
  const HermitianMatrix hb = require_positive_definite(b, "check_tsallis_param_convexity");
  const double order_tol = -1e-12 * std::max(scale_of(a), scale_of(b));
  const bool forward = (hb - ha).min_eigenvalue() >= order_tol;
  const bool reverse = (ha - hb).min_eigenvalue() >= order_tol;
  if (!forward && !reverse) {
    throw NumericError(ErrorKind::HypothesisViolated, "neither A <= B nor B <= A holds");
  }
  const EntropyParam ea(pa);
  const EntropyParam eb(pb);
  const EntropyParam mixed((1.0 - w.t()) * pa + w.t() * pb);
  const HermitianMatrix lhs = tsallis(a, b, mixed);
  const HermitianMatrix rhs = (1.0 - w.t()) * tsallis(a, b, ea) + w.t() * tsallis(a, b, eb);
  return forward ? loewner_margin(rhs, lhs) : loewner_margin(lhs, rhs);
}

SandwichMargins check_tsallis_sandwich(const Matrix& a, const Matrix& b, const WeightParam& w) {
  const HermitianMatrix ha = require_positive_definite(a, "check_tsallis_sandwich");
  const HermitianMatrix hb = require_positive_definite(b, "check_tsallis_sandwich");
  const HermitianMatrix s = relative_entropy(a, b);
  const HermitianMatrix half = HermitianMatrix::symmetrize(geom_mean(a, b, kMidpoint));
  const HermitianMatrix common = 0.5 * (hb - ha + s) - 2.0 * (half - ha);
  const HermitianMatrix t_t = tsallis(a, b, EntropyParam(w.t()));
  const HermitianMatrix middle = (1.0 - w.t()) * s + w.t() * (hb - ha) - t_t;
  return {loewner_margin(middle, (2.0 * w.min_weight()) * common),
          loewner_margin((2.0 * w.max_weight()) * common, middle)};
}

double check_tsallis_monotone(const Matrix& a, const Matrix& b, std::span<const double> grid) {
  require_positive_definite(a, "check_tsallis_monotone");
  require_positive_definite(b, "check_tsallis_monotone");
  if (!std::is_sorted(grid.begin(), grid.end())) {
    throw NumericError(ErrorKind::InvalidArgument, "check_tsallis_monotone: grid must be increasing");
  }
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    margin = std::min(margin, loewner_margin(tsallis(a, b, EntropyParam(grid[k + 1])),
                                             tsallis(a, b, EntropyParam(grid[k]))));
  }
  return grid.size() < 2 ? 0.0 : margin;
}

}  // namespace accretive

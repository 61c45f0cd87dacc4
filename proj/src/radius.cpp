#include "accretive/radius.hpp"

#include <cmath>
#include <numbers>

#include "accretive/loewner.hpp"

namespace accretive {

namespace {

double rotated_top_eigenvalue(const Matrix& a, double theta) {
  const Complex phase = std::polar(1.0, theta);
  return hermitian_part(phase * a).max_eigenvalue();
}

void require_power(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw NumericError(ErrorKind::InvalidArgument, "power p must be >= 1");
}

}  // namespace

RadiusResult numerical_radius(const Matrix& a, int grid_points) {
  require_square(a, "numerical_radius");
  require_finite(a, "numerical_radius");
  if (grid_points < 3) throw NumericError(ErrorKind::InvalidArgument, "numerical_radius: grid too coarse");

  const double step = 2.0 * std::numbers::pi / grid_points;
  int best = 0;
  double best_value = rotated_top_eigenvalue(a, 0.0);
  for (int k = 1; k < grid_points; ++k) {
    const double value = rotated_top_eigenvalue(a, k * step);
    // Ties go to the smaller angle.
    if (value > best_value) {
      best_value = value;
      best = k;
    }
  }

  RadiusResult result{best_value, best * step, grid_points, false};

  // Golden-section maximization on [theta_{k-1}, theta_{k+1}].
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = (best - 1) * step;
  double hi = (best + 1) * step;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = rotated_top_eigenvalue(a, x1);
  double f2 = rotated_top_eigenvalue(a, x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = rotated_top_eigenvalue(a, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = rotated_top_eigenvalue(a, x1);
    }
  }
  const double theta = 0.5 * (lo + hi);
  const double value = rotated_top_eigenvalue(a, theta);
  result.refined = true;
  if (value > result.omega) {
    result.omega = value;
    result.theta_star = std::fmod(theta + 2.0 * std::numbers::pi, 2.0 * std::numbers::pi);
  }
  return result;
}

double kittaneh_bound(const Matrix& a) {
  require_square(a, "kittaneh_bound");
  return 0.5 * hermitian_norm(abs_op(a.adjoint()) + abs_op(a));
}

double power_bound(const Matrix& a, double p, const WeightParam& w) {
  require_square(a, "power_bound");
  require_power(p);
  const HermitianMatrix m = (1.0 - w.t()) * abs_power(a.adjoint(), 2.0 * p) + w.t() * abs_power(a, 2.0 * p);
  return std::pow(hermitian_norm(m), 1.0 / (2.0 * p));
}

HermitianMatrix refined_bound_matrix(const Matrix& a, double p, const WeightParam& w) {
  require_square(a, "refined_bound");
  require_power(p);
  const HermitianMatrix abs_2p = abs_power(a, 2.0 * p);
  const HermitianMatrix adj_2p = abs_power(a.adjoint(), 2.0 * p);
  const Matrix avg_p = 0.5 * (abs_power(a, p).matrix() + abs_power(a.adjoint(), p).matrix());
  const HermitianMatrix correction = 0.5 * (abs_2p + adj_2p) - HermitianMatrix::symmetrize(avg_p * avg_p);
  return (1.0 - w.t()) * adj_2p + w.t() * abs_2p - (2.0 * w.min_weight()) * correction;
}

double refined_bound(const Matrix& a, double p, const WeightParam& w) {
  return std::pow(hermitian_norm(refined_bound_matrix(a, p, w)), 1.0 / (2.0 * p));
}

}  // namespace accretive

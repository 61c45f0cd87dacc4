#pragma once

// Numerical radius w(A) = sup |<Ax, x>| and its norm-type upper bounds.

#include "accretive/linalg.hpp"
#include "accretive/means.hpp"

namespace accretive {

struct RadiusResult {
  double omega = 0.0;
  /// Maximizing rotation in [0, 2 pi): omega = lambda_max(Re(e^{i theta} A)).
  double theta_star = 0.0;
  int grid_points = 0;
  /// True when the golden-section stage ran on the best grid bracket.
  bool refined = false;
};

/// Maximizes theta -> lambda_max(Re(e^{i theta} A)) on a uniform grid of
/// `grid_points` angles, then by golden section on the best bracket down to
/// width 1e-10.
RadiusResult numerical_radius(const Matrix& a, int grid_points = 720);

/// (1/2) || |A*| + |A| ||
double kittaneh_bound(const Matrix& a);

/// || (1-t)|A*|^{2p} + t|A|^{2p} ||^{1/(2p)}, p >= 1.
double power_bound(const Matrix& a, double p, const WeightParam& w);

/// The Hermitian matrix inside the refined bound:
/// (1-t)|A*|^{2p} + t|A|^{2p} - 2 min{t,1-t} ((|A|^{2p}+|A*|^{2p})/2 - ((|A|^p+|A*|^p)/2)^2).
HermitianMatrix refined_bound_matrix(const Matrix& a, double p, const WeightParam& w);

/// || refined_bound_matrix(a, p, w) ||^{1/(2p)}, p >= 1.
double refined_bound(const Matrix& a, double p, const WeightParam& w);

}  // namespace accretive

#pragma once

#include <functional>
#include <vector>

#include "accretive/linalg.hpp"

namespace accretive {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  double total_weight() const;
};

/// n-point Gauss–Jacobi rule on [-1, 1] for the weight (1-x)^a (1+x)^b,
/// a, b > -1, via Golub–Welsch.
QuadratureRule gauss_jacobi(int n, double a, double b);

/// Maps a rule on [-1, 1] onto [lo, hi], scaling weights by (hi-lo)/2.
QuadratureRule affine_map(const QuadratureRule& rule, double lo, double hi);

using MatrixIntegrand = std::function<Matrix(double)>;

struct AdaptiveIntegral {
  Matrix value;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Globally adaptive 7/15-point Gauss–Kronrod on [lo, hi] for a matrix-valued
/// integrand. Stops when the summed Kronrod–Gauss discrepancy is below
/// rel_tol * max(1, ||value||_F); throws QuadratureNotConverged after
/// `max_intervals` subdivisions.
AdaptiveIntegral integrate_adaptive(const MatrixIntegrand& f, double lo, double hi,
                                    double rel_tol = 1e-8, int max_intervals = 512);

}  // namespace accretive

#include "accretive/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace accretive {

double QuadratureRule::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0.0);
}

QuadratureRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw NumericError(ErrorKind::InvalidArgument, "gauss_jacobi: n must be >= 1");
  if (!(a > -1.0) || !(b > -1.0)) {
    throw NumericError(ErrorKind::InvalidArgument, "gauss_jacobi: exponents must exceed -1");
  }
  const double ab = a + b;

  // Symmetric tridiagonal Jacobi matrix of the monic recurrence.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + ab;
    jacobi(k, k) = (k == 0 || s == 0.0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    double beta;
    if (k == 1) {
      beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
    }
    jacobi(k, k - 1) = jacobi(k - 1, k) = std::sqrt(beta);
  }

  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                              std::lgamma(ab + 2.0));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = es.eigenvalues()(k);
    const double v0 = es.eigenvectors()(0, k);
    rule.weights[k] = mu0 * v0 * v0;
  }
  return rule;
}

QuadratureRule affine_map(const QuadratureRule& rule, double lo, double hi) {
  QuadratureRule out;
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  out.nodes.reserve(rule.nodes.size());
  out.weights.reserve(rule.weights.size());
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    out.nodes.push_back(mid + half * rule.nodes[k]);
    out.weights.push_back(half * rule.weights[k]);
  }
  return out;
}

namespace {

struct Panel {
  double lo;
  double hi;
  Matrix kronrod;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gauss_kronrod_panel(const MatrixIntegrand& f, double lo, double hi, int& evaluations) {
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  using Gauss = boost::math::quadrature::gauss<double, 7>;
  const auto& x = Kronrod::abscissa();
  const auto& wk = Kronrod::weights();
  const auto& wg = Gauss::weights();

  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);

  const Matrix centre = f(mid);
  Matrix kronrod = wk[0] * centre;
  Matrix gauss = wg[0] * centre;
  evaluations += 1;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Matrix pair = f(mid + half * x[i]) + f(mid - half * x[i]);
    evaluations += 2;
    kronrod += wk[i] * pair;
    // Even-indexed Kronrod abscissae are the 7-point Gauss nodes.
    if (i % 2 == 0) gauss += wg[i / 2] * pair;
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, (kronrod - gauss).norm()};
}

}  // namespace

AdaptiveIntegral integrate_adaptive(const MatrixIntegrand& f, double lo, double hi, double rel_tol,
                                    int max_intervals) {
  AdaptiveIntegral result;
  std::priority_queue<Panel> panels;
  panels.push(gauss_kronrod_panel(f, lo, hi, result.evaluations));

  auto totals = [&panels]() {
    auto copy = panels;
    Matrix value = copy.top().kronrod;
    double error = copy.top().error;
    copy.pop();
    while (!copy.empty()) {
      value += copy.top().kronrod;
      error += copy.top().error;
      copy.pop();
    }
    return std::make_pair(value, error);
  };

  for (int intervals = 1;; ++intervals) {
    auto [value, error] = totals();
    if (error <= rel_tol * scale_of(value)) {
      result.value = std::move(value);
      result.error_estimate = error;
      return result;
    }
    if (intervals >= max_intervals) {
      throw NumericError(ErrorKind::QuadratureNotConverged,
                         "adaptive Gauss-Kronrod exceeded the subdivision limit");
    }
    Panel worst = panels.top();
    panels.pop();
    const double split = 0.5 * (worst.lo + worst.hi);
    panels.push(gauss_kronrod_panel(f, worst.lo, split, result.evaluations));
    panels.push(gauss_kronrod_panel(f, split, worst.hi, result.evaluations));
  }
}

}  // namespace accretive

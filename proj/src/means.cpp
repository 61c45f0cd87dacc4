#include "accretive/means.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace accretive {

WeightParam::WeightParam(double t) : t_(t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream msg;
    msg << "weight t = " << t << " outside [0, 1]";
    throw NumericError(ErrorKind::InvalidArgument, msg.str());
  }
}

// ---------------------------------------------------------------------------
// RepresentingMeasure

RepresentingMeasure RepresentingMeasure::point_mass(double t) {
  (void)WeightParam(t);
  return RepresentingMeasure(PointMass{t});
}

RepresentingMeasure RepresentingMeasure::discrete(std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty()) throw NumericError(ErrorKind::InvalidArgument, "discrete measure without atoms");
  double mass = 0.0;
  for (const auto& [t, w] : atoms) {
    (void)WeightParam(t);
    if (!(w >= 0.0)) throw NumericError(ErrorKind::InvalidArgument, "discrete measure: negative weight");
    mass += w;
  }
  if (std::abs(mass - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "discrete measure: total mass " << mass << " is not 1";
    throw NumericError(ErrorKind::InvalidArgument, msg.str());
  }
  return RepresentingMeasure(Discrete{std::move(atoms)});
}

RepresentingMeasure RepresentingMeasure::power_density(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw NumericError(ErrorKind::InvalidArgument, "power density exponent must lie in (0, 1)");
  }
  return RepresentingMeasure(PowerDensity{alpha});
}

std::string RepresentingMeasure::describe() const {
  std::ostringstream out;
  std::visit(
      [&out](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, PointMass>) {
          out << "point_mass(" << k.t << ")";
        } else if constexpr (std::is_same_v<K, Discrete>) {
          out << "discrete(" << k.atoms.size() << " atoms)";
        } else {
          out << "power_density(" << k.alpha << ")";
        }
      },
      kind_);
  return out.str();
}

double RepresentingMeasure::total_mass() const { return discretize(64).total_weight(); }

namespace {

double density_constant(double alpha) { return std::sin(alpha * std::numbers::pi) / std::numbers::pi; }

QuadratureRule atoms_of(const RepresentingMeasure& m) {
  QuadratureRule rule;
  if (const auto* pm = std::get_if<RepresentingMeasure::PointMass>(&m.kind())) {
    rule.nodes = {pm->t};
    rule.weights = {1.0};
  } else {
    for (const auto& [t, w] : std::get<RepresentingMeasure::Discrete>(m.kind()).atoms) {
      rule.nodes.push_back(t);
      rule.weights.push_back(w);
    }
  }
  return rule;
}

}  // namespace

QuadratureRule RepresentingMeasure::discretize(int nodes) const {
  if (is_atomic()) return atoms_of(*this);
  const double alpha = std::get<PowerDensity>(kind_).alpha;
  // t = (1+x)/2 turns t^(a-1)(1-t)^(-a) dt into (1-x)^(-a)(1+x)^(a-1) dx exactly.
  QuadratureRule rule = affine_map(gauss_jacobi(nodes, -alpha, alpha - 1.0), 0.0, 1.0);
  const double c = density_constant(alpha);
  for (double& w : rule.weights) w *= 2.0 * c;
  return rule;
}

QuadratureRule RepresentingMeasure::discretize_split(int nodes) const {
  if (is_atomic()) return atoms_of(*this);
  const double alpha = std::get<PowerDensity>(kind_).alpha;
  const double c = density_constant(alpha);

  // [0, 1/2]: t = (1+x)/4, the t^(a-1) factor goes into the weight.
  const QuadratureRule left = gauss_jacobi(nodes, 0.0, alpha - 1.0);
  // [1/2, 1]: t = (3+x)/4, the (1-t)^(-a) factor goes into the weight.
  const QuadratureRule right = gauss_jacobi(nodes, -alpha, 0.0);

  QuadratureRule rule;
  for (int k = 0; k < nodes; ++k) {
    const double t = 0.25 * (1.0 + left.nodes[k]);
    rule.nodes.push_back(t);
    rule.weights.push_back(c * std::pow(4.0, -alpha) * left.weights[k] * std::pow(1.0 - t, -alpha));
  }
  for (int k = 0; k < nodes; ++k) {
    const double t = 0.25 * (3.0 + right.nodes[k]);
    rule.nodes.push_back(t);
    rule.weights.push_back(c * std::pow(4.0, alpha - 1.0) * right.weights[k] * std::pow(t, alpha - 1.0));
  }
  return rule;
}

// ---------------------------------------------------------------------------

std::string_view to_string(MeanFamily family) noexcept {
  switch (family) {
    case MeanFamily::arithmetic: return "arith";
    case MeanFamily::geometric: return "geom";
    case MeanFamily::harmonic: return "harm";
  }
  return "unknown";
}

MeanFamily parse_mean_family(std::string_view name) {
  if (name == "arith" || name == "arithmetic") return MeanFamily::arithmetic;
  if (name == "geom" || name == "geometric") return MeanFamily::geometric;
  if (name == "harm" || name == "harmonic") return MeanFamily::harmonic;
  throw NumericError(ErrorKind::InvalidArgument, "unknown mean family '" + std::string(name) + "'");
}

void require_accretive(const Matrix& a, const char* who) {
  require_square(a, who);
  require_finite(a, who);
  const double margin = hermitian_part(a).min_eigenvalue();
  if (!(margin > 0.0)) {
    std::ostringstream msg;
    msg << who << ": lambda_min(Re A) = " << margin << " is not positive";
    throw NumericError(ErrorKind::NotAccretive, msg.str());
  }
}

Matrix arith_mean(const Matrix& a, const Matrix& b, const WeightParam& w) {
  require_square(a, "arith_mean");
  require_same_dim(a, b, "arith_mean");
  if (w.t() == 0.0) return a;
  if (w.t() == 1.0) return b;
  return (1.0 - w.t()) * a + w.t() * b;
}

Matrix geom_mean(const Matrix& a, const Matrix& b, const WeightParam& w) {
  require_same_dim(a, b, "geom_mean");
  require_accretive(a, "geom_mean");
  require_accretive(b, "geom_mean");
  if (w.t() == 0.0) return a;
  if (w.t() == 1.0) return b;
  const Matrix root = principal_power(a, 0.5);
  const Matrix inv_root = principal_power(a, -0.5);
  const Matrix inner = inv_root * b * inv_root;
  return root * principal_power(inner, w.t()) * root;
}

Matrix harm_mean(const Matrix& a, const Matrix& b, const WeightParam& w) {
  require_same_dim(a, b, "harm_mean");
  require_accretive(a, "harm_mean");
  require_accretive(b, "harm_mean");
  if (w.t() == 0.0) return a;
  if (w.t() == 1.0) return b;
  return inverse((1.0 - w.t()) * inverse(a) + w.t() * inverse(b));
}

Matrix mean_path(MeanFamily family, const Matrix& a, const Matrix& b, const WeightParam& w) {
  switch (family) {
    case MeanFamily::arithmetic: return arith_mean(a, b, w);
    case MeanFamily::geometric: return geom_mean(a, b, w);
    case MeanFamily::harmonic: return harm_mean(a, b, w);
  }
  throw NumericError(ErrorKind::InvalidArgument, "unknown mean family");
}

namespace {

Matrix apply_rule(const QuadratureRule& rule, const MatrixIntegrand& integrand) {
  Matrix sum = rule.weights[0] * integrand(rule.nodes[0]);
  for (std::size_t k = 1; k < rule.nodes.size(); ++k) sum += rule.weights[k] * integrand(rule.nodes[k]);
  return sum;
}

}  // namespace

Matrix integrate_against(const RepresentingMeasure& measure, const MatrixIntegrand& integrand, bool split,
                         const MeasureQuadratureOptions& options) {
  auto rule_for = [&](int n) { return split ? measure.discretize_split(n) : measure.discretize(n); };
  if (measure.is_atomic()) return apply_rule(rule_for(1), integrand);

  int n = options.initial_nodes;
  Matrix previous = apply_rule(rule_for(n), integrand);
  while (2 * n <= options.max_nodes) {
    n *= 2;
    Matrix current = apply_rule(rule_for(n), integrand);
    const double change = (current - previous).norm() / scale_of(current);
    if (change <= options.rel_tol) return current;
    previous = std::move(current);
  }
  throw NumericError(ErrorKind::QuadratureNotConverged, "node doubling did not settle for " + measure.describe());
}

Matrix mean_from_measure(const Matrix& a, const Matrix& b, const RepresentingMeasure& measure,
                         const MeasureQuadratureOptions& options) {
  require_same_dim(a, b, "mean_from_measure");
  require_accretive(a, "mean_from_measure");
  require_accretive(b, "mean_from_measure");
  const Matrix a_inv = inverse(a);
  const Matrix b_inv = inverse(b);
  auto integrand = [&](double t) -> Matrix {
    if (t == 0.0) return a;
    if (t == 1.0) return b;
    return inverse((1.0 - t) * a_inv + t * b_inv);
  };
  return integrate_against(measure, integrand, false, options);
}

Matrix mean(const MeanKind& kind, const Matrix& a, const Matrix& b, const WeightParam& w) {
  if (kind.is_family()) return mean_path(kind.family(), a, b, w);
  return mean_from_measure(a, b, kind.measure());
}

}  // namespace accretive

#pragma once

// Weighted arithmetic, geometric and harmonic means of accretive matrices,
// and means given by a representing probability measure on [0, 1]:
//   A sigma B = \int_0^1 A !_t B dnu(t).

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "accretive/linalg.hpp"
#include "accretive/quadrature.hpp"

namespace accretive {

/// Interpolation weight t in [0, 1].
class WeightParam {
 public:
  explicit WeightParam(double t);

  double t() const noexcept { return t_; }
  /// min{t, 1 - t}
  double min_weight() const noexcept { return t_ < 0.5 ? t_ : 1.0 - t_; }
  /// max{t, 1 - t}
  double max_weight() const noexcept { return t_ < 0.5 ? 1.0 - t_ : t_; }

 private:
  double t_;
};

inline const WeightParam kMidpoint{0.5};

/// A probability measure on [0, 1]: a point mass, a finite discrete measure,
/// or the density (sin(a pi)/pi) t^(a-1) (1-t)^(-a) that represents x^a.
class RepresentingMeasure {
 public:
  struct PointMass {
    double t;
  };
  struct Discrete {
    std::vector<std::pair<double, double>> atoms;  // (t_i, w_i)
  };
  struct PowerDensity {
    double alpha;
  };

  static RepresentingMeasure point_mass(double t);
  static RepresentingMeasure discrete(std::vector<std::pair<double, double>> atoms);
  static RepresentingMeasure power_density(double alpha);

  const auto& kind() const noexcept { return kind_; }
  bool is_atomic() const noexcept { return !std::holds_alternative<PowerDensity>(kind_); }
  std::string describe() const;

  /// Total mass by the measure's own quadrature (atoms are summed exactly).
  double total_mass() const;

  /// A rule with weights that already include the measure. Atomic measures
  /// ignore `nodes`. The power density uses Gauss–Jacobi with exponents
  /// (-a, a-1), which absorbs both endpoint singularities.
  QuadratureRule discretize(int nodes) const;

  /// As discretize(), but integrates [0, 1/2] and [1/2, 1] separately (nodes
  /// per half), for integrands with a kink at t = 1/2.
  QuadratureRule discretize_split(int nodes) const;

 private:
  using Kind = std::variant<PointMass, Discrete, PowerDensity>;
  explicit RepresentingMeasure(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

enum class MeanFamily { arithmetic, geometric, harmonic };

std::string_view to_string(MeanFamily family) noexcept;
MeanFamily parse_mean_family(std::string_view name);

class MeanKind {
 public:
  MeanKind(MeanFamily family) : kind_(family) {}  // NOLINT(google-explicit-constructor)
  MeanKind(RepresentingMeasure measure) : kind_(std::move(measure)) {}  // NOLINT

  bool is_family() const noexcept { return std::holds_alternative<MeanFamily>(kind_); }
  MeanFamily family() const { return std::get<MeanFamily>(kind_); }
  const RepresentingMeasure& measure() const { return std::get<RepresentingMeasure>(kind_); }

 private:
  std::variant<MeanFamily, RepresentingMeasure> kind_;
};

/// Throws NotAccretive unless lambda_min(Re A) > 0.
void require_accretive(const Matrix& a, const char* who);

/// (1-t) A + t B
Matrix arith_mean(const Matrix& a, const Matrix& b, const WeightParam& w);
/// A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2} with principal powers.
Matrix geom_mean(const Matrix& a, const Matrix& b, const WeightParam& w);
/// ((1-t) A^{-1} + t B^{-1})^{-1}
Matrix harm_mean(const Matrix& a, const Matrix& b, const WeightParam& w);

/// Path of one of the three interpolational families.
Matrix mean_path(MeanFamily family, const Matrix& a, const Matrix& b, const WeightParam& w);

struct MeasureQuadratureOptions {
  int initial_nodes = 64;
  int max_nodes = 4096;
  /// Relative Frobenius change between n and 2n nodes accepted as converged.
  double rel_tol = 1e-7;
};

/// Integral of t -> A !_t B against `measure`; exact for atomic measures.
Matrix mean_from_measure(const Matrix& a, const Matrix& b, const RepresentingMeasure& measure,
                         const MeasureQuadratureOptions& options = {});

/// Node-doubling driver shared by measure integrals: integrates `integrand`
/// against `measure` (split at 1/2 when `split`) until two successive node
/// counts agree to options.rel_tol.
Matrix integrate_against(const RepresentingMeasure& measure, const MatrixIntegrand& integrand, bool split,
                         const MeasureQuadratureOptions& options = {});

/// Dispatch; a measure kind ignores `w`.
Matrix mean(const MeanKind& kind, const Matrix& a, const Matrix& b, const WeightParam& w);

}  // namespace accretive

#pragma once

// Accretive and sectorial matrices: predicates, the least sectorial
// half-angle, certificates, and the seeded matrix ensembles the checks draw.

#include <cstdint>
#include <string_view>
#include <utility>
#include <variant>

#include "accretive/linalg.hpp"

namespace accretive {

struct AccretivityTest {
  bool accretive;
  /// lambda_min(Re A)
  double margin;
};

AccretivityTest is_accretive(const Matrix& a);

/// Least alpha with W(A) in the sector |Im z| <= tan(alpha) Re z, computed as
/// atan(rho(H^{-1/2} K H^{-1/2})) with H = Re A, K = Im A. Throws NotAccretive.
double sectorial_index(const Matrix& a);

/// A matrix together with a verified sectorial half-angle alpha in [0, pi/2):
/// lambda_min(Re A) > 0 and tan(alpha) Re A +- Im A >= 0.
class SectorialCert {
 public:
  /// Verifies `alpha` for `a` (margin tolerance 1e-10 ||a||_F).
  static SectorialCert certify(const Matrix& a, double alpha);
  /// Certifies with the least half-angle.
  static SectorialCert certify(const Matrix& a);

  const Matrix& matrix() const noexcept { return matrix_; }
  double alpha() const noexcept { return alpha_; }
  /// sec^2(alpha)
  double sec2() const noexcept;

 private:
  SectorialCert(Matrix m, double alpha) : matrix_(std::move(m)), alpha_(alpha) {}
  Matrix matrix_;
  double alpha_;
};

/// Deterministic stream keyed on (seed, stream). SplitMix64 derives the
/// xoshiro256** state, so every (seed, stream) pair is an independent,
/// platform-stable sequence.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  double normal();
  Complex complex_normal();

 private:
  std::uint64_t s_[4];
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

Matrix random_unitary(Index n, Rng& rng);
/// Hermitian with spectrum drawn uniformly from [0.1, 1] * scale.
Matrix random_positive_definite(Index n, Rng& rng, double scale = 1.0);
Matrix random_hermitian(Index n, Rng& rng);
Matrix random_psd(Index n, Rng& rng, double scale = 1.0);
Vector random_unit_vector(Index n, Rng& rng);
/// H + iK with H positive definite and ||K|| <= ||H||.
Matrix random_accretive(Index n, Rng& rng, double scale = 1.0);
/// H + iK with rho(H^{-1/2} K H^{-1/2}) = 0.95 tan(alpha).
Matrix random_sectorial(Index n, double alpha, Rng& rng, double scale = 1.0);

enum class EnsembleClass { positive_definite, accretive, sectorial, loewner_pair, positive_pair };

std::string_view to_string(EnsembleClass c) noexcept;
EnsembleClass parse_ensemble_class(std::string_view name);

struct EnsembleSpec {
  Index dim = 2;
  EnsembleClass cls = EnsembleClass::positive_definite;
  /// Half-angle for the sectorial class, in (0, pi/2).
  double alpha = 0.5;
  std::uint64_t seed = 0;
  double scale = 1.0;

  void validate() const;
};

using MatrixPair = std::pair<Matrix, Matrix>;
using Draw = std::variant<Matrix, MatrixPair>;

/// Single matrix for the single classes, a pair for loewner_pair (A <= B)
/// and positive_pair.
Draw generate(const EnsembleSpec& spec);

/// A pair from any class: pair classes as in generate(), single classes as
/// two independent draws.
MatrixPair generate_pair(const EnsembleSpec& spec);

}  // namespace accretive

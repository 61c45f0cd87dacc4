#pragma once

// Dense complex linear algebra: Schur-based principal matrix functions,
// Hermitian/real parts, |A|, norms and inverses.

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "accretive/errors.hpp"

namespace accretive {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// max(1, ||m||_F); every relative tolerance in the library is measured against it.
double scale_of(const Matrix& m);

void require_square(const Matrix& m, const char* who);
void require_finite(const Matrix& m, const char* who);
void require_same_dim(const Matrix& a, const Matrix& b, const char* who);

/// A Hermitian matrix. Construction from an arbitrary matrix validates
/// ||m - m*||_F <= 1e-12 * max(1, ||m||_F) and stores the symmetrized value,
/// so eigenvalues are always real.
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m);

  /// (m + m*)/2 without validation, for results that are Hermitian up to roundoff.
  static HermitianMatrix symmetrize(const Matrix& m);
  static HermitianMatrix zero(Index n);
  static HermitianMatrix identity(Index n);

  const Matrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  /// Ascending.
  RealVector eigenvalues() const;
  double min_eigenvalue() const;
  double max_eigenvalue() const;

  /// Spectral calculus for a real function on the (real) spectrum.
  HermitianMatrix apply(const std::function<double(double)>& f) const;

  friend HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b);
  friend HermitianMatrix operator*(double c, const HermitianMatrix& a);

 private:
  struct Trusted {};
  HermitianMatrix(Matrix m, Trusted) : m_(std::move(m)) {}
  Matrix m_;
};

/// Complex Schur form: input = unitary * upper_triangular * unitary^*.
struct SpectralDecomposition {
  Matrix unitary;
  Matrix upper_triangular;

  Vector eigenvalues() const { return upper_triangular.diagonal(); }
  Matrix reconstruct() const { return unitary * upper_triangular * unitary.adjoint(); }
};

/// (A + A^*)/2.
HermitianMatrix hermitian_part(const Matrix& a);
/// (A - A^*)/(2i).
HermitianMatrix imaginary_part(const Matrix& a);

/// Throws NonConvergence after 100 n^2 QR sweeps.
SpectralDecomposition schur(const Matrix& a);

/// A scalar function analytic near the spectrum of its argument. `derivative`
/// is optional; when present it is used for divided differences between
/// nearly coincident eigenvalues. `principal_branch` marks functions with a
/// branch cut on (-inf, 0].
struct ScalarFunction {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
  bool principal_branch = false;
};

ScalarFunction identity_function();
/// z^s = exp(s Log z), principal branch.
ScalarFunction power_function(double s);
/// Principal Log z.
ScalarFunction log_function();

struct MatrixFunctionOptions {
  /// If false, a Parlett gap below 1e-10 raises ClusteredEigenvalues instead of
  /// perturbing the triangular diagonal by 1e-8 max(1, ||X||_F).
  bool allow_cluster_fallback = true;
};

struct MatrixFunctionResult {
  Matrix value;
  /// Set when the clustered-eigenvalue fallback was used.
  bool approximate = false;
};

MatrixFunctionResult evaluate_matrix_function(const Matrix& x, const ScalarFunction& f,
                                              const MatrixFunctionOptions& options = {});
Matrix matrix_function(const Matrix& x, const ScalarFunction& f);

Matrix principal_power(const Matrix& x, double s);
Matrix principal_log(const Matrix& x);

/// (A^* A)^{1/2}.
HermitianMatrix abs_op(const Matrix& a);
/// |A|^q = (A^* A)^{q/2} for q >= 0.
HermitianMatrix abs_power(const Matrix& a, double q);

/// Largest singular value.
double op_norm(const Matrix& a);
double smallest_singular_value(const Matrix& a);

/// Throws Singular when sigma_min < 1e-12 * sigma_max.
Matrix inverse(const Matrix& a);

}  // namespace accretive

#include "accretive/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace accretive {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kCutTol = 1e-12;
constexpr double kClusterGap = 1e-10;
constexpr double kClusterShift = 1e-8;
// Below this relative separation the divided difference uses f' at the midpoint.
constexpr double kConfluentGap = 1e-6;

bool is_hermitian(const Matrix& x, double rel_tol) {
  return (x - x.adjoint()).norm() <= rel_tol * scale_of(x);
}

double distance_to_cut(Complex z) {
  return z.real() <= 0.0 ? std::abs(z.imag()) : std::abs(z);
}

void check_cut(const Vector& eigenvalues, double scale) {
  for (Index k = 0; k < eigenvalues.size(); ++k) {
    if (distance_to_cut(eigenvalues(k)) < kCutTol * scale) {
      std::ostringstream msg;
      msg << "eigenvalue " << eigenvalues(k) << " on the branch cut (-inf, 0]";
      throw NumericError(ErrorKind::EigenvalueOnCut, msg.str());
    }
  }
}

Complex divided_difference(const ScalarFunction& f, Complex a, Complex b, Complex fa, Complex fb) {
  const double gap = std::abs(b - a);
  const double size = std::max({1.0, std::abs(a), std::abs(b)});
  if (f.derivative && gap <= kConfluentGap * size) {
    return f.derivative(0.5 * (a + b));
  }
  return (fb - fa) / (b - a);
}

// Parlett recurrence on an upper triangular T. Assumes the diagonal is
// separated wherever the recurrence divides by a gap, unless `normal` is set,
// in which case the strictly upper part is negligible and only the first-order
// coupling term is kept.
Matrix parlett(const Matrix& t, const ScalarFunction& f, bool normal) {
  const Index n = t.rows();
  Matrix fm = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) fm(i, i) = f.value(t(i, i));
  for (Index d = 1; d < n; ++d) {
    for (Index i = 0; i + d < n; ++i) {
      const Index j = i + d;
      Complex value = t(i, j) * divided_difference(f, t(i, i), t(j, j), fm(i, i), fm(j, j));
      if (!normal && d > 1) {
        Complex sum{0.0, 0.0};
        for (Index k = i + 1; k < j; ++k) sum += t(i, k) * fm(k, j) - fm(i, k) * t(k, j);
        value += sum / (t(j, j) - t(i, i));
      }
      fm(i, j) = value;
    }
  }
  return fm;
}

}  // namespace

double scale_of(const Matrix& m) { return std::max(1.0, m.norm()); }

void require_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream msg;
    msg << who << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw NumericError(ErrorKind::InvalidArgument, msg.str());
  }
}

void require_finite(const Matrix& m, const char* who) {
  if (!m.allFinite()) {
    throw NumericError(ErrorKind::InvalidArgument, std::string(who) + ": non-finite entry");
  }
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* who) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream msg;
    msg << who << ": " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
    throw NumericError(ErrorKind::DimensionMismatch, msg.str());
  }
}

// ---------------------------------------------------------------------------
// HermitianMatrix

HermitianMatrix::HermitianMatrix(const Matrix& m) {
  require_square(m, "HermitianMatrix");
  require_finite(m, "HermitianMatrix");
  if (!is_hermitian(m, kHermitianTol)) {
    throw NumericError(ErrorKind::NotHermitian, "||M - M*||_F exceeds 1e-12 max(1, ||M||_F)");
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianMatrix HermitianMatrix::symmetrize(const Matrix& m) {
  require_square(m, "HermitianMatrix::symmetrize");
  return HermitianMatrix(0.5 * (m + m.adjoint()), Trusted{});
}

HermitianMatrix HermitianMatrix::zero(Index n) { return HermitianMatrix(Matrix::Zero(n, n), Trusted{}); }

HermitianMatrix HermitianMatrix::identity(Index n) {
  return HermitianMatrix(Matrix::Identity(n, n), Trusted{});
}

RealVector HermitianMatrix::eigenvalues() const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double HermitianMatrix::min_eigenvalue() const { return eigenvalues()(0); }

double HermitianMatrix::max_eigenvalue() const {
  const RealVector ev = eigenvalues();
  return ev(ev.size() - 1);
}

HermitianMatrix HermitianMatrix::apply(const std::function<double(double)>& f) const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m_);
  RealVector mapped = es.eigenvalues().unaryExpr(f);
  const Matrix& v = es.eigenvectors();
  return symmetrize(v * mapped.asDiagonal() * v.adjoint());
}

HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a.m_, b.m_, "HermitianMatrix::operator+");
  return HermitianMatrix(a.m_ + b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a.m_, b.m_, "HermitianMatrix::operator-");
  return HermitianMatrix(a.m_ - b.m_, HermitianMatrix::Trusted{});
}

HermitianMatrix operator*(double c, const HermitianMatrix& a) {
  return HermitianMatrix(c * a.m_, HermitianMatrix::Trusted{});
}

// ---------------------------------------------------------------------------

HermitianMatrix hermitian_part(const Matrix& a) {
  require_square(a, "hermitian_part");
  return HermitianMatrix::symmetrize(a);
}

HermitianMatrix imaginary_part(const Matrix& a) {
  require_square(a, "imaginary_part");
  const Complex two_i{0.0, 2.0};
  return HermitianMatrix::symmetrize((a - a.adjoint()) / two_i);
}

SpectralDecomposition schur(const Matrix& a) {
  require_square(a, "schur");
  require_finite(a, "schur");
  const Index n = a.rows();
  Eigen::ComplexSchur<Matrix> cs(n);
  cs.setMaxIterations(100 * n * n);
  cs.compute(a);
  if (cs.info() != Eigen::Success) {
    throw NumericError(ErrorKind::NonConvergence, "complex Schur iteration did not converge");
  }
  return {cs.matrixU(), cs.matrixT()};
}

ScalarFunction identity_function() {
  return {[](Complex z) { return z; }, [](Complex) { return Complex{1.0, 0.0}; }, false};
}

ScalarFunction power_function(double s) {
  ScalarFunction f;
  f.principal_branch = true;
  if (s == 0.5) {
    f.value = [](Complex z) { return std::sqrt(z); };
  } else if (s == -0.5) {
    f.value = [](Complex z) { return 1.0 / std::sqrt(z); };
  } else if (s == 1.0) {
    f.value = [](Complex z) { return z; };
  } else if (s == 0.0) {
    f.value = [](Complex) { return Complex{1.0, 0.0}; };
  } else {
    f.value = [s](Complex z) { return std::exp(s * std::log(z)); };
  }
  f.derivative = [s, value = f.value](Complex z) { return s * value(z) / z; };
  return f;
}

ScalarFunction log_function() {
  return {[](Complex z) { return std::log(z); }, [](Complex z) { return 1.0 / z; }, true};
}

MatrixFunctionResult evaluate_matrix_function(const Matrix& x, const ScalarFunction& f,
                                              const MatrixFunctionOptions& options) {
  require_square(x, "matrix_function");
  require_finite(x, "matrix_function");
  const double scale = scale_of(x);
  const Index n = x.rows();

  if (is_hermitian(x, 1e-13)) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (x + x.adjoint()));
    const Vector lambda = es.eigenvalues().cast<Complex>();
    if (f.principal_branch) check_cut(lambda, scale);
    Vector mapped(n);
    for (Index k = 0; k < n; ++k) mapped(k) = f.value(lambda(k));
    const Matrix& v = es.eigenvectors();
    return {v * mapped.asDiagonal() * v.adjoint(), false};
  }

  SpectralDecomposition sd = schur(x);
  Matrix& t = sd.upper_triangular;
  if (f.principal_branch) check_cut(t.diagonal(), scale);

  const double strict_upper = t.triangularView<Eigen::StrictlyUpper>().toDenseMatrix().norm();
  const bool normal = strict_upper <= 1e-12 * scale;

  bool clustered = false;
  if (!normal) {
    for (Index i = 0; i < n && !clustered; ++i) {
      for (Index j = i + 1; j < n; ++j) {
        if (std::abs(t(j, j) - t(i, i)) < kClusterGap * scale && (j > i + 1 || !f.derivative)) {
          clustered = true;
          break;
        }
      }
    }
  }

  if (clustered) {
    if (!options.allow_cluster_fallback) {
      throw NumericError(ErrorKind::ClusteredEigenvalues, "Parlett divided difference gap below 1e-10");
    }
    const double shift = kClusterShift * scale;
    for (Index k = 0; k < n; ++k) t(k, k) += shift * static_cast<double>(k + 1);
    if (f.principal_branch) check_cut(t.diagonal(), scale);
  }

  const Matrix ft = parlett(t, f, normal);
  return {sd.unitary * ft * sd.unitary.adjoint(), clustered};
}

Matrix matrix_function(const Matrix& x, const ScalarFunction& f) {
  return evaluate_matrix_function(x, f).value;
}

Matrix principal_power(const Matrix& x, double s) {
  require_square(x, "principal_power");
  if (s == 0.0) {
    // Still reject spectra on the cut: X^0 = I is only defined through the principal branch.
    (void)evaluate_matrix_function(x, power_function(0.0));
    return Matrix::Identity(x.rows(), x.cols());
  }
  return matrix_function(x, power_function(s));
}

Matrix principal_log(const Matrix& x) { return matrix_function(x, log_function()); }

HermitianMatrix abs_power(const Matrix& a, double q) {
  require_square(a, "abs_power");
  require_finite(a, "abs_power");
  if (q < 0.0) throw NumericError(ErrorKind::InvalidArgument, "abs_power: exponent must be >= 0");
  const HermitianMatrix gram = HermitianMatrix::symmetrize(a.adjoint() * a);
  const double half = 0.5 * q;
  return gram.apply([half](double mu) { return mu <= 0.0 ? (half == 0.0 ? 1.0 : 0.0) : std::pow(mu, half); });
}

HermitianMatrix abs_op(const Matrix& a) { return abs_power(a, 1.0); }

double op_norm(const Matrix& a) {
  require_square(a, "op_norm");
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

double smallest_singular_value(const Matrix& a) {
  require_square(a, "smallest_singular_value");
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  require_finite(a, "inverse");
  Eigen::JacobiSVD<Matrix> svd(a);
  const RealVector& sv = svd.singularValues();
  if (!(sv(sv.size() - 1) >= 1e-12 * sv(0)) || sv(0) == 0.0) {
    throw NumericError(ErrorKind::Singular, "smallest singular value below 1e-12 * ||A||");
  }
  return a.partialPivLu().inverse();
}

}  // namespace accretive

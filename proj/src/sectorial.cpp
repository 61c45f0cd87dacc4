#include "accretive/sectorial.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/QR>

namespace accretive {

AccretivityTest is_accretive(const Matrix& a) {
  require_square(a, "is_accretive");
  const double margin = hermitian_part(a).min_eigenvalue();
  return {margin > 0.0, margin};
}

namespace {

// H^{-1/2} K H^{-1/2}
HermitianMatrix pencil_matrix(const Matrix& a) {
  const HermitianMatrix h = hermitian_part(a);
  if (!(h.min_eigenvalue() > 0.0)) {
    throw NumericError(ErrorKind::NotAccretive, "sectorial index needs lambda_min(Re A) > 0");
  }
  const Matrix h_inv_root = h.apply([](double x) { return 1.0 / std::sqrt(x); }).matrix();
  return HermitianMatrix::symmetrize(h_inv_root * imaginary_part(a).matrix() * h_inv_root);
}

double spectral_radius(const HermitianMatrix& m) {
  const RealVector ev = m.eigenvalues();
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

}  // namespace

double sectorial_index(const Matrix& a) {
  require_square(a, "sectorial_index");
  require_finite(a, "sectorial_index");
  return std::atan(spectral_radius(pencil_matrix(a)));
}

SectorialCert SectorialCert::certify(const Matrix& a, double alpha) {
  require_square(a, "SectorialCert");
  require_finite(a, "SectorialCert");
  if (!(alpha >= 0.0 && alpha < std::numbers::pi / 2)) {
    throw NumericError(ErrorKind::InvalidArgument, "sectorial half-angle must lie in [0, pi/2)");
  }
  const HermitianMatrix h = hermitian_part(a);
  if (!(h.min_eigenvalue() > 0.0)) throw NumericError(ErrorKind::NotAccretive, "SectorialCert: Re A not positive");
  const HermitianMatrix k = imaginary_part(a);
  const HermitianMatrix th = std::tan(alpha) * h;
  const double margin = std::min((th + k).min_eigenvalue(), (th - k).min_eigenvalue());
  if (margin < -1e-10 * scale_of(a)) {
    std::ostringstream msg;
    msg << "W(A) is not inside the sector of half-angle " << alpha << " (margin " << margin << ")";
    throw NumericError(ErrorKind::HypothesisViolated, msg.str());
  }
  return SectorialCert(a, alpha);
}

SectorialCert SectorialCert::certify(const Matrix& a) { return SectorialCert(a, sectorial_index(a)); }

double SectorialCert::sec2() const noexcept {
  const double c = std::cos(alpha_);
  return 1.0 / (c * c);
}

// ---------------------------------------------------------------------------
// Rng

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = seed;
  std::uint64_t h = splitmix64(state);
  state = h ^ (stream * 0xd1b54a32d192ed03ULL);
  return splitmix64(state);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t state = mix_seed(seed, stream);
  for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next_u64() % span);
}

double Rng::normal() {
  // Box–Muller; one variate per call keeps the stream position simple.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
}

// ---------------------------------------------------------------------------
// Generators

namespace {

Matrix gaussian(Index rows, Index cols, Rng& rng) {
  Matrix g(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  return g;
}

}  // namespace

Matrix random_unitary(Index n, Rng& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(n, n, rng));
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

Matrix random_positive_definite(Index n, Rng& rng, double scale) {
  const Matrix u = random_unitary(n, rng);
  RealVector spectrum(n);
  for (Index k = 0; k < n; ++k) spectrum(k) = scale * rng.uniform(0.1, 1.0);
  return HermitianMatrix::symmetrize(u * spectrum.cast<Complex>().asDiagonal() * u.adjoint()).matrix();
}

Matrix random_hermitian(Index n, Rng& rng) {
  const Matrix g = gaussian(n, n, rng);
  return 0.5 * (g + g.adjoint());
}

Matrix random_psd(Index n, Rng& rng, double scale) {
  const auto rank = static_cast<Index>(rng.uniform_int(1, n));
  const Matrix g = gaussian(n, rank, rng);
  Matrix q = g * g.adjoint();
  q *= scale * rng.uniform(0.1, 1.0) / op_norm(q);
  return HermitianMatrix::symmetrize(q).matrix();
}

Vector random_unit_vector(Index n, Rng& rng) {
  Vector x(n);
  for (Index k = 0; k < n; ++k) x(k) = rng.complex_normal();
  return x / x.norm();
}

Matrix random_accretive(Index n, Rng& rng, double scale) {
  const Matrix h = random_positive_definite(n, rng, scale);
  Matrix k = random_hermitian(n, rng);
  const double k_norm = op_norm(k);
  if (k_norm > 0.0) k *= rng.uniform() * op_norm(h) / k_norm;
  return h + Complex{0.0, 1.0} * k;
}

Matrix random_sectorial(Index n, double alpha, Rng& rng, double scale) {
  const Matrix h = random_positive_definite(n, rng, scale);
  Matrix k = random_hermitian(n, rng);
  const HermitianMatrix hh(h);
  const Matrix h_inv_root = hh.apply([](double x) { return 1.0 / std::sqrt(x); }).matrix();
  const double rho = spectral_radius(HermitianMatrix::symmetrize(h_inv_root * k * h_inv_root));
  if (rho > 0.0) k *= 0.95 * std::tan(alpha) / rho;
  return h + Complex{0.0, 1.0} * k;
}

std::string_view to_string(EnsembleClass c) noexcept {
  switch (c) {
    case EnsembleClass::positive_definite: return "positive_definite";
    case EnsembleClass::accretive: return "accretive";
    case EnsembleClass::sectorial: return "sectorial";
    case EnsembleClass::loewner_pair: return "loewner_pair";
    case EnsembleClass::positive_pair: return "positive_pair";
  }
  return "unknown";
}

EnsembleClass parse_ensemble_class(std::string_view name) {
  for (auto c : {EnsembleClass::positive_definite, EnsembleClass::accretive, EnsembleClass::sectorial,
                 EnsembleClass::loewner_pair, EnsembleClass::positive_pair}) {
    if (name == to_string(c)) return c;
  }
  throw NumericError(ErrorKind::InvalidArgument, "unknown ensemble class '" + std::string(name) + "'");
}

void EnsembleSpec::validate() const {
  if (dim < 1 || dim > 16) throw NumericError(ErrorKind::InvalidArgument, "ensemble dim must lie in [1, 16]");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw NumericError(ErrorKind::InvalidArgument, "ensemble scale must be positive");
  }
  if (cls == EnsembleClass::sectorial && !(alpha > 0.0 && alpha < std::numbers::pi / 2)) {
    throw NumericError(ErrorKind::InvalidArgument, "sectorial alpha must lie in (0, pi/2)");
  }
}

namespace {

Matrix generate_single(const EnsembleSpec& spec, Rng& rng) {
  switch (spec.cls) {
    case EnsembleClass::positive_definite: return random_positive_definite(spec.dim, rng, spec.scale);
    case EnsembleClass::accretive: return random_accretive(spec.dim, rng, spec.scale);
    case EnsembleClass::sectorial: return random_sectorial(spec.dim, spec.alpha, rng, spec.scale);
    default: break;
  }
  throw NumericError(ErrorKind::InvalidArgument, "not a single-matrix class");
}

}  // namespace

Draw generate(const EnsembleSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);
  switch (spec.cls) {
    case EnsembleClass::loewner_pair: {
      Matrix a = random_positive_definite(spec.dim, rng, spec.scale);
      Matrix b = a + random_psd(spec.dim, rng, spec.scale);
      return MatrixPair{std::move(a), std::move(b)};
    }
    case EnsembleClass::positive_pair: {
      Matrix a = random_positive_definite(spec.dim, rng, spec.scale);
      Matrix b = random_positive_definite(spec.dim, rng, spec.scale);
      return MatrixPair{std::move(a), std::move(b)};
    }
    default: return generate_single(spec, rng);
  }
}

MatrixPair generate_pair(const EnsembleSpec& spec) {
  Draw d = generate(spec);
  if (auto* pair = std::get_if<MatrixPair>(&d)) return std::move(*pair);
  Rng second(spec.seed, 1);
  return {std::get<Matrix>(std::move(d)), generate_single(spec, second)};
}

}  // namespace accretive

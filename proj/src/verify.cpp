#include "accretive/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "accretive/entropy.hpp"
#include "accretive/quadrature.hpp"
#include "accretive/radius.hpp"

namespace accretive {

namespace {

HermitianMatrix re(const Matrix& m) { return hermitian_part(m); }

HermitianMatrix re_path(MeanFamily family, const HermitianMatrix& a, const HermitianMatrix& b,
                        const WeightParam& w) {
  return HermitianMatrix::symmetrize(mean_path(family, a.matrix(), b.matrix(), w));
}

void require_shared_alpha(const SectorialCert& a, const SectorialCert& b) {
  if (a.alpha() != b.alpha()) {
    throw NumericError(ErrorKind::CertificateMismatch, "the two certificates carry different half-angles");
  }
}

void require_concave_power(double s) {
  if (!(s > 0.0 && s <= 1.0)) throw NumericError(ErrorKind::InvalidArgument, "exponent s must lie in (0, 1]");
}

HermitianMatrix hermitian_power(const HermitianMatrix& h, double s) {
  return h.apply([s](double x) { return std::pow(x, s); });
}

}  // namespace

// ---------------------------------------------------------------------------
// Scalar kernel

std::string_view to_string(ConvexFunction f) noexcept {
  switch (f) {
    case ConvexFunction::exp: return "exp";
    case ConvexFunction::square: return "x^2";
    case ConvexFunction::quartic: return "x^4";
    case ConvexFunction::neg_log: return "-log";
    case ConvexFunction::reciprocal: return "1/x";
  }
  return "unknown";
}

double evaluate(ConvexFunction f, double x) {
  switch (f) {
    case ConvexFunction::exp: return std::exp(x);
    case ConvexFunction::square: return x * x;
    case ConvexFunction::quartic: return x * x * x * x;
    case ConvexFunction::neg_log:
      if (!(x > 0.0)) throw NumericError(ErrorKind::InvalidArgument, "-log needs x > 0");
      return -std::log(x);
    case ConvexFunction::reciprocal:
      if (!(x > 0.0)) throw NumericError(ErrorKind::InvalidArgument, "1/x needs x > 0");
      return 1.0 / x;
  }
  throw NumericError(ErrorKind::InvalidArgument, "unknown convex function");
}

MarginPair check_lemma_scalar(ConvexFunction f, double a, double b, const WeightParam& w) {
  const double t = w.t();
  const double fa = evaluate(f, a);
  const double fb = evaluate(f, b);
  const double gap = 0.5 * (fa + fb) - evaluate(f, 0.5 * (a + b));
  const double chord = (1.0 - t) * fa + t * fb;
  const double at_t = evaluate(f, (1.0 - t) * a + t * b);
  return {chord - (at_t + 2.0 * w.min_weight() * gap), at_t + 2.0 * w.max_weight() * gap - chord};
}

PathConvexity check_path_convexity(const Matrix& a, const Matrix& b, MeanFamily family, const Vector& x,
                                   std::span<const double> grid) {
  require_same_dim(a, b, "check_path_convexity");
  std::map<double, double> cache;
  auto g = [&](double t) {
    auto it = cache.find(t);
    if (it != cache.end()) return it->second;
    const double value = x.dot(mean_path(family, a, b, WeightParam(t)) * x).real();
    cache.emplace(t, value);
    return value;
  };
  const bool log_applies = family != MeanFamily::arithmetic;
  PathConvexity result;
  double convexity = std::numeric_limits<double>::infinity();
  double log_convexity = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double ga = g(grid[i]);
      const double gb = g(grid[j]);
      const double gm = g(0.5 * (grid[i] + grid[j]));
      convexity = std::min(convexity, 0.5 * (ga + gb) - gm);
      if (log_applies) log_convexity = std::min(log_convexity, 0.5 * (std::log(ga) + std::log(gb)) - std::log(gm));
    }
  }
  result.convexity = grid.size() < 2 ? 0.0 : convexity;
  if (log_applies) result.log_convexity = grid.size() < 2 ? 0.0 : log_convexity;
  return result;
}

MarginPair check_mccarthy(const Matrix& b, const Vector& x, const WeightParam& w) {
  const HermitianMatrix hb(b);
  if (!(hb.min_eigenvalue() > 0.0)) throw NumericError(ErrorKind::NotPositiveDefinite, "check_mccarthy");
  auto g = [&](double s) { return x.dot(hermitian_power(hb, s).matrix() * x).real(); };
  const double t = w.t();
  const double g_half = g(0.5);
  const double g_one = g(1.0);
  const double g_t = g(t);
  const double ratio = g_half / std::sqrt(g_one);
  const double lower_rhs = std::pow(ratio, 2.0 * w.min_weight()) * std::pow(g_one, t);
  const double upper_rhs = std::pow(1.0 / ratio, 2.0 * w.max_weight()) * g_t;
  return {lower_rhs - g_t, upper_rhs - std::pow(g_one, t)};
}

// ---------------------------------------------------------------------------
// Accretive means

double check_real_part_mean(const Matrix& a, const Matrix& b, MeanFamily family, const WeightParam& w) {
  const HermitianMatrix lhs = re(mean_path(family, a, b, w));
  return loewner_margin(lhs, re_path(family, re(a), re(b), w));
}

double check_real_part_sec2(const SectorialCert& a, const SectorialCert& b, MeanFamily family,
                            const WeightParam& w) {
  require_shared_alpha(a, b);
  const HermitianMatrix lhs = re(mean_path(family, a.matrix(), b.matrix(), w));
  const HermitianMatrix rhs = a.sec2() * re_path(family, re(a.matrix()), re(b.matrix()), w);
  return loewner_margin(rhs, lhs);
}

double check_thm_nabla_vs_sigma(const Matrix& a, const Matrix& b, MeanFamily family, const WeightParam& w) {
  require_accretive(a, "check_thm_nabla_vs_sigma");
  require_accretive(b, "check_thm_nabla_vs_sigma");
  const HermitianMatrix ra = re(a);
  const HermitianMatrix rb = re(b);
  const HermitianMatrix lhs = re(arith_mean(a, b, w));
  const HermitianMatrix gap = re(arith_mean(a, b, kMidpoint)) - re_path(family, ra, rb, kMidpoint);
  const HermitianMatrix rhs = re(mean_path(family, a, b, w)) + (2.0 * w.max_weight()) * gap;
  return loewner_margin(rhs, lhs);
}

double check_thm_sec2_reverse(const SectorialCert& a, const SectorialCert& b, MeanFamily family,
                              const WeightParam& w) {
  require_shared_alpha(a, b);
  const HermitianMatrix ra = re(a.matrix());
  const HermitianMatrix rb = re(b.matrix());
  const HermitianMatrix lhs = re(mean_path(family, a.matrix(), b.matrix(), w));
  const HermitianMatrix gap = re(arith_mean(a.matrix(), b.matrix(), kMidpoint)) - re_path(family, ra, rb, kMidpoint);
  const HermitianMatrix rhs =
      a.sec2() * (re(arith_mean(a.matrix(), b.matrix(), w)) - (2.0 * w.min_weight()) * gap);
  return loewner_margin(rhs, lhs);
}

MarginPair check_remark_sandwich(const Matrix& a, const Matrix& b, MeanFamily family, const WeightParam& w) {
  const HermitianMatrix ha(a);
  const HermitianMatrix hb(b);
  const HermitianMatrix unweighted = re_path(MeanFamily::arithmetic, ha, hb, kMidpoint) - re_path(family, ha, hb, kMidpoint);
  const HermitianMatrix weighted = re_path(MeanFamily::arithmetic, ha, hb, w) - re_path(family, ha, hb, w);
  return {loewner_margin(weighted, (2.0 * w.min_weight()) * unweighted),
          loewner_margin((2.0 * w.max_weight()) * unweighted, weighted)};
}

HermitianMatrix harmonic_refined_term(const Matrix& a, const Matrix& b, const WeightParam& w) {
  require_accretive(a, "harmonic_refined_term");
  require_accretive(b, "harmonic_refined_term");
  const Matrix ra_inv = inverse(re(a).matrix());
  const Matrix rb_inv = inverse(re(b).matrix());
  const Matrix weighted_inv = (1.0 - w.t()) * ra_inv + w.t() * rb_inv;  // (Re A !_t Re B)^{-1}
  const Matrix mid_inv = 0.5 * (ra_inv + rb_inv);                       // (Re A ! Re B)^{-1}
  const Matrix complex_mid_inv = inverse(re(harm_mean(a, b, kMidpoint)).matrix());
  const HermitianMatrix bracket =
      HermitianMatrix::symmetrize(weighted_inv - 2.0 * w.min_weight() * (mid_inv - complex_mid_inv));
  if (!(bracket.min_eigenvalue() > 0.0)) {
    throw NumericError(ErrorKind::HypothesisViolated, "refined harmonic bracket is not positive definite");
  }
  return HermitianMatrix::symmetrize(inverse(bracket.matrix()));
}

HarmonicRefineMargins check_harmonic_refine(const Matrix& a, const Matrix& b, const WeightParam& w) {
  const HermitianMatrix refined = harmonic_refined_term(a, b, w);
  const HermitianMatrix top = re(harm_mean(a, b, w));
  const HermitianMatrix bottom = re_path(MeanFamily::harmonic, re(a), re(b), w);
  const double scale = std::max(1.0, hermitian_norm(top) + hermitian_norm(refined) + hermitian_norm(bottom));
  const double chain = (loewner_gap(top, bottom) - loewner_gap(top, refined)) / scale;
  return {loewner_margin(top, refined), loewner_margin(refined, bottom), loewner_margin(top, bottom), chain};
}

MarginPair check_cor_integral(const Matrix& a, const Matrix& b, const RepresentingMeasure& m,
                              const MeasureQuadratureOptions& options) {
  require_accretive(a, "check_cor_integral");
  require_accretive(b, "check_cor_integral");
  const Matrix ra_inv = inverse(re(a).matrix());
  const Matrix rb_inv = inverse(re(b).matrix());
  const Matrix mid_gap = 0.5 * (ra_inv + rb_inv) - inverse(re(harm_mean(a, b, kMidpoint)).matrix());
  auto refined = [&](double t) -> Matrix {
    const double r = std::min(t, 1.0 - t);
    return inverse(HermitianMatrix::symmetrize((1.0 - t) * ra_inv + t * rb_inv - 2.0 * r * mid_gap).matrix());
  };
  // r = min{t, 1-t} has a kink at 1/2, so the halves are integrated separately.
  const HermitianMatrix integral = HermitianMatrix::symmetrize(integrate_against(m, refined, true, options));
  const HermitianMatrix top = re(mean_from_measure(a, b, m, options));
  const HermitianMatrix bottom = HermitianMatrix::symmetrize(mean_from_measure(re(a).matrix(), re(b).matrix(), m, options));
  return {loewner_margin(top, integral), loewner_margin(integral, bottom)};
}

double check_concave_sec2(const SectorialCert& a, const SectorialCert& b, double s, const WeightParam& w) {
  require_shared_alpha(a, b);
  require_concave_power(s);
  const double sec2 = a.sec2();
  const HermitianMatrix ra = re(a.matrix());
  const HermitianMatrix rb = re(b.matrix());
  const HermitianMatrix f_of_mid = hermitian_power(re(arith_mean(a.matrix(), b.matrix(), kMidpoint)), s);
  const HermitianMatrix mid_of_f = 0.5 * (hermitian_power(ra, s) + hermitian_power(rb, s));
  const HermitianMatrix chord =
      re(arith_mean(principal_power(a.matrix(), s), principal_power(b.matrix(), s), w));
  const HermitianMatrix lhs = chord + (2.0 * w.min_weight() * sec2) * (f_of_mid - mid_of_f);
  const HermitianMatrix rhs = sec2 * re(principal_power(arith_mean(a.matrix(), b.matrix(), w), s));
  return loewner_margin(rhs, lhs);
}

MarginPair check_hermite_hadamard(const SectorialCert& a, const SectorialCert& b, double s, double rel_tol) {
  require_shared_alpha(a, b);
  require_concave_power(s);
  const double sec2 = a.sec2();
  const Matrix& ma = a.matrix();
  const Matrix& mb = b.matrix();
  auto integrand = [&](double t) -> Matrix {
    return re(principal_power((1.0 - t) * ma + t * mb, s)).matrix();
  };
  const HermitianMatrix integral = HermitianMatrix::symmetrize(integrate_adaptive(integrand, 0.0, 1.0, rel_tol).value);
  const HermitianMatrix left = re(0.5 * (principal_power(ma, s) + principal_power(mb, s)));
  const HermitianMatrix right = re(principal_power(0.5 * (ma + mb), s));
  return {loewner_margin(sec2 * integral, left), loewner_margin((sec2 * sec2) * right, sec2 * integral)};
}

RadiusChainMargins check_radius_chain(const Matrix& a, double omega, double p, const WeightParam& w) {
  const double scale = std::max(1.0, op_norm(a));
  const double refined = refined_bound(a, p, w);
  const double power = power_bound(a, p, w);
  return {(refined - omega) / scale, (power - refined) / scale};
}

// ---------------------------------------------------------------------------
// Case table

namespace {

constexpr std::array<CaseInfo, 21> kCases{{
    {CaseId::lemma_scalar, "lemma_scalar", "refined convexity inequalities for scalar convex f", false},
    {CaseId::prop_path_convex, "prop_path_convex", "t -> <A s_t B x, x> is midpoint convex", false},
    {CaseId::prop_path_logconvex, "prop_path_logconvex", "t -> <A s_t B x, x> is log-convex for s <= #", false},
    {CaseId::mccarthy_lower, "mccarthy_lower", "<B^t x,x> <= (<B^1/2 x,x>/<Bx,x>^1/2)^2r <Bx,x>^t", false},
    {CaseId::mccarthy_upper, "mccarthy_upper", "<Bx,x>^t <= (<Bx,x>^1/2/<B^1/2 x,x>)^2R <B^t x,x>", false},
    {CaseId::baseline_real_part, "baseline_real_part", "Re(A s_t B) >= Re A s_t Re B", false},
    {CaseId::baseline_sec2_reverse, "baseline_sec2_reverse", "Re(A s_t B) <= sec^2(a) Re A s_t Re B", false},
    {CaseId::thm_nabla_vs_sigma, "thm_nabla_vs_sigma", "Re(A nabla_t B) <= Re(A s_t B) + 2R(Re(A nabla B) - Re A s Re B)", false},
    {CaseId::thm_sec2_reverse, "thm_sec2_reverse", "Re(A s_t B) <= sec^2(a)(Re(A nabla_t B) - 2r(Re(A nabla B) - Re A s Re B))", false},
    {CaseId::remark_positive_sandwich, "remark_positive_sandwich", "2r(A nabla B - A s B) <= A nabla_t B - A s_t B <= 2R(A nabla B - A s B)", false},
    {CaseId::thm_harmonic_refine, "thm_harmonic_refine", "Re(A !_t B) >= refined harmonic term >= Re A !_t Re B", false},
    {CaseId::cor_integral_refine, "cor_integral_refine", "Re(A s B) >= integral of refined harmonic term >= Re A s Re B", true},
    {CaseId::thm_concave_sec2, "thm_concave_sec2", "Re(f(A) nabla_t f(B)) + 2r sec^2(a)(...) <= sec^2(a) Re f(A nabla_t B)", false},
    {CaseId::thm_hermite_hadamard, "thm_hermite_hadamard", "Re((f(A)+f(B))/2) <= sec^2(a) int Re f <= sec^4(a) Re f((A+B)/2)", true},
    {CaseId::radius_refine, "radius_refine", "w(A) <= refined bound <= power bound; t=1/2, p=1 refined <= Kittaneh", false},
    {CaseId::lnt_convexity, "lnt_convexity", "ln_t x convex in t for x >= 1, concave for x <= 1", false},
    {CaseId::tsallis_param_convex, "tsallis_param_convex", "T_{(1-t)a+tb} <= (1-t)T_a + tT_b for A <= B (reversed for B <= A)", false},
    {CaseId::tsallis_sandwich, "tsallis_sandwich", "2rC <= (1-t)S + t(B-A) - T_t <= 2RC on positive definite pairs", false},
    {CaseId::tsallis_sandwich_ordered, "tsallis_sandwich_ordered", "same sandwich restricted to pairs with A <= B", false},
    {CaseId::tsallis_monotone, "tsallis_monotone", "T_t(A|B) <= T_s(A|B) for t <= s", false},
    {CaseId::tsallis_half_identity, "tsallis_half_identity", "T_1/2(A|B) = 2(A # B - A)", false},
}};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::array<MeanFamily, 3> kFamilies{MeanFamily::arithmetic, MeanFamily::geometric, MeanFamily::harmonic};

struct Trial {
  Rng rng;
  Index dim;
  double alpha;
  int index;
  const SuiteConfig& config;
  std::vector<SubMargin> parts;

  void add(std::string label, double margin) { parts.push_back({std::move(label), margin}); }
};

std::string label(std::initializer_list<std::pair<std::string_view, double>> fields, std::string_view prefix = {}) {
  std::ostringstream out;
  out << prefix;
  bool first = prefix.empty();
  for (const auto& [key, value] : fields) {
    if (!first) out << ' ';
    first = false;
    out << key << '=' << value;
  }
  return out.str();
}

std::vector<double> unit_grid(double step) {
  std::vector<double> grid;
  const int n = static_cast<int>(std::lround(1.0 / step));
  for (int k = 0; k <= n; ++k) grid.push_back(k * step);
  return grid;
}

MatrixPair accretive_pair(Trial& tr) {
  if (tr.index % 2 == 0) {
    Matrix a = random_accretive(tr.dim, tr.rng);
    Matrix b = random_accretive(tr.dim, tr.rng);
    return {std::move(a), std::move(b)};
  }
  Matrix a = random_sectorial(tr.dim, tr.alpha, tr.rng);
  Matrix b = random_sectorial(tr.dim, tr.alpha, tr.rng);
  return {std::move(a), std::move(b)};
}

std::pair<SectorialCert, SectorialCert> sectorial_pair(Trial& tr) {
  Matrix a = random_sectorial(tr.dim, tr.alpha, tr.rng);
  Matrix b = random_sectorial(tr.dim, tr.alpha, tr.rng);
  return {SectorialCert::certify(a, tr.alpha), SectorialCert::certify(b, tr.alpha)};
}

MatrixPair positive_pair(Trial& tr) {
  Matrix a = random_positive_definite(tr.dim, tr.rng);
  Matrix b = random_positive_definite(tr.dim, tr.rng);
  return {std::move(a), std::move(b)};
}

MatrixPair ordered_pair(Trial& tr) {
  Matrix a = random_positive_definite(tr.dim, tr.rng);
  Matrix b = a + random_psd(tr.dim, tr.rng);
  return {std::move(a), std::move(b)};
}

Matrix radius_sample(Trial& tr) {
  const Complex i{0.0, 1.0};
  switch (tr.index % 3) {
    case 0: return random_hermitian(tr.dim, tr.rng) + i * random_hermitian(tr.dim, tr.rng);
    case 1: {
      const Matrix u = random_unitary(tr.dim, tr.rng);
      Vector d(tr.dim);
      for (Index k = 0; k < tr.dim; ++k) d(k) = tr.rng.complex_normal();
      return u * d.asDiagonal() * u.adjoint();
    }
    default: {
      Matrix m = random_hermitian(tr.dim, tr.rng) + i * random_hermitian(tr.dim, tr.rng);
      return m.triangularView<Eigen::StrictlyUpper>();
    }
  }
}

void run_lemma_scalar(Trial& tr) {
  constexpr std::array<ConvexFunction, 5> fs{ConvexFunction::exp, ConvexFunction::square, ConvexFunction::quartic,
                                             ConvexFunction::neg_log, ConvexFunction::reciprocal};
  const ConvexFunction f = fs[tr.index % fs.size()];
  const double a = tr.rng.uniform(0.1, 3.0);
  const double b = tr.rng.uniform(0.1, 3.0);
  const double norm = std::max(1.0, std::abs(evaluate(f, a)) + std::abs(evaluate(f, b)));
  for (double t : {tr.rng.uniform(), 0.0, 0.5, 1.0}) {
    const MarginPair m = check_lemma_scalar(f, a, b, WeightParam(t));
    tr.add(label({{"t", t}, {"a", a}, {"b", b}}, std::string(to_string(f)) + " first "), m.first / norm);
    tr.add(label({{"t", t}, {"a", a}, {"b", b}}, std::string(to_string(f)) + " second "), m.second / norm);
  }
}

void run_path(Trial& tr, bool log_form) {
  const auto [a, b] = positive_pair(tr);
  const Vector x = random_unit_vector(tr.dim, tr.rng);
  const std::vector<double> grid = unit_grid(0.1);
  for (MeanFamily family : kFamilies) {
    if (log_form && family == MeanFamily::arithmetic) continue;
    const PathConvexity pc = check_path_convexity(a, b, family, x, grid);
    const double margin = log_form ? *pc.log_convexity : pc.convexity;
    tr.add(std::string(to_string(family)), margin);
  }
}

void run_mccarthy(Trial& tr, bool lower) {
  const Matrix b = random_positive_definite(tr.dim, tr.rng, tr.rng.uniform(0.5, 4.0));
  const Vector x = random_unit_vector(tr.dim, tr.rng);
  std::vector<double> ts = tr.config.t_grid;
  ts.insert(ts.end(), {0.0, 1.0, tr.rng.uniform()});
  for (double t : ts) {
    const MarginPair m = check_mccarthy(b, x, WeightParam(t));
    tr.add(label({{"t", t}}), lower ? m.first : m.second);
  }
}

template <class Check>
void over_families_and_weights(Trial& tr, Check&& check) {
  for (MeanFamily family : kFamilies)
    for (double t : tr.config.t_grid) tr.add(label({{"t", t}}, std::string(to_string(family)) + " "), check(family, WeightParam(t)));
}

void run_case_body(CaseId id, Trial& tr) {
  const SuiteConfig& cfg = tr.config;
  switch (id) {
    case CaseId::lemma_scalar: return run_lemma_scalar(tr);
    case CaseId::prop_path_convex: return run_path(tr, false);
    case CaseId::prop_path_logconvex: return run_path(tr, true);
    case CaseId::mccarthy_lower: return run_mccarthy(tr, true);
    case CaseId::mccarthy_upper: return run_mccarthy(tr, false);
    case CaseId::baseline_real_part: {
      const auto [a, b] = accretive_pair(tr);
      return over_families_and_weights(tr, [&](MeanFamily f, const WeightParam& w) { return check_real_part_mean(a, b, f, w); });
    }
    case CaseId::baseline_sec2_reverse: {
      const auto [a, b] = sectorial_pair(tr);
      return over_families_and_weights(tr, [&](MeanFamily f, const WeightParam& w) { return check_real_part_sec2(a, b, f, w); });
    }
    case CaseId::thm_nabla_vs_sigma: {
      const auto [a, b] = accretive_pair(tr);
      return over_families_and_weights(tr, [&](MeanFamily f, const WeightParam& w) { return check_thm_nabla_vs_sigma(a, b, f, w); });
    }
    case CaseId::thm_sec2_reverse: {
      const auto [a, b] = sectorial_pair(tr);
      return over_families_and_weights(tr, [&](MeanFamily f, const WeightParam& w) { return check_thm_sec2_reverse(a, b, f, w); });
    }
    case CaseId::remark_positive_sandwich: {
      const auto [a, b] = positive_pair(tr);
      return over_families_and_weights(tr, [&](MeanFamily f, const WeightParam& w) { return check_remark_sandwich(a, b, f, w).min(); });
    }
    case CaseId::thm_harmonic_refine: {
      const auto [a, b] = accretive_pair(tr);
      for (double t : cfg.t_grid) {
        const HarmonicRefineMargins m = check_harmonic_refine(a, b, WeightParam(t));
        tr.add(label({{"t", t}}, "refine "), m.refine);
        tr.add(label({{"t", t}}, "baseline "), m.baseline);
        tr.add(label({{"t", t}}, "chain "), m.chain);
      }
      return;
    }
    case CaseId::cor_integral_refine: {
      const auto [a, b] = accretive_pair(tr);
      std::optional<RepresentingMeasure> m;
      if (tr.index % 4 == 3) {
        std::vector<std::pair<double, double>> atoms;
        double total = 0.0;
        for (int k = 0; k < 3; ++k) {
          atoms.emplace_back(tr.rng.uniform(), tr.rng.uniform(0.1, 1.0));
          total += atoms.back().second;
        }
        for (auto& atom : atoms) atom.second /= total;
        // Renormalize exactly onto mass 1.
        atoms.back().second = 1.0 - atoms[0].second - atoms[1].second;
        m = RepresentingMeasure::discrete(std::move(atoms));
      } else {
        m = RepresentingMeasure::power_density(0.25 * (1 + tr.index % 4));
      }
      const MarginPair margins = check_cor_integral(a, b, *m);
      tr.add(m->describe() + " upper", margins.first);
      tr.add(m->describe() + " lower", margins.second);
      return;
    }
    case CaseId::thm_concave_sec2: {
      const auto [a, b] = sectorial_pair(tr);
      for (double s : cfg.s_grid)
        for (double t : cfg.t_grid) tr.add(label({{"s", s}, {"t", t}}), check_concave_sec2(a, b, s, WeightParam(t)));
      return;
    }
    case CaseId::thm_hermite_hadamard: {
      const auto [a, b] = sectorial_pair(tr);
      for (double s : cfg.s_grid) {
        const MarginPair m = check_hermite_hadamard(a, b, s);
        tr.add(label({{"s", s}}, "left "), m.first);
        tr.add(label({{"s", s}}, "right "), m.second);
      }
      return;
    }
    case CaseId::radius_refine: {
      const Matrix a = radius_sample(tr);
      const double omega = numerical_radius(a).omega;
      for (double p : cfg.p_grid) {
        for (double t : cfg.t_grid) {
          const RadiusChainMargins m = check_radius_chain(a, omega, p, WeightParam(t));
          tr.add(label({{"p", p}, {"t", t}}, "omega<=refined "), m.omega_below_refined);
          tr.add(label({{"p", p}, {"t", t}}, "refined<=power "), m.refined_below_power);
        }
      }
      const double scale = std::max(1.0, op_norm(a));
      tr.add("refined(1/2,1)<=kittaneh", (kittaneh_bound(a) - refined_bound(a, 1.0, kMidpoint)) / scale);
      return;
    }
    case CaseId::lnt_convexity: {
      const double x = std::exp(tr.rng.uniform(-3.0, 3.0));
      std::vector<double> grid;
      for (int k = 1; k <= 20; ++k) grid.push_back(0.05 * k);
      const LntConvexityReport r = check_lnt_convexity(x, grid);
      tr.add(label({{"x", x}}), r.margin);
      return;
    }
    case CaseId::tsallis_param_convex: {
      auto [a, b] = ordered_pair(tr);
      if (tr.index % 2 == 1) std::swap(a, b);
      const double pa = tr.rng.uniform(0.05, 1.0);
      const double pb = tr.rng.uniform(0.05, 1.0);
      for (double t : cfg.t_grid) {
        tr.add(label({{"a", pa}, {"b", pb}, {"t", t}}, tr.index % 2 ? "reverse " : "forward "),
               check_tsallis_param_convexity(a, b, pa, pb, WeightParam(t)));
      }
      return;
    }
    case CaseId::tsallis_sandwich:
    case CaseId::tsallis_sandwich_ordered: {
      const auto [a, b] = id == CaseId::tsallis_sandwich ? positive_pair(tr) : ordered_pair(tr);
      for (double t : cfg.t_grid) {
        if (t == 0.0) continue;
        const SandwichMargins m = check_tsallis_sandwich(a, b, WeightParam(t));
        tr.add(label({{"t", t}}, "lower "), m.lower);
        tr.add(label({{"t", t}}, "upper "), m.upper);
      }
      return;
    }
    case CaseId::tsallis_monotone: {
      const auto [a, b] = positive_pair(tr);
      std::vector<double> grid;
      for (int k = 1; k <= 9; ++k) grid.push_back(0.1 * k);
      tr.add("grid 0.1..0.9", check_tsallis_monotone(a, b, grid));
      return;
    }
    case CaseId::tsallis_half_identity: {
      const auto [a, b] = positive_pair(tr);
      const HermitianMatrix lhs = tsallis_log_form(a, b, EntropyParam(0.5));
      const Matrix rhs = 2.0 * (geom_mean(a, b, kMidpoint) - a);
      tr.add("||T_1/2 - 2(A#B - A)||", -(lhs.matrix() - rhs).norm() / std::max(1.0, hermitian_norm(lhs)));
      return;
    }
  }
}

}  // namespace

std::span<const CaseInfo> all_cases() noexcept { return kCases; }

const CaseInfo& case_info(CaseId id) {
  for (const CaseInfo& c : kCases)
    if (c.id == id) return c;
  throw NumericError(ErrorKind::InvalidArgument, "unknown case id");
}

CaseId parse_case_id(std::string_view name) {
  for (const CaseInfo& c : kCases)
    if (c.name == name) return c.id;
  throw NumericError(ErrorKind::InvalidArgument, "unknown case '" + std::string(name) + "'");
}

void SuiteConfig::validate() const {
  auto fail = [](const std::string& what) { throw NumericError(ErrorKind::InvalidArgument, what); };
  if (trials < 0) fail("trials must be >= 0");
  if (dim_min < 1 || dim_max > 16 || dim_min > dim_max) fail("dimension range must satisfy 1 <= min <= max <= 16");
  for (double t : t_grid)
    if (!(t >= 0.0 && t <= 1.0)) fail("t grid values must lie in [0, 1]");
  for (double a : alpha_grid)
    if (!(a > 0.0 && a < std::numbers::pi / 2)) fail("alpha grid values must lie in (0, pi/2)");
  for (double p : p_grid)
    if (!(p >= 1.0)) fail("p grid values must be >= 1");
  for (double s : s_grid)
    if (!(s > 0.0 && s <= 1.0)) fail("s grid values must lie in (0, 1]");
  if (alpha_grid.empty() || t_grid.empty() || p_grid.empty() || s_grid.empty()) fail("grids must be non-empty");
  if (!(tol > 0.0)) fail("tol must be positive");
  (void)selected_cases();
}

std::vector<CaseId> SuiteConfig::selected_cases() const {
  std::vector<CaseId> ids;
  for (const std::string& name : cases) {
    if (name == "all") {
      for (const CaseInfo& c : kCases) ids.push_back(c.id);
    } else {
      ids.push_back(parse_case_id(name));
    }
  }
  std::vector<CaseId> unique;
  for (CaseId id : ids)
    if (std::find(unique.begin(), unique.end(), id) == unique.end()) unique.push_back(id);
  return unique;
}

TrialResult run_trial(CaseId id, const SuiteConfig& config, int trial) {
  const CaseInfo& info = case_info(id);
  Rng rng(mix_seed(config.seed, fnv1a(info.name)), static_cast<std::uint64_t>(trial));
  const auto dim = static_cast<Index>(rng.uniform_int(config.dim_min, config.dim_max));
  const double alpha = config.alpha_grid[static_cast<std::size_t>(trial) % config.alpha_grid.size()];
  Trial tr{rng, dim, alpha, trial, config, {}};
  TrialResult result;
  result.dim = static_cast<int>(dim);
  try {
    run_case_body(id, tr);
    result.margin = std::numeric_limits<double>::infinity();
    for (const SubMargin& part : tr.parts) result.margin = std::min(result.margin, part.margin);
    if (tr.parts.empty()) result.margin = 0.0;
  } catch (const NumericError& e) {
    // A trial whose hypotheses cannot be evaluated counts as a failure.
    tr.add(std::string("error: ") + e.what(), -1.0);
    result.margin = -1.0;
  }
  result.parts = std::move(tr.parts);
  return result;
}

InequalityReport run_case(CaseId id, const SuiteConfig& config) {
  const CaseInfo& info = case_info(id);
  const auto start = std::chrono::steady_clock::now();
  InequalityReport report;
  report.case_id = std::string(info.name);
  report.trials = config.trials;
  report.dim_min = config.dim_min;
  report.dim_max = config.dim_max;
  report.seed = config.seed;
  report.tol = info.quadrature ? 100.0 * config.tol : config.tol;
  report.margins.reserve(static_cast<std::size_t>(config.trials));
  for (int trial = 0; trial < config.trials; ++trial) {
    const TrialResult r = run_trial(id, config, trial);
    report.margins.push_back(r.margin);
    if (!(r.margin >= -report.tol)) report.failures.push_back({config.seed, trial});
  }
  std::sort(report.margins.begin(), report.margins.end());
  report.min_margin = report.margins.empty() ? 0.0 : report.margins.front();
  report.pass = report.failures.empty();
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<InequalityReport> run_suite(const SuiteConfig& config) {
  config.validate();
  std::vector<InequalityReport> reports;
  if (config.trials == 0) return reports;
  for (CaseId id : config.selected_cases()) reports.push_back(run_case(id, config));
  return reports;
}

bool all_pass(std::span<const InequalityReport> reports) noexcept {
  return std::all_of(reports.begin(), reports.end(), [](const InequalityReport& r) { return r.pass; });
}

}  // namespace accretive

// accretive-lab: matrix means, numerical radius, Tsallis entropy and the
// randomized inequality suite from the command line.
//
// Exit codes: 0 success / all cases pass, 1 some case fails,
// 2 usage or configuration error, 3 numerical or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "accretive/config.hpp"
#include "accretive/entropy.hpp"
#include "accretive/matrix_io.hpp"
#include "accretive/means.hpp"
#include "accretive/radius.hpp"
#include "accretive/report.hpp"
#include "accretive/sectorial.hpp"
#include "accretive/verify.hpp"
#include "json.hpp"

namespace {

using namespace accretive;
using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

enum Exit : int { kOk = 0, kFail = 1, kUsage = 2, kError = 3 };

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(out);
    if (!file) throw std::runtime_error("cannot open " + out + " for writing");
    file << text;
  }
}

json matrix_json(const Matrix& m) { return json::parse(format_matrix(m)); }

int run_verify(const std::vector<std::string>& args) {
  const VerifyOptions options = parse_verify_args(args, std::getenv("ACCRETIVE_LAB_SEED"));
  if (options.help_requested) {
    std::cout << options.help;
    return kOk;
  }
  SuiteConfig config = options.config;
  if (options.replay) {
    config.seed = options.replay->seed;
    bool pass = true;
    for (CaseId id : config.selected_cases()) {
      const TrialResult r = run_trial(id, config, options.replay->trial);
      std::cout << case_info(id).name << " seed=" << config.seed << " trial=" << options.replay->trial
                << " dim=" << r.dim << " margin=" << r.margin << '\n';
      for (const SubMargin& part : r.parts) std::cout << "  " << part.label << ": " << part.margin << '\n';
      const double tol = case_info(id).quadrature ? 100.0 * config.tol : config.tol;
      pass = pass && r.margin >= -tol;
    }
    return pass ? kOk : kFail;
  }
  const std::vector<InequalityReport> reports = run_suite(config);
  if (!config.out.empty()) write_reports(config.out, reports);
  std::cout << summary_table(reports);
  std::cout << (all_pass(reports) ? "all cases pass\n" : "some cases FAIL\n");
  return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  // `verify` has its own parser (shared with the config tests), so hand it
  // the remaining arguments untouched.
  if (argc >= 2 && std::string(argv[1]) == "verify") {
    try {
      return run_verify(std::vector<std::string>(argv + 2, argv + argc));
    } catch (const ConfigError& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kError;
    }
  }

  CLI::App app{"Matrix means, numerical radius and Tsallis entropy toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "draw a random matrix (or pair) from an ensemble");
  std::string cls = "positive_definite", out, out_b;
  int dim = 4;
  double alpha = 0.5, scale = 1.0;
  std::uint64_t seed = 42;
  gen->add_option("--class", cls, "positive_definite|accretive|sectorial|loewner_pair|positive_pair");
  gen->add_option("--dim", dim, "dimension (1..16)");
  gen->add_option("--alpha", alpha, "sector half-angle for --class sectorial");
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--scale", scale, "spectral scale");
  gen->add_option("--out", out, "output path for the (first) matrix");
  gen->add_option("--out-b", out_b, "output path for the second matrix of a pair class");

  // compute mean
  auto* compute = app.add_subcommand("compute", "compute a derived matrix");
  compute->require_subcommand(1);
  auto* mean_cmd = compute->add_subcommand("mean", "weighted or measure mean of two accretive matrices");
  std::string kind = "geom", path_a, path_b, mean_out;
  double mean_alpha = 0.5, t = 0.5;
  mean_cmd->add_option("--kind", kind, "arith|geom|harm|measure")->check(CLI::IsMember({"arith", "geom", "harm", "measure"}));
  mean_cmd->add_option("--alpha", mean_alpha, "exponent of the power-density measure (--kind measure)");
  mean_cmd->add_option("--t", t, "weight in [0, 1]");
  mean_cmd->add_option("--A", path_a, "matrix A (JSON)")->required();
  mean_cmd->add_option("--B", path_b, "matrix B (JSON)")->required();
  mean_cmd->add_option("--out", mean_out, "output path (stdout if omitted)");

  // radius
  auto* radius = app.add_subcommand("radius", "numerical radius and its upper bounds");
  std::string radius_a;
  double p = 1.0, radius_t = 0.5;
  bool bounds = false;
  radius->add_option("--A", radius_a, "matrix A (JSON)")->required();
  radius->add_option("--p", p, "power p >= 1");
  radius->add_option("--t", radius_t, "weight in [0, 1]");
  radius->add_flag("--bounds", bounds, "also print the Kittaneh, power and refined bounds");

  // entropy
  auto* entropy = app.add_subcommand("entropy", "Tsallis relative operator entropy");
  std::string ent_a, ent_b;
  double ent_t = 0.5;
  bool with_s = false;
  entropy->add_option("--A", ent_a, "positive definite A (JSON)")->required();
  entropy->add_option("--B", ent_b, "positive definite B (JSON)")->required();
  entropy->add_option("--t", ent_t, "parameter in (0, 1]");
  entropy->add_flag("--s", with_s, "also print the relative operator entropy S(A|B)");

  app.add_subcommand("verify", "randomized inequality suite (see `verify --help`)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      EnsembleSpec spec{dim, parse_ensemble_class(cls), alpha, seed, scale};
      const Draw draw = generate(spec);
      if (const auto* m = std::get_if<Matrix>(&draw)) {
        emit(format_matrix(*m), out);
      } else {
        const auto& [a, b] = std::get<MatrixPair>(draw);
        if (out.empty()) {
          std::cout << json{{"A", matrix_json(a)}, {"B", matrix_json(b)}}.dump() << '\n';
        } else {
          if (out_b.empty()) throw NumericError(ErrorKind::InvalidArgument, "pair classes need --out-b");
          write_matrix(out, a);
          write_matrix(out_b, b);
        }
      }
    } else if (mean_cmd->parsed()) {
      const Matrix a = read_matrix(path_a);
      const Matrix b = read_matrix(path_b);
      const WeightParam w(t);
      const Matrix m = kind == "measure"
                           ? mean(RepresentingMeasure::power_density(mean_alpha), a, b, w)
                           : mean(parse_mean_family(kind), a, b, w);
      emit(format_matrix(m), mean_out);
    } else if (radius->parsed()) {
      const Matrix a = read_matrix(radius_a);
      const RadiusResult r = numerical_radius(a);
      json doc{{"omega", r.omega}, {"theta_star", r.theta_star}};
      if (bounds) {
        const WeightParam w(radius_t);
        doc["kittaneh"] = kittaneh_bound(a);
        doc["power"] = power_bound(a, p, w);
        doc["refined"] = refined_bound(a, p, w);
        doc["p"] = p;
        doc["t"] = radius_t;
      }
      std::cout << doc.dump(2) << '\n';
    } else if (entropy->parsed()) {
      const Matrix a = read_matrix(ent_a);
      const Matrix b = read_matrix(ent_b);
      const Matrix tt = tsallis(a, b, EntropyParam(ent_t)).matrix();
      if (with_s) {
        std::cout << json{{"tsallis", matrix_json(tt)}, {"relative_entropy", matrix_json(relative_entropy(a, b).matrix())}}.dump()
                  << '\n';
      } else {
        std::cout << format_matrix(tt);
      }
    }
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kUsage : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kOk;
}

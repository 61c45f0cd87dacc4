#include "accretive/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace accretive {

using nlohmann::json;

namespace {

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) throw ConfigError(std::string("invalid ") + what + ": '" + text + "'");
  return value;
}

int parse_int(const std::string& text, const char* what) {
  int value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) throw ConfigError(std::string("invalid ") + what + ": '" + text + "'");
  return value;
}

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ',')) {
      if (!part.empty()) out.push_back(part);
    }
  }
  return out;
}

}  // namespace

void apply_config_json(const std::string& text, SuiteConfig& config) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "cases") {
        config.cases = value.is_string() ? std::vector<std::string>{value.get<std::string>()}
                                         : value.get<std::vector<std::string>>();
      } else if (key == "trials") {
        config.trials = value.get<int>();
      } else if (key == "dim_min") {
        config.dim_min = value.get<int>();
      } else if (key == "dim_max") {
        config.dim_max = value.get<int>();
      } else if (key == "dims") {
        std::tie(config.dim_min, config.dim_max) =
            value.is_string() ? parse_dim_range(value.get<std::string>()) : std::pair{value.at(0).get<int>(), value.at(1).get<int>()};
      } else if (key == "alpha_grid") {
        config.alpha_grid = value.get<std::vector<double>>();
      } else if (key == "t_grid") {
        config.t_grid = value.get<std::vector<double>>();
      } else if (key == "p_grid") {
        config.p_grid = value.get<std::vector<double>>();
      } else if (key == "s_grid") {
        config.s_grid = value.get<std::vector<double>>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else if (key == "tol") {
        config.tol = value.get<double>();
      } else if (key == "out") {
        config.out = value.get<std::string>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value in config file: ") + e.what());
  }
}

ReplayTarget parse_replay(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ConfigError("--replay expects seed:index, got '" + text + "'");
  ReplayTarget target{parse_u64(text.substr(0, colon), "replay seed"), parse_int(text.substr(colon + 1), "replay index")};
  if (target.trial < 0) throw ConfigError("replay index must be >= 0");
  return target;
}

std::pair<int, int> parse_dim_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int d = parse_int(text, "dimension");
    return {d, d};
  }
  return {parse_int(text.substr(0, dots), "dimension"), parse_int(text.substr(dots + 2), "dimension")};
}

VerifyOptions parse_verify_args(const std::vector<std::string>& args, const char* env_seed) {
  CLI::App app{"Randomized Loewner-margin verification suite", "verify"};
  std::vector<std::string> cases;
  std::optional<int> trials;
  std::optional<std::string> dims;
  std::vector<double> alpha, t, p, s;
  std::optional<std::string> seed;
  std::optional<double> tol;
  std::optional<std::string> out;
  std::optional<std::string> config_path;
  std::optional<std::string> replay;

  app.add_option("--case", cases, "case ids (comma separated) or 'all'")->delimiter(',');
  app.add_option("--trials", trials, "trials per case");
  app.add_option("--dim", dims, "dimension range lo..hi");
  app.add_option("--alpha", alpha, "sector half-angle grid")->delimiter(',');
  app.add_option("--t", t, "weight grid")->delimiter(',');
  app.add_option("--p", p, "power grid for radius bounds")->delimiter(',');
  app.add_option("--s", s, "exponent grid for f(x) = x^s")->delimiter(',');
  app.add_option("--seed", seed, "base seed (default 42, or ACCRETIVE_LAB_SEED)");
  app.add_option("--tol", tol, "relative tolerance");
  app.add_option("--out", out, "report JSON path");
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--replay", replay, "re-run one trial: seed:index");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  VerifyOptions options;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    options.help_requested = true;
    options.help = app.help();
    return options;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  SuiteConfig& config = options.config;
  if (env_seed != nullptr && *env_seed != '\0') config.seed = parse_u64(env_seed, "ACCRETIVE_LAB_SEED");
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw ConfigError("cannot open config file " + *config_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    apply_config_json(buf.str(), config);
  }
  if (!cases.empty()) config.cases = split_commas(cases);
  if (trials) config.trials = *trials;
  if (dims) std::tie(config.dim_min, config.dim_max) = parse_dim_range(*dims);
  if (!alpha.empty()) config.alpha_grid = alpha;
  if (!t.empty()) config.t_grid = t;
  if (!p.empty()) config.p_grid = p;
  if (!s.empty()) config.s_grid = s;
  if (seed) config.seed = parse_u64(*seed, "seed");
  if (tol) config.tol = *tol;
  if (out) config.out = *out;
  if (replay) options.replay = parse_replay(*replay);

  try {
    config.validate();
  } catch (const NumericError& e) {
    throw ConfigError(e.what());
  }
  return options;
}

}  // namespace accretive

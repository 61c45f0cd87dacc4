#include "accretive/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace accretive {

using nlohmann::json;

namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::quiet_NaN() : j.get<double>();
}

json to_json(const InequalityReport& r, bool include_wall_time) {
  json margins = json::array();
  for (double m : r.margins) margins.push_back(number(m));
  const Histogram h = margin_histogram(r.margins);
  json failures = json::array();
  for (const Failure& f : r.failures) failures.push_back({{"seed", f.seed}, {"trial", f.trial}});
  return {{"case", r.case_id},
          {"trials", r.trials},
          {"dims", {r.dim_min, r.dim_max}},
          {"seed", r.seed},
          {"tol", r.tol},
          {"min_margin", number(r.min_margin)},
          {"margins", margins},
          {"margins_histogram", {{"edges", h.edges}, {"counts", h.counts}}},
          {"failures", failures},
          {"wall_time", include_wall_time ? r.wall_time : 0.0},
          {"pass", r.pass}};
}

}  // namespace

Histogram margin_histogram(std::span<const double> margins, int bins) {
  if (bins < 1) throw NumericError(ErrorKind::InvalidArgument, "histogram needs at least one bin");
  Histogram h;
  std::vector<double> finite;
  std::copy_if(margins.begin(), margins.end(), std::back_inserter(finite), [](double x) { return std::isfinite(x); });
  if (finite.empty()) return h;
  const auto [lo_it, hi_it] = std::minmax_element(finite.begin(), finite.end());
  const double lo = *lo_it;
  double hi = *hi_it;
  if (hi <= lo) hi = lo + std::max(1e-300, std::abs(lo) * 1e-12);
  const double width = (hi - lo) / bins;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int k = 0; k <= bins; ++k) h.edges[static_cast<std::size_t>(k)] = lo + k * width;
  h.edges.back() = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  for (double x : finite) {
    auto k = static_cast<int>((x - lo) / width);
    k = std::clamp(k, 0, bins - 1);
    ++h.counts[static_cast<std::size_t>(k)];
  }
  return h;
}

std::string reports_to_json(std::span<const InequalityReport> reports, bool include_wall_time) {
  json doc;
  doc["reports"] = json::array();
  for (const InequalityReport& r : reports) doc["reports"].push_back(to_json(r, include_wall_time));
  doc["pass"] = all_pass(reports);
  return doc.dump(2) + "\n";
}

std::vector<InequalityReport> reports_from_json(const std::string& text) {
  std::vector<InequalityReport> out;
  try {
    const json doc = json::parse(text);
    for (const json& j : doc.at("reports")) {
      InequalityReport r;
      r.case_id = j.at("case").get<std::string>();
      r.trials = j.at("trials").get<int>();
      r.dim_min = j.at("dims").at(0).get<int>();
      r.dim_max = j.at("dims").at(1).get<int>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.tol = j.at("tol").get<double>();
      r.min_margin = read_number(j.at("min_margin"));
      for (const json& m : j.at("margins")) r.margins.push_back(read_number(m));
      for (const json& f : j.at("failures")) r.failures.push_back({f.at("seed").get<std::uint64_t>(), f.at("trial").get<int>()});
      r.wall_time = j.at("wall_time").get<double>();
      r.pass = j.at("pass").get<bool>();
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw NumericError(ErrorKind::InvalidArgument, std::string("malformed report JSON: ") + e.what());
  }
  return out;
}

void write_reports(const std::filesystem::path& path, std::span<const InequalityReport> reports) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << reports_to_json(reports);
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

std::string summary_table(std::span<const InequalityReport> reports) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "case" << std::right << std::setw(8) << "trials" << std::setw(16)
      << "min_margin" << std::setw(10) << "failures" << "  result\n";
  for (const InequalityReport& r : reports) {
    out << std::left << std::setw(28) << r.case_id << std::right << std::setw(8) << r.trials << std::setw(16)
        << std::scientific << std::setprecision(3) << r.min_margin << std::setw(10) << r.failures.size() << "  "
        << (r.pass ? "PASS" : "FAIL") << '\n';
  }
  return out.str();
}

int exit_code(std::span<const InequalityReport> reports) noexcept { return all_pass(reports) ? 0 : 1; }

}  // namespace accretive

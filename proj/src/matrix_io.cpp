#include "accretive/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace accretive {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& why) {
  throw NumericError(ErrorKind::InvalidArgument, "malformed matrix JSON: " + why);
}

void fill(const json& rows, Index n, Matrix& m, bool imaginary) {
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) malformed("expected " + std::to_string(n) + " rows");
  for (Index i = 0; i < n; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n) malformed("row " + std::to_string(i) + " has wrong length");
    for (Index j = 0; j < n; ++j) {
      const json& v = row[static_cast<std::size_t>(j)];
      if (!v.is_number()) malformed("non-numeric entry");
      const double x = v.get<double>();
      if (imaginary) m(i, j).imag(x);
      else m(i, j).real(x);
    }
  }
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("re")) malformed("needs \"n\" and \"re\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) malformed("\"n\" must be a positive integer");
  const auto n = static_cast<Index>(doc["n"].get<long long>());
  Matrix m = Matrix::Zero(n, n);
  fill(doc["re"], n, m, false);
  if (doc.contains("im")) fill(doc["im"], n, m, true);
  return m;
}

std::string format_matrix(const Matrix& m) {
  require_square(m, "format_matrix");
  json re = json::array();
  json im = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    json c = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(std::move(r));
    im.push_back(std::move(c));
  }
  return json{{"n", m.rows()}, {"re", re}, {"im", im}}.dump() + "\n";
}

Matrix read_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

void write_matrix(const std::filesystem::path& path, const Matrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << format_matrix(m);
}

}  // namespace accretive

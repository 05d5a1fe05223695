#include "cartan/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace cartan {

namespace {

int index_field(const Json& obj, const char* key, int n) {
  if (!obj.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const Json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  long long i = v.get<long long>();
  if (i < 1 || i > n) throw ParseError(std::string("field '") + key + "' out of range 1.." + std::to_string(n));
  return static_cast<int>(i) - 1;
}

mpq_class rational_field(const Json& obj, const char* key) {
  if (!obj.contains(key)) return 0;
  Scalar s = scalar_from_json(obj.at(key));
  if (!s.is_real()) throw ParseError(std::string("field '") + key + "' must be a rational");
  return s.re();
}

}  // namespace

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_float()) throw ParseError("floating point value " + j.dump() + "; write rationals as strings");
  throw ParseError("expected a rational, got " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

Json algebra_to_json(const LieAlgebra& g) {
  const int n = g.dim();
  Json out;
  out["dim"] = n;
  out["basis"] = g.basis();
  Json brackets = Json::array();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Json terms = Json::array();
      for (int k = 0; k < n; ++k) {
        Scalar c = g.c(i, j, k);
        if (c.is_zero()) continue;
        terms.push_back({{"k", k + 1}, {"re", Scalar::rational_str(c.re())}, {"im", Scalar::rational_str(c.im())}});
      }
      if (!terms.empty()) brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"terms", terms}});
    }
  out["brackets"] = brackets;
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("algebra file must be a JSON object");
  if (!j.contains("dim") || !j.at("dim").is_number_integer()) throw ParseError("missing integer field 'dim'");
  long long n = j.at("dim").get<long long>();
  if (n < 1 || n > 64) throw ParseError("dim must lie in 1..64");
  std::vector<std::string> basis;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array() || static_cast<long long>(b.size()) != n) throw ParseError("basis must list dim labels");
    for (const auto& label : b) {
      if (!label.is_string()) throw ParseError("basis labels must be strings");
      basis.push_back(label.get<std::string>());
    }
  }
  LieAlgebra g(static_cast<int>(n), basis);
  if (!j.contains("brackets")) throw ParseError("missing field 'brackets' (use [] for an abelian algebra)");
  const Json& brackets = j.at("brackets");
  if (!brackets.is_array()) throw ParseError("'brackets' must be an array");
  std::set<std::pair<int, int>> seen;
  for (const auto& br : brackets) {
    if (!br.is_object()) throw ParseError("bracket entries must be objects");
    int i = index_field(br, "i", static_cast<int>(n));
    int jj = index_field(br, "j", static_cast<int>(n));
    if (i >= jj) throw ParseError("bracket (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ") needs i < j");
    if (!seen.insert({i, jj}).second)
      throw ParseError("bracket (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ") listed twice");
    if (!br.contains("terms") || !br.at("terms").is_array()) throw ParseError("bracket entry without 'terms' array");
    std::set<int> ks;
    for (const auto& t : br.at("terms")) {
      if (!t.is_object()) throw ParseError("terms must be objects");
      int k = index_field(t, "k", static_cast<int>(n));
      if (!ks.insert(k).second) throw ParseError("term k=" + std::to_string(k + 1) + " repeated");
      g.add_bracket(i, jj, k, Scalar(rational_field(t, "re"), rational_field(t, "im")));
    }
  }
  return g;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix rows must be arrays");
    std::vector<Scalar> r;
    for (const auto& v : row) r.push_back(scalar_from_json(v));
    if (!rows.empty() && r.size() != rows.front().size()) throw ParseError("matrix rows have different lengths");
    rows.push_back(std::move(r));
  }
  if (rows.front().empty()) throw ParseError("matrix rows must be nonempty");
  return Matrix::from_rows(rows);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

std::string fnv1a64(const std::string& data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace cartan

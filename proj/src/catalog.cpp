#include "cartan/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "cartan/lie_core.hpp"

namespace cartan {

LieAlgebra heisenberg_algebra(int p) {
  if (p < 1) throw PreconditionError("Heisenberg algebra needs p >= 1");
  LieAlgebra g(2 * p + 1);
  for (int k = 0; k < p; ++k) g.add_bracket(2 * k, 2 * k + 1, 2 * p, 1);
  return g;
}

LieAlgebra abelian_algebra(int n) { return LieAlgebra(n); }

LieAlgebra dim3_solvable1() {
  LieAlgebra g(3);
  g.add_bracket(0, 1, 2, 1);
  g.add_bracket(0, 1, 0, 1);
  return g;
}

LieAlgebra dim3_solvable_b(const Scalar& b) {
  LieAlgebra g = dim3_solvable1();
  g.add_bracket(1, 2, 0, b);
  return g;
}

LieAlgebra dim3_sl2(const Scalar& lambda) {
  LieAlgebra g(3);
  g.add_bracket(0, 1, 2, 1);
  g.add_bracket(0, 2, 0, lambda);
  g.add_bracket(1, 2, 1, -lambda);
  return g;
}

LieAlgebra dim3_so3() {
  LieAlgebra g(3);
  g.add_bracket(1, 2, 0, -1);
  g.add_bracket(2, 0, 1, -1);
  g.add_bracket(0, 1, 2, -1);
  return g;
}

namespace {

struct Dim5Variant {
  std::vector<std::string> params;
  std::function<void(LieAlgebra&, const std::function<Scalar(const char*)>&)> build;
};

// Brackets use 1-based labels to stay readable against the tables.
void put(LieAlgebra& g, int i, int j, int k, const Scalar& c) { g.add_bracket(i - 1, j - 1, k - 1, c); }

const std::map<std::string, Dim5Variant>& dim5_table() {
  static const std::map<std::string, Dim5Variant> table = {
      {"diag_ii_a",
       {{"a", "b", "c", "d"},
        [](LieAlgebra& g, const auto& v) {
          Scalar a = v("a"), b = v("b"), c = v("c"), d = v("d");
          Scalar e = a * c + b * d;
          put(g, 1, 2, 5, 1), put(g, 1, 2, 1, a), put(g, 1, 2, 2, b);
          put(g, 1, 3, 3, c), put(g, 1, 4, 4, -c);
          put(g, 2, 3, 3, d), put(g, 2, 4, 4, -d);
          put(g, 3, 4, 5, 1);
          put(g, 3, 5, 3, e), put(g, 4, 5, 4, -e);
        }}},
      {"diag_ii_b",
       {{"b", "c", "d"},
        [](LieAlgebra& g, const auto& v) {
          Scalar b = v("b"), c = v("c"), d = v("d");
          put(g, 1, 2, 5, 1), put(g, 1, 2, 2, b);
          put(g, 1, 3, 3, c), put(g, 1, 4, 4, b - c);
          put(g, 2, 3, 3, d), put(g, 2, 4, 4, -d);
          put(g, 3, 4, 2, b), put(g, 3, 4, 5, 1);
          put(g, 3, 5, 3, b * d), put(g, 4, 5, 4, -(b * d));
        }}},
      {"diag_ii_c",
       {{"a", "b", "c", "d"},
        [](LieAlgebra& g, const auto& v) {
          Scalar a = v("a"), b = v("b"), c = v("c"), d = v("d");
          Scalar e = a * c + b * d;
          put(g, 1, 2, 5, 1), put(g, 1, 2, 1, a), put(g, 1, 2, 2, b);
          put(g, 1, 3, 3, c), put(g, 1, 4, 4, b - c);
          put(g, 2, 3, 3, d), put(g, 2, 4, 4, -a - d);
          put(g, 3, 4, 1, a), put(g, 3, 4, 2, b), put(g, 3, 4, 5, 1);
          put(g, 3, 5, 3, e), put(g, 4, 5, 4, -e);
        }}},
      {"nondiag_case1",
       {{"c", "d", "e", "f"},
        [](LieAlgebra& g, const auto& v) {
          Scalar c = v("c"), d = v("d"), e = v("e"), f = v("f");
          Scalar h = c * e + d * f;
          put(g, 1, 2, 5, 1);
          put(g, 3, 4, 3, e), put(g, 3, 4, 4, f), put(g, 3, 4, 5, 1);
          put(g, 1, 3, 2, c), put(g, 1, 4, 2, d);
          put(g, 2, 3, 1, -c), put(g, 2, 4, 1, -d);
          put(g, 1, 5, 2, -h), put(g, 2, 5, 1, h);
        }}},
      {"nondiag_case2",
       {{"a", "c", "d"},
        [](LieAlgebra& g, const auto& v) {
          Scalar a = v("a"), c = v("c"), d = v("d");
          put(g, 1, 2, 3, 2 * a), put(g, 1, 2, 5, 1);
          put(g, 3, 4, 3, 2 * a), put(g, 3, 4, 5, 1);
          put(g, 1, 3, 2, c);
          put(g, 1, 4, 1, a), put(g, 1, 4, 2, d);
          put(g, 2, 3, 1, -c);
          put(g, 2, 4, 1, -d), put(g, 2, 4, 2, a);
          put(g, 1, 5, 2, -2 * a * c), put(g, 2, 5, 1, 2 * a * c);
        }}},
      {"nondiag_case4",
       {{"a", "b", "c", "d"},
        [](LieAlgebra& g, const auto& v) {
          Scalar a = v("a"), b = v("b"), c = v("c"), d = v("d");
          Scalar h = 2 * (a * c - b * d);
          put(g, 1, 2, 3, 2 * a), put(g, 1, 2, 4, -2 * b), put(g, 1, 2, 5, 1);
          put(g, 3, 4, 3, 2 * a), put(g, 3, 4, 4, -2 * b), put(g, 3, 4, 5, 1);
          put(g, 1, 3, 1, b), put(g, 1, 3, 2, c);
          put(g, 1, 4, 1, a), put(g, 1, 4, 2, d);
          put(g, 2, 3, 1, -c), put(g, 2, 3, 2, b);
          put(g, 2, 4, 1, -d), put(g, 2, 4, 2, a);
          put(g, 1, 5, 2, -h), put(g, 2, 5, 1, h);
        }}},
  };
  return table;
}

const Dim5Variant& dim5_lookup(const std::string& variant) {
  auto it = dim5_table().find(variant);
  if (it == dim5_table().end()) throw ParseError("unknown dim5 variant '" + variant + "'");
  return it->second;
}

}  // namespace

const std::vector<std::string>& dim5_variants() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : dim5_table()) v.push_back(k);
    return v;
  }();
  return names;
}

const std::vector<std::string>& dim5_parameter_names(const std::string& variant) {
  return dim5_lookup(variant).params;
}

LieAlgebra dim5_algebra(const std::string& variant, const std::map<std::string, Scalar>& params) {
  const auto& def = dim5_lookup(variant);
  for (const auto& [k, _] : params)
    if (std::find(def.params.begin(), def.params.end(), k) == def.params.end())
      throw ParseError("dim5 variant '" + variant + "' has no parameter '" + k + "'");
  LieAlgebra g(5);
  def.build(g, [&](const char* name) {
    auto it = params.find(name);
    return it == params.end() ? Scalar() : it->second;
  });
  return g;
}

LieAlgebra filiform_model(int n) {
  if (n < 3) throw PreconditionError("filiform model needs n >= 3");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
  LieAlgebra g(n, labels);
  for (int i = 1; i <= n - 2; ++i) g.add_bracket(0, i, i + 1, 1);
  return g;
}

BilinearMap filiform_psi(int p, int k, int s) {
  const int n = 2 * p + 1;
  BilinearMap psi(n);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j < n; ++j) {
      mpz_class b = binomial(j - k - 1, k - i);
      if (b == 0) continue;
      int target = s + i + j - 2 * k - 1;
      if (target < 0 || target >= n) continue;
      mpq_class c(b);
      if ((k - i) % 2) c = -c;
      psi.add(i, j, target, Scalar(c));
    }
  return psi;
}

LieAlgebra filiform_contact_algebra(int p, const std::vector<Scalar>& a) {
  if (p < 2) throw PreconditionError("contact filiform family needs p >= 2");
  if (static_cast<int>(a.size()) != p - 1)
    throw PreconditionError("expected " + std::to_string(p - 1) + " coefficients a_{i,2i+2}");
  LieAlgebra l = filiform_model(2 * p + 1);
  BilinearMap mu = l.bracket_map();
  for (int i = 1; i < p; ++i) mu += a[static_cast<std::size_t>(i - 1)] * filiform_psi(p, i, 2 * i + 2);
  return LieAlgebra(mu, l.basis());
}

std::vector<Scalar> filiform_contact_conditions(int p, const std::vector<Scalar>& a) {
  if (static_cast<int>(a.size()) != p - 1)
    throw PreconditionError("expected " + std::to_string(p - 1) + " coefficients a_{i,2i+2}");
  std::vector<Scalar> out;
  for (int i = 1; i < p; ++i) {
    Scalar s;
    for (int k = 0; k < i; ++k) {
      Scalar term = a[static_cast<std::size_t>(p - i + k - 1)] * Scalar(mpq_class(binomial(2 * i - k - 2, k)));
      s += k % 2 ? -term : term;
    }
    out.push_back(s);
  }
  return out;
}

LieAlgebra mu_c9_table(const Scalar& a14, const Scalar& a26, const Scalar& a38) {
  LieAlgebra g = filiform_model(9);
  g.add_bracket(1, 2, 4, a14);
  g.add_bracket(1, 3, 5, a14);
  g.add_bracket(1, 4, 6, a14 - a26);
  g.add_bracket(1, 5, 7, a14 - 2 * a26);
  g.add_bracket(1, 6, 8, a14 - 3 * a26 + a38);
  g.add_bracket(2, 3, 6, a26);
  g.add_bracket(2, 4, 7, a26);
  g.add_bracket(2, 5, 8, a26 - a38);
  g.add_bracket(3, 4, 8, a38);
  return g;
}

LieAlgebra frobenius_algebra(int p, const std::vector<Scalar>& a) {
  if (p < 1) throw PreconditionError("frobeniusian model needs p >= 1");
  if (static_cast<int>(a.size()) != p - 1)
    throw PreconditionError("expected " + std::to_string(p - 1) + " parameters a_k");
  LieAlgebra g(2 * p);
  g.add_bracket(0, 1, 0, -1);
  for (int k = 1; k < p; ++k) {
    const Scalar& ak = a[static_cast<std::size_t>(k - 1)];
    g.add_bracket(2 * k, 2 * k + 1, 0, -1);
    g.add_bracket(1, 2 * k, 2 * k, -ak);
    g.add_bracket(1, 2 * k + 1, 2 * k + 1, 1 + ak);
  }
  return g;
}

LieAlgebra frobenius_base(int p) { return frobenius_algebra(p, std::vector<Scalar>(static_cast<std::size_t>(p - 1))); }

std::vector<BilinearMap> frobenius_psi_cocycles(int p) {
  std::vector<BilinearMap> out;
  for (int k = 1; k < p; ++k) {
    BilinearMap psi(2 * p);
    psi.add(1, 2 * k, 2 * k, -1);
    psi.add(1, 2 * k + 1, 2 * k + 1, 1);
    out.push_back(std::move(psi));
  }
  return out;
}

LieAlgebra frobenius_sample() {
  // d w1 = w1^w2 + w3^w4, d w2 = 0, d w3 = -w2^w3 + w3^w4, d w4 = 0
  LieAlgebra g(4);
  g.add_bracket(0, 1, 0, -1);
  g.add_bracket(2, 3, 0, -1);
  g.add_bracket(1, 2, 2, 1);
  g.add_bracket(2, 3, 2, -1);
  return g;
}

// ---- id grammar ----

CatalogId parse_catalog_id(const std::string& id) {
  CatalogId out;
  auto colon = id.find(':');
  out.name = id.substr(0, colon);
  if (out.name.empty()) throw ParseError("empty catalog id");
  for (char ch : out.name)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
      throw ParseError("bad catalog name '" + out.name + "'");
  if (colon == std::string::npos) return out;
  std::string rest = id.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto eq = rest.find('=', pos);
    if (eq == std::string::npos) throw ParseError("expected key=value in '" + id + "'");
    std::string key = rest.substr(pos, eq - pos);
    if (key.empty()) throw ParseError("empty key in '" + id + "'");
    if (out.values.count(key)) throw ParseError("duplicate key '" + key + "' in '" + id + "'");
    pos = eq + 1;
    std::vector<std::string> vals;
    if (pos < rest.size() && rest[pos] == '[') {
      auto close = rest.find(']', pos);
      if (close == std::string::npos) throw ParseError("unterminated array in '" + id + "'");
      std::string body = rest.substr(pos + 1, close - pos - 1);
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) vals.push_back(item);
      if (!body.empty() && body.back() == ',') throw ParseError("trailing comma in '" + id + "'");
      pos = close + 1;
    } else {
      auto comma = rest.find(',', pos);
      vals.push_back(rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
      pos = comma == std::string::npos ? rest.size() : comma;
    }
    for (const auto& v : vals)
      if (v.empty()) throw ParseError("empty value for '" + key + "' in '" + id + "'");
    out.values[key] = vals;
    if (pos < rest.size()) {
      if (rest[pos] != ',') throw ParseError("expected ',' in '" + id + "'");
      ++pos;
      if (pos == rest.size()) throw ParseError("trailing comma in '" + id + "'");
    }
  }
  return out;
}

namespace {

class IdReader {
 public:
  explicit IdReader(CatalogId id) : id_(std::move(id)) {}

  bool has(const std::string& key) const { return id_.values.count(key) > 0; }
  std::string text(const std::string& key) {
    used_.push_back(key);
    auto it = id_.values.find(key);
    if (it == id_.values.end()) throw ParseError("catalog id '" + id_.name + "' needs '" + key + "'");
    if (it->second.size() != 1) throw ParseError("'" + key + "' must be a single value");
    return it->second.front();
  }
  int integer(const std::string& key) {
    mpq_class q = Scalar::parse_rational(text(key));
    if (q.get_den() != 1 || !q.get_num().fits_sint_p()) throw ParseError("'" + key + "' must be an integer");
    return static_cast<int>(q.get_num().get_si());
  }
  Scalar scalar(const std::string& key, bool required = true) {
    if (!required && !has(key)) {
      used_.push_back(key);
      return Scalar();
    }
    return Scalar::parse(text(key));
  }
  std::vector<Scalar> array(const std::string& key, std::size_t expected) {
    used_.push_back(key);
    std::vector<Scalar> out;
    auto it = id_.values.find(key);
    if (it == id_.values.end()) {
      if (expected == 0) return out;
      throw ParseError("catalog id '" + id_.name + "' needs '" + key + "'");
    }
    for (const auto& v : it->second) out.push_back(Scalar::parse(v));
    if (out.size() != expected)
      throw ParseError("'" + key + "' needs " + std::to_string(expected) + " values, got " + std::to_string(out.size()));
    return out;
  }
  void finish() const {
    for (const auto& [k, _] : id_.values)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw ParseError("catalog id '" + id_.name + "' does not take '" + k + "'");
  }
  const std::string& name() const { return id_.name; }

 private:
  CatalogId id_;
  std::vector<std::string> used_;
};

std::string canonical_id(const std::string& name, const std::vector<std::pair<std::string, std::string>>& kv) {
  std::string out = name;
  for (std::size_t i = 0; i < kv.size(); ++i) out += (i ? "," : ":") + kv[i].first + "=" + kv[i].second;
  return out;
}

std::string array_text(const std::vector<Scalar>& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].str();
  return s + "]";
}

int positive_int(IdReader& r, const std::string& key, int lo, int hi) {
  int v = r.integer(key);
  if (v < lo || v > hi)
    throw PreconditionError("'" + key + "' must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
  return v;
}

}  // namespace

CatalogEntry catalog_entry(const std::string& id_text, const CatalogOptions& opts) {
  IdReader r(parse_catalog_id(id_text));
  CatalogEntry e;
  LieAlgebra g;
  int form_index = 0;
  const std::string& name = r.name();

  if (name == "heisenberg") {
    int p = positive_int(r, "p", 1, 31);
    g = heisenberg_algebra(p);
    e.id = canonical_id(name, {{"p", std::to_string(p)}});
    e.params = {{"p", p}};
    form_index = 2 * p;
    e.expected_class = 2 * p + 1;
    e.nilpotent = true;
    e.provenance = "Heisenberg algebra h_{2p+1}: [X_{2k-1},X_{2k}] = X_{2p+1}";
  } else if (name == "abelian") {
    int n = positive_int(r, "n", 1, 64);
    g = abelian_algebra(n);
    e.id = canonical_id(name, {{"n", std::to_string(n)}});
    e.params = {{"n", n}};
    e.expected_class = 1;
    e.nilpotent = true;
    e.provenance = "abelian algebra, every nonzero covector has class 1";
  } else if (name == "dim3") {
    std::string kind = r.text("kind");
    form_index = 2;
    e.expected_class = 3;
    if (kind == "heisenberg") {
      g = heisenberg_algebra(1);
      e.id = canonical_id(name, {{"kind", kind}});
      e.nilpotent = true;
      e.provenance = "dimension 3: [X1,X2] = X3";
    } else if (kind == "solvable1") {
      g = dim3_solvable1();
      e.id = canonical_id(name, {{"kind", kind}});
      e.provenance = "dimension 3: [X1,X2] = X3 + X1, [X2,X3] = 0";
    } else if (kind == "solvable_b") {
      Scalar b = r.scalar("b");
      if (b.is_zero()) throw PreconditionError("solvable_b needs b != 0");
      g = dim3_solvable_b(b);
      e.id = canonical_id(name, {{"kind", kind}, {"b", b.str()}});
      e.params = {{"b", b}};
      e.provenance = "dimension 3: [X1,X2] = X3 + X1, [X2,X3] = b X1";
    } else if (kind == "sl2") {
      Scalar l = r.has("lambda") ? r.scalar("lambda") : Scalar(1);
      g = dim3_sl2(l);
      e.id = canonical_id(name, {{"kind", kind}, {"lambda", l.str()}});
      e.params = {{"lambda", l}};
      e.nilpotent = l.is_zero();
      e.provenance = "dimension 3: [X1,X2] = X3, [X1,X3] = l X1, [X2,X3] = -l X2 (sl(2) for l != 0)";
    } else if (kind == "so3") {
      g = dim3_so3();
      e.id = canonical_id(name, {{"kind", kind}});
      form_index = 0;
      e.provenance =
          "so(3) stored as [X2,X3] = -X1, [X3,X1] = -X2, [X1,X2] = -X3 so that d w1 = w2^w3 (and cyclic) holds "
          "under d w(X,Y) = -w([X,Y])";
    } else {
      throw ParseError("unknown dim3 kind '" + kind + "'");
    }
  } else if (name == "dim5") {
    std::string variant = r.text("variant");
    std::map<std::string, Scalar> params;
    std::vector<std::pair<std::string, std::string>> kv{{"variant", variant}};
    for (const auto& pn : dim5_parameter_names(variant)) {
      Scalar v = r.scalar(pn, false);
      params[pn] = v;
      kv.emplace_back(pn, v.str());
      e.params.emplace_back(pn, v);
    }
    g = dim5_algebra(variant, params);
    e.id = canonical_id(name, kv);
    form_index = 4;
    e.expected_class = 5;
    e.provenance = "dimension 5 quadratic deformation of h5, family " + variant;
  } else if (name == "filiform") {
    int n = positive_int(r, "n", 3, 64);
    g = filiform_model(n);
    e.id = canonical_id(name, {{"n", std::to_string(n)}});
    e.params = {{"n", n}};
    form_index = n - 1;
    e.expected_class = 3;
    e.nilpotent = true;
    e.provenance = "model filiform L_n: [e0,e_i] = e_{i+1}";
  } else if (name == "filiform_contact" || name == "mu_c9") {
    int p = name == "mu_c9" ? 4 : positive_int(r, "p", 2, 31);
    auto a = r.array("a", static_cast<std::size_t>(p - 1));
    g = name == "mu_c9" ? mu_c9_table(a[0], a[1], a[2]) : filiform_contact_algebra(p, a);
    e.id = name == "mu_c9" ? canonical_id(name, {{"a", array_text(a)}})
                           : canonical_id(name, {{"p", std::to_string(p)}, {"a", array_text(a)}});
    e.params.emplace_back("p", p);
    for (int i = 1; i < p; ++i) e.params.emplace_back("a" + std::to_string(i), a[static_cast<std::size_t>(i - 1)]);
    form_index = 2 * p;
    e.expected_class = 2 * p + 1;
    auto conds = filiform_contact_conditions(p, a);
    e.constraints_hold = std::none_of(conds.begin(), conds.end(), [](const Scalar& s) { return s.is_zero(); });
    e.nilpotent = true;
    e.provenance = name == "mu_c9" ? "contact filiform mu_{c,9}, explicit table in e0..e8"
                                   : "contact filiform L_{2p+1} + sum a_{i,2i+2} psi_{i,2i+2}";
  } else if (name == "frobenius" || name == "frobenius_base") {
    int p = positive_int(r, "p", 1, 32);
    auto a = name == "frobenius" ? r.array("a", static_cast<std::size_t>(p - 1))
                                 : std::vector<Scalar>(static_cast<std::size_t>(p - 1));
    g = frobenius_algebra(p, a);
    e.id = name == "frobenius" ? canonical_id(name, {{"p", std::to_string(p)}, {"a", array_text(a)}})
                               : canonical_id(name, {{"p", std::to_string(p)}});
    e.params.emplace_back("p", p);
    for (int i = 1; i < p; ++i) e.params.emplace_back("a" + std::to_string(i), a[static_cast<std::size_t>(i - 1)]);
    e.expected_class = 2 * p;
    e.frobeniusian = true;
    e.provenance = "frobeniusian model: d w1 = w1^w2 + sum w_{2k+1}^w_{2k+2}, d w_{2k+1} = a_k w2^w_{2k+1}, "
                   "d w_{2k+2} = -(1+a_k) w2^w_{2k+2}";
  } else if (name == "frobenius_sample") {
    g = frobenius_sample();
    e.id = name;
    e.expected_class = 4;
    e.frobeniusian = true;
    e.provenance = "frobeniusian dimension 4 outside the model family; exponents (2,0,1,1) contract it to g_{-1}";
  } else {
    throw ParseError("unknown catalog name '" + name + "'");
  }
  r.finish();

  auto jr = jacobi_check(g);
  e.jacobi = jr.ok;
  if (!jr.ok && !opts.allow_nonjacobi) {
    const auto& w = *jr.witness;
    throw PreconditionError("catalog entry " + e.id + " fails Jacobi at (" + std::to_string(w.i + 1) + "," +
                            std::to_string(w.j + 1) + "," + std::to_string(w.k + 1) + "): " +
                            vector_str(w.defect) + " (pass allow_nonjacobi to inspect it anyway)");
  }
  e.algebra = std::make_shared<const LieAlgebra>(std::move(g));
  e.distinguished_form = DualForm::basis(e.algebra, form_index);
  return e;
}

std::vector<std::string> standard_catalog_ids() {
  return {
      "heisenberg:p=1",
      "heisenberg:p=2",
      "heisenberg:p=3",
      "abelian:n=4",
      "dim3:kind=heisenberg",
      "dim3:kind=solvable1",
      "dim3:kind=solvable_b,b=2",
      "dim3:kind=sl2,lambda=1",
      "dim3:kind=so3",
      "dim5:variant=diag_ii_a,a=1,b=2,c=3,d=-1",
      "dim5:variant=diag_ii_b,b=1/2,c=2,d=3",
      "dim5:variant=diag_ii_c,a=1,b=-1,c=2,d=1/3",
      "dim5:variant=nondiag_case1,c=1,d=2,e=-1,f=3",
      "dim5:variant=nondiag_case2,a=1,c=2,d=-3",
      "dim5:variant=nondiag_case4,a=1,b=2,c=-1,d=1/2",
      "filiform:n=4",
      "filiform:n=5",
      "filiform:n=7",
      "filiform_contact:p=2,a=[1]",
      "filiform_contact:p=3,a=[1,2]",
      "mu_c9:a=[0,0,1]",
      "mu_c9:a=[12,3,1]",
      "frobenius:p=2,a=[1/2]",
      "frobenius:p=3,a=[2,-3]",
      "frobenius_base:p=3",
      "frobenius_sample",
  };
}

std::string catalog_help() {
  return "Catalog ids: name[:key=val,...], arrays as [v1,v2]\n"
         "  heisenberg:p=N              h_{2N+1}\n"
         "  abelian:n=N\n"
         "  dim3:kind=K                 K in heisenberg, solvable1, solvable_b (b=..), sl2 (lambda=..), so3\n"
         "  dim5:variant=V,<params>     V in diag_ii_a(a,b,c,d), diag_ii_b(b,c,d), diag_ii_c(a,b,c,d),\n"
         "                              nondiag_case1(c,d,e,f), nondiag_case2(a,c,d), nondiag_case4(a,b,c,d)\n"
         "  filiform:n=N                L_N\n"
         "  filiform_contact:p=P,a=[a_{1,4},...,a_{P-1,2P}]\n"
         "  mu_c9:a=[a14,a26,a38]\n"
         "  frobenius:p=P,a=[a_1,...,a_{P-1}]\n"
         "  frobenius_base:p=P\n"
         "  frobenius_sample\n";
}

}  // namespace cartan

#include "cli.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cartan/catalog.hpp"
#include "cartan/contact.hpp"
#include "cartan/contraction.hpp"
#include "cartan/deformation.hpp"
#include "cartan/dual_form.hpp"
#include "cartan/io.hpp"
#include "cartan/lie_core.hpp"
#include "cartan/random.hpp"

namespace cartanlab {

namespace {

using namespace cartan;

struct Options {
  std::optional<std::uint64_t> seed;
  bool allow_nonjacobi = false;
  std::string output;

  std::string algebra_file;
  std::string catalog_id;
  std::string form;
  std::string suite;
  int samples = 0;
  std::string exponents;
  std::string basis_file;

  int n = 0;
  bool identity = false;
  bool reeb = false;
  std::string invariance_file;
  std::string singular_file;
  std::optional<int> q;
  bool skip_orthogonality = false;
};

struct Report {
  std::string command;
  Json args = Json::object();
  Json results = Json::object();
  std::string digest_input;
  std::uint64_t seed = 0;
  int passed = 0;
  int failed = 0;

  void tally(bool ok) { ok ? ++passed : ++failed; }
  void check(const std::string& name, bool ok, Json detail = nullptr) {
    tally(ok);
    Json c = {{"name", name}, {"ok", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    results["checks"].push_back(std::move(c));
  }
  Json to_json(const std::string& status) const {
    Json j;
    j["command"] = command;
    j["args"] = args;
    j["inputs_digest"] = fnv1a64(digest_input);
    j["seed"] = seed;
    j["results"] = results;
    j["suite"] = {{"passed", passed}, {"failed", failed}};
    j["status"] = status;
    return j;
  }
};

struct Source {
  AlgebraPtr g;
  std::optional<CatalogEntry> entry;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty()) throw ParseError("empty list");
  return out;
}

std::vector<Scalar> parse_scalars(const std::string& text) {
  std::vector<Scalar> out;
  for (const auto& s : split_list(text)) out.push_back(Scalar::parse(s));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split_list(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw ParseError("not an integer: '" + s + "'");
    out.push_back(v);
  }
  return out;
}

Json witness_json(const JacobiWitness& w) {
  return {{"i", w.i + 1}, {"j", w.j + 1}, {"k", w.k + 1}, {"defect", vector_to_json(w.defect)}};
}

// With --allow-nonjacobi the suites run formally on the given constants.
void require_jacobi(const LieAlgebra& g, const Options& o, Report& r) {
  JacobiResult jr = jacobi_check(g);
  r.results["jacobi"] = jr.ok;
  if (o.allow_nonjacobi) return;
  if (!jr.ok) {
    const auto& w = *jr.witness;
    throw PreconditionError("bracket fails the Jacobi identity at (" + std::to_string(w.i + 1) + "," +
                            std::to_string(w.j + 1) + "," + std::to_string(w.k + 1) + ")");
  }
}

Source load_source(const Options& o, Report& r) {
  if (o.algebra_file.empty() == o.catalog_id.empty()) throw ParseError("exactly one of --algebra or --catalog is required");
  Source s;
  if (!o.algebra_file.empty()) {
    s.g = std::make_shared<const LieAlgebra>(algebra_from_json(read_json_file(o.algebra_file)));
    r.args["algebra"] = o.algebra_file;
    r.digest_input += "algebra\n";
  } else {
    s.entry = catalog_entry(o.catalog_id, {o.allow_nonjacobi});
    s.g = s.entry->algebra;
    r.args["catalog"] = o.catalog_id;
    r.digest_input += "catalog " + o.catalog_id + "\n";
  }
  r.digest_input += canonical_dump(algebra_to_json(*s.g));
  return s;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

Matrix read_matrix(const std::string& path, Report& r, const char* key) {
  Matrix m = matrix_from_json(read_json_file(path));
  r.args[key] = path;
  r.digest_input += std::string(key) + "\n" + canonical_dump(matrix_to_json(m));
  return m;
}

// ---- class ----

void cmd_class(const Options& o, Report& r) {
  Source s = load_source(o, r);
  const int n = s.g->dim();
  DualForm w;
  if (!o.form.empty()) {
    auto c = parse_scalars(o.form);
    if (static_cast<int>(c.size()) != n)
      throw PreconditionError("form has " + std::to_string(c.size()) + " coefficients, algebra has dimension " +
                              std::to_string(n));
    w = DualForm::covector(s.g, c);
    r.args["form"] = o.form;
    r.digest_input += "form " + vector_to_json(c).dump() + "\n";
  } else if (s.entry) {
    w = s.entry->distinguished_form;
  } else {
    throw ParseError("--form is required with --algebra");
  }
  CartanClass cc = cartan_class(w);
  r.results["form"] = w.str();
  r.results["class"] = cc.cls;
  r.results["q"] = cc.q;
  r.results["branch"] = cc.odd_branch ? "odd: w^(dw)^q != 0" : "even: w^(dw)^q = 0";
  r.results["characteristic_space"] = vectors_json(cc.characteristic_space);
  r.check("class-equals-codimension", cc.cls == n - static_cast<int>(cc.characteristic_space.size()));
  if (s.entry && o.form.empty()) {
    r.results["expected_class"] = s.entry->expected_class;
    r.results["constraints_hold"] = s.entry->constraints_hold;
    if (s.entry->constraints_hold) r.check("expected-class", cc.cls == s.entry->expected_class);
  }
}

// ---- check ----

std::vector<DualForm> sample_forms(const Source& s, Rng& rng, int count) {
  std::vector<DualForm> out;
  for (int t = 0; t < count; ++t) out.push_back(DualForm::covector(s.g, rng.covector(s.g->dim())));
  return out;
}

void suite_jacobi(const Source& s, Report& r) {
  JacobiResult jr = jacobi_check(*s.g);
  r.results["ok"] = jr.ok;
  r.check("jacobi", jr.ok, jr.witness ? witness_json(*jr.witness) : Json(nullptr));
}

void suite_parity(const Source& s, const Options& o, Report& r) {
  require_jacobi(*s.g, o, r);
  CentralSeries cs = lower_central_series(*s.g);
  if (!cs.nilindex) throw PreconditionError("algebra is not nilpotent");
  Rng rng(r.seed);
  const int count = o.samples > 0 ? o.samples : 100;
  std::map<int, int> classes;
  int odd = 0;
  Json first_even = nullptr;
  for (const auto& w : sample_forms(s, rng, count)) {
    int cls = cartan_class(w).cls;
    ++classes[cls];
    r.tally(cls % 2 == 1);
    if (cls % 2 == 1)
      ++odd;
    else if (first_even.is_null())
      first_even = vector_to_json(w.as_covector());
  }
  r.results["nilindex"] = *cs.nilindex;
  r.results["samples"] = count;
  r.results["odd"] = odd;
  r.results["even"] = count - odd;
  Json hist = Json::object();
  for (const auto& [c, k] : classes) hist[std::to_string(c)] = k;
  r.results["classes"] = hist;
  if (!first_even.is_null()) r.results["first_even_covector"] = first_even;
}

void suite_center(const Source& s, const Options& o, Report& r) {
  require_jacobi(*s.g, o, r);
  const int n = s.g->dim();
  Subspace z = center(*s.g);
  r.results["center_dimension"] = z.dim();
  r.results["center_basis"] = vectors_json(z.basis());
  bool nilpotent = lower_central_series(*s.g).nilindex.has_value();

  Rng rng(r.seed);
  std::vector<DualForm> forms;
  if (s.entry && !s.entry->distinguished_form.is_zero()) forms.push_back(s.entry->distinguished_form);
  for (auto& w : sample_forms(s, rng, o.samples > 0 ? o.samples : 50)) forms.push_back(std::move(w));

  int inside = 0, outside = 0, max_class = 0;
  for (const auto& w : forms) {
    CartanClass cc = cartan_class(w);
    max_class = std::max(max_class, cc.cls);
    Subspace c = Subspace::span(n, cc.characteristic_space);
    // Central vectors annihilated by w.
    Matrix m(1, static_cast<std::size_t>(z.dim()));
    for (int t = 0; t < z.dim(); ++t) m(0, static_cast<std::size_t>(t)) = w(z.basis()[static_cast<std::size_t>(t)]);
    bool ok = true;
    for (const auto& coeffs : nullspace(m)) {
      Vector v = zero_vector(n);
      for (int t = 0; t < z.dim(); ++t) axpy(v, coeffs[static_cast<std::size_t>(t)], z.basis()[static_cast<std::size_t>(t)]);
      if (!c.contains(v)) ok = false;
    }
    ok ? ++inside : ++outside;
  }
  r.check("central-kernel-in-characteristic-space", outside == 0,
          {{"forms", static_cast<int>(forms.size())}, {"violations", outside}});
  r.results["max_class"] = max_class;
  if (max_class == n && n % 2 == 1 && nilpotent) r.check("contact-nilpotent-center-dimension-1", z.dim() == 1);
  if (max_class == n && n % 2 == 0) r.check("frobeniusian-trivial-center", z.dim() == 0);
}

void suite_quadra(const Source& s, Report& r) {
  DeformationSpec spec = decompose_contact_basis(*s.g);
  QuadraResult qr = quadra_check(spec);
  Json failures = Json::array();
  for (const auto& f : qr.failures)
    failures.push_back({{"equation", f.equation},
                        {"i", f.i + 1},
                        {"j", f.j + 1},
                        {"k", f.k + 1},
                        {"defect", vector_to_json(f.defect)}});
  r.results["base"] = algebra_to_json(spec.base);
  r.results["phi1_zero"] = spec.phi1.is_zero();
  r.results["phi2_zero"] = spec.phi2.is_zero();
  r.results["failing_equations"] = qr.failing_equations();
  r.results["failures"] = failures;
  LieAlgebra assembled = assemble(spec);
  r.check("quadra", qr.ok);
  r.check("assembled-equals-input", assembled == *s.g);
  JacobiResult jr = jacobi_check(assembled);
  r.check("assembled-jacobi", jr.ok, jr.witness ? witness_json(*jr.witness) : Json(nullptr));
}

void suite_roundtrip(const Source& s, const Options& o, Report& r) {
  require_jacobi(*s.g, o, r);
  CenterQuotient cq = quotient_by_center(*s.g);
  LieAlgebra rebuilt = central_extension(*cq.quotient, cq.theta, cq.position);
  auto rebuilt_ptr = std::make_shared<const LieAlgebra>(rebuilt);
  int cls = cartan_class(DualForm::basis(rebuilt_ptr, cq.position)).cls;
  r.results["center"] = vector_to_json(cq.z);
  r.results["position"] = cq.position + 1;
  r.results["quotient"] = algebra_to_json(*cq.quotient);
  r.results["theta"] = cq.theta.str();
  r.results["extension_class"] = cls;
  r.check("reconstruction", s.g->change_basis(cq.basis_change) == rebuilt);
  r.check("extension-class", cls == s.g->dim());
}

void cmd_check(const Options& o, Report& r) {
  Source s = load_source(o, r);
  r.args["suite"] = o.suite;
  r.digest_input += "suite " + o.suite + "\n";
  if (o.samples > 0) r.args["samples"] = o.samples;
  if (o.suite == "jacobi")
    suite_jacobi(s, r);
  else if (o.suite == "nilpotent-parity")
    suite_parity(s, o, r);
  else if (o.suite == "center")
    suite_center(s, o, r);
  else if (o.suite == "quadra")
    suite_quadra(s, r);
  else
    suite_roundtrip(s, o, r);
}

// ---- contract ----

void cmd_contract(const Options& o, Report& r) {
  Source s = load_source(o, r);
  const int n = s.g->dim();
  std::vector<int> e = parse_ints(o.exponents);
  r.args["exponents"] = o.exponents;
  r.digest_input += "exponents " + Json(e).dump() + "\n";
  if (static_cast<int>(e.size()) != n)
    throw PreconditionError(std::to_string(e.size()) + " exponents for an algebra of dimension " + std::to_string(n));
  ContractionSpec spec{*s.g, e, std::nullopt};
  if (!o.basis_file.empty()) {
    Matrix p = read_matrix(o.basis_file, r, "basis");
    if (p.rows() != static_cast<std::size_t>(n) || p.cols() != static_cast<std::size_t>(n))
      throw PreconditionError("basis matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    if (!inverse(p)) throw PreconditionError("basis matrix is singular");
    spec.basis_change = p;
  }
  ContractionResult cr = contract(spec);
  r.results["converges"] = cr.limit.has_value();
  if (cr.diverges) {
    const auto& d = *cr.diverges;
    r.results["divergence"] = {{"i", d.i + 1}, {"j", d.j + 1}, {"k", d.k + 1}, {"exponent", d.exponent}};
    return;
  }
  const LieAlgebra& limit = *cr.limit;
  r.results["limit"] = algebra_to_json(limit);
  auto params = is_in_model_family(limit);
  if (params)
    r.results["model_family"] = vector_to_json(*params);
  else
    r.results["model_family"] = nullptr;
  r.results["center_dimension"] = {{"input", center(*s.g).dim()}, {"limit", center(limit).dim()}};
  r.check("limit-jacobi", jacobi_check(limit).ok);
}

// ---- sl ----

void cmd_sl(const Options& o, Report& r) {
  int modes = int(o.identity) + int(o.reeb) + int(!o.invariance_file.empty()) + int(!o.singular_file.empty());
  if (modes != 1) throw ParseError("choose exactly one of --identity, --reeb, --invariance, --singular");
  if (o.q && !o.identity) throw ParseError("--q only applies to --identity");
  const int n = o.n;
  r.args["n"] = n;
  r.digest_input += "n " + std::to_string(n) + "\n";
  if (o.identity) {
    r.args["mode"] = "identity";
    if (o.q) r.args["q"] = *o.q;
    r.digest_input += "identity " + (o.q ? std::to_string(*o.q) : std::string("auto")) + "\n";
    SLIdentity si = sl_contact_identity(n, o.q);
    r.results["q"] = si.q;
    r.results["exponent_2n_minus_1"] = 2 * n - 1;
    r.results["top_degree"] = si.top_degree;
    r.results["form_degree"] = si.form_degree;
    r.results["ok"] = si.ok;
    if (si.ok) r.results["constant"] = scalar_to_json(si.constant);
    if (!si.failure.empty()) r.results["failure"] = si.failure;
    if (!si.residual.is_zero()) r.results["residual"] = si.residual.str(sl_variables(n)->names);
    r.check("constant-multiple-of-det-volume", si.ok);
  } else if (o.reeb) {
    r.args["mode"] = "reeb";
    r.digest_input += "reeb\n";
    ReebCheck rc = sl_reeb_check(n);
    r.results["omega_of_reeb"] = rc.omega_of_reeb.str(sl_variables(n)->names);
    r.results["ddelta_factor"] = rc.ddelta_factor ? scalar_to_json(*rc.ddelta_factor) : Json(nullptr);
    r.check("omega-of-reeb-is-det", rc.omega_is_delta);
    r.check("reeb-contraction-multiple-of-ddet", rc.ddelta_factor.has_value());
  } else if (!o.invariance_file.empty()) {
    r.args["mode"] = "invariance";
    Matrix m = read_matrix(o.invariance_file, r, "invariance");
    if (o.skip_orthogonality) r.args["skip_orthogonality_check"] = true;
    bool ok = so_invariance_check(n, m, !o.skip_orthogonality);
    r.results["invariant"] = ok;
    r.check("pullback-invariant", ok);
  } else {
    r.args["mode"] = "singular";
    Matrix p = read_matrix(o.singular_file, r, "singular");
    SingularEvaluation se = sl_singular_evaluate(n, p);
    if (!se.determinant.is_one())
      throw PreconditionError("point has determinant " + se.determinant.str() + ", not 1");
    Json values = Json::array();
    for (const auto& [ij, v] : se.values) values.push_back({{"i", ij.first}, {"j", ij.second}, {"value", scalar_to_json(v)}});
    r.results["values"] = values;
    r.results["singular"] = se.singular;
  }
}

// ---- catalog ----

void cmd_catalog(const Options& o, Report& r) {
  if (o.catalog_id.empty()) {
    r.results["ids"] = standard_catalog_ids();
    r.results["grammar"] = catalog_help();
    r.digest_input += "catalog list\n";
    return;
  }
  CatalogEntry e = catalog_entry(o.catalog_id, {o.allow_nonjacobi});
  r.args["id"] = o.catalog_id;
  r.digest_input += "catalog " + o.catalog_id + "\n";
  Json params = Json::object();
  for (const auto& [k, v] : e.params) params[k] = scalar_to_json(v);
  r.results["id"] = e.id;
  r.results["params"] = params;
  r.results["provenance"] = e.provenance;
  r.results["algebra"] = algebra_to_json(*e.algebra);
  r.results["distinguished_form"] = e.distinguished_form.str();
  r.results["expected_class"] = e.expected_class;
  r.results["constraints_hold"] = e.constraints_hold;
  r.results["jacobi"] = e.jacobi;
  r.results["nilpotent"] = e.nilpotent;
  r.results["frobeniusian"] = e.frobeniusian;
  int cls = cartan_class(e.distinguished_form).cls;
  r.results["class"] = cls;
  if (e.jacobi && e.constraints_hold) r.check("expected-class", cls == e.expected_class);
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  if (o.output.empty()) {
    out << canonical_dump(report);
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw ParseError("cannot write " + o.output);
  f << canonical_dump(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Cartan class, deformation and contraction checks for Lie algebras", "cartanlab"};
  app.footer("Catalog ids:\n" + catalog_help() +
             "\nExit codes: 0 pass, 1 I/O or parse error, 2 precondition violated, 3 property failure.\n"
             "CARTANLAB_SEED overrides the default seed; --seed overrides both.");
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed_value = 0;
  auto* seed_opt = app.add_option("--seed", seed_value, "Seed for pseudorandom samples");
  app.add_flag("--allow-nonjacobi", o.allow_nonjacobi, "Accept catalog brackets that fail the Jacobi identity");
  app.add_option("--output", o.output, "Write the report to FILE instead of stdout");

  auto add_source = [&](CLI::App* sub) {
    auto* a = sub->add_option("--algebra", o.algebra_file, "Algebra JSON file");
    auto* c = sub->add_option("--catalog", o.catalog_id, "Catalog id, e.g. heisenberg:p=2");
    a->excludes(c);
  };

  auto* cls = app.add_subcommand("class", "Cartan class of a covector");
  add_source(cls);
  cls->add_option("--form", o.form, "Covector coefficients c1,...,cn (default: the catalog's distinguished form)");

  auto* check = app.add_subcommand("check", "Run a property suite");
  add_source(check);
  check->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember({"jacobi", "nilpotent-parity", "center", "quadra", "extension-roundtrip"}));
  check->add_option("--samples", o.samples, "Number of random covectors")->check(CLI::PositiveNumber);

  auto* con = app.add_subcommand("contract", "Diagonal contraction t -> 0");
  add_source(con);
  con->add_option("--exponents", o.exponents, "Exponents e1,...,en with f_t(X_i) = t^e_i X_i")->required();
  con->add_option("--basis", o.basis_file, "Matrix file whose columns give the basis used before rescaling");

  auto* sl = app.add_subcommand("sl", "Contact form on SL(2n)");
  sl->add_option("--n", o.n, "n in SL(2n)")->required();
  sl->add_flag("--identity", o.identity, "Expand w ^ (dw)^q ^ d(det)");
  sl->add_option("--q", o.q, "Exponent q for --identity (default: top degree)");
  sl->add_flag("--reeb", o.reeb, "Check the Reeb field");
  sl->add_option("--invariance", o.invariance_file, "Matrix file m; check invariance under x -> m x");
  sl->add_flag("--skip-orthogonality-check", o.skip_orthogonality, "Allow non-orthogonal matrices with --invariance");
  sl->add_option("--singular", o.singular_file, "Matrix file with a point of SL(2n); evaluate the singular-set equations");

  auto* cat = app.add_subcommand("catalog", "List catalog ids or show one entry");
  cat->add_option("id", o.catalog_id, "Catalog id");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kPass : kInput;
  }

  Report r;
  CLI::App* chosen = app.get_subcommands().front();
  r.command = chosen->get_name();
  if (o.allow_nonjacobi) r.args["allow_nonjacobi"] = true;
  int code = kPass;
  std::string message;
  try {
    r.seed = seed_opt->count() ? seed_value : seed_from_env();
    if (chosen == cls)
      cmd_class(o, r);
    else if (chosen == check)
      cmd_check(o, r);
    else if (chosen == con)
      cmd_contract(o, r);
    else if (chosen == sl)
      cmd_sl(o, r);
    else
      cmd_catalog(o, r);
    code = r.failed > 0 ? kPropertyFailure : kPass;
  } catch (const ParseError& e) {
    code = kInput;
    message = e.what();
  } catch (const PreconditionError& e) {
    code = kPrecondition;
    message = e.what();
  } catch (const std::logic_error& e) {
    code = kPropertyFailure;
    message = e.what();
  } catch (const std::exception& e) {
    code = kInput;
    message = e.what();
  }

  Json report;
  if (message.empty()) {
    report = r.to_json(code == kPass ? "pass" : "fail");
  } else {
    err << "cartanlab: " << message << "\n";
    report = r.to_json("error");
    report["error"] = message;
    report["exit_code"] = code;
  }
  try {
    emit(report, o, out);
  } catch (const ParseError& e) {
    err << "cartanlab: " << e.what() << "\n";
    return kInput;
  }
  return code;
}

}  // namespace cartanlab

#include "cartan/poly_form.hpp"

#include <algorithm>
#include <sstream>

namespace cartan {

int Variables::index(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw PreconditionError("unknown variable '" + name + "'");
  return static_cast<int>(it - names.begin());
}

VarsPtr make_variables(std::vector<std::string> names) {
  return std::make_shared<const Variables>(Variables{std::move(names)});
}

namespace {

void check_vars(const VarsPtr& a, const VarsPtr& b) {
  if (a == b) return;
  if (!a || !b || a->names != b->names) throw PreconditionError("forms over different variable sets");
}

}  // namespace

PolyForm::PolyForm(VarsPtr vars, int grade) : vars_(std::move(vars)), body_(vars_ ? vars_->size() : 0, grade) {
  if (!vars_) throw PreconditionError("form without variables");
}

PolyForm::PolyForm(VarsPtr vars, Exterior<Poly> body) : vars_(std::move(vars)), body_(std::move(body)) {
  if (!vars_) throw PreconditionError("form without variables");
  if (body_.n() != vars_->size()) throw PreconditionError("form size does not match its variables");
}

PolyForm PolyForm::function(VarsPtr vars, const Poly& f) {
  int n = vars->size();
  return {std::move(vars), Exterior<Poly>::scalar(n, f)};
}

PolyForm PolyForm::dx(VarsPtr vars, int v) {
  int n = vars->size();
  return {std::move(vars), Exterior<Poly>::generator(n, v)};
}

Poly PolyForm::as_function() const {
  if (grade() != 0) throw PreconditionError("not a function");
  return body_.coeff(Blade{0});
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  check_vars(vars_, o.vars_);
  body_ += o.body_;
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  check_vars(vars_, o.vars_);
  body_ -= o.body_;
  return *this;
}

std::string PolyForm::str() const {
  if (body_.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : body_.terms()) {
    if (!out.empty()) out += " + ";
    std::string blade;
    for (int i : blade_indices(b)) blade += (blade.empty() ? "d" : "^d") + vars_->names[static_cast<std::size_t>(i)];
    std::string coef = c.str(vars_->names);
    if (blade.empty())
      out += coef;
    else if (coef == "1")
      out += blade;
    else
      out += "(" + coef + ")" + blade;
  }
  return out;
}

PolyVectorField::PolyVectorField(VarsPtr vars)
    : vars_(std::move(vars)), comp_(static_cast<std::size_t>(vars_ ? vars_->size() : 0)) {}

PolyVectorField::PolyVectorField(VarsPtr vars, std::vector<Poly> components)
    : vars_(std::move(vars)), comp_(std::move(components)) {
  if (!vars_ || static_cast<int>(comp_.size()) != vars_->size())
    throw PreconditionError("vector field needs one component per variable");
}

PolyVectorField PolyVectorField::partial(VarsPtr vars, int v) {
  PolyVectorField x(std::move(vars));
  x[v] = Poly(1);
  return x;
}

Poly PolyVectorField::apply(const Poly& f) const {
  Poly out;
  for (std::size_t v = 0; v < comp_.size(); ++v)
    if (!comp_[v].is_zero() && f.depends_on(static_cast<int>(v))) out += comp_[v] * f.derivative(static_cast<int>(v));
  return out;
}

PolyVectorField& PolyVectorField::operator+=(const PolyVectorField& o) {
  check_vars(vars_, o.vars_);
  for (std::size_t v = 0; v < comp_.size(); ++v) comp_[v] += o.comp_[v];
  return *this;
}

PolyVectorField operator*(const Poly& f, const PolyVectorField& x) {
  PolyVectorField out = x;
  for (auto& c : out.comp_) c = f * c;
  return out;
}

std::string PolyVectorField::str() const {
  std::string out;
  for (std::size_t v = 0; v < comp_.size(); ++v) {
    if (comp_[v].is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string c = comp_[v].str(vars_->names);
    out += (c == "1" ? "" : "(" + c + ")") + "d/d" + vars_->names[v];
  }
  return out.empty() ? "0" : out;
}

PolyForm exterior_d(const PolyForm& a) {
  const int n = a.dim();
  Exterior<Poly> out(n, a.grade() + 1);
  if (a.grade() + 1 > n) return {a.vars(), out};
  for (const auto& [b, f] : a.body().terms()) {
    for (int v = 0; v < n; ++v) {
      if ((b >> v) & 1) continue;
      if (!f.depends_on(v)) continue;
      int s = wedge_sign(Blade{1} << v, b);
      Poly df = f.derivative(v);
      out.add(b | (Blade{1} << v), s > 0 ? df : -df);
    }
  }
  return {a.vars(), out};
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  check_vars(a.vars(), b.vars());
  return {a.vars(), wedge(a.body(), b.body())};
}

PolyForm wedge_power(const PolyForm& a, int k) {
  if (k < 0) throw PreconditionError("negative wedge power");
  const int n = a.dim();
  bool disjoint = a.grade() == 2;
  Blade seen = 0;
  if (disjoint)
    for (const auto& [b, c] : a.body().terms()) {
      if (b & seen) {
        disjoint = false;
        break;
      }
      seen |= b;
    }
  if (!disjoint) return {a.vars(), wedge_power(a.body(), k)};

  // (sum_p c_p P_p)^k = k! sum over k-subsets S of prod c_p ^_{p in S} P_p;
  // 2-blades commute, and listing pairs in increasing order yields the
  // sorted blade up to the sign of that interleaving.
  std::vector<std::pair<Blade, Poly>> pairs(a.body().terms().begin(), a.body().terms().end());
  Exterior<Poly> out(n, 2 * k);
  if (k > static_cast<int>(pairs.size())) return {a.vars(), out};
  Poly fact(1);
  for (int i = 2; i <= k; ++i) fact = fact * Poly(i);
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int m = static_cast<int>(pairs.size());
  while (true) {
    Blade acc = 0;
    int sign = 1;
    Poly coef = fact;
    for (int idx : pick) {
      const auto& [b, c] = pairs[static_cast<std::size_t>(idx)];
      sign *= wedge_sign(acc, b);
      acc |= b;
      coef = coef * c;
    }
    out.add(acc, sign > 0 ? coef : -coef);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return {a.vars(), out};
}

PolyForm interior(const PolyVectorField& x, const PolyForm& a) {
  check_vars(x.vars(), a.vars());
  if (a.grade() == 0) throw PreconditionError("interior product of a function");
  Exterior<Poly> out(a.dim(), a.grade() - 1);
  for (int v = 0; v < a.dim(); ++v)
    if (!x[v].is_zero()) out += x[v] * a.body().interior_basis(v);
  return {a.vars(), out};
}

PolyForm lie_derivative(const PolyVectorField& x, const PolyForm& a) {
  if (a.grade() == 0) return PolyForm::function(a.vars(), x.apply(a.as_function()));
  PolyForm out = exterior_d(interior(x, a));
  if (a.grade() < a.dim()) out += interior(x, exterior_d(a));
  return out;
}

PolyVectorField bracket(const PolyVectorField& x, const PolyVectorField& y) {
  check_vars(x.vars(), y.vars());
  PolyVectorField out(x.vars());
  for (int v = 0; v < x.vars()->size(); ++v) out[v] = x.apply(y[v]) - y.apply(x[v]);
  return out;
}

PolyForm pullback(const PolyForm& a, const VarsPtr& source, const std::vector<Poly>& images) {
  if (static_cast<int>(images.size()) != a.dim()) throw PreconditionError("pullback needs one image per coordinate");
  std::vector<PolyForm> dimg;
  for (const auto& f : images) dimg.push_back(exterior_d(PolyForm::function(source, f)));
  PolyForm out(source, a.grade());
  for (const auto& [b, f] : a.body().terms()) {
    PolyForm term = PolyForm::function(source, f.substitute(images));
    for (int i : blade_indices(b)) term = wedge(term, dimg[static_cast<std::size_t>(i)]);
    out += term;
  }
  return out;
}

Exterior<Scalar> evaluate(const PolyForm& a, const std::vector<Scalar>& point) {
  Exterior<Scalar> out(a.dim(), a.grade());
  for (const auto& [b, f] : a.body().terms()) out.add(b, f.evaluate(point));
  return out;
}

PolyForm volume_form(const VarsPtr& vars) {
  const int n = vars->size();
  Exterior<Poly> body(n, n);
  body.add(n == 64 ? ~Blade{0} : (Blade{1} << n) - 1, Poly(1));
  return {vars, body};
}

}  // namespace cartan

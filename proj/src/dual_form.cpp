#include "cartan/dual_form.hpp"

#include <stdexcept>

namespace cartan {

namespace {

void check_same(const DualForm& a, const DualForm& b) {
  if (a.algebra() == b.algebra()) return;
  if (!a.algebra() || !b.algebra() || !(*a.algebra() == *b.algebra()))
    throw PreconditionError("forms live on different Lie algebras");
}

}  // namespace

DualForm::DualForm(AlgebraPtr g, int grade) : g_(std::move(g)), body_(g_ ? g_->dim() : 0, grade) {
  if (!g_) throw PreconditionError("form without an algebra");
}

DualForm::DualForm(AlgebraPtr g, Exterior<Scalar> body) : g_(std::move(g)), body_(std::move(body)) {
  if (!g_) throw PreconditionError("form without an algebra");
  if (body_.n() != g_->dim()) throw PreconditionError("form dimension does not match the algebra");
}

DualForm DualForm::basis(AlgebraPtr g, int i) {
  int n = g->dim();
  return {std::move(g), Exterior<Scalar>::generator(n, i)};
}

DualForm DualForm::covector(AlgebraPtr g, const std::vector<Scalar>& coeffs) {
  if (static_cast<int>(coeffs.size()) != g->dim())
    throw PreconditionError("covector has " + std::to_string(coeffs.size()) + " coefficients, algebra has dimension " +
                            std::to_string(g->dim()));
  Exterior<Scalar> body(g->dim(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) body.add(Blade{1} << i, coeffs[i]);
  return {std::move(g), std::move(body)};
}

DualForm DualForm::constant(AlgebraPtr g, const Scalar& c) {
  int n = g->dim();
  return {std::move(g), Exterior<Scalar>::scalar(n, c)};
}

Vector DualForm::as_covector() const {
  if (grade() != 1) throw PreconditionError("not a 1-form");
  Vector v = zero_vector(dim());
  for (const auto& [b, c] : body_.terms()) v[static_cast<std::size_t>(std::countr_zero(b))] = c;
  return v;
}

Scalar DualForm::operator()(const Vector& x) const {
  if (grade() != 1) throw PreconditionError("evaluation on one vector needs a 1-form");
  Scalar s;
  for (const auto& [b, c] : body_.terms()) s += c * x[static_cast<std::size_t>(std::countr_zero(b))];
  return s;
}

Scalar DualForm::operator()(const Vector& x, const Vector& y) const {
  if (grade() != 2) throw PreconditionError("evaluation on two vectors needs a 2-form");
  Scalar s;
  for (const auto& [b, c] : body_.terms()) {
    auto idx = blade_indices(b);
    auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]);
    s += c * (x[i] * y[j] - x[j] * y[i]);
  }
  return s;
}

DualForm& DualForm::operator+=(const DualForm& o) {
  check_same(*this, o);
  body_ += o.body_;
  return *this;
}

DualForm& DualForm::operator-=(const DualForm& o) {
  check_same(*this, o);
  body_ -= o.body_;
  return *this;
}

bool operator==(const DualForm& a, const DualForm& b) {
  if (a.g_ != b.g_ && !(a.g_ && b.g_ && *a.g_ == *b.g_)) return false;
  return a.body_ == b.body_;
}

DualForm wedge(const DualForm& a, const DualForm& b) {
  check_same(a, b);
  return {a.algebra(), wedge(a.body(), b.body())};
}

DualForm wedge_power(const DualForm& a, int k) { return {a.algebra(), wedge_power(a.body(), k)}; }

namespace {

Exterior<Scalar> d_generator(const LieAlgebra& g, int k) {
  const int n = g.dim();
  Exterior<Scalar> out(n, 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Scalar c = g.c(i, j, k);
      if (!c.is_zero()) out.add((Blade{1} << i) | (Blade{1} << j), -c);
    }
  return out;
}

}  // namespace

DualForm ce_differential(const DualForm& a) {
  const LieAlgebra& g = a.lie();
  const int n = g.dim();
  Exterior<Scalar> out(n, a.grade() + 1);
  if (a.grade() + 1 > n) return {a.algebra(), out};
  std::vector<Exterior<Scalar>> dgen;
  dgen.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) dgen.push_back(d_generator(g, k));
  for (const auto& [b, c] : a.body().terms()) {
    auto idx = blade_indices(b);
    // d(w_{i1} ^ ... ^ w_{iq}) = sum_r (-1)^r w_{i1} ^ .. ^ d w_{ir} ^ .. (r 0-based)
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const auto& dk = dgen[static_cast<std::size_t>(idx[r])];
      if (dk.is_zero()) continue;
      Blade prefix = 0, suffix = 0;
      for (std::size_t s = 0; s < idx.size(); ++s) {
        if (s < r) prefix |= Blade{1} << idx[s];
        if (s > r) suffix |= Blade{1} << idx[s];
      }
      Exterior<Scalar> pre(n, static_cast<int>(r));
      pre.add(prefix, Scalar(1));
      Exterior<Scalar> suf(n, static_cast<int>(idx.size() - r - 1));
      suf.add(suffix, Scalar(1));
      Exterior<Scalar> term = wedge(wedge(pre, dk), suf);
      Scalar coef = r % 2 ? -c : c;
      out += coef * term;
    }
  }
  return {a.algebra(), out};
}

DualForm interior_product(const Vector& x, const DualForm& a) {
  if (a.grade() == 0) throw PreconditionError("interior product of a grade-0 form");
  if (static_cast<int>(x.size()) != a.dim()) throw PreconditionError("vector size does not match the algebra");
  Exterior<Scalar> out(a.dim(), a.grade() - 1);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out += x[i] * a.body().interior_basis(static_cast<int>(i));
  return {a.algebra(), out};
}

Matrix two_form_matrix(const DualForm& theta) {
  if (theta.grade() != 2 && !theta.is_zero()) throw PreconditionError("not a 2-form");
  const auto n = static_cast<std::size_t>(theta.dim());
  Matrix b(n, n);
  for (const auto& [bl, c] : theta.body().terms()) {
    auto idx = blade_indices(bl);
    auto i = static_cast<std::size_t>(idx[0]), j = static_cast<std::size_t>(idx[1]);
    b(i, j) = c;
    b(j, i) = -c;
  }
  return b;
}

CartanClass cartan_class(const DualForm& w) {
  if (w.grade() != 1) throw PreconditionError("Cartan class is defined for 1-forms");
  if (w.is_zero()) throw PreconditionError("class undefined for w = 0");
  const int n = w.dim();
  CartanClass out;

  DualForm dw = ce_differential(w);
  DualForm power = DualForm::constant(w.algebra(), Scalar(1));
  int q = 0;
  while (true) {
    DualForm next = wedge(power, dw);
    if (next.is_zero()) break;
    power = std::move(next);
    ++q;
  }
  out.q = q;
  out.odd_branch = !wedge(w, power).is_zero();
  out.cls = out.odd_branch ? 2 * q + 1 : 2 * q;

  // C(w) = {X : w(X) = 0, i(X) dw = 0}
  Matrix b = two_form_matrix(dw);
  Matrix sys(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(n));
  Vector wv = w.as_covector();
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    sys(0, j) = wv[j];
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) sys(i + 1, j) = b(i, j);
  }
  auto kernel = nullspace(sys);
  out.characteristic_space = Subspace::span(n, kernel).basis();
  int codim = n - static_cast<int>(kernel.size());
  if (codim != out.cls)
    throw std::logic_error("Cartan class mismatch: wedge powers give " + std::to_string(out.cls) +
                           ", characteristic space gives " + std::to_string(codim));
  return out;
}

}  // namespace cartan

#include "cartan/contact.hpp"

#include <stdexcept>

namespace cartan {

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m) {
  const std::size_t k = m.size();
  if (k == 0) return Poly(1);
  if (k == 1) return m[0][0];
  Poly out;
  for (std::size_t c = 0; c < k; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Poly>> sub;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<Poly> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      sub.push_back(std::move(row));
    }
    Poly t = m[0][c] * poly_det(sub);
    if (c % 2)
      out -= t;
    else
      out += t;
  }
  return out;
}

std::vector<std::vector<Poly>> generic_matrix(int n) {
  const int s = 2 * n;
  std::vector<std::vector<Poly>> m(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) m[static_cast<std::size_t>(i)].push_back(Poly::var(i * s + j));
  return m;
}

void check_n(int n) {
  if (n < 1 || n > 4) throw PreconditionError("SL(2n) helpers support 1 <= n <= 4");
}

// Constant c with a == c * b, if any.
std::optional<Scalar> constant_ratio(const Poly& a, const Poly& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  const auto& [m, cb] = *b.terms().begin();
  auto it = a.terms().find(m);
  Scalar c = it == a.terms().end() ? Scalar() : it->second / cb;
  if (!(a == Poly(c) * b)) return std::nullopt;
  return c;
}

std::optional<Scalar> form_ratio(const PolyForm& a, const PolyForm& b) {
  if (b.is_zero()) return a.is_zero() ? std::optional<Scalar>(Scalar()) : std::nullopt;
  const auto& [blade, pb] = *b.body().terms().begin();
  auto c = constant_ratio(a.body().coeff(blade), pb);
  if (!c) return std::nullopt;
  if (!(a == Poly(*c) * b)) return std::nullopt;
  return c;
}

}  // namespace

VarsPtr sl_variables(int n) {
  check_n(n);
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  return make_variables(std::move(names));
}

int sl_index(int n, int i, int j) { return (i - 1) * 2 * n + (j - 1); }

Poly generic_minor(int n, int i, int j) {
  auto m = generic_matrix(n);
  m.erase(m.begin() + i);
  for (auto& row : m) row.erase(row.begin() + j);
  return poly_det(m);
}

SLContactData sl_contact_data(int n) {
  check_n(n);
  SLContactData d;
  d.n = n;
  d.vars = sl_variables(n);
  const int s = 2 * n;
  auto x = [&](int i, int j) { return Poly::var(sl_index(n, i, j)); };
  auto dx = [&](int i, int j) { return PolyForm::dx(d.vars, sl_index(n, i, j)); };

  d.omega = PolyForm(d.vars, 1);
  for (int j = 1; j <= s; ++j)
    for (int i = 1; i <= n; ++i)
      d.omega += x(j, 2 * i - 1) * dx(j, 2 * i) - x(j, 2 * i) * dx(j, 2 * i - 1);

  d.delta = poly_det(generic_matrix(n));
  d.d_delta = exterior_d(PolyForm::function(d.vars, d.delta));

  d.minors.assign(static_cast<std::size_t>(s), {});
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) d.minors[static_cast<std::size_t>(i)].push_back(generic_minor(n, i, j));
  auto minor = [&](int i, int j) { return d.minors[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]; };

  d.reeb = PolyVectorField(d.vars);
  Poly scale(Scalar::rational(1, 2 * n));
  for (int j = 1; j <= s; ++j) {
    Poly sign(j % 2 ? 1 : -1);
    for (int i = 1; i <= n; ++i) {
      d.reeb[sl_index(n, j, 2 * i)] += scale * sign * minor(j, 2 * i - 1);
      d.reeb[sl_index(n, j, 2 * i - 1)] += scale * sign * minor(j, 2 * i);
    }
  }
  return d;
}

SLIdentity sl_contact_identity(int n, std::optional<int> q) {
  check_n(n);
  SLIdentity out;
  out.n = n;
  out.top_degree = 4 * n * n;
  out.q = q ? *q : (out.top_degree - 2) / 2;
  if (out.q < 0) throw PreconditionError("exponent q must be nonnegative");
  out.form_degree = 2 * out.q + 2;
  if (out.form_degree != out.top_degree) {
    out.failure = "degree " + std::to_string(out.form_degree) + " != " + std::to_string(out.top_degree);
    return out;
  }
  SLContactData d = sl_contact_data(n);
  PolyForm domega = exterior_d(d.omega);
  PolyForm result = wedge(wedge(d.omega, wedge_power(domega, out.q)), d.d_delta);
  Poly top = result.body().coeff(volume_form(d.vars).body().terms().begin()->first);
  auto c = constant_ratio(top, d.delta);
  if (!c) {
    const auto& [m, cd] = *d.delta.terms().begin();
    auto it = top.terms().find(m);
    Scalar guess = it == top.terms().end() ? Scalar() : it->second / cd;
    out.constant = guess;
    out.residual = top - Poly(guess) * d.delta;
    out.failure = "top coefficient is not a constant multiple of det";
    return out;
  }
  out.constant = *c;
  out.ok = true;
  return out;
}

ReebCheck sl_reeb_check(int n) {
  SLContactData d = sl_contact_data(n);
  ReebCheck out;
  out.omega_of_reeb = interior(d.reeb, d.omega).as_function();
  out.omega_is_delta = out.omega_of_reeb == d.delta;
  out.i_reeb_domega = interior(d.reeb, exterior_d(d.omega));
  out.ddelta_factor = form_ratio(out.i_reeb_domega, d.d_delta);
  return out;
}

PolyVectorField sl_field_a(int n, int i, int j) {
  VarsPtr vars = sl_variables(n);
  PolyVectorField a(vars);
  for (int l = 1; l <= 2 * n; ++l) {
    a[sl_index(n, i, l)] += Poly::var(sl_index(n, j, l));
    a[sl_index(n, j, l)] -= Poly::var(sl_index(n, i, l));
  }
  return a;
}

Poly sl_pairing(int n, int i, int j) {
  check_n(n);
  auto x = [&](int r, int c) { return Poly::var(sl_index(n, r, c)); };
  Poly out;
  for (int l = 1; l <= n; ++l) out += x(i, 2 * l - 1) * x(j, 2 * l) - x(i, 2 * l) * x(j, 2 * l - 1);
  return out;
}

std::vector<SingularEquation> sl_singular_equations(int n) {
  std::vector<SingularEquation> out;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = i; j <= 2 * n; ++j) out.push_back({i, j, sl_pairing(n, i, j)});
  return out;
}

SingularEvaluation sl_singular_evaluate(int n, const Matrix& point) {
  const auto s = static_cast<std::size_t>(2 * n);
  if (point.rows() != s || point.cols() != s)
    throw PreconditionError("point must be a " + std::to_string(s) + "x" + std::to_string(s) + " matrix");
  std::vector<Scalar> coords;
  for (std::size_t r = 0; r < s; ++r)
    for (std::size_t c = 0; c < s; ++c) coords.push_back(point(r, c));
  SingularEvaluation out;
  out.determinant = determinant(point);
  out.singular = true;
  for (const auto& eq : sl_singular_equations(n)) {
    Scalar v = eq.equation.evaluate(coords);
    if (!v.is_zero()) out.singular = false;
    out.values.push_back({{eq.i, eq.j}, v});
  }
  return out;
}

bool so_invariance_check(int n, const Matrix& m, bool check_orthogonal) {
  check_n(n);
  const auto s = static_cast<std::size_t>(2 * n);
  if (m.rows() != s || m.cols() != s)
    throw PreconditionError("matrix must be " + std::to_string(s) + "x" + std::to_string(s));
  if (check_orthogonal) {
    if (!(m.transpose() * m == Matrix::identity(s))) throw PreconditionError("matrix is not orthogonal");
    if (!determinant(m).is_one()) throw PreconditionError("matrix does not have determinant 1");
  }
  SLContactData d = sl_contact_data(n);
  std::vector<Poly> images;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) {
      Poly e;
      for (int k = 1; k <= 2 * n; ++k)
        e += Poly(m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(k - 1))) * Poly::var(sl_index(n, k, j));
      images.push_back(std::move(e));
    }
  return pullback(d.omega, d.vars, images) == d.omega;
}

Matrix pythagorean_rotation(int n, int k, long a, long b) {
  const auto s = static_cast<std::size_t>(2 * n);
  if (k < 0 || static_cast<std::size_t>(k) + 1 >= s) throw PreconditionError("rotation plane out of range");
  if (a == 0 && b == 0) throw PreconditionError("rotation parameters must not both vanish");
  Matrix m = Matrix::identity(s);
  long h = a * a + b * b;
  Scalar c = Scalar::rational(a * a - b * b, h), sn = Scalar::rational(2 * a * b, h);
  auto uk = static_cast<std::size_t>(k);
  m(uk, uk) = c;
  m(uk, uk + 1) = -sn;
  m(uk + 1, uk) = sn;
  m(uk + 1, uk + 1) = c;
  return m;
}

VarsPtr h3_variables() { return make_variables({"x", "y", "z"}); }

H3Frames h3_frames() {
  VarsPtr v = h3_variables();
  Poly x = Poly::var(0), y = Poly::var(1);
  auto dd = [&](int i) { return PolyVectorField::partial(v, i); };
  H3Frames f;
  f.left = {dd(0), dd(1) + x * dd(2), dd(2)};
  f.right = {dd(0) + y * dd(2), dd(1), dd(2)};
  f.left_forms = {PolyForm::dx(v, 0), PolyForm::dx(v, 1), PolyForm::dx(v, 2) - x * PolyForm::dx(v, 1)};
  return f;
}

UPoly h3_contact_polynomial(const Scalar& alpha, const UPoly& b1, const UPoly& b2, const UPoly& b3) {
  UPoly d1 = b1.derivative(), d2 = b2.derivative(), d3 = b3.derivative();
  return b1 * d3 - d1 * b3 + alpha * (b2 * d3 - d2 * b3) - b3 * b3;
}

std::pair<UPoly, UPoly> h3_singular_system(const Scalar& alpha, const UPoly& b1, const UPoly& b2, const UPoly& b3) {
  return {b3, b1 + alpha * b2};
}

bool h3_globally_contact(const UPoly& p) { return !p.is_zero() && count_real_roots(p) == 0; }

PolyForm h3_invariant_form(const Scalar& alpha, const UPoly& b1, const UPoly& b2, const UPoly& b3) {
  H3Frames f = h3_frames();
  Poly u = Poly::var(1) - Poly(alpha) * Poly::var(0);
  return compose(b1, u) * f.left_forms[0] + compose(b2, u) * f.left_forms[1] + compose(b3, u) * f.left_forms[2];
}

std::vector<PolyVectorField> h3_j_fields(const Scalar& alpha) {
  H3Frames f = h3_frames();
  return {f.right[0] + Poly(alpha) * f.right[1], f.right[2]};
}

bool is_j_invariant(const PolyForm& theta, const std::vector<PolyVectorField>& j) {
  for (const auto& u : j)
    if (!lie_derivative(u, theta).is_zero()) return false;
  return true;
}

VarsPtr darboux_variables(int p) {
  if (p < 1) throw PreconditionError("Darboux coordinates need p >= 1");
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * p + 1; ++i) names.push_back("x" + std::to_string(i));
  return make_variables(std::move(names));
}

namespace {

void check_first_integral(int p, const Poly& f) {
  if (f.variables_used() > 2 * p + 1) throw PreconditionError("polynomial uses variables beyond x_{2p+1}");
  if (f.depends_on(2 * p)) throw PreconditionError("not a first integral: depends on x" + std::to_string(2 * p + 1));
}

}  // namespace

Poly darboux_poisson(int p, const Poly& f1, const Poly& f2) {
  if (p < 1) throw PreconditionError("Darboux coordinates need p >= 1");
  check_first_integral(p, f1);
  check_first_integral(p, f2);
  Poly out;
  for (int i = 1; i <= p; ++i) {
    int odd = 2 * i - 2, even = 2 * i - 1;  // 0-based x_{2i-1}, x_{2i}
    out += f2.derivative(even) * f1.derivative(odd) - f1.derivative(even) * f2.derivative(odd);
  }
  return out;
}

Poly darboux_poisson_via_forms(int p, const Poly& f1, const Poly& f2) {
  check_first_integral(p, f1);
  check_first_integral(p, f2);
  VarsPtr v = darboux_variables(p);
  PolyForm alpha = PolyForm::dx(v, 2 * p);
  for (int i = 1; i <= p; ++i) alpha += Poly::var(2 * i - 2) * PolyForm::dx(v, 2 * i - 1);
  PolyForm dalpha = exterior_d(alpha);
  auto hamiltonian = [&](const Poly& f) {
    PolyVectorField x(v);
    for (int i = 1; i <= p; ++i) {
      x[2 * i - 2] = f.derivative(2 * i - 1);
      x[2 * i - 1] = -f.derivative(2 * i - 2);
    }
    if (!(interior(x, dalpha) == exterior_d(PolyForm::function(v, f))))
      throw std::logic_error("Hamiltonian field does not satisfy i(X_f) d alpha = df");
    return x;
  };
  PolyVectorField x1 = hamiltonian(f1), x2 = hamiltonian(f2);
  return interior(x2, interior(x1, dalpha)).as_function();
}

}  // namespace cartan

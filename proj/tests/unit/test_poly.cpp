#include <doctest.h>

#include "cartan/poly_form.hpp"
#include "cartan/random.hpp"

using namespace cartan;

namespace {

Poly x(int i) { return Poly::var(i); }

// Random polynomial of degree <= 2 in n variables.
Poly random_poly(int n, Rng& rng) {
  Poly p = rng.rational();
  for (int t = 0; t < 3; ++t) {
    Poly m = rng.nonzero_rational();
    for (int d = rng.uniform(0, 2); d > 0; --d) m *= x(rng.uniform(0, n - 1));
    p += m;
  }
  return p;
}

PolyForm random_form(const VarsPtr& v, int grade, Rng& rng) {
  const int n = v->size();
  Exterior<Poly> body(n, grade);
  for (int t = 0; t < 3; ++t) {
    std::vector<int> idx;
    for (int i = 0; i < n && static_cast<int>(idx.size()) < grade; ++i)
      if (rng.uniform(0, 1) || n - i == grade - static_cast<int>(idx.size())) idx.push_back(i);
    body.add(blade_of(idx), random_poly(n, rng));
  }
  return {v, body};
}

PolyVectorField random_field(const VarsPtr& v, Rng& rng) {
  std::vector<Poly> c;
  for (int i = 0; i < v->size(); ++i) c.push_back(random_poly(v->size(), rng));
  return {v, c};
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly s = x(0) + x(1);
  CHECK(s * s == x(0) * x(0) + Poly(2) * x(0) * x(1) + x(1) * x(1));
  CHECK(pow(s, 3).total_degree() == 3);
  CHECK(pow(s, 3).is_homogeneous(3));
  CHECK_FALSE((s + Poly(1)).is_homogeneous(1));
  CHECK((s * s).derivative(0) == Poly(2) * s);
  CHECK(Poly().total_degree() == -1);
  CHECK((x(2) - x(2)).is_zero());
  CHECK(x(3).variables_used() == 4);
  CHECK(x(3).depends_on(3));
  CHECK_FALSE(x(3).depends_on(0));
  CHECK((x(0) * x(1) - Poly(3)).evaluate({2, 5}) == Scalar(7));
  CHECK((x(0) * x(1)).substitute({x(1), x(0) + Poly(1)}) == x(1) * x(0) + x(1));
  CHECK(x(0).str({"u"}) == "u");
}

TEST_CASE("univariate bridge") {
  Poly p = pow(x(1), 2) - Poly(2);
  UPoly u = to_upoly(p, 1);
  CHECK(u == UPoly({-2, 0, 1}));
  CHECK(compose(u, x(0) + x(2)) == pow(x(0) + x(2), 2) - Poly(2));
  CHECK_THROWS(to_upoly(x(0) * x(1), 1));
}

TEST_CASE("exterior derivative on functions") {
  auto v = make_variables({"x", "y"});
  PolyForm d = exterior_d(PolyForm::function(v, x(0) * x(1)));
  CHECK(d == x(1) * PolyForm::dx(v, 0) + x(0) * PolyForm::dx(v, 1));
  CHECK(exterior_d(PolyForm::function(v, Poly(5))).is_zero());
}

TEST_CASE("d o d = 0 and the antiderivation rule") {
  Rng rng(101);
  auto v = make_variables({"a", "b", "c", "d"});
  for (int trial = 0; trial < 30; ++trial) {
    int p = rng.uniform(0, 2), q = rng.uniform(0, 2);
    PolyForm a = random_form(v, p, rng), b = random_form(v, q, rng);
    CHECK(exterior_d(exterior_d(a)).is_zero());
    PolyForm lhs = exterior_d(wedge(a, b));
    PolyForm rhs = wedge(exterior_d(a), b) + Poly(p % 2 ? -1 : 1) * wedge(a, exterior_d(b));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("interior product") {
  auto v = make_variables({"x", "y", "z"});
  PolyForm theta = PolyForm::dx(v, 2) - x(0) * PolyForm::dx(v, 1);
  CHECK(interior(PolyVectorField::partial(v, 2), theta).as_function() == Poly(1));
  CHECK(exterior_d(theta) == Poly(-1) * wedge(PolyForm::dx(v, 0), PolyForm::dx(v, 1)));

  Rng rng(103);
  for (int trial = 0; trial < 20; ++trial) {
    PolyVectorField f = random_field(v, rng);
    PolyForm a = random_form(v, 2, rng);
    CHECK(interior(f, interior(f, a)).is_zero());
  }
}

TEST_CASE("Lie derivative identities") {
  Rng rng(107);
  auto v = make_variables({"p", "q", "r"});
  for (int trial = 0; trial < 15; ++trial) {
    PolyVectorField a = random_field(v, rng), b = random_field(v, rng);
    PolyForm w = random_form(v, 1, rng);
    Poly f = random_poly(3, rng);
    CHECK(lie_derivative(a, PolyForm::function(v, f)).as_function() == a.apply(f));
    CHECK(lie_derivative(a, exterior_d(w)) == exterior_d(lie_derivative(a, w)));
    PolyForm comm = lie_derivative(a, lie_derivative(b, w)) - lie_derivative(b, lie_derivative(a, w));
    CHECK(comm == lie_derivative(bracket(a, b), w));
  }
}

TEST_CASE("pullback") {
  auto xy = make_variables({"x", "y"});
  auto uv = make_variables({"u", "v"});
  PolyForm a = x(0) * PolyForm::dx(xy, 1);
  // x = u^2, y = u + v
  PolyForm pb = pullback(a, uv, {x(0) * x(0), x(0) + x(1)});
  CHECK(pb == x(0) * x(0) * (PolyForm::dx(uv, 0) + PolyForm::dx(uv, 1)));

  Rng rng(109);
  for (int trial = 0; trial < 10; ++trial) {
    PolyForm w = random_form(xy, 1, rng);
    std::vector<Poly> images{random_poly(2, rng), random_poly(2, rng)};
    CHECK(pullback(exterior_d(w), uv, images) == exterior_d(pullback(w, uv, images)));
  }
}

TEST_CASE("wedge powers") {
  auto v = make_variables({"a", "b", "c", "d", "e", "f"});
  auto dx = [&](int i) { return PolyForm::dx(v, i); };
  // Disjoint pairs take the subset enumeration.
  PolyForm s = x(0) * wedge(dx(0), dx(1)) + wedge(dx(2), dx(3)) + x(5) * wedge(dx(4), dx(5));
  CHECK(wedge_power(s, 2) == wedge(s, s));
  CHECK(wedge_power(s, 3) == wedge(wedge(s, s), s));
  CHECK(wedge_power(s, 3) == Poly(6) * x(0) * x(5) * volume_form(v));
  CHECK(wedge_power(s, 0).as_function() == Poly(1));

  Rng rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    PolyForm g = random_form(v, 2, rng) + random_form(v, 2, rng);
    CHECK(wedge_power(g, 2) == wedge(g, g));
    CHECK(wedge_power(g, 3) == wedge(wedge(g, g), g));
  }
}

TEST_CASE("evaluation at a point") {
  auto v = make_variables({"x", "y"});
  PolyForm a = x(0) * PolyForm::dx(v, 0) + x(0) * x(1) * PolyForm::dx(v, 1);
  Exterior<Scalar> e = evaluate(a, {3, -2});
  CHECK(e.coeff(std::vector<int>{0}) == Scalar(3));
  CHECK(e.coeff(std::vector<int>{1}) == Scalar(-6));
  CHECK(v->index("y") == 1);
  CHECK_THROWS(v->index("z"));
}

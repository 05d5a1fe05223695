#include <doctest.h>

#include "cartan/contact.hpp"
#include "cartan/random.hpp"

using namespace cartan;

namespace {

Poly x(int i) { return Poly::var(i); }

mpz_class factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// w~ ^ (dw~)^q ^ d(det): dw~ is twice a sum of 2n^2 disjoint coordinate
// pairs, so (dw~)^q = 2^q q! times the sum of volumes missing one pair, w~
// then restores the missing pair as the Euler field contracted into the
// volume, and d(det) contributes (Euler det) = 2n det.
Scalar expected_sl_constant(int n) {
  const int q = 2 * n * n - 1;
  mpz_class two_q = 1;
  for (int i = 0; i < q; ++i) two_q *= 2;
  return Scalar(mpq_class(-two_q * factorial(q) * 2 * n));
}

// Random matrix with determinant one.
Matrix random_sl2(Rng& rng) {
  Scalar a = rng.nonzero_rational(), b = rng.rational(), c = rng.rational();
  return Matrix::from_rows({{a, b}, {c, (1 + b * c) / a}});
}

Poly random_poly(int n, Rng& rng) {
  Poly p = rng.rational();
  for (int t = 0; t < 3; ++t) {
    Poly m = rng.nonzero_rational();
    for (int d = rng.uniform(0, 2); d > 0; --d) m *= x(rng.uniform(0, n - 1));
    p += m;
  }
  return p;
}

UPoly random_upoly(Rng& rng, int degree) {
  std::vector<Scalar> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rng.rational());
  return UPoly(c);
}

}  // namespace

TEST_CASE("SL(2n) contact identity") {
  SLIdentity one = sl_contact_identity(1);
  REQUIRE(one.ok);
  CHECK(one.q == 1);
  CHECK(one.top_degree == 4);
  CHECK(one.form_degree == 4);
  CHECK(one.constant == Scalar(-4));
  CHECK(one.constant == expected_sl_constant(1));

  SLIdentity two = sl_contact_identity(2);
  REQUIRE(two.ok);
  CHECK(two.q == 7);
  CHECK(two.form_degree == 16);
  CHECK(two.constant == Scalar(-2580480));
  CHECK(two.constant == expected_sl_constant(2));
}

TEST_CASE("a wrong exponent gives a degree mismatch") {
  SLIdentity r = sl_contact_identity(1, 0);
  CHECK_FALSE(r.ok);
  CHECK(r.form_degree == 2);
  CHECK(r.failure.find("degree 2 != 4") != std::string::npos);
  CHECK_FALSE(sl_contact_identity(2, 6).ok);
}

TEST_CASE("contact form data for n = 1") {
  SLContactData d = sl_contact_data(1);
  auto dx = [&](int i) { return PolyForm::dx(d.vars, i); };
  CHECK(d.vars->names == std::vector<std::string>{"x11", "x12", "x21", "x22"});
  CHECK(exterior_d(d.omega) == Poly(2) * (wedge(dx(0), dx(1)) + wedge(dx(2), dx(3))));
  CHECK(d.delta == x(0) * x(3) - x(1) * x(2));
  CHECK(d.d_delta == exterior_d(PolyForm::function(d.vars, d.delta)));
  CHECK(generic_minor(1, 0, 0) == x(3));
}

TEST_CASE("Reeb field") {
  for (int n = 1; n <= 2; ++n) {
    ReebCheck r = sl_reeb_check(n);
    SLContactData d = sl_contact_data(n);
    CHECK(r.omega_is_delta);
    CHECK(r.omega_of_reeb == d.delta);
    REQUIRE(r.ddelta_factor.has_value());
    CHECK(*r.ddelta_factor == Scalar::rational(-1, n));
    CHECK(r.i_reeb_domega == Poly(Scalar::rational(-1, n)) * d.d_delta);
  }
}

TEST_CASE("rotation fields pair with w~") {
  for (int n = 1; n <= 2; ++n) {
    SLContactData d = sl_contact_data(n);
    for (int i = 1; i <= 2 * n; ++i)
      for (int j = i + 1; j <= 2 * n; ++j) {
        PolyVectorField a = sl_field_a(n, i, j);
        CHECK(interior(a, d.omega).as_function() == Poly(2) * sl_pairing(n, i, j));
        // A_ij generates left multiplication by a rotation: it is tangent
        // to det = const and preserves w~.
        CHECK(a.apply(d.delta).is_zero());
        CHECK(lie_derivative(a, d.omega).is_zero());
      }
  }
}

TEST_CASE("singular equations") {
  auto eqs = sl_singular_equations(2);
  CHECK(eqs.size() == 10);
  for (const auto& e : eqs)
    if (e.i == e.j) CHECK(e.equation.is_zero());
  // For n = 1 the only nontrivial equation is the determinant itself.
  auto one = sl_singular_equations(1);
  REQUIRE(one.size() == 3);
  CHECK(one[1].equation == sl_contact_data(1).delta);

  Rng rng(kDefaultSeed);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_sl2(rng);
    REQUIRE(determinant(m).is_one());
    SingularEvaluation ev = sl_singular_evaluate(1, m);
    CHECK_FALSE(ev.singular);
    CHECK(ev.values[1].second == Scalar(1));
  }
  SingularEvaluation zero = sl_singular_evaluate(1, Matrix(2, 2));
  CHECK(zero.singular);
  CHECK_THROWS_AS(sl_singular_evaluate(1, Matrix(3, 3)), PreconditionError);
}

TEST_CASE("left invariance under rotations") {
  for (auto [n, k, a, b] : {std::tuple{1, 0, 2L, 1L}, std::tuple{1, 0, 3L, 4L}, std::tuple{2, 1, 1L, 2L},
                            std::tuple{2, 2, 5L, 1L}, std::tuple{2, 0, 2L, 3L}}) {
    Matrix m = pythagorean_rotation(n, k, a, b);
    CHECK(so_invariance_check(n, m));
  }
  Matrix squeeze = Matrix::from_rows({{2, 0}, {0, Scalar::rational(1, 2)}});
  CHECK_THROWS_AS(so_invariance_check(1, squeeze), PreconditionError);
  CHECK_FALSE(so_invariance_check(1, squeeze, false));
  // A reflection is orthogonal but has determinant -1.
  CHECK_THROWS_AS(so_invariance_check(1, Matrix::from_rows({{1, 0}, {0, -1}})), PreconditionError);
  CHECK_THROWS_AS(pythagorean_rotation(1, 1, 1, 1), PreconditionError);
}

TEST_CASE("Heisenberg group frames") {
  H3Frames f = h3_frames();
  // Left fields: [X1,X2] = X3; right fields: [X1,X2] = -X3.
  CHECK(bracket(f.left[0], f.left[1]) == f.left[2]);
  CHECK(bracket(f.right[0], f.right[1]) == Poly(-1) * f.right[2]);
  for (const auto& l : f.left)
    for (const auto& r : f.right) CHECK(bracket(l, r) == PolyVectorField(l.vars()));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      CHECK(interior(f.left[static_cast<std::size_t>(j)], f.left_forms[static_cast<std::size_t>(i)]).as_function() ==
            Poly(i == j ? 1 : 0));
    for (const auto& r : f.right) CHECK(lie_derivative(r, f.left_forms[static_cast<std::size_t>(i)]).is_zero());
  }
}

TEST_CASE("contact polynomial examples") {
  UPoly u({0, 1}), one({1}), zero;
  CHECK(h3_contact_polynomial(0, u, zero, one) == UPoly({-2}));
  CHECK(h3_globally_contact(h3_contact_polynomial(0, u, zero, one)));
  UPoly p = h3_contact_polynomial(0, one, zero, u);
  CHECK(p == UPoly({1, 0, -1}));
  CHECK_FALSE(h3_globally_contact(p));
  CHECK_FALSE(h3_globally_contact(zero));
  CHECK(h3_globally_contact(UPoly({1, 0, 1})));
}

TEST_CASE("contact polynomial is the coefficient of theta ^ d theta") {
  Rng rng(131);
  VarsPtr v = h3_variables();
  for (int t = 0; t < 15; ++t) {
    Scalar alpha = rng.rational();
    UPoly b1 = random_upoly(rng, 2), b2 = random_upoly(rng, 1), b3 = random_upoly(rng, 2);
    PolyForm theta = h3_invariant_form(alpha, b1, b2, b3);
    Poly u = x(1) - Poly(alpha) * x(0);
    PolyForm top = wedge(theta, exterior_d(theta));
    CHECK(top == compose(h3_contact_polynomial(alpha, b1, b2, b3), u) * volume_form(v));
    CHECK(is_j_invariant(theta, h3_j_fields(alpha)));
  }
  PolyForm not_invariant = x(0) * PolyForm::dx(v, 2);
  CHECK_FALSE(is_j_invariant(not_invariant, h3_j_fields(0)));
}

TEST_CASE("common zeros of the singular system kill the contact polynomial") {
  Rng rng(137);
  for (int t = 0; t < 15; ++t) {
    Scalar alpha = rng.rational(), r = rng.rational();
    UPoly lin = UPoly::linear_root(r);
    UPoly b2 = random_upoly(rng, 2);
    UPoly b1 = lin * random_upoly(rng, 1) - alpha * b2;
    UPoly b3 = lin * random_upoly(rng, 1);
    auto [s1, s2] = h3_singular_system(alpha, b1, b2, b3);
    CHECK(s1(r).is_zero());
    CHECK(s2(r).is_zero());
    CHECK(h3_contact_polynomial(alpha, b1, b2, b3)(r).is_zero());
  }
}

TEST_CASE("Darboux Poisson bracket") {
  CHECK(darboux_poisson(1, x(0), x(1)) == Poly(1));
  CHECK(darboux_poisson(1, x(0) * x(0), x(1)) == Poly(2) * x(0));
  CHECK(darboux_poisson(2, x(2), x(3)) == Poly(1));
  CHECK(darboux_poisson(2, x(0), x(3)).is_zero());
  CHECK_THROWS_AS(darboux_poisson(1, x(2), x(0)), PreconditionError);
  CHECK_THROWS_AS(darboux_poisson_via_forms(1, x(0), x(2) * x(1)), PreconditionError);
  CHECK_THROWS_AS(darboux_poisson(1, x(5), x(0)), PreconditionError);
}

TEST_CASE("Poisson axioms and agreement of both routes") {
  Rng rng(139);
  for (int p = 1; p <= 2; ++p) {
    for (int t = 0; t < 10; ++t) {
      Poly f = random_poly(2 * p, rng), g = random_poly(2 * p, rng), h = random_poly(2 * p, rng);
      Poly fg = darboux_poisson(p, f, g);
      CHECK(fg == darboux_poisson_via_forms(p, f, g));
      CHECK(fg == -darboux_poisson(p, g, f));
      CHECK(darboux_poisson(p, f, g * h) == darboux_poisson(p, f, g) * h + g * darboux_poisson(p, f, h));
      Poly jac = darboux_poisson(p, f, darboux_poisson(p, g, h)) + darboux_poisson(p, g, darboux_poisson(p, h, f)) +
                 darboux_poisson(p, h, darboux_poisson(p, f, g));
      CHECK(jac.is_zero());
    }
  }
}

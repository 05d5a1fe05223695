#include <doctest.h>

#include <memory>

#include "cartan/catalog.hpp"
#include "cartan/dual_form.hpp"
#include "cartan/lie_core.hpp"
#include "cartan/random.hpp"
#include "oracles.hpp"

using namespace cartan;

namespace {

oracle::Row real_row(const std::vector<Scalar>& v) {
  oracle::Row r;
  for (const auto& s : v) r.push_back(s.re());
  return r;
}

oracle::Row unit_row(int n, int i) {
  oracle::Row r(static_cast<std::size_t>(n));
  r[static_cast<std::size_t>(i)] = 1;
  return r;
}

// Jacobi locus of the explicit p = 4 table, worked out by hand from the
// cyclic sums that can be nonzero: (e1,e2,e3) and (e1,e2,e4) both reduce to
// multiples of this quadric.
mpq_class c9_quadric(const mpq_class& a14, const mpq_class& a26, const mpq_class& a38) {
  return 3 * a26 * a26 - a26 * a38 - 2 * a14 * a38;
}

bool all_nonzero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (s.is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("every standard entry is a Lie algebra with its advertised class") {
  for (const auto& id : standard_catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    INFO(id);
    CHECK(e.jacobi);
    CHECK(oracle::jacobi(*e.algebra));
    CHECK(e.id == id);
    CHECK_FALSE(e.provenance.empty());
    const int n = e.algebra->dim();
    CHECK(lower_central_series(*e.algebra).nilindex.has_value() == e.nilpotent);
    if (e.frobeniusian) CHECK(e.expected_class == n);
    if (e.constraints_hold && e.expected_class > 0) {
      CHECK(cartan_class(e.distinguished_form).cls == e.expected_class);
      CHECK(oracle::cartan_class(*e.algebra, real_row(e.distinguished_form.as_covector())) == e.expected_class);
    }
  }
}

TEST_CASE("ids are canonicalised") {
  CHECK(catalog_entry("dim3:kind=sl2").id == "dim3:kind=sl2,lambda=1");
  CHECK(catalog_entry("mu_c9:a=[0,0,2/2]").id == "mu_c9:a=[0,0,1]");
  CHECK(catalog_entry("dim5:variant=diag_ii_b,c=1").id == "dim5:variant=diag_ii_b,b=0,c=1,d=0");
  CHECK(catalog_entry("frobenius_base:p=2").id == "frobenius_base:p=2");
}

TEST_CASE("malformed ids") {
  for (const char* bad : {"", "foo", "heisenberg", "heisenberg:p=1,q=2", "heisenberg:p=1,", "heisenberg:p=x",
                          "heisenberg:p=1/2", "heisenberg:p", "mu_c9:a=[1,2]", "frobenius:p=2,a=[1,]",
                          "frobenius:p=2,a=[1", "dim5:variant=nope", "dim5:variant=diag_ii_b,a=1", "dim3:kind=x",
                          "heisenberg:p=1,p=2", "bad-name"}) {
    INFO(bad);
    CHECK_THROWS_AS(catalog_entry(bad), ParseError);
  }
  CHECK_THROWS_AS(catalog_entry("heisenberg:p=0"), PreconditionError);
  CHECK_THROWS_AS(catalog_entry("dim3:kind=solvable_b,b=0"), PreconditionError);
  CHECK_THROWS_AS(catalog_entry("filiform:n=2"), PreconditionError);
}

TEST_CASE("id grammar") {
  CatalogId id = parse_catalog_id("filiform_contact:p=3,a=[1,-2/3]");
  CHECK(id.name == "filiform_contact");
  CHECK(id.values.at("p") == std::vector<std::string>{"3"});
  CHECK(id.values.at("a") == std::vector<std::string>{"1", "-2/3"});
  CHECK(parse_catalog_id("frobenius_sample").values.empty());
}

TEST_CASE("dimension three") {
  CHECK(dim3_sl2(0) == heisenberg_algebra(1));
  CHECK(dim3_solvable_b(0) == dim3_solvable1());
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    Scalar b = rng.nonzero_rational(), l = rng.nonzero_rational();
    CHECK(oracle::jacobi(dim3_solvable_b(b)));
    CHECK(oracle::jacobi(dim3_sl2(l)));
    CHECK(oracle::cartan_class(dim3_solvable_b(b), unit_row(3, 2)) == 3);
    CHECK(oracle::cartan_class(dim3_sl2(l), unit_row(3, 2)) == 3);
  }
  // so(3): every nonzero covector is contact.
  for (int t = 0; t < 25; ++t) CHECK(oracle::cartan_class(dim3_so3(), real_row(rng.covector(3))) == 3);
}

TEST_CASE("dimension five families") {
  Rng rng(kDefaultSeed);
  for (const auto& variant : dim5_variants()) {
    INFO(variant);
    CHECK(dim5_algebra(variant, {}) == heisenberg_algebra(2));
    for (int t = 0; t < 25; ++t) {
      std::map<std::string, Scalar> params;
      for (const auto& p : dim5_parameter_names(variant)) params[p] = rng.rational();
      LieAlgebra g = dim5_algebra(variant, params);
      CHECK(oracle::jacobi(g));
      CHECK(oracle::cartan_class(g, unit_row(5, 4)) == 5);
    }
  }
  CHECK(oracle::jacobi(dim5_algebra("diag_ii_a", {{"a", 0}, {"b", 0}, {"c", 1}, {"d", 1}})));
  CHECK(oracle::cartan_class(dim5_algebra("nondiag_case1", {{"c", 1}}), unit_row(5, 4)) == 5);
  CHECK_THROWS_AS(dim5_algebra("diag_ii_b", {{"a", Scalar(1)}}), ParseError);
}

TEST_CASE("Heisenberg classes") {
  Rng rng(41);
  for (int p = 1; p <= 3; ++p) {
    LieAlgebra h = heisenberg_algebra(p);
    const int n = 2 * p + 1;
    for (int t = 0; t < 20; ++t) {
      auto cov = rng.covector(n);
      int expected = cov.back().is_zero() ? 1 : n;
      CHECK(oracle::cartan_class(h, real_row(cov)) == expected);
      cov.back() = Scalar();
      if (!is_zero(cov)) CHECK(oracle::cartan_class(h, real_row(cov)) == 1);
    }
  }
}

TEST_CASE("model filiform algebras") {
  for (int n = 3; n <= 9; ++n) {
    LieAlgebra l = filiform_model(n);
    CHECK(oracle::jacobi(l));
    CentralSeries s = lower_central_series(l);
    REQUIRE(s.nilindex.has_value());
    CHECK(*s.nilindex == n - 1);
    CHECK(s.filiform);
  }
  // L4 never carries an even class.
  Rng rng(43);
  LieAlgebra l4 = filiform_model(4);
  for (int t = 0; t < 50; ++t) CHECK(oracle::cartan_class(l4, real_row(rng.covector(4))) % 2 == 1);
}

TEST_CASE("psi cocycle entries") {
  // psi_{1,4}: e1 with e_j for j >= 2 lands in e_{j+2}.
  BilinearMap psi = filiform_psi(4, 1, 4);
  CHECK(psi.coeff(1, 2, 4) == Scalar(1));
  CHECK(psi.coeff(1, 6, 8) == Scalar(1));
  CHECK(psi(1, 7) == zero_vector(9));
  // psi_{3,8}(e3, e4) = e8 and psi_{3,8}(e2, e5) = -e8.
  BilinearMap psi38 = filiform_psi(4, 3, 8);
  CHECK(psi38.coeff(3, 4, 8) == Scalar(1));
  CHECK(psi38.coeff(2, 5, 8) == Scalar(-1));
  CHECK(psi38.coeff(1, 6, 8) == Scalar(1));
}

TEST_CASE("the p = 4 builder reproduces the explicit table") {
  Rng rng(47);
  for (int t = 0; t < 30; ++t) {
    Scalar a14 = rng.rational(), a26 = rng.rational(), a38 = rng.rational();
    LieAlgebra built = filiform_contact_algebra(4, {a14, a26, a38});
    CHECK(built == mu_c9_table(a14, a26, a38));
    CHECK(built.c(2, 5, 8) == a26 - a38);
  }
}

TEST_CASE("contact conditions for p = 4") {
  Rng rng(53);
  for (int t = 0; t < 20; ++t) {
    Scalar a14 = rng.rational(), a26 = rng.rational(), a38 = rng.rational();
    auto conds = filiform_contact_conditions(4, {a14, a26, a38});
    REQUIRE(conds.size() == 3);
    CHECK(conds[0] == a38);
    CHECK(conds[1] == a26 - a38);
    CHECK(conds[2] == a14 - 3 * a26 + a38);
  }
  CHECK_THROWS_AS(filiform_contact_conditions(4, {1, 2}), PreconditionError);
}

TEST_CASE("Jacobi locus of the p = 4 table") {
  Rng rng(59);
  int on = 0, off = 0;
  for (int t = 0; t < 60; ++t) {
    Scalar a26 = rng.rational(), a38 = rng.nonzero_rational();
    Scalar a14 = t % 2 ? rng.rational() : (3 * a26 * a26 - a26 * a38) / (2 * a38);
    bool expected = c9_quadric(a14.re(), a26.re(), a38.re()) == 0;
    LieAlgebra g = mu_c9_table(a14, a26, a38);
    CHECK(oracle::jacobi(g) == expected);
    CHECK(jacobi_check(g).ok == expected);
    (expected ? on : off)++;
  }
  CHECK(on >= 30);
  CHECK(off > 0);
  CHECK(oracle::jacobi(mu_c9_table(0, 0, 1)));
  CHECK(oracle::jacobi(mu_c9_table(12, 3, 1)));
  CHECK_FALSE(oracle::jacobi(mu_c9_table(0, 2, 1)));
}

TEST_CASE("non-Jacobi parameters are quarantined") {
  CHECK_THROWS_AS(catalog_entry("mu_c9:a=[0,2,1]"), PreconditionError);
  CatalogEntry e = catalog_entry("mu_c9:a=[0,2,1]", {true});
  CHECK_FALSE(e.jacobi);
  CHECK(e.constraints_hold);
  // The formal class of w8 is still computable.
  CHECK(cartan_class(e.distinguished_form).cls == 9);
}

TEST_CASE("contact class follows the A_i conditions") {
  Rng rng(61);
  for (int p = 2; p <= 4; ++p) {
    const int n = 2 * p + 1;
    for (int t = 0; t < 25; ++t) {
      std::vector<Scalar> a;
      for (int i = 1; i < p; ++i) a.push_back(rng.rational());
      // Force some tuples onto the boundary A_1 = 0.
      if (t % 5 == 0) a.back() = Scalar();
      LieAlgebra g = filiform_contact_algebra(p, a);
      bool contact = all_nonzero(filiform_contact_conditions(p, a));
      int cls = oracle::cartan_class(g, unit_row(n, n - 1));
      CHECK((cls == n) == contact);
    }
  }
  // Zero parameters give the model and class 3.
  CatalogEntry zero = catalog_entry("mu_c9:a=[0,0,0]");
  CHECK(*zero.algebra == filiform_model(9));
  CHECK_FALSE(zero.constraints_hold);
  CHECK(cartan_class(zero.distinguished_form).cls == 3);
  // A_2 = 0 at (0,1,1).
  CatalogEntry deg = catalog_entry("mu_c9:a=[0,1,1]", {true});
  CHECK_FALSE(deg.constraints_hold);
  CHECK(cartan_class(deg.distinguished_form).cls < 9);
}

TEST_CASE("contact filiform algebras on the Jacobi locus") {
  Rng rng(67);
  int contact_seen = 0;
  for (int t = 0; t < 25; ++t) {
    Scalar a26 = rng.rational(), a38 = rng.nonzero_rational();
    Scalar a14 = (3 * a26 * a26 - a26 * a38) / (2 * a38);
    LieAlgebra g = filiform_contact_algebra(4, {a14, a26, a38});
    REQUIRE(oracle::jacobi(g));
    bool contact = all_nonzero(filiform_contact_conditions(4, {a14, a26, a38}));
    CHECK((oracle::cartan_class(g, unit_row(9, 8)) == 9) == contact);
    CentralSeries s = lower_central_series(g);
    REQUIRE(s.nilindex.has_value());
    CHECK(s.filiform);
    contact_seen += contact;
  }
  CHECK(contact_seen > 0);
}

TEST_CASE("frobeniusian model assembly") {
  Rng rng(71);
  for (int p = 1; p <= 4; ++p) {
    auto psis = frobenius_psi_cocycles(p);
    CHECK(static_cast<int>(psis.size()) == p - 1);
    for (int t = 0; t < 25; ++t) {
      std::vector<Scalar> a;
      BilinearMap mu = frobenius_base(p).bracket_map();
      for (int k = 1; k < p; ++k) {
        a.push_back(rng.rational());
        mu += a.back() * psis[static_cast<std::size_t>(k - 1)];
      }
      LieAlgebra g = frobenius_algebra(p, a);
      CHECK(LieAlgebra(mu) == g);
      CHECK(oracle::jacobi(g));
      CHECK(oracle::cartan_class(g, unit_row(2 * p, 0)) == 2 * p);
      CHECK(center(g).dim() == 0);
    }
  }
}

TEST_CASE("frobeniusian base differentials") {
  auto g = std::make_shared<const LieAlgebra>(frobenius_base(3));
  auto w = [&](int i) { return DualForm::basis(g, i); };
  DualForm dw1 = wedge(w(0), w(1)) + wedge(w(2), w(3)) + wedge(w(4), w(5));
  CHECK(ce_differential(w(0)) == dw1);
  CHECK(ce_differential(w(1)).is_zero());
  CHECK(ce_differential(w(2)).is_zero());
  CHECK(ce_differential(w(3)) == Scalar(-1) * wedge(w(1), w(3)));
  CHECK(ce_differential(w(5)) == Scalar(-1) * wedge(w(1), w(5)));
}

TEST_CASE("frobeniusian sample") {
  LieAlgebra g = frobenius_sample();
  CHECK(oracle::jacobi(g));
  CHECK(oracle::cartan_class(g, unit_row(4, 0)) == 4);
  CHECK(center(g).dim() == 0);
}

#include <doctest.h>

#include <memory>

#include "cartan/catalog.hpp"
#include "cartan/dual_form.hpp"
#include "cartan/lie_core.hpp"
#include "cartan/random.hpp"
#include "oracles.hpp"

using namespace cartan;

namespace {

AlgebraPtr ptr(LieAlgebra g) { return std::make_shared<const LieAlgebra>(std::move(g)); }

DualForm w(const AlgebraPtr& g, int i) { return DualForm::basis(g, i); }

// Random sparse form of a given grade.
DualForm random_form(const AlgebraPtr& g, int grade, Rng& rng) {
  const int n = g->dim();
  Exterior<Scalar> body(n, grade);
  for (int t = 0; t < 4; ++t) {
    std::vector<int> idx;
    for (int i = 0; i < n && static_cast<int>(idx.size()) < grade; ++i)
      if (rng.uniform(0, 1) || n - i == grade - static_cast<int>(idx.size())) idx.push_back(i);
    body.add(blade_of(idx), rng.rational());
  }
  return {g, body};
}

oracle::Form to_oracle(const DualForm& f) {
  oracle::Form out;
  for (const auto& [b, c] : f.body().terms()) out[blade_indices(b)] = c.re();
  return out;
}

oracle::Row real_row(const std::vector<Scalar>& v) {
  oracle::Row r;
  for (const auto& s : v) r.push_back(s.re());
  return r;
}

std::vector<AlgebraPtr> jacobi_catalog() {
  std::vector<AlgebraPtr> out;
  for (const auto& id : standard_catalog_ids()) out.push_back(catalog_entry(id).algebra);
  return out;
}

}  // namespace

TEST_CASE("wedge on basis forms") {
  auto h3 = ptr(heisenberg_algebra(1));
  DualForm w12 = wedge(w(h3, 0), w(h3, 1));
  CHECK(w12.grade() == 2);
  CHECK(w12.coeff({0, 1}) == Scalar(1));
  CHECK(wedge(w(h3, 0), w(h3, 0)).is_zero());

  auto so3 = ptr(dim3_so3());
  DualForm vol = wedge(wedge(w(so3, 0), w(so3, 1)), w(so3, 2));
  CHECK(vol.coeff({0, 1, 2}) == Scalar(1));
  CHECK(wedge(vol, w(so3, 0)).is_zero());  // grade 4 > 3
}

TEST_CASE("wedge of forms over different algebras is rejected") {
  auto a = ptr(heisenberg_algebra(1));
  auto b = ptr(dim3_so3());
  CHECK_THROWS_AS(wedge(w(a, 0), w(b, 1)), PreconditionError);
}

TEST_CASE("graded commutativity and agreement with a permutation oracle") {
  Rng rng(11);
  auto g = ptr(abelian_algebra(6));
  for (int trial = 0; trial < 40; ++trial) {
    int p = rng.uniform(0, 3), q = rng.uniform(0, 3);
    DualForm a = random_form(g, p, rng), b = random_form(g, q, rng);
    DualForm ab = wedge(a, b), ba = wedge(b, a);
    CHECK(ab == Scalar((p * q) % 2 ? -1 : 1) * ba);
    CHECK(to_oracle(ab) == oracle::wedge(to_oracle(a), to_oracle(b)));
  }
}

TEST_CASE("Chevalley-Eilenberg differential on displayed examples") {
  auto h3 = ptr(heisenberg_algebra(1));
  CHECK(ce_differential(w(h3, 2)) == Scalar(-1) * wedge(w(h3, 0), w(h3, 1)));
  CHECK(ce_differential(w(h3, 0)).is_zero());

  auto so3 = ptr(dim3_so3());
  CHECK(ce_differential(w(so3, 0)) == wedge(w(so3, 1), w(so3, 2)));

  auto h5 = ptr(heisenberg_algebra(2));
  DualForm expected = Scalar(-1) * (wedge(w(h5, 0), w(h5, 1)) + wedge(w(h5, 2), w(h5, 3)));
  CHECK(ce_differential(w(h5, 4)) == expected);
}

TEST_CASE("dw(X,Y) = -w([X,Y]) on random covectors") {
  Rng rng(3);
  for (const auto& g : jacobi_catalog()) {
    const int n = g->dim();
    DualForm f = DualForm::covector(g, rng.covector(n));
    DualForm df = ce_differential(f);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(df(basis_vector(n, i), basis_vector(n, j)) == -f(g->bracket(i, j)));
  }
}

TEST_CASE("antiderivation rule") {
  Rng rng(5);
  for (const auto& id : {"frobenius:p=3,a=[2,-3]", "mu_c9:a=[12,3,1]", "dim3:kind=so3"}) {
    auto g = catalog_entry(id).algebra;
    for (int trial = 0; trial < 10; ++trial) {
      int p = rng.uniform(1, 2), q = rng.uniform(1, 2);
      DualForm a = random_form(g, p, rng), b = random_form(g, q, rng);
      DualForm lhs = ce_differential(wedge(a, b));
      DualForm rhs = wedge(ce_differential(a), b) + Scalar(p % 2 ? -1 : 1) * wedge(a, ce_differential(b));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("d o d vanishes exactly when Jacobi holds") {
  for (const auto& g : jacobi_catalog())
    for (int i = 0; i < g->dim(); ++i) CHECK(ce_differential(ce_differential(w(g, i))).is_zero());

  LieAlgebra bad(3);
  bad.add_bracket(0, 1, 2, 1);
  bad.add_bracket(0, 2, 0, 1);
  REQUIRE_FALSE(oracle::jacobi(bad));
  auto pb = ptr(bad);
  bool some_nonzero = false;
  for (int i = 0; i < 3; ++i) some_nonzero |= !ce_differential(ce_differential(w(pb, i))).is_zero();
  CHECK(some_nonzero);
}

TEST_CASE("interior product") {
  auto h3 = ptr(heisenberg_algebra(1));
  DualForm w12 = wedge(w(h3, 0), w(h3, 1));
  CHECK(interior_product(basis_vector(3, 0), w12) == w(h3, 1));
  CHECK(interior_product(basis_vector(3, 1), w12) == Scalar(-1) * w(h3, 0));
  CHECK(interior_product(basis_vector(3, 2), ce_differential(w(h3, 2))).is_zero());
  CHECK_THROWS_AS(interior_product(basis_vector(3, 0), DualForm::constant(h3, 1)), PreconditionError);

  Rng rng(9);
  auto g = ptr(abelian_algebra(5));
  for (int trial = 0; trial < 20; ++trial) {
    Vector x = rng.covector(5);
    DualForm a = random_form(g, 3, rng);
    CHECK(interior_product(x, interior_product(x, a)).is_zero());
  }
}

TEST_CASE("Cartan class on displayed examples") {
  auto h3 = ptr(heisenberg_algebra(1));
  CartanClass c = cartan_class(w(h3, 2));
  CHECK(c.cls == 3);
  CHECK(c.characteristic_space.empty());
  CHECK(c.odd_branch);

  auto ab = ptr(abelian_algebra(4));
  CHECK(cartan_class(DualForm::covector(ab, {1, 2, 0, -1})).cls == 1);

  auto so3 = ptr(dim3_so3());
  CHECK(cartan_class(w(so3, 0) + w(so3, 1)).cls == 3);
  CHECK(cartan_class(DualForm::covector(so3, {1, 2, -1})).cls == 3);

  auto g = ptr(frobenius_algebra(2, {Scalar::rational(1, 2)}));
  CartanClass cf = cartan_class(w(g, 0));
  CHECK(cf.cls == 4);
  CHECK_FALSE(cf.odd_branch);
  CHECK(oracle::cartan_class(*g, {1, 0, 0, 0}) == 4);

  CHECK_THROWS_AS(cartan_class(DualForm::covector(h3, {0, 0, 0})), PreconditionError);
}

TEST_CASE("class consistency on the catalog against the rank oracle") {
  Rng rng(kDefaultSeed);
  for (const auto& g : jacobi_catalog()) {
    for (int t = 0; t < 50; ++t) {
      auto cov = rng.covector(g->dim());
      CartanClass c = cartan_class(DualForm::covector(g, cov));
      CHECK(c.cls == g->dim() - static_cast<int>(c.characteristic_space.size()));
      CHECK(c.cls == oracle::cartan_class(*g, real_row(cov)));
    }
  }
}

TEST_CASE("nilpotent algebras only carry odd classes") {
  Rng rng(kDefaultSeed);
  for (const auto& id : {"heisenberg:p=3", "filiform:n=5", "filiform:n=4", "filiform:n=7", "mu_c9:a=[12,3,1]",
                         "filiform_contact:p=3,a=[1,2]"}) {
    auto g = catalog_entry(id).algebra;
    REQUIRE(lower_central_series(*g).nilindex.has_value());
    for (int t = 0; t < 100; ++t) CHECK(cartan_class(DualForm::covector(g, rng.covector(g->dim()))).cls % 2 == 1);
  }
}

TEST_CASE("semisimple bound in dimension 3") {
  Rng rng(kDefaultSeed);
  for (const auto& g : {ptr(dim3_sl2(1)), ptr(dim3_so3())})
    for (int t = 0; t < 100; ++t) CHECK(cartan_class(DualForm::covector(g, rng.covector(3))).cls <= 3);
}

TEST_CASE("two-form matrix") {
  auto h3 = ptr(heisenberg_algebra(1));
  Matrix b = two_form_matrix(ce_differential(w(h3, 2)));
  CHECK(b == Matrix::from_rows({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}));
}

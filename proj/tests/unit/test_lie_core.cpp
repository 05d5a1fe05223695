#include <doctest.h>

#include <memory>

#include "cartan/catalog.hpp"
#include "cartan/dual_form.hpp"
#include "cartan/lie_core.hpp"
#include "cartan/random.hpp"
#include "oracles.hpp"

using namespace cartan;

namespace {

Matrix diag(std::initializer_list<Scalar> d) {
  Matrix m(d.size(), d.size());
  std::size_t i = 0;
  for (const auto& v : d) {
    m(i, i) = v;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("Jacobi check and witness") {
  CHECK(jacobi_check(heisenberg_algebra(2)).ok);
  CHECK(jacobi_check(frobenius_algebra(3, {2, -3})).ok);

  LieAlgebra bad(3);
  bad.add_bracket(0, 1, 2, 1);
  bad.add_bracket(0, 2, 0, 1);
  JacobiResult r = jacobi_check(bad);
  REQUIRE_FALSE(r.ok);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->i == 0);
  CHECK(r.witness->j == 1);
  CHECK(r.witness->k == 2);
  // [[X1,X2],X3] + [[X2,X3],X1] + [[X3,X1],X2] = [X3,X3] + 0 + [-X1,X2] = -X3
  CHECK(r.witness->defect == Vector{0, 0, -1});
  for (int m = 0; m < 3; ++m) CHECK(r.witness->defect[m].re() == oracle::jacobi_defect(bad, 0, 1, 2, m));
}

TEST_CASE("Jacobi check agrees with the cyclic-sum oracle on random brackets") {
  Rng rng(21);
  int failing = 0;
  for (int trial = 0; trial < 40; ++trial) {
    LieAlgebra g(4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (rng.uniform(0, 2) == 0) g.add_bracket(i, j, rng.uniform(0, 3), rng.nonzero_rational());
    bool ok = jacobi_check(g).ok;
    CHECK(ok == oracle::jacobi(g));
    failing += !ok;
  }
  CHECK(failing > 0);
}

TEST_CASE("center") {
  Subspace z7 = center(heisenberg_algebra(3));
  CHECK(z7.dim() == 1);
  CHECK(z7.contains(basis_vector(7, 6)));
  CHECK(center(abelian_algebra(4)) == Subspace::whole(4));
  CHECK(center(dim3_sl2(1)).dim() == 0);
}

TEST_CASE("central vectors killed by w lie in the characteristic space") {
  Rng rng(kDefaultSeed);
  for (const auto& id : standard_catalog_ids()) {
    CatalogEntry e = catalog_entry(id);
    const LieAlgebra& g = *e.algebra;
    Subspace z = center(g);
    for (int t = 0; t < 10; ++t) {
      DualForm w = DualForm::covector(e.algebra, rng.covector(g.dim()));
      Subspace c = Subspace::span(g.dim(), cartan_class(w).characteristic_space);
      for (const auto& v : z.basis())
        for (const auto& u : z.basis()) {
          // u w(v) - v w(u) is central and killed by w.
          Vector x = w(v) * u - w(u) * v;
          CHECK(c.contains(x));
        }
      if (z.dim() == 1 && w(z.basis()[0]).is_zero()) CHECK(c.contains(z.basis()[0]));
    }
    if (e.frobeniusian) CHECK(z.dim() == 0);
  }
}

TEST_CASE("lower central series") {
  for (int p = 1; p <= 3; ++p) {
    CentralSeries s = lower_central_series(heisenberg_algebra(p));
    REQUIRE(s.nilindex.has_value());
    CHECK(*s.nilindex == 2);
  }
  CentralSeries l5 = lower_central_series(filiform_model(5));
  CHECK(*l5.nilindex == 4);
  CHECK(l5.filiform);

  CentralSeries sl2 = lower_central_series(dim3_sl2(1));
  CHECK_FALSE(sl2.nilindex.has_value());
  CHECK(sl2.terms.back().dim() == 3);

  CentralSeries mu = lower_central_series(filiform_contact_algebra(4, {12, 3, 1}));
  REQUIRE(mu.nilindex.has_value());
  CHECK(*mu.nilindex == 8);
  CHECK(mu.filiform);
}

TEST_CASE("derivations") {
  LieAlgebra h3 = heisenberg_algebra(1);
  CHECK(is_derivation(diag({3, -3, 0}), h3));
  CHECK_FALSE(is_derivation(diag({1, 1, 1}), h3));
  CHECK(is_derivation(diag({1, 2, 3}), h3));  // rho1 + rho2 = rho3
  CHECK(is_derivation(Matrix::identity(4), abelian_algebra(4)));

  LieAlgebra sl2 = dim3_sl2(1);
  for (int i = 0; i < 3; ++i) CHECK(is_derivation(sl2.ad(i), sl2));
}

TEST_CASE("diagonal derivations of h_{2p+1} vanishing on the center pair up") {
  for (int p = 1; p <= 3; ++p) {
    LieAlgebra h = heisenberg_algebra(p);
    const int n = 2 * p + 1;
    Subspace d = diagonal_derivations(h);
    CHECK(d.dim() == p + 1);
    // Restrict to rho_n = 0 and read off the pairing.
    std::vector<Vector> kernel;
    for (const auto& v : d.basis()) kernel.push_back(v);
    Matrix m(1, kernel.size());
    for (std::size_t t = 0; t < kernel.size(); ++t) m(0, t) = kernel[t][static_cast<std::size_t>(n - 1)];
    for (const auto& coeffs : nullspace(m)) {
      Vector rho = zero_vector(n);
      for (std::size_t t = 0; t < kernel.size(); ++t) axpy(rho, coeffs[t], kernel[t]);
      for (int k = 0; k < p; ++k) CHECK((rho[2 * k] + rho[2 * k + 1]).is_zero());
    }
  }
}

TEST_CASE("F subalgebra dimension and trace") {
  CHECK(f_subalgebra_dimension(1) == 3);
  CHECK(f_subalgebra_dimension(2) == 10);
  CHECK(f_subalgebra_dimension(3) == 21);
  for (int p = 1; p <= 3; ++p) {
    FSubalgebra f = f_subalgebra(p);
    CHECK(f.dimension() == p * (2 * p + 1));
    for (const auto& a : f.basis) CHECK(a.trace().is_zero());
  }
}

TEST_CASE("F is closed under commutators") {
  for (int p = 1; p <= 2; ++p) {
    FSubalgebra f = f_subalgebra(p);
    for (const auto& a : f.basis)
      for (const auto& b : f.basis) CHECK(in_f_subalgebra(p, a * b - b * a));
    CHECK_FALSE(in_f_subalgebra(p, Matrix::identity(static_cast<std::size_t>(2 * p))));
  }
}

TEST_CASE("subspace equality ignores the spanning set") {
  Subspace a = Subspace::span(3, {{1, 1, 0}, {0, 1, 1}});
  Subspace b = Subspace::span(3, {{1, 2, 1}, {1, 0, -1}, {2, 2, 0}});
  CHECK(a == b);
  CHECK(a.contains(Vector{1, 0, -1}));
  CHECK_FALSE(a.contains(Vector{0, 0, 1}));
}

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cartan/dual_form.hpp"
#include "cartan/lie_algebra.hpp"

namespace cartan {

// Raw constructors. Basis indices are 0-based; for the filiform families
// index i is e_i.

LieAlgebra heisenberg_algebra(int p);  // [X_{2k-1}, X_{2k}] = X_{2p+1}
LieAlgebra abelian_algebra(int n);

// Three-dimensional contact algebras.
LieAlgebra dim3_solvable1();                   // [X1,X2] = X3 + X1
LieAlgebra dim3_solvable_b(const Scalar& b);   // [X1,X2] = X3 + X1, [X2,X3] = b X1
LieAlgebra dim3_sl2(const Scalar& lambda);     // [X1,X2] = X3, [X1,X3] = l X1, [X2,X3] = -l X2
// so(3) with d w1 = w2^w3 (and cyclic) under d w(X,Y) = -w([X,Y]); this
// stores [X2,X3] = -X1, [X3,X1] = -X2, [X1,X2] = -X3.
LieAlgebra dim3_so3();

// Five-dimensional contact deformations of h5; parameter names follow the
// variant (missing ones read as 0).
LieAlgebra dim5_algebra(const std::string& variant, const std::map<std::string, Scalar>& params);
const std::vector<std::string>& dim5_variants();
const std::vector<std::string>& dim5_parameter_names(const std::string& variant);

// L_n: [e0, e_i] = e_{i+1} for i = 1..n-2.
LieAlgebra filiform_model(int n);
// psi_{k,s}(e_i, e_j) = (-1)^{k-i} C(j-k-1, k-i) e_{s+i+j-2k-1} for 1 <= i <= k < j
// on L_{2p+1}; indices past e_{2p} are dropped.
BilinearMap filiform_psi(int p, int k, int s);
// L_{2p+1} + sum_i a_i psi_{i,2i+2}, with a = (a_{1,4}, ..., a_{p-1,2p}).
LieAlgebra filiform_contact_algebra(int p, const std::vector<Scalar>& a);
// A_i = sum_{k=0}^{i-1} (-1)^k a_{p-i+k} C(2i-k-2, k), i = 1..p-1; the
// algebra is contact iff every A_i is nonzero.
std::vector<Scalar> filiform_contact_conditions(int p, const std::vector<Scalar>& a);
// Independent hard-coded table for p = 4.
LieAlgebra mu_c9_table(const Scalar& a14, const Scalar& a26, const Scalar& a38);

// Frobeniusian model g_a of dimension 2p:
//   [X1,X2] = -X1, [X_{2k+1},X_{2k+2}] = -X1,
//   [X2,X_{2k+1}] = -a_k X_{2k+1}, [X2,X_{2k+2}] = (1+a_k) X_{2k+2}.
LieAlgebra frobenius_algebra(int p, const std::vector<Scalar>& a);
LieAlgebra frobenius_base(int p);  // all a_k = 0
// psi_k(X2,X_{2k+1}) = -X_{2k+1}, psi_k(X2,X_{2k+2}) = X_{2k+2}; the sign makes
// frobenius_base(p) + sum a_k psi_k equal frobenius_algebra(p, a).
std::vector<BilinearMap> frobenius_psi_cocycles(int p);
// A frobeniusian algebra of dimension 4 outside the model family, written
// in a basis where (2,0,1,1) contracts it onto g_{-1}.
LieAlgebra frobenius_sample();

struct CatalogEntry {
  std::string id;
  std::vector<std::pair<std::string, Scalar>> params;
  AlgebraPtr algebra;
  DualForm distinguished_form;
  int expected_class = 0;
  bool constraints_hold = true;  // expected_class is exact only when true
  bool jacobi = true;
  bool nilpotent = false;
  bool frobeniusian = false;
  std::string provenance;
};

struct CatalogOptions {
  bool allow_nonjacobi = false;
};

// "name[:key=val,...]" with array values "[v1,v2]". Names: heisenberg (p),
// abelian (n), dim3 (kind, b, lambda), dim5 (variant + parameters),
// filiform (n), filiform_contact (p, a), mu_c9 (a), frobenius (p, a),
// frobenius_base (p), frobenius_sample. Throws ParseError on bad ids and
// PreconditionError when the bracket fails Jacobi (unless allowed).
CatalogEntry catalog_entry(const std::string& id, const CatalogOptions& opts = {});

struct CatalogId {
  std::string name;
  std::map<std::string, std::vector<std::string>> values;  // scalars are 1-element arrays
};
CatalogId parse_catalog_id(const std::string& id);

// Ids covering every family at representative parameters.
std::vector<std::string> standard_catalog_ids();
std::string catalog_help();

}  // namespace cartan

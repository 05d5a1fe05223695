#pragma once

#include <optional>
#include <vector>

#include "cartan/dual_form.hpp"
#include "cartan/lie_algebra.hpp"

namespace cartan {

// phi o psi (X,Y,Z) = phi(psi(X,Y),Z) + phi(psi(Y,Z),X) + phi(psi(Z,X),Y),
// tabulated on i < j < k.
TrilinearTable circle(const BilinearMap& phi, const BilinearMap& psi);
// psi1 . psi2 (X,Y,Z) = psi1(psi2(X,Y),Z), tabulated on i < j and every k.
TrilinearTable bullet(const BilinearMap& psi1, const BilinearMap& psi2);
// Whether the k-fold left composition mu(mu(..mu(X1,X2)..),X_{k+1}) vanishes.
bool bullet_power_vanishes(const BilinearMap& mu, int k);

// (d f)(X,Y) = f[X,Y] - [fX,Y] - [X,fY]
BilinearMap ce_coboundary_1(const LinearMap& f, const LieAlgebra& g);
// d phi = mu o phi + phi o mu. With this sign d o d = 0 and, on h_{2p+1},
// d phi2 (X_{2k-1}, X_{2k}, X_l) = -f(X_l) for phi2 built from f.
TrilinearTable ce_coboundary_2(const BilinearMap& phi, const LieAlgebra& g);

// mu_t = mu0 + t phi1 + t^2 phi2.
struct DeformationSpec {
  LieAlgebra base;
  BilinearMap phi1;
  BilinearMap phi2;
};

// phi2(X_l, X_n) = f(X_l) for l < n, zero elsewhere; f acts on the first
// n-1 generators (the subspace k complementary to the center of the base).
BilinearMap phi2_from_map(const LieAlgebra& base, const LinearMap& f);

struct QuadraFailure {
  int equation = 0;  // 1..4
  int i = 0, j = 0, k = 0;
  Vector defect;
};

struct QuadraResult {
  bool ok = true;
  std::vector<QuadraFailure> failures;  // first witness of each failing equation
  std::vector<int> failing_equations() const;
};

// 1: d phi1 = 0; 2: phi1 o phi1 + d phi2 = 0; 3: phi1 o phi2 + phi2 o phi1 = 0;
// 4: phi2 o phi2 = 0. The base must be 2-step nilpotent.
QuadraResult quadra_check(const DeformationSpec& spec);
// The bracket at t = 1.
LieAlgebra assemble(const DeformationSpec& spec);

// Splits a bracket by the weight w_i + w_j - w_k of each structure constant
// into mu0 (weight 0), phi1 (weight 1) and phi2 (weight 2). Any other weight
// throws. With weights (1,..,1,2) this reads a contact algebra written in an
// adapted basis as a quadratic deformation of its weight-0 part.
DeformationSpec split_by_weights(const LieAlgebra& g, const std::vector<int>& weights);
DeformationSpec decompose_contact_basis(const LieAlgebra& g);

// [X,Y] = [X,Y]_k + theta(X,Y) Z with Z inserted at `position` (default: last).
// Throws PreconditionError "not a 2-cocycle" / "not symplectic".
LieAlgebra central_extension(const LieAlgebra& k, const DualForm& theta, int position = -1);

struct CenterQuotient {
  AlgebraPtr quotient;    // g / Z(g), basis X_i (i != position)
  DualForm theta;         // induced 2-form on the quotient
  int position = 0;       // index of the generator traded for Z
  Vector z;               // central vector, normalized to z[position] = 1
  Matrix basis_change;    // columns: X_i (i != position) and z at `position`
};
// Requires a one-dimensional center.
CenterQuotient quotient_by_center(const LieAlgebra& g);

struct NormalizedDeformation {
  BilinearMap phi1;  // phi1 - d f, vanishing on (X_i, X_n)
  LinearMap f;
};
// Removes phi1(X_i, X_n) by a coboundary; throws when impossible.
NormalizedDeformation normalize_linear_deformation(const LieAlgebra& base, const BilinearMap& phi1);

}  // namespace cartan

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cartan/matrix.hpp"
#include "cartan/poly_form.hpp"
#include "cartan/upoly.hpp"

namespace cartan {

// ---- GL(2n) / SL(2n) ----

// x_{ij} named "x<i><j>" (1-based, row-major), so n <= 4.
VarsPtr sl_variables(int n);
int sl_index(int n, int i, int j);  // 1-based entry -> variable index

struct SLContactData {
  int n = 0;
  VarsPtr vars;
  PolyForm omega;    // sum_j sum_i x_{j,2i-1} dx_{j,2i} - x_{j,2i} dx_{j,2i-1}
  Poly delta;        // det M
  PolyForm d_delta;  // d(det M)
  PolyVectorField reeb;
  std::vector<std::vector<Poly>> minors;  // X_{ij}, unsigned
};
SLContactData sl_contact_data(int n);

// Determinant of the (2n-1)-minor obtained by deleting row i and column j
// (0-based) of the generic matrix.
Poly generic_minor(int n, int i, int j);

struct SLIdentity {
  int n = 0;
  int q = 0;
  int top_degree = 0;            // (2n)^2
  int form_degree = 0;           // 1 + 2q + 1
  bool ok = false;               // result equals constant * det * volume
  Scalar constant;
  std::string failure;           // why ok is false
  Poly residual;                 // top coefficient minus constant * det, when not a multiple
};
// q defaults to (top - 2) / 2.
SLIdentity sl_contact_identity(int n, std::optional<int> q = std::nullopt);

struct ReebCheck {
  Poly omega_of_reeb;      // expected: det
  PolyForm i_reeb_domega;  // expected: -(1/n) d(det)
  bool omega_is_delta = false;
  std::optional<Scalar> ddelta_factor;  // i(Z) d omega = factor * d(det), if so
};
ReebCheck sl_reeb_check(int n);

// A_{ij} = sum_l x_{jl} d/dx_{il} - x_{il} d/dx_{jl} (1-based rows).
PolyVectorField sl_field_a(int n, int i, int j);
// sum_{l=1}^{n} (x_{i,2l-1} x_{j,2l} - x_{i,2l} x_{j,2l-1}).
Poly sl_pairing(int n, int i, int j);

struct SingularEquation {
  int i = 0, j = 0;  // 1-based rows, all pairs including i = j
  Poly equation;
};
std::vector<SingularEquation> sl_singular_equations(int n);

struct SingularEvaluation {
  std::vector<std::pair<std::pair<int, int>, Scalar>> values;  // (i,j) -> value
  bool singular = false;  // every value vanishes
  Scalar determinant;
};
SingularEvaluation sl_singular_evaluate(int n, const Matrix& point);

// Pullback of omega under x -> m x equals omega. Throws PreconditionError
// unless m^T m = I and det m = 1 (skipped with check_orthogonal = false).
bool so_invariance_check(int n, const Matrix& m, bool check_orthogonal = true);
// ((a^2-b^2)/(a^2+b^2), -2ab/(a^2+b^2); 2ab/(a^2+b^2), (a^2-b^2)/(a^2+b^2)) placed
// in rows/columns (k, k+1) of the 2n identity.
Matrix pythagorean_rotation(int n, int k, long a, long b);

// ---- Heisenberg group H3, coordinates (x, y, z) ----

VarsPtr h3_variables();
struct H3Frames {
  std::vector<PolyVectorField> left;   // X1 = d/dx, X2 = d/dy + x d/dz, X3 = d/dz
  std::vector<PolyVectorField> right;  // X1 = d/dx + y d/dz, X2 = d/dy, X3 = d/dz
  std::vector<PolyForm> left_forms;    // dx, dy, dz - x dy
};
H3Frames h3_frames();

// b1 b3' - b1' b3 + alpha (b2 b3' - b2' b3) - b3^2
UPoly h3_contact_polynomial(const Scalar& alpha, const UPoly& b1, const UPoly& b2, const UPoly& b3);
// (b3, b1 + alpha b2)
std::pair<UPoly, UPoly> h3_singular_system(const Scalar& alpha, const UPoly& b1, const UPoly& b2, const UPoly& b3);
// Contact on all of H3 iff the contact polynomial is nonzero with no real root.
bool h3_globally_contact(const UPoly& contact_polynomial);
// w = b1(y - alpha x) w1 + b2(y - alpha x) w2 + b3(y - alpha x) w3.
PolyForm h3_invariant_form(const Scalar& alpha, const UPoly& b1, const UPoly& b2, const UPoly& b3);
// J = span{X~1 + alpha X~2, X~3}.
std::vector<PolyVectorField> h3_j_fields(const Scalar& alpha);
// L_U theta = 0 for every U in the list.
bool is_j_invariant(const PolyForm& theta, const std::vector<PolyVectorField>& j);

// ---- Darboux coordinates x1..x_{2p+1} ----

VarsPtr darboux_variables(int p);
// {f1,f2} = sum_i (d_{2i} f2 d_{2i-1} f1 - d_{2i} f1 d_{2i-1} f2); throws if
// either argument depends on x_{2p+1}.
Poly darboux_poisson(int p, const Poly& f1, const Poly& f2);
// The same bracket as d alpha(X_{f1}, X_{f2}) with alpha = dx_{2p+1} + sum x_{2i-1} dx_{2i}
// and i(X_f) d alpha = df, evaluated through forms.
Poly darboux_poisson_via_forms(int p, const Poly& f1, const Poly& f2);

}  // namespace cartan

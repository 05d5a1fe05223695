#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cartan/exterior.hpp"
#include "cartan/lie_algebra.hpp"

namespace cartan {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

// Exterior form on the dual of a Lie algebra, in the dual basis w_1..w_n.
class DualForm {
 public:
  DualForm() = default;
  DualForm(AlgebraPtr g, int grade);
  DualForm(AlgebraPtr g, Exterior<Scalar> body);

  static DualForm basis(AlgebraPtr g, int i);  // w_i
  static DualForm covector(AlgebraPtr g, const std::vector<Scalar>& coeffs);
  static DualForm constant(AlgebraPtr g, const Scalar& c);

  const AlgebraPtr& algebra() const { return g_; }
  const LieAlgebra& lie() const { return *g_; }
  int grade() const { return body_.grade(); }
  int dim() const { return body_.n(); }
  const Exterior<Scalar>& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  Scalar coeff(const std::vector<int>& idx) const { return body_.coeff(idx); }
  // Coefficients of a 1-form in the dual basis.
  Vector as_covector() const;

  // Evaluate a 1-form on a vector / a 2-form on a pair of vectors.
  Scalar operator()(const Vector& x) const;
  Scalar operator()(const Vector& x, const Vector& y) const;

  DualForm& operator+=(const DualForm& o);
  DualForm& operator-=(const DualForm& o);
  friend DualForm operator+(DualForm a, const DualForm& b) { return a += b; }
  friend DualForm operator-(DualForm a, const DualForm& b) { return a -= b; }
  friend DualForm operator*(const Scalar& s, const DualForm& a) { return {a.g_, s * a.body_}; }
  friend bool operator==(const DualForm& a, const DualForm& b);

  std::string str() const { return exterior_str(body_, "w"); }

 private:
  AlgebraPtr g_;
  Exterior<Scalar> body_;
};

DualForm wedge(const DualForm& a, const DualForm& b);
DualForm wedge_power(const DualForm& a, int k);
// Chevalley-Eilenberg differential with d w(X,Y) = -w([X,Y]), extended as an
// antiderivation.
DualForm ce_differential(const DualForm& a);
DualForm interior_product(const Vector& x, const DualForm& a);

struct CartanClass {
  int cls = 0;
  int q = 0;                 // max k with (dw)^k != 0
  bool odd_branch = false;   // w ^ (dw)^q != 0
  std::vector<Vector> characteristic_space;  // basis of C(w), RREF rows
};

// Both characterizations are computed; a disagreement throws std::logic_error.
CartanClass cartan_class(const DualForm& w);

// Skew matrix B_ij = theta(X_i, X_j) of a 2-form.
Matrix two_form_matrix(const DualForm& theta);

}  // namespace cartan

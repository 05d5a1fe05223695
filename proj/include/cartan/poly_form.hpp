#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cartan/exterior.hpp"
#include "cartan/poly.hpp"

namespace cartan {

// Ordered coordinate names of an affine space.
struct Variables {
  std::vector<std::string> names;
  int size() const { return static_cast<int>(names.size()); }
  int index(const std::string& name) const;  // throws if absent
};
using VarsPtr = std::shared_ptr<const Variables>;
VarsPtr make_variables(std::vector<std::string> names);

// Differential form with polynomial coefficients in the coordinates dx_v.
class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(VarsPtr vars, int grade);
  PolyForm(VarsPtr vars, Exterior<Poly> body);

  static PolyForm function(VarsPtr vars, const Poly& f);
  static PolyForm dx(VarsPtr vars, int v);

  const VarsPtr& vars() const { return vars_; }
  int grade() const { return body_.grade(); }
  int dim() const { return body_.n(); }
  const Exterior<Poly>& body() const { return body_; }
  bool is_zero() const { return body_.is_zero(); }
  Poly coeff(const std::vector<int>& idx) const { return body_.coeff(idx); }
  // Coefficient of a grade-0 form.
  Poly as_function() const;

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Poly& f, const PolyForm& a) { return {a.vars_, f * a.body_}; }
  friend bool operator==(const PolyForm& a, const PolyForm& b) { return a.body_ == b.body_; }

  std::string str() const;

 private:
  VarsPtr vars_;
  Exterior<Poly> body_;
};

class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(VarsPtr vars);
  PolyVectorField(VarsPtr vars, std::vector<Poly> components);
  static PolyVectorField partial(VarsPtr vars, int v);

  const VarsPtr& vars() const { return vars_; }
  const std::vector<Poly>& components() const { return comp_; }
  const Poly& operator[](int v) const { return comp_[static_cast<std::size_t>(v)]; }
  Poly& operator[](int v) { return comp_[static_cast<std::size_t>(v)]; }

  // X(f) = sum X^v df/dx_v
  Poly apply(const Poly& f) const;

  PolyVectorField& operator+=(const PolyVectorField& o);
  friend PolyVectorField operator+(PolyVectorField a, const PolyVectorField& b) { return a += b; }
  friend PolyVectorField operator*(const Poly& f, const PolyVectorField& x);
  friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) { return a.comp_ == b.comp_; }

  std::string str() const;

 private:
  VarsPtr vars_;
  std::vector<Poly> comp_;
};

PolyForm exterior_d(const PolyForm& a);
PolyForm wedge(const PolyForm& a, const PolyForm& b);
// Powers of a 2-form; when its terms sit on pairwise disjoint coordinate
// pairs the power is enumerated directly over subsets of pairs.
PolyForm wedge_power(const PolyForm& a, int k);
PolyForm interior(const PolyVectorField& x, const PolyForm& a);
// L_X = d i_X + i_X d (X(f) on functions).
PolyForm lie_derivative(const PolyVectorField& x, const PolyForm& a);
// [X,Y]^v = X(Y^v) - Y(X^v)
PolyVectorField bracket(const PolyVectorField& x, const PolyVectorField& y);
// Pullback along x_v = images[v](y) where y are the coordinates `source`.
PolyForm pullback(const PolyForm& a, const VarsPtr& source, const std::vector<Poly>& images);
// Coefficients evaluated at a point.
Exterior<Scalar> evaluate(const PolyForm& a, const std::vector<Scalar>& point);

// Volume form dx_1 ^ ... ^ dx_N.
PolyForm volume_form(const VarsPtr& vars);

}  // namespace cartan

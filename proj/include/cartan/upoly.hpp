#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cartan/scalar.hpp"

namespace cartan {

// Dense univariate polynomial over Q(i), coefficients from degree 0 upward,
// never carrying a zero leading coefficient.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);
  static UPoly constant(const Scalar& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({Scalar(0), Scalar(1)}); }
  // x - r
  static UPoly linear_root(const Scalar& r) { return UPoly({-r, Scalar(1)}); }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }
  Scalar leading() const { return c_.empty() ? Scalar() : c_.back(); }
  bool is_real() const;

  Scalar operator()(const Scalar& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  UPoly conj() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Scalar& s, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Euclidean division over the field: a = q*b + r, deg r < deg b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);  // monic, or zero
UPoly square_free_part(const UPoly& p);

// Sturm chain of a real polynomial (p, p', -rem, ...).
std::vector<UPoly> sturm_sequence(const UPoly& p);
// Distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const std::vector<UPoly>& chain, const mpq_class& lo, const mpq_class& hi);
// Number of distinct real roots of a real polynomial.
int count_real_roots(const UPoly& p);
// Upper bound on |root| (Cauchy).
mpq_class root_bound(const UPoly& p);

// Simplest rational (smallest denominator) in the closed interval [lo, hi].
mpq_class simplest_rational(const mpq_class& lo, const mpq_class& hi);

struct Root {
  Scalar value;
  int multiplicity = 0;
  friend bool operator==(const Root&, const Root&) = default;
};

// Roots lying in Q(i) together with the cofactor left over. Rational roots
// come from Sturm isolation plus exact rational recovery, conjugate pairs
// from a divisor search for integer quadratic factors (skipped when the
// coefficients are too large to factor by trial division), and a leftover
// quadratic is solved in Q(i) when its discriminant has a square root there.
struct RootDecomposition {
  std::vector<Root> roots;  // sorted: real roots ascending, then the rest
  UPoly residual;           // monic, no further roots in Q(i) found
};
RootDecomposition exact_roots(const UPoly& p);

}  // namespace cartan

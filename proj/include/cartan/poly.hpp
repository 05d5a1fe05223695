#pragma once

#include <concepts>
#include <map>
#include <string>
#include <vector>

#include "cartan/scalar.hpp"
#include "cartan/upoly.hpp"

namespace cartan {

// Multivariate polynomial over Q(i). A monomial is its exponent vector with
// trailing zeros trimmed, so polynomials in different numbers of variables
// mix freely; variable names live with the forms that use them.
class Poly {
 public:
  using Monomial = std::vector<unsigned>;
  using Terms = std::map<Monomial, Scalar>;

  Poly() = default;
  template <std::integral I>
  Poly(I c) : Poly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(const Scalar& c);          // NOLINT(google-explicit-constructor)

  static Poly var(int i);
  static Poly term(Monomial m, const Scalar& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Scalar constant_term() const;
  const Terms& terms() const { return terms_; }
  int total_degree() const;  // -1 for zero
  // Whether every term has total degree d.
  bool is_homogeneous(int d) const;
  bool depends_on(int v) const;
  int variables_used() const;  // 1 + largest variable index present

  Poly derivative(int v) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;
  // x_i -> images[i]; variables without an image are left alone.
  Poly substitute(const std::vector<Poly>& images) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string str(const std::vector<std::string>& names) const;
  std::string str() const;  // x1, x2, ...

 private:
  void add_term(const Monomial& m, const Scalar& c);
  Terms terms_;
};

Poly pow(const Poly& p, unsigned k);

// Univariate bridge: p as a polynomial in variable `v` (must be the only one).
UPoly to_upoly(const Poly& p, int v);
// b(arg) for a univariate b.
Poly compose(const UPoly& b, const Poly& arg);

}  // namespace cartan

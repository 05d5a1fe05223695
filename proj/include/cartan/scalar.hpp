#pragma once

#include <concepts>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cartan {

// Base of every error raised by the library. The CLI maps the subclasses onto
// exit codes, so throw the most specific one.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text or file contents.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (zero form, degenerate 2-form,
// non-orthogonal matrix, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exact element of Q(i): re + im*i with arbitrary precision rationals.
// GMP keeps both parts canonical (positive denominator, lowest terms), so
// equality is plain structural equality.
class Scalar {
 public:
  Scalar() = default;
  template <std::integral I>
  Scalar(I v) : re_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long num, long den);
  // Parses "p", "-p", "p/q". Throws ParseError.
  static mpq_class parse_rational(std::string_view text);
  // Parses a rational or a Gaussian rational written as "a", "bi", "a+bi",
  // "a-b/ci" (the imaginary unit trails the coefficient).
  static Scalar parse(std::string_view text);
  static Scalar i() { return Scalar(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  // |z|^2, always rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  // "3/7", "-2", "1/2+3i", "-i".
  std::string str() const;
  static std::string rational_str(const mpq_class& q);

 private:
  mpq_class re_ = 0;
  mpq_class im_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Exact square root of a rational if it is a perfect square.
bool rational_sqrt(const mpq_class& q, mpq_class& root);
// Exact square root inside Q(i) when one exists.
bool gaussian_sqrt(const Scalar& z, Scalar& root);

mpz_class binomial(long n, long k);  // 0 outside 0 <= k <= n

}  // namespace cartan

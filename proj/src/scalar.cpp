#include "cartan/scalar.hpp"

#include <cctype>
#include <ostream>

namespace cartan {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(q);
}

mpq_class Scalar::parse_rational(std::string_view text) {
  auto bad = [&]() { return ParseError("not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::size_t pos = 0;
  bool neg = false;
  if (text[0] == '-' || text[0] == '+') {
    neg = text[0] == '-';
    pos = 1;
  }
  auto digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    return true;
  };
  std::size_t slash = text.find('/', pos);
  std::size_t num_end = slash == std::string_view::npos ? text.size() : slash;
  if (!digits(pos, num_end)) throw bad();
  mpz_class num(std::string(text.substr(pos, num_end - pos)), 10);
  mpz_class den = 1;
  if (slash != std::string_view::npos) {
    if (!digits(slash + 1, text.size())) throw bad();
    den = mpz_class(std::string(text.substr(slash + 1)), 10);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  mpq_class q(neg ? mpz_class(-num) : num, den);
  q.canonicalize();
  return q;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty() || text.back() != 'i') return Scalar(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [](std::string_view s) -> mpq_class {
    if (s.empty() || s == "+") return 1;
    if (s == "-") return -1;
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return Scalar(0, imag_part(body));
  return Scalar(parse_rational(body.substr(0, split)), imag_part(body.substr(split)));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string Scalar::rational_str(const mpq_class& q) {
  return q.get_str(10);
}

std::string Scalar::str() const {
  if (is_real()) return rational_str(re_);
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = rational_str(im_) + "i";
  if (sgn(re_) == 0) return imag;
  return rational_str(re_) + (sgn(im_) > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = mpq_class(rn, rd);
  root.canonicalize();
  return true;
}

bool gaussian_sqrt(const Scalar& z, Scalar& root) {
  // (x + iy)^2 = u + iv with x = sqrt((|z|+u)/2), y = sign(v) sqrt((|z|-u)/2).
  mpq_class modulus;
  if (!rational_sqrt(z.norm(), modulus)) return false;
  mpq_class x, y;
  if (!rational_sqrt((modulus + z.re()) / 2, x)) return false;
  if (!rational_sqrt((modulus - z.re()) / 2, y)) return false;
  if (sgn(z.im()) < 0) y = -y;
  root = Scalar(x, y);
  return true;
}

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace cartan

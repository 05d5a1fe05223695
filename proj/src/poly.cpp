#include "cartan/poly.hpp"

#include <numeric>
#include <sstream>

namespace cartan {

namespace {

void trim(Poly::Monomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

}  // namespace

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::var(int i) {
  Monomial m(static_cast<std::size_t>(i) + 1, 0);
  m.back() = 1;
  return term(std::move(m), Scalar(1));
}

Poly Poly::term(Monomial m, const Scalar& c) {
  trim(m);
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Scalar Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar() : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(std::accumulate(m.begin(), m.end(), 0u)));
  return d;
}

bool Poly::is_homogeneous(int d) const {
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(std::accumulate(m.begin(), m.end(), 0u)) != d) return false;
  return true;
}

bool Poly::depends_on(int v) const {
  for (const auto& [m, c] : terms_)
    if (static_cast<std::size_t>(v) < m.size() && m[static_cast<std::size_t>(v)] > 0) return true;
  return false;
}

int Poly::variables_used() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return static_cast<int>(n);
}

Poly Poly::derivative(int v) const {
  Poly out;
  const auto uv = static_cast<std::size_t>(v);
  for (const auto& [m, c] : terms_) {
    if (uv >= m.size() || m[uv] == 0) continue;
    Monomial d = m;
    Scalar k(static_cast<long>(d[uv]));
    d[uv] -= 1;
    trim(d);
    out.add_term(d, c * k);
  }
  return out;
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
  Scalar total;
  for (const auto& [m, c] : terms_) {
    if (m.size() > point.size()) throw PreconditionError("evaluation point has too few coordinates");
    Scalar t = c;
    for (std::size_t v = 0; v < m.size(); ++v)
      for (unsigned e = 0; e < m[v]; ++e) t *= point[v];
    total += t;
  }
  return total;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    Monomial kept;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (v < images.size()) {
        t *= pow(images[v], m[v]);
      } else {
        kept.resize(v + 1, 0);
        kept[v] = m[v];
      }
    }
    if (!kept.empty()) t *= term(kept, Scalar(1));
    out += t;
  }
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Poly::Monomial m(std::max(ma.size(), mb.size()), 0);
      for (std::size_t v = 0; v < ma.size(); ++v) m[v] += ma[v];
      for (std::size_t v = 0; v < mb.size(); ++v) m[v] += mb[v];
      out.add_term(m, ca * cb);
    }
  return out;
}

Poly pow(const Poly& p, unsigned k) {
  Poly out(1);
  for (unsigned i = 0; i < k; ++i) out *= p;
  return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += v < names.size() ? names[v] : "x" + std::to_string(v + 1);
      if (m[v] > 1) mono += "^" + std::to_string(m[v]);
    }
    std::string coef = c.str();
    bool negative = coef[0] == '-' && (c.is_real() || sgn(c.re()) == 0);
    if (negative) coef = coef.substr(1);
    if (!c.is_real() && sgn(c.re()) != 0) coef = "(" + coef + ")";
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (mono.empty())
      os << coef;
    else if (coef == "1")
      os << mono;
    else
      os << coef << "*" << mono;
    first = false;
  }
  return os.str();
}

std::string Poly::str() const { return str({}); }

UPoly to_upoly(const Poly& p, int v) {
  std::vector<Scalar> c;
  for (const auto& [m, coef] : p.terms()) {
    for (std::size_t w = 0; w < m.size(); ++w)
      if (static_cast<int>(w) != v && m[w] > 0) throw PreconditionError("polynomial is not univariate");
    std::size_t e = static_cast<std::size_t>(v) < m.size() ? m[static_cast<std::size_t>(v)] : 0;
    if (c.size() <= e) c.resize(e + 1);
    c[e] += coef;
  }
  return UPoly(std::move(c));
}

Poly compose(const UPoly& b, const Poly& arg) {
  Poly out;
  for (int k = b.degree(); k >= 0; --k) out = out * arg + Poly(b.coeff(static_cast<std::size_t>(k)));
  return out;
}

}  // namespace cartan

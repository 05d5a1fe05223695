#include "cartan/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cartan {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool UPoly::is_real() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_real(); });
}

Scalar UPoly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return UPoly(std::move(d));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  return (Scalar(1) / leading()) * *this;
}

UPoly UPoly::conj() const {
  std::vector<Scalar> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k].conj();
  return UPoly(std::move(c));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const Scalar& s, const UPoly& a) {
  std::vector<Scalar> c = a.c_;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

std::string UPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string coef = c_[k].str();
    bool compound = !c_[k].is_real() && sgn(c_[k].re()) != 0;
    if (compound) coef = "(" + coef + ")";
    if (!first) os << (coef[0] == '-' ? " - " : " + ");
    if (!first && coef[0] == '-') coef = coef.substr(1);
    if (k == 0) {
      os << coef;
    } else {
      if (coef == "1")
        ;
      else if (coef == "-1")
        os << '-';
      else
        os << coef << '*';
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  const auto& bc = b.coeffs();
  if (r.size() < bc.size()) return {UPoly(), a};
  std::vector<Scalar> q(r.size() - bc.size() + 1);
  Scalar inv = Scalar(1) / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    Scalar f = r[k + bc.size() - 1] * inv;
    q[k] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= f * bc[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UPoly square_free_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  if (!p.is_real()) throw PreconditionError("Sturm sequence requires real coefficients");
  std::vector<UPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(Scalar(-1) * r);
  }
  if (chain.back().is_zero()) chain.pop_back();
  return chain;
}

namespace {

int sign_at(const UPoly& p, const mpq_class& x) {
  return sgn(p(Scalar(x)).re());
}

int sign_changes(const std::vector<UPoly>& chain, const mpq_class& x) {
  int changes = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

int count_real_roots(const std::vector<UPoly>& chain, const mpq_class& lo, const mpq_class& hi) {
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

mpq_class root_bound(const UPoly& p) {
  // 1 + max |a_k / a_n|, measured with the rational norm bound |z| <= |re| + |im|.
  mpq_class best = 0;
  const Scalar lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Scalar r = p.coeff(static_cast<std::size_t>(k)) / lead;
    mpq_class m = abs(r.re()) + abs(r.im());
    if (m > best) best = m;
  }
  return best + 1;
}

int count_real_roots(const UPoly& p) {
  if (p.degree() <= 0) return 0;
  UPoly sf = square_free_part(p);
  auto chain = sturm_sequence(sf);
  mpq_class b = root_bound(sf);
  return count_real_roots(chain, -b, b);
}

mpq_class simplest_rational(const mpq_class& lo_in, const mpq_class& hi_in) {
  mpq_class lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_rational(-hi, -lo);
  // 0 < lo <= hi: continued fraction descent.
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (mpq_class(fl) == lo) return lo;
  if (mpq_class(fl + 1) <= hi) return mpq_class(fl + 1);
  mpq_class rest = simplest_rational(1 / (hi - fl), 1 / (lo - fl));
  mpq_class out = fl + 1 / rest;
  out.canonicalize();
  return out;
}

namespace {

// Rational roots of a real square-free polynomial via Sturm isolation. Each
// isolating interval is shrunk until the only candidate with denominator
// dividing the leading coefficient (of the primitive integer form) is the
// simplest rational inside it; that candidate is then checked exactly.
std::vector<mpq_class> rational_roots_real(const UPoly& sf) {
  std::vector<mpq_class> out;
  if (sf.degree() <= 0) return out;
  // Integer leading coefficient of the primitive form: clear denominators.
  mpz_class lcm_den = 1;
  for (const auto& c : sf.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& c : sf.coeffs()) {
    mpz_class v = mpz_class(c.re() * lcm_den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  mpz_class lead = mpz_class(sf.leading().re() * lcm_den) / g;
  mpq_class width = mpq_class(1, lead * lead) / 4;
  width.canonicalize();

  auto chain = sturm_sequence(sf);
  mpq_class b = root_bound(sf);
  struct Interval {
    mpq_class lo, hi;
    int count;
  };
  std::vector<Interval> work{{-b, b, count_real_roots(chain, -b, b)}};
  while (!work.empty()) {
    Interval iv = work.back();
    work.pop_back();
    if (iv.count == 0) continue;
    if (iv.count == 1 && iv.hi - iv.lo < width) {
      mpq_class cand = simplest_rational(iv.lo, iv.hi);
      if (cand > iv.lo && sf(Scalar(cand)).is_zero()) out.push_back(cand);
      continue;
    }
    mpq_class mid = (iv.lo + iv.hi) / 2;
    int left = count_real_roots(chain, iv.lo, mid);
    work.push_back({iv.lo, mid, left});
    work.push_back({mid, iv.hi, iv.count - left});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Positive divisors of |n| by trial division; empty when n is too large to
// factor this way.
std::vector<mpz_class> positive_divisors(mpz_class n) {
  n = abs(n);
  if (n == 0 || n > mpz_class(1000000000000L)) return {};
  std::vector<mpz_class> out{1};
  for (mpz_class f = 2; f * f <= n; ++f) {
    int e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    const std::size_t base = out.size();
    mpz_class pw = 1;
    for (int k = 0; k < e; ++k) {
      pw *= f;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pw);
    }
  }
  if (n > 1) {
    const std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * n);
  }
  return out;
}

// Non-real roots in Q(i) of a real polynomial without rational roots. Such
// a root and its conjugate give a primitive factor d x^2 - s x + t over Z
// with d | lead, t | p(0), (d - s + t) | p(1) and (d + s + t) | p(-1);
// the roots are (s +- i sqrt(4dt - s^2)) / 2d.
std::vector<Scalar> gaussian_pair_roots(const UPoly& p) {
  std::vector<Scalar> out;
  if (p.degree() < 2) return out;
  mpz_class lcm_den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.re().get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p.coeffs()) z.emplace_back(c.re() * lcm_den);
  auto value_at = [&](long x) {
    mpz_class v = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) v = v * x + *it;
    return v;
  };
  const mpz_class p0 = z.front(), p1 = value_at(1), pm1 = value_at(-1);
  if (p0 == 0 || p1 == 0 || pm1 == 0) return out;
  auto ds = positive_divisors(z.back()), ts = positive_divisors(p0), q1s = positive_divisors(p1);
  if (ds.empty() || ts.empty() || q1s.empty()) return out;
  if (ds.size() * ts.size() * q1s.size() > 2000000) return out;
  UPoly rest = p;
  for (const auto& d : ds)
    for (const auto& t0 : ts)
      for (int ts_sign : {1, -1})
        for (const auto& q0 : q1s)
          for (int q_sign : {1, -1}) {
            mpz_class t = ts_sign * t0, q1 = q_sign * q0;
            mpz_class s = d + t - q1;
            mpz_class qm1 = d + s + t;
            if (qm1 == 0 || pm1 % qm1 != 0) continue;
            mpz_class disc = 4 * d * t - s * s;
            if (disc <= 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
            UPoly quad({Scalar(mpq_class(t)), Scalar(mpq_class(-s)), Scalar(mpq_class(d))});
            if (rest.degree() < 2 || !divmod(rest, quad).second.is_zero()) continue;
            rest = divmod(rest, quad).first;
            mpz_class root = sqrt(disc);
            Scalar re(mpq_class(s, 2 * d)), im(0, mpq_class(root, 2 * d));
            out.push_back(re + im);
            out.push_back(re - im);
          }
  return out;
}

int strip_root(UPoly& p, const Scalar& r) {
  int m = 0;
  UPoly lin = UPoly::linear_root(r);
  while (p.degree() >= 1) {
    auto [q, rem] = divmod(p, lin);
    if (!rem.is_zero()) break;
    p = std::move(q);
    ++m;
  }
  return m;
}

bool real_less(const Scalar& a, const Scalar& b) {
  if (a.re() != b.re()) return a.re() < b.re();
  return a.im() < b.im();
}

}  // namespace

RootDecomposition exact_roots(const UPoly& p_in) {
  if (p_in.is_zero()) throw PreconditionError("roots of the zero polynomial");
  RootDecomposition out;
  UPoly p = p_in.monic();
  auto add = [&](const Scalar& r) {
    int m = strip_root(p, r);
    if (m > 0) out.roots.push_back({r, m});
  };
  add(Scalar(0));

  // Rational candidates. For a Gaussian polynomial, any rational root is a
  // root of p * conj(p), which is real.
  UPoly real_form = p.is_real() ? p : p * p.conj();
  if (real_form.degree() >= 1) {
    UPoly sf = square_free_part(real_form);
    for (const auto& q : rational_roots_real(sf)) {
      add(Scalar(q));
      sf = divmod(sf, UPoly::linear_root(Scalar(q))).first;
    }
    // Conjugate pairs of the real form; for a Gaussian p only some of them
    // are roots, which add() sorts out.
    for (const auto& r : gaussian_pair_roots(sf)) add(r);
  }
  // Leftover linear or quadratic factor: solve in Q(i).
  if (p.degree() == 1) {
    add(-p.coeff(0));
  } else if (p.degree() == 2) {
    Scalar bq = p.coeff(1), cq = p.coeff(0);
    Scalar disc = bq * bq - Scalar(4) * cq, s;
    if (gaussian_sqrt(disc, s)) {
      Scalar r1 = (-bq + s) / Scalar(2), r2 = (-bq - s) / Scalar(2);
      add(r1);
      if (!(r1 == r2)) add(r2);
    }
  }
  std::stable_sort(out.roots.begin(), out.roots.end(), [](const Root& a, const Root& b) {
    if (a.value.is_real() != b.value.is_real()) return a.value.is_real();
    return real_less(a.value, b.value);
  });
  out.residual = p;
  return out;
}

}  // namespace cartan

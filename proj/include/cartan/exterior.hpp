#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cartan/scalar.hpp"

namespace cartan {

// A basis q-vector dx_{i1} ^ ... ^ dx_{iq} with i1 < ... < iq is a bitmask.
using Blade = std::uint64_t;
constexpr int kMaxGenerators = 64;

inline int blade_grade(Blade b) { return std::popcount(b); }

inline std::vector<int> blade_indices(Blade b) {
  std::vector<int> out;
  while (b) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

inline Blade blade_of(const std::vector<int>& idx) {
  Blade b = 0;
  for (int i : idx) b |= Blade{1} << i;
  return b;
}

// Sign of a^b relative to the sorted blade a|b, or 0 if they overlap.
inline int wedge_sign(Blade a, Blade b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Blade rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Blade above = j >= 63 ? 0 : a & ~((Blade{2} << j) - 1);
    swaps += std::popcount(above);
  }
  return swaps % 2 ? -1 : 1;
}

// Sign picked up when the slot i is moved to the front of blade b (b contains i).
inline int interior_sign(Blade b, int i) {
  Blade below = b & ((Blade{1} << i) - 1);
  return std::popcount(below) % 2 ? -1 : 1;
}

// Homogeneous element of the exterior algebra on n generators with
// coefficients in C. C needs +=, *, unary -, is_zero() and a default zero.
template <class C>
class Exterior {
 public:
  using Terms = std::map<Blade, C>;

  Exterior() = default;
  Exterior(int n, int grade) : n_(n), grade_(grade) {
    if (n < 0 || n > kMaxGenerators) throw PreconditionError("unsupported number of generators");
  }

  static Exterior scalar(int n, const C& c) {
    Exterior e(n, 0);
    e.add(0, c);
    return e;
  }
  static Exterior generator(int n, int i) {
    Exterior e(n, 1);
    e.add(Blade{1} << i, C(1));
    return e;
  }

  int n() const { return n_; }
  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  C coeff(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? C() : it->second;
  }
  C coeff(const std::vector<int>& idx) const { return coeff(blade_of(idx)); }

  void add(Blade b, const C& c) {
    if (blade_grade(b) != grade_) throw std::logic_error("blade grade does not match form grade");
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(b, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Exterior& operator+=(const Exterior& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  Exterior& operator-=(const Exterior& o) {
    check_compatible(o);
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  friend Exterior operator+(Exterior a, const Exterior& b) { return a += b; }
  friend Exterior operator-(Exterior a, const Exterior& b) { return a -= b; }
  Exterior operator-() const {
    Exterior out(n_, grade_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
  }
  friend Exterior operator*(const C& s, const Exterior& a) {
    Exterior out(a.n_, a.grade_);
    for (const auto& [b, c] : a.terms_) out.add(b, s * c);
    return out;
  }

  friend Exterior wedge(const Exterior& a, const Exterior& b) {
    if (a.n_ != b.n_) throw PreconditionError("wedge of forms over different spaces");
    Exterior out(a.n_, a.grade_ + b.grade_);
    if (a.grade_ + b.grade_ > a.n_) return out;
    for (const auto& [ba, ca] : a.terms_)
      for (const auto& [bb, cb] : b.terms_) {
        int s = wedge_sign(ba, bb);
        if (s == 0) continue;
        C prod = ca * cb;
        out.add(ba | bb, s > 0 ? prod : -prod);
      }
    return out;
  }

  // i(e_i): contraction with the i-th coordinate vector.
  Exterior interior_basis(int i) const {
    if (grade_ == 0) throw PreconditionError("interior product of a grade-0 form");
    Exterior out(n_, grade_ - 1);
    Blade bit = Blade{1} << i;
    for (const auto& [b, c] : terms_) {
      if (!(b & bit)) continue;
      out.add(b & ~bit, interior_sign(b, i) > 0 ? c : -c);
    }
    return out;
  }

  friend bool operator==(const Exterior& a, const Exterior& b) {
    return a.n_ == b.n_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Exterior& o) const {
    if (n_ != o.n_) throw PreconditionError("forms over different spaces");
    if (grade_ != o.grade_ && !o.terms_.empty() && !terms_.empty())
      throw PreconditionError("sum of forms of different grades");
  }

  int n_ = 0;
  int grade_ = 0;
  Terms terms_;
};

// Repeated wedge power a^k (k >= 0); a^0 is the constant 1.
template <class C>
Exterior<C> wedge_power(const Exterior<C>& a, int k) {
  Exterior<C> acc = Exterior<C>::scalar(a.n(), C(1));
  for (int m = 0; m < k; ++m) {
    acc = wedge(acc, a);
    if (acc.is_zero()) break;
  }
  return acc;
}

// "w1^w3 + 2 w2^w3" with 1-based labels prefixed by `sym`.
template <class C>
std::string exterior_str(const Exterior<C>& e, const std::string& sym) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : e.terms()) {
    std::string coef = c.str();
    if (!out.empty()) out += " + ";
    std::string blade;
    for (int i : blade_indices(b)) blade += (blade.empty() ? "" : "^") + sym + std::to_string(i + 1);
    if (blade.empty())
      out += coef;
    else if (coef == "1")
      out += blade;
    else if (coef == "-1")
      out += "-" + blade;
    else
      out += "(" + coef + ")" + blade;
  }
  return out;
}

}  // namespace cartan

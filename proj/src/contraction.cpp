#include "cartan/contraction.hpp"

#include <sstream>
#include <stdexcept>

#include "cartan/catalog.hpp"
#include "cartan/lie_core.hpp"

namespace cartan {

void LaurentScalar::add(int exponent, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(exponent, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> LaurentScalar::lowest_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

Scalar LaurentScalar::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar() : it->second;
}

std::string LaurentScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    os << '(' << c << ")*t^" << e;
    first = false;
  }
  return os.str();
}

std::map<std::array<int, 3>, LaurentScalar> rescaled_constants(const LieAlgebra& g, const std::vector<int>& exponents) {
  const int n = g.dim();
  if (static_cast<int>(exponents.size()) != n)
    throw PreconditionError("expected " + std::to_string(n) + " exponents, got " + std::to_string(exponents.size()));
  std::map<std::array<int, 3>, LaurentScalar> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar c = g.c(i, j, k);
        if (c.is_zero()) continue;
        int e = exponents[static_cast<std::size_t>(i)] + exponents[static_cast<std::size_t>(j)] -
                exponents[static_cast<std::size_t>(k)];
        out[{i, j, k}].add(e, c);
      }
  return out;
}

ContractionResult contract(const ContractionSpec& spec) {
  LieAlgebra g = spec.basis_change ? spec.algebra.change_basis(*spec.basis_change) : spec.algebra;
  if (!jacobi_check(g).ok) throw PreconditionError("contraction of a bracket that fails Jacobi");
  auto table = rescaled_constants(g, spec.exponents);
  ContractionResult out;
  LieAlgebra limit(g.dim(), g.basis());
  for (const auto& [key, val] : table) {
    int low = *val.lowest_exponent();
    if (low < 0) {
      out.diverges = Divergence{key[0], key[1], key[2], low};
      return out;
    }
    Scalar c0 = val.coeff(0);
    if (!c0.is_zero()) limit.add_bracket(key[0], key[1], key[2], c0);
  }
  if (!jacobi_check(limit).ok) throw std::logic_error("contraction limit fails Jacobi");
  out.limit = std::move(limit);
  return out;
}

std::optional<std::vector<Scalar>> is_in_model_family(const LieAlgebra& g) {
  const int n = g.dim();
  if (n % 2 != 0 || n < 2) return std::nullopt;
  const int p = n / 2;
  std::vector<Scalar> a;
  // [X2, X_{2k+1}] = -a_k X_{2k+1}
  for (int k = 1; k < p; ++k) a.push_back(-g.c(1, 2 * k, 2 * k));
  if (!(frobenius_algebra(p, a) == g)) return std::nullopt;
  return a;
}

bool Spectrum::contains(const Scalar& v) const {
  for (const auto& r : eigenvalues)
    if (r.value == v) return true;
  return false;
}

Spectrum principal_spectrum(const LieAlgebra& g, int index) {
  if (index < 0 || index >= g.dim()) throw PreconditionError("principal index out of range");
  if (!jacobi_check(g).ok) throw PreconditionError("spectrum of a bracket that fails Jacobi");
  Matrix t = Scalar(-1) * g.ad(index).transpose();
  Spectrum out;
  out.charpoly = characteristic_polynomial(t);
  auto roots = exact_roots(out.charpoly);
  out.eigenvalues = std::move(roots.roots);
  out.residual = std::move(roots.residual);
  return out;
}

}  // namespace cartan

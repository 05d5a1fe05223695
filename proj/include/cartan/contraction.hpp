#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartan/lie_algebra.hpp"
#include "cartan/upoly.hpp"

namespace cartan {

// Finite Laurent polynomial in t: exponent -> coefficient, zeros never stored.
class LaurentScalar {
 public:
  void add(int exponent, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }
  const std::map<int, Scalar>& terms() const { return terms_; }
  std::optional<int> lowest_exponent() const;
  Scalar coeff(int exponent) const;
  std::string str() const;

 private:
  std::map<int, Scalar> terms_;
};

struct ContractionSpec {
  LieAlgebra algebra;
  std::vector<int> exponents;          // f_t(X_i) = t^{e_i} X_i
  std::optional<Matrix> basis_change;  // applied first; columns = new basis
};

struct Divergence {
  int i = 0, j = 0, k = 0;  // c_ij^k carries t^exponent with exponent < 0
  int exponent = 0;
};

struct ContractionResult {
  std::optional<LieAlgebra> limit;
  std::optional<Divergence> diverges;
};

// Structure constants of f_t^{-1} o mu (f_t x f_t), keyed by (i<j, k).
std::map<std::array<int, 3>, LaurentScalar> rescaled_constants(const LieAlgebra& g, const std::vector<int>& exponents);
ContractionResult contract(const ContractionSpec& spec);

// Parameters (a_1..a_{p-1}) when the Maurer-Cartan equations of g read
//   dw1 = w1^w2 + sum_k w_{2k+1}^w_{2k+2},  dw2 = 0,
//   dw_{2k+1} = a_k w2^w_{2k+1},  dw_{2k+2} = -(1+a_k) w2^w_{2k+2}.
std::optional<std::vector<Scalar>> is_in_model_family(const LieAlgebra& g);

// Eigenvalues of the operator w -> i(X_index) dw on g*, which is -ad(X)^T:
// for the model family at X_2 these are a_k, -(1+a_k), -1 and 0.
struct Spectrum {
  UPoly charpoly;
  std::vector<Root> eigenvalues;  // exact roots in Q(i) with multiplicity
  UPoly residual;                 // factor without roots in Q(i)
  bool contains(const Scalar& v) const;
};
Spectrum principal_spectrum(const LieAlgebra& g, int index);

}  // namespace cartan

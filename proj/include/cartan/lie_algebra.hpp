#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartan/exterior.hpp"
#include "cartan/matrix.hpp"
#include "cartan/scalar.hpp"

namespace cartan {

// Components in the algebra basis. Indices are 0-based throughout the
// library; the CLI and JSON files use 1-based labels.
using Vector = std::vector<Scalar>;

Vector zero_vector(int n);
Vector basis_vector(int n, int i);
bool is_zero(const Vector& v);
Vector operator+(Vector a, const Vector& b);
Vector operator-(Vector a, const Vector& b);
Vector operator*(const Scalar& s, Vector v);
void axpy(Vector& acc, const Scalar& s, const Vector& v);  // acc += s v
std::string vector_str(const Vector& v, const std::string& sym = "X");

// Endomorphism of the underlying space; column j is the image of X_j.
using LinearMap = Matrix;
Vector apply(const LinearMap& f, const Vector& v);

// Skew-symmetric bilinear map V x V -> V, stored for i < j only.
class BilinearMap {
 public:
  BilinearMap() = default;
  explicit BilinearMap(int n);

  int dim() const { return n_; }
  // phi(X_i, X_j) for any i, j (skew extended).
  Vector operator()(int i, int j) const;
  Vector operator()(const Vector& x, const Vector& y) const;
  Scalar coeff(int i, int j, int k) const;

  void set(int i, int j, const Vector& v);
  void add(int i, int j, int k, const Scalar& c);
  bool is_zero() const;

  BilinearMap& operator+=(const BilinearMap& o);
  friend BilinearMap operator+(BilinearMap a, const BilinearMap& b) { return a += b; }
  friend BilinearMap operator*(const Scalar& s, const BilinearMap& a);
  friend bool operator==(const BilinearMap& a, const BilinearMap& b) = default;

 private:
  std::size_t slot(int i, int j) const;  // i < j
  int n_ = 0;
  std::vector<Vector> values_;
};

// Sparse table of vectors indexed by index triples; the key convention
// (i<j<k for cyclic products, i<j and any k for left compositions) is up to
// the producer. Only nonzero entries are stored.
struct TrilinearTable {
  using Key = std::array<int, 3>;
  int n = 0;
  std::map<Key, Vector> entries;

  bool is_zero() const { return entries.empty(); }
  Vector at(int i, int j, int k) const;
  void put(int i, int j, int k, Vector v);
};

TrilinearTable operator+(const TrilinearTable& a, const TrilinearTable& b);

class LieAlgebra {
 public:
  LieAlgebra() = default;
  // Labels default to X1..Xn.
  explicit LieAlgebra(int n, std::vector<std::string> basis = {});
  LieAlgebra(BilinearMap bracket, std::vector<std::string> basis = {});

  // Reads the structure constants off the Maurer-Cartan equations
  // d(w_k) = dw[k] under d w(X,Y) = -w([X,Y]).
  static LieAlgebra from_maurer_cartan(const std::vector<Exterior<Scalar>>& dw,
                                       std::vector<std::string> basis = {});

  int dim() const { return n_; }
  const std::vector<std::string>& basis() const { return basis_; }
  const BilinearMap& bracket_map() const { return mu_; }

  Vector bracket(int i, int j) const { return mu_(i, j); }
  Vector bracket(const Vector& x, const Vector& y) const { return mu_(x, y); }
  // c_{ij}^k
  Scalar c(int i, int j, int k) const { return mu_.coeff(i, j, k); }

  void set_bracket(int i, int j, const Vector& v) { mu_.set(i, j, v); }
  void add_bracket(int i, int j, int k, const Scalar& c) { mu_.add(i, j, k, c); }

  // ad(X_i) as a matrix (column j = [X_i, X_j]).
  Matrix ad(int i) const;
  Matrix ad(const Vector& x) const;

  // Structure constants in the basis given by the columns of p.
  LieAlgebra change_basis(const Matrix& p) const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.n_ == b.n_ && a.mu_ == b.mu_;
  }

 private:
  int n_ = 0;
  std::vector<std::string> basis_;
  BilinearMap mu_;
};

// Linear subspace kept in reduced row echelon form, so equality of subspaces
// is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient) : n_(ambient) {}
  static Subspace span(int ambient, const std::vector<Vector>& vectors);
  static Subspace whole(int ambient);

  int ambient() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  int n_ = 0;
  std::vector<Vector> basis_;
};

}  // namespace cartan

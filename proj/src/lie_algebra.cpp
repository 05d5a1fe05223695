#include "cartan/lie_algebra.hpp"

#include <sstream>

namespace cartan {

Vector zero_vector(int n) { return Vector(static_cast<std::size_t>(n)); }

Vector basis_vector(int n, int i) {
  Vector v = zero_vector(n);
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector operator+(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector operator-(Vector a, const Vector& b) {
  if (a.size() != b.size()) throw PreconditionError("vector size mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vector operator*(const Scalar& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

void axpy(Vector& acc, const Scalar& s, const Vector& v) {
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += s * v[i];
}

std::string vector_str(const Vector& v, const std::string& sym) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) os << " + ";
    if (!v[i].is_one()) os << '(' << v[i] << ')';
    os << sym << i + 1;
    first = false;
  }
  return first ? "0" : os.str();
}

Vector apply(const LinearMap& f, const Vector& v) { return f * v; }

BilinearMap::BilinearMap(int n)
    : n_(n), values_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2,
                     zero_vector(n)) {}

std::size_t BilinearMap::slot(int i, int j) const {
  // Row-major upper triangle without the diagonal.
  auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j), un = static_cast<std::size_t>(n_);
  return ui * un - ui * (ui + 1) / 2 + (uj - ui - 1);
}

Vector BilinearMap::operator()(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("bilinear map index out of range");
  if (i == j) return zero_vector(n_);
  if (i < j) return values_[slot(i, j)];
  return Scalar(-1) * values_[slot(j, i)];
}

Vector BilinearMap::operator()(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(n_);
  for (int i = 0; i < n_; ++i) {
    if (x[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < n_; ++j) {
      if (i == j || y[static_cast<std::size_t>(j)].is_zero()) continue;
      const Vector& v = values_[slot(std::min(i, j), std::max(i, j))];
      Scalar s = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      axpy(out, i < j ? s : -s, v);
    }
  }
  return out;
}

Scalar BilinearMap::coeff(int i, int j, int k) const {
  if (i == j) return Scalar();
  if (i < j) return values_[slot(i, j)][static_cast<std::size_t>(k)];
  return -values_[slot(j, i)][static_cast<std::size_t>(k)];
}

void BilinearMap::set(int i, int j, const Vector& v) {
  if (i == j) {
    if (!cartan::is_zero(v)) throw PreconditionError("skew map cannot be nonzero on a diagonal pair");
    return;
  }
  if (static_cast<int>(v.size()) != n_) throw PreconditionError("vector size mismatch");
  if (i < j)
    values_[slot(i, j)] = v;
  else
    values_[slot(j, i)] = Scalar(-1) * v;
}

void BilinearMap::add(int i, int j, int k, const Scalar& c) {
  if (i == j) {
    if (!c.is_zero()) throw PreconditionError("skew map cannot be nonzero on a diagonal pair");
    return;
  }
  if (i < j)
    values_[slot(i, j)][static_cast<std::size_t>(k)] += c;
  else
    values_[slot(j, i)][static_cast<std::size_t>(k)] -= c;
}

bool BilinearMap::is_zero() const {
  for (const auto& v : values_)
    if (!cartan::is_zero(v)) return false;
  return true;
}

BilinearMap& BilinearMap::operator+=(const BilinearMap& o) {
  if (n_ != o.n_) throw PreconditionError("bilinear maps over different spaces");
  for (std::size_t s = 0; s < values_.size(); ++s) values_[s] = values_[s] + o.values_[s];
  return *this;
}

BilinearMap operator*(const Scalar& s, const BilinearMap& a) {
  BilinearMap out = a;
  for (auto& v : out.values_) v = s * v;
  return out;
}

Vector TrilinearTable::at(int i, int j, int k) const {
  auto it = entries.find({i, j, k});
  return it == entries.end() ? zero_vector(n) : it->second;
}

void TrilinearTable::put(int i, int j, int k, Vector v) {
  if (cartan::is_zero(v)) {
    entries.erase({i, j, k});
    return;
  }
  entries[{i, j, k}] = std::move(v);
}

TrilinearTable operator+(const TrilinearTable& a, const TrilinearTable& b) {
  if (a.n != b.n) throw PreconditionError("trilinear tables over different spaces");
  TrilinearTable out = a;
  for (const auto& [key, v] : b.entries) out.put(key[0], key[1], key[2], out.at(key[0], key[1], key[2]) + v);
  return out;
}

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> given) {
  if (given.empty()) {
    for (int i = 1; i <= n; ++i) given.push_back("X" + std::to_string(i));
  }
  if (static_cast<int>(given.size()) != n) throw PreconditionError("basis label count does not match dimension");
  return given;
}

}  // namespace

LieAlgebra::LieAlgebra(int n, std::vector<std::string> basis)
    : n_(n), basis_(default_labels(n, std::move(basis))), mu_(n) {
  if (n <= 0 || n > kMaxGenerators) throw PreconditionError("unsupported dimension " + std::to_string(n));
}

LieAlgebra::LieAlgebra(BilinearMap bracket, std::vector<std::string> basis)
    : n_(bracket.dim()), basis_(default_labels(bracket.dim(), std::move(basis))), mu_(std::move(bracket)) {
  if (n_ <= 0 || n_ > kMaxGenerators) throw PreconditionError("unsupported dimension " + std::to_string(n_));
}

LieAlgebra LieAlgebra::from_maurer_cartan(const std::vector<Exterior<Scalar>>& dw, std::vector<std::string> basis) {
  const int n = static_cast<int>(dw.size());
  LieAlgebra g(n, std::move(basis));
  for (int k = 0; k < n; ++k) {
    const auto& form = dw[static_cast<std::size_t>(k)];
    if (form.n() != n) throw PreconditionError("Maurer-Cartan form over the wrong number of generators");
    if (form.is_zero()) continue;
    if (form.grade() != 2) throw PreconditionError("Maurer-Cartan differential must be a 2-form");
    for (const auto& [b, c] : form.terms()) {
      auto idx = blade_indices(b);
      g.add_bracket(idx[0], idx[1], k, -c);
    }
  }
  return g;
}

Matrix LieAlgebra::ad(int i) const {
  Matrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    Vector v = mu_(i, j);
    for (int k = 0; k < n_; ++k) m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(k)];
  }
  return m;
}

Matrix LieAlgebra::ad(const Vector& x) const {
  Matrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (int j = 0; j < n_; ++j) {
    Vector v = mu_(x, basis_vector(n_, j));
    for (int k = 0; k < n_; ++k) m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = v[static_cast<std::size_t>(k)];
  }
  return m;
}

LieAlgebra LieAlgebra::change_basis(const Matrix& p) const {
  if (static_cast<int>(p.rows()) != n_ || static_cast<int>(p.cols()) != n_)
    throw PreconditionError("change of basis matrix has the wrong size");
  auto inv = inverse(p);
  if (!inv) throw PreconditionError("change of basis matrix is singular");
  LieAlgebra out(n_, basis_);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Vector old = mu_(p.col(static_cast<std::size_t>(i)), p.col(static_cast<std::size_t>(j)));
      out.set_bracket(i, j, *inv * old);
    }
  return out;
}

Subspace Subspace::span(int ambient, const std::vector<Vector>& vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  Matrix m(vectors.size(), static_cast<std::size_t>(ambient));
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (static_cast<int>(vectors[r].size()) != ambient) throw PreconditionError("vector size mismatch");
    for (std::size_t c = 0; c < static_cast<std::size_t>(ambient); ++c) m(r, c) = vectors[r][c];
  }
  auto pivots = rref(m);
  for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
  return s;
}

Subspace Subspace::whole(int ambient) {
  std::vector<Vector> e;
  for (int i = 0; i < ambient; ++i) e.push_back(basis_vector(ambient, i));
  return span(ambient, e);
}

bool Subspace::contains(const Vector& v) const {
  std::vector<Vector> all = basis_;
  all.push_back(v);
  return span(n_, all).dim() == dim();
}

bool Subspace::contains(const Subspace& s) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), s.basis_.begin(), s.basis_.end());
  return span(n_, all).dim() == dim();
}

}  // namespace cartan

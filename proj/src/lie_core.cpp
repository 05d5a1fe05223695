#include "cartan/lie_core.hpp"

#include <stdexcept>

#include "cartan/catalog.hpp"

namespace cartan {

JacobiResult jacobi_check(const LieAlgebra& g) {
  const int n = g.dim();
  JacobiResult out;
  std::vector<Vector> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vector(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector xij = g.bracket(i, j);
      for (int k = j + 1; k < n; ++k) {
        Vector s = g.bracket(xij, e[static_cast<std::size_t>(k)]);
        s = s + g.bracket(g.bracket(j, k), e[static_cast<std::size_t>(i)]);
        s = s + g.bracket(g.bracket(k, i), e[static_cast<std::size_t>(j)]);
        if (!is_zero(s)) {
          out.ok = false;
          out.witness = JacobiWitness{i, j, k, s};
          return out;
        }
      }
    }
  return out;
}

Subspace center(const LieAlgebra& g) {
  // X in Z(g) iff ad(X_j) X = 0 for every j: stack the adjoint matrices.
  const auto n = static_cast<std::size_t>(g.dim());
  Matrix sys(n * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix a = g.ad(static_cast<int>(j));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) sys(j * n + r, c) = a(r, c);
  }
  return Subspace::span(g.dim(), nullspace(sys));
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vector> gens;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) gens.push_back(g.bracket(x, y));
  return Subspace::span(g.dim(), gens);
}

CentralSeries lower_central_series(const LieAlgebra& g) {
  CentralSeries out;
  Subspace whole = Subspace::whole(g.dim());
  Subspace cur = bracket_span(g, whole, whole);
  out.terms.push_back(cur);
  for (int k = 1;; ++k) {
    if (cur.dim() == 0) {
      out.nilindex = k;
      break;
    }
    Subspace next = bracket_span(g, whole, cur);
    if (next == cur) break;  // stabilized at a nonzero term
    cur = std::move(next);
    out.terms.push_back(cur);
  }
  out.filiform = out.nilindex && *out.nilindex == g.dim() - 1;
  return out;
}

bool is_derivation(const LinearMap& f, const LieAlgebra& g) {
  const int n = g.dim();
  if (static_cast<int>(f.rows()) != n || static_cast<int>(f.cols()) != n)
    throw PreconditionError("linear map size does not match the algebra");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector lhs = f * g.bracket(i, j);
      Vector rhs = g.bracket(f.col(static_cast<std::size_t>(i)), basis_vector(n, j)) +
                   g.bracket(basis_vector(n, i), f.col(static_cast<std::size_t>(j)));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

Subspace diagonal_derivations(const LieAlgebra& g) {
  // For each nonzero c_ij^k: (r_i + r_j - r_k) c_ij^k = 0.
  const int n = g.dim();
  std::vector<std::vector<Scalar>> rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (g.c(i, j, k).is_zero()) continue;
        std::vector<Scalar> r(static_cast<std::size_t>(n));
        r[static_cast<std::size_t>(i)] += 1;
        r[static_cast<std::size_t>(j)] += 1;
        r[static_cast<std::size_t>(k)] -= 1;
        rows.push_back(std::move(r));
      }
  if (rows.empty()) return Subspace::whole(n);
  return Subspace::span(n, nullspace(Matrix::from_rows(rows)));
}

namespace {

// Constraint rows in the 4p^2 unknowns f(r, c) (row-major).
Matrix f_constraints(int p) {
  const int m = 2 * p;
  LieAlgebra h = heisenberg_algebra(p);
  const int z = m;  // index of the central generator
  std::vector<std::vector<Scalar>> rows;
  // mu0(f X_i, X_j) + mu0(X_i, f X_j) = sum_r f(r,i) c_{r j}^z + sum_r f(r,j) c_{i r}^z
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<Scalar> row(static_cast<std::size_t>(m * m));
      for (int r = 0; r < m; ++r) {
        row[static_cast<std::size_t>(r * m + i)] += h.c(r, j, z);
        row[static_cast<std::size_t>(r * m + j)] += h.c(i, r, z);
      }
      rows.push_back(std::move(row));
    }
  return Matrix::from_rows(rows);
}

}  // namespace

bool in_f_subalgebra(int p, const Matrix& f) {
  const auto m = static_cast<std::size_t>(2 * p);
  if (f.rows() != m || f.cols() != m) throw PreconditionError("map must act on the 2p-dimensional subspace");
  Matrix c = f_constraints(p);
  std::vector<Scalar> x(m * m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t col = 0; col < m; ++col) x[r * m + col] = f(r, col);
  return is_zero(c * x);
}

FSubalgebra f_subalgebra(int p) {
  if (p < 1) throw PreconditionError("p must be at least 1");
  const auto m = static_cast<std::size_t>(2 * p);
  FSubalgebra out;
  out.p = p;
  for (const auto& v : nullspace(f_constraints(p))) {
    Matrix f(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) f(r, c) = v[r * m + c];
    if (!f.trace().is_zero()) throw std::logic_error("element of F with nonzero trace");
    out.basis.push_back(std::move(f));
  }
  return out;
}

int f_subalgebra_dimension(int p) { return f_subalgebra(p).dimension(); }

}  // namespace cartan

#include "cartan/deformation.hpp"

#include <algorithm>
#include <stdexcept>

#include "cartan/lie_core.hpp"

namespace cartan {

TrilinearTable circle(const BilinearMap& phi, const BilinearMap& psi) {
  const int n = phi.dim();
  if (psi.dim() != n) throw PreconditionError("circle product of maps over different spaces");
  TrilinearTable out;
  out.n = n;
  std::vector<Vector> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vector(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vector v = phi(psi(i, j), e[static_cast<std::size_t>(k)]);
        v = v + phi(psi(j, k), e[static_cast<std::size_t>(i)]);
        v = v + phi(psi(k, i), e[static_cast<std::size_t>(j)]);
        out.put(i, j, k, std::move(v));
      }
  return out;
}

TrilinearTable bullet(const BilinearMap& psi1, const BilinearMap& psi2) {
  const int n = psi1.dim();
  if (psi2.dim() != n) throw PreconditionError("bullet product of maps over different spaces");
  TrilinearTable out;
  out.n = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector inner = psi2(i, j);
      if (is_zero(inner)) continue;
      for (int k = 0; k < n; ++k) out.put(i, j, k, psi1(inner, basis_vector(n, k)));
    }
  return out;
}

bool bullet_power_vanishes(const BilinearMap& mu, int k) {
  if (k < 1) throw PreconditionError("bullet power must be at least 1");
  const int n = mu.dim();
  std::vector<Vector> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) gens.push_back(mu(i, j));
  Subspace span = Subspace::span(n, gens);
  for (int step = 1; step < k && span.dim() > 0; ++step) {
    gens.clear();
    for (const auto& v : span.basis())
      for (int j = 0; j < n; ++j) gens.push_back(mu(v, basis_vector(n, j)));
    span = Subspace::span(n, gens);
  }
  return span.dim() == 0;
}

BilinearMap ce_coboundary_1(const LinearMap& f, const LieAlgebra& g) {
  const int n = g.dim();
  if (static_cast<int>(f.rows()) != n || static_cast<int>(f.cols()) != n)
    throw PreconditionError("linear map size does not match the algebra");
  BilinearMap out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vector v = f * g.bracket(i, j);
      v = v - g.bracket(f.col(static_cast<std::size_t>(i)), basis_vector(n, j));
      v = v - g.bracket(basis_vector(n, i), f.col(static_cast<std::size_t>(j)));
      out.set(i, j, v);
    }
  return out;
}

TrilinearTable ce_coboundary_2(const BilinearMap& phi, const LieAlgebra& g) {
  return circle(g.bracket_map(), phi) + circle(phi, g.bracket_map());
}

BilinearMap phi2_from_map(const LieAlgebra& base, const LinearMap& f) {
  const int n = base.dim();
  const auto m = static_cast<std::size_t>(n - 1);
  if (f.rows() != m || f.cols() != m)
    throw PreconditionError("f must act on the " + std::to_string(m) + "-dimensional complement of the center");
  BilinearMap out(n);
  for (std::size_t l = 0; l < m; ++l) {
    Vector v = zero_vector(n);
    for (std::size_t s = 0; s < m; ++s) v[s] = f(s, l);
    out.set(static_cast<int>(l), n - 1, v);
  }
  return out;
}

std::vector<int> QuadraResult::failing_equations() const {
  std::vector<int> eqs;
  for (const auto& f : failures) eqs.push_back(f.equation);
  return eqs;
}

QuadraResult quadra_check(const DeformationSpec& spec) {
  const LieAlgebra& base = spec.base;
  if (spec.phi1.dim() != base.dim() || spec.phi2.dim() != base.dim())
    throw PreconditionError("deformation cochains over the wrong space");
  if (!bullet_power_vanishes(base.bracket_map(), 2)) throw PreconditionError("base bracket is not 2-step nilpotent");

  const TrilinearTable eq[4] = {
      ce_coboundary_2(spec.phi1, base),
      circle(spec.phi1, spec.phi1) + ce_coboundary_2(spec.phi2, base),
      circle(spec.phi1, spec.phi2) + circle(spec.phi2, spec.phi1),
      circle(spec.phi2, spec.phi2),
  };
  QuadraResult out;
  for (int e = 0; e < 4; ++e) {
    if (eq[e].is_zero()) continue;
    out.ok = false;
    const auto& [key, v] = *eq[e].entries.begin();
    out.failures.push_back({e + 1, key[0], key[1], key[2], v});
  }
  return out;
}

LieAlgebra assemble(const DeformationSpec& spec) {
  return LieAlgebra(spec.base.bracket_map() + spec.phi1 + spec.phi2, spec.base.basis());
}

DeformationSpec split_by_weights(const LieAlgebra& g, const std::vector<int>& weights) {
  const int n = g.dim();
  if (static_cast<int>(weights.size()) != n) throw PreconditionError("weight count does not match the dimension");
  BilinearMap parts[3] = {BilinearMap(n), BilinearMap(n), BilinearMap(n)};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Scalar c = g.c(i, j, k);
        if (c.is_zero()) continue;
        int w = weights[static_cast<std::size_t>(i)] + weights[static_cast<std::size_t>(j)] -
                weights[static_cast<std::size_t>(k)];
        if (w < 0 || w > 2)
          throw PreconditionError("structure constant c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                  std::to_string(k + 1) + ") has weight " + std::to_string(w) + " outside 0..2");
        parts[w].add(i, j, k, c);
      }
  return {LieAlgebra(parts[0], g.basis()), parts[1], parts[2]};
}

DeformationSpec decompose_contact_basis(const LieAlgebra& g) {
  const int n = g.dim();
  if (n % 2 == 0) throw PreconditionError("contact basis needs odd dimension");
  std::vector<int> w(static_cast<std::size_t>(n), 1);
  w.back() = 2;
  return split_by_weights(g, w);
}

LieAlgebra central_extension(const LieAlgebra& k, const DualForm& theta, int position) {
  const int m = k.dim();
  if (theta.dim() != m) throw PreconditionError("2-form does not live on the given algebra");
  if (!theta.is_zero() && theta.grade() != 2) throw PreconditionError("extension cocycle must be a 2-form");
  if (position < 0) position = m;
  if (position > m) throw PreconditionError("insertion position out of range");
  if (!ce_differential(theta).is_zero()) throw PreconditionError("not a 2-cocycle");
  if (m % 2 != 0 || theta.is_zero() || wedge_power(theta, m / 2).is_zero()) throw PreconditionError("not symplectic");

  auto lift = [&](int i) { return i < position ? i : i + 1; };
  std::vector<std::string> labels = k.basis();
  labels.insert(labels.begin() + position, "Z");
  LieAlgebra g(m + 1, labels);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      Vector v = k.bracket(i, j);
      for (int s = 0; s < m; ++s) {
        const Scalar& c = v[static_cast<std::size_t>(s)];
        if (!c.is_zero()) g.add_bracket(lift(i), lift(j), lift(s), c);
      }
      Scalar t = theta.coeff({i, j});
      if (!t.is_zero()) g.add_bracket(lift(i), lift(j), position, t);
    }
  return g;
}

CenterQuotient quotient_by_center(const LieAlgebra& g) {
  Subspace z = center(g);
  if (z.dim() != 1) throw PreconditionError("center has dimension " + std::to_string(z.dim()) + ", expected 1");
  const int n = g.dim();
  Vector zv = z.basis().front();
  int m = n - 1;
  while (zv[static_cast<std::size_t>(m)].is_zero()) --m;
  zv = (Scalar(1) / zv[static_cast<std::size_t>(m)]) * zv;

  // X_m = Z - sum_{k != m} z_k X_k
  auto drop = [&](int i) { return i < m ? i : i - 1; };
  std::vector<std::string> labels = g.basis();
  labels.erase(labels.begin() + m);
  LieAlgebra q(n - 1, labels);
  Exterior<Scalar> theta(n - 1, 2);
  for (int i = 0; i < n; ++i) {
    if (i == m) continue;
    for (int j = i + 1; j < n; ++j) {
      if (j == m) continue;
      Vector v = g.bracket(i, j);
      Scalar cm = v[static_cast<std::size_t>(m)];
      for (int k = 0; k < n; ++k) {
        if (k == m) continue;
        Scalar c = v[static_cast<std::size_t>(k)] - cm * zv[static_cast<std::size_t>(k)];
        if (!c.is_zero()) q.add_bracket(drop(i), drop(j), drop(k), c);
      }
      if (!cm.is_zero()) theta.add((Blade{1} << drop(i)) | (Blade{1} << drop(j)), cm);
    }
  }
  Matrix p = Matrix::identity(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) p(static_cast<std::size_t>(r), static_cast<std::size_t>(m)) = zv[static_cast<std::size_t>(r)];
  auto qp = std::make_shared<const LieAlgebra>(std::move(q));
  return {qp, DualForm(qp, std::move(theta)), m, zv, p};
}

NormalizedDeformation normalize_linear_deformation(const LieAlgebra& base, const BilinearMap& phi1) {
  // Unknowns: the n^2 entries of f, row-major. Conditions: (d f)(X_i, X_n) = phi1(X_i, X_n).
  const int n = base.dim();
  const auto un = static_cast<std::size_t>(n);
  const int last = n - 1;
  std::vector<std::vector<Scalar>> rows;
  std::vector<Scalar> rhs;
  for (int i = 0; i < last; ++i) {
    // Column of d f (X_i, X_n) for each elementary f = E_{rs}.
    std::vector<Vector> cols;
    for (std::size_t r = 0; r < un; ++r)
      for (std::size_t s = 0; s < un; ++s) {
        Matrix e(un, un);
        e(r, s) = 1;
        Vector v = e * base.bracket(i, last);
        v = v - base.bracket(e.col(static_cast<std::size_t>(i)), basis_vector(n, last));
        v = v - base.bracket(basis_vector(n, i), e.col(static_cast<std::size_t>(last)));
        cols.push_back(std::move(v));
      }
    Vector target = phi1(i, last);
    for (std::size_t k = 0; k < un; ++k) {
      std::vector<Scalar> row(un * un);
      for (std::size_t c = 0; c < cols.size(); ++c) row[c] = cols[c][k];
      rows.push_back(std::move(row));
      rhs.push_back(target[k]);
    }
  }
  auto sol = solve(Matrix::from_rows(rows), rhs);
  if (!sol) throw PreconditionError("phi1(X_i, X_n) is not removable by a coboundary");
  Matrix f(un, un);
  for (std::size_t r = 0; r < un; ++r)
    for (std::size_t s = 0; s < un; ++s) f(r, s) = (*sol)[r * un + s];
  BilinearMap df = ce_coboundary_1(f, base);
  return {phi1 + Scalar(-1) * df, f};
}

}  // namespace cartan

#pragma once

#include <optional>
#include <vector>

#include "cartan/lie_algebra.hpp"

namespace cartan {

struct JacobiWitness {
  int i = 0, j = 0, k = 0;  // i < j < k
  Vector defect;            // cyclic sum [[Xi,Xj],Xk] + ...
};

struct JacobiResult {
  bool ok = true;
  std::optional<JacobiWitness> witness;  // first failing triple
};

JacobiResult jacobi_check(const LieAlgebra& g);

Subspace center(const LieAlgebra& g);
// [A, B] = span{[a, b]}.
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

struct CentralSeries {
  std::vector<Subspace> terms;  // C^1 = [g,g], C^2, ... up to 0 or stabilization
  std::optional<int> nilindex;  // smallest k with C^k = 0
  bool filiform = false;        // nilindex == n - 1
};
CentralSeries lower_central_series(const LieAlgebra& g);

bool is_derivation(const LinearMap& f, const LieAlgebra& g);
// Diagonal derivations diag(r_1..r_n), as a subspace of coefficient vectors.
Subspace diagonal_derivations(const LieAlgebra& g);

// F = {f in End(k) : mu0(f X, Y) + mu0(X, f Y) = 0 on k = span{X_1..X_2p}},
// the maps that preserve the Heisenberg pairing.
struct FSubalgebra {
  int p = 0;
  std::vector<Matrix> basis;  // 2p x 2p
  int dimension() const { return static_cast<int>(basis.size()); }
};
FSubalgebra f_subalgebra(int p);
int f_subalgebra_dimension(int p);
// Whether a 2p x 2p map satisfies the defining constraint of F.
bool in_f_subalgebra(int p, const Matrix& f);

}  // namespace cartan

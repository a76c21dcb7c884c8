#pragma once

#include <string>
#include <vector>

#include "tqa/matrix_ring.hpp"
#include "tqa/morphisms.hpp"
#include "tqa/parallel.hpp"
#include "tqa/poisson.hpp"

namespace tqa {

// The matrix A of generators (unitriangular lower for the orthogonal
// family, block-triangular for the symplectic one).
PMatrix stokes_matrix(const PoissonSpec& spec);
// Entrywise alternating-path inverse; orthogonal family only.
PMatrix stokes_inverse(const PoissonSpec& spec);

// Coefficients f_0..f_N of det(A + lam A^t).
std::vector<CommPoly> charpoly_coeffs(const PoissonSpec& spec);

// {f, a_gen} = 0 for every generator.
std::vector<CheckResult> casimir_check(const CommPoly& f, const PoissonSpec& spec,
                                       const std::string& id,
                                       RunMode mode = default_run_mode());

// Pfaffian of the submatrix of B^t - B picked by the sorted index set I.
CommPoly pf_I(const PMatrix& b, const std::vector<int>& I);

// Pfaffian-type Casimir c_k of the orthogonal family (c_0 = 1).
CommPoly c_k(int N, int k);

// det(A + lam A^t) = sum_k (-lam)^k (1+lam)^{N-2k} c_k, exactly.
CheckResult identity_3_8_check(int N);

// tr (A^{-1} A^t)^k.
CommPoly trace_invariant(int N, int k);

// Power-series comparison of sum (-1)^{k-1} lam^{k-1} tr H^k with
// d/dlam ln det(1 + lam H), H = A^{-1} A^t, through degree maxk-1.
CheckResult liouville_check(int N, int maxk);

// Restriction of c_k to the diagonal subspace equals the elementary
// symmetric polynomial in the d_i^2.
std::vector<CheckResult> restriction_check(int N, int maxk);

// Quantum s^+ elements: closed form and the q-bracket recursion.
NCElement s_plus(const AlgebraPtr& orth, int i, int j);
NCElement s_plus_recursive(const AlgebraPtr& orth, int i, int j);

// Constrained permutation sums over an index subset I (sorted ascending).
NCElement phi_I(const AlgebraPtr& orth, const std::vector<int>& I);
NCElement phi_plus_I(const AlgebraPtr& orth, const std::vector<int>& I);
// phi_k = sum_{|I|=2k} q^{i_1+...+i_{2k}} Phi+_I Phi_I.
NCElement phi_k(const AlgebraPtr& orth, int k);

// [e, g] = 0 for every generator g.
std::vector<CheckResult> quantum_center_check(const NCElement& e, const std::string& id,
                                              RunMode mode = default_run_mode());

// S * S^{-1} = 1 entrywise for the quantum unitriangular matrix.
std::vector<CheckResult> quantum_unitri_inverse_check(const AlgebraPtr& orth);

// Symplectic family: quadratic Casimirs, det-coefficients, palindromicity,
// and the f_0 factorization.
std::vector<CheckResult> sp_casimir_checks(int n);

struct Finding {
  std::string id;
  bool holds = false;
  std::string detail;
};

// Pf(A - A^t) in the symplectic polynomial algebra: records bracket
// behaviour and the Pf^2 = det identity.
std::vector<Finding> conjecture_4_4_probe(int n);

// Rank of the Jacobian of the Casimir generators at a random rational
// point (orthogonal family).
Finding jacobian_rank_probe(int N, uint64_t seed);

}  // namespace tqa

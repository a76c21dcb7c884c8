#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tqa/algebras.hpp"
#include "tqa/comm_poly.hpp"
#include "tqa/nc.hpp"

namespace tqa {

enum class PoissonFamily { Orth, Symp };

// A commutative Poisson algebra given by a generator bracket table,
// extended to polynomials by bilinearity and Leibniz. lam and u are
// Poisson-central.
struct PoissonSpec {
  PoissonFamily family;
  int N = 0;  // matrix size (2n in the symplectic case)
  std::vector<int32_t> gens;

  // Test hook: pairs here override the table (used by negative controls).
  std::map<std::pair<int32_t, int32_t>, CommPoly> patches;

  bool supported(int i, int j) const;
  // The (i,j) entry of the matrix A in this algebra: a variable, 1, or 0.
  CommPoly entry(int i, int j) const;
  // Bracket of two generator variables.
  CommPoly gen_bracket(int32_t x, int32_t y) const;
};

PoissonSpec build_poisson_o(int N);
PoissonSpec build_poisson_sp(int n);

// Leibniz extension of the generator table.
CommPoly bracket(const CommPoly& f, const CommPoly& g, const PoissonSpec& spec);

// {a,{b,c}} + cyclic over all generator triples (with repetition).
std::vector<CheckResult> check_jacobi(const PoissonSpec& spec);

// q = 1, s_ij -> a_ij; coefficients may carry u and lam along.
CommPoly classical_limit(const NCElement& e);

// Lifts both polynomials to the quantum algebra, commutates and divides by
// 1-q at q=1. lift_seed = 0 uses the normal-order lift; any other seed
// shuffles the factor order of each lifted monomial.
CommPoly bracket_via_quantum(const CommPoly& f, const CommPoly& g, const AlgebraPtr& algebra,
                             uint64_t lift_seed = 0);

// A substitution endomorphism of the polynomial algebra.
struct PoissonMap {
  std::string name;
  std::map<int32_t, CommPoly> images;
  CommPoly apply(const CommPoly& f) const;
};

PoissonMap braid_poisson(int N, int i);
// varrho: A -> A^{-1} entrywise (alternating path sums).
PoissonMap poisson_inv(int N);
// varpi: transpose with respect to the second diagonal.
PoissonMap poisson_flip(int N);

// Classical alternating path sum for the inverse of a unitriangular matrix.
CommPoly a_inverse_entry(int k, int l);

// {m(x), m(y)} == m({x,y}) on all generator pairs.
std::vector<CheckResult> bracket_invariance_check(const PoissonSpec& spec, const PoissonMap& m);
// {m(x), m(y)} == -m({x,y}) on all generator pairs.
std::vector<CheckResult> bracket_reversal_check(const PoissonSpec& spec, const PoissonMap& m);

// Entrywise comparison of the table bracket with the matrix form
// [r, A1 A2] + A1 r^t A2 - A2 r^t A1.
std::vector<CheckResult> rmatrix_bracket_check(const PoissonSpec& spec);

}  // namespace tqa

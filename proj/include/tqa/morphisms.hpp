#pragma once

#include <string>
#include <vector>

#include "tqa/algebras.hpp"
#include "tqa/genmap.hpp"

namespace tqa {

// Braid automorphism beta_i of the twisted orthogonal algebra (or its
// inverse), acting on the s_kl generators.
GenMap braid_o(int N, int i, bool inverse = false);

// Braid automorphism of U_q(gl_N) in the T/Tbar presentation.
GenMap lusztig_gl(int N, int i);

// omega: the involutive automorphism with s_k -> s_{N-k}.
GenMap omega(int N);
// omega': the involutive anti-automorphism s_kl -> s_{N-l+1,N-k+1}.
GenMap omega_prime(int N);
// rho: the involutive anti-automorphism S -> (1-q^-1) I + q^-1 H S^-1 H^-1.
GenMap rho(int N);
// varsigma: S -> C S C for a +-1 sign vector.
GenMap varsigma(int N, const std::vector<int>& signs);

// Entry (k,l), k > l, of the inverse of the unitriangular quantum matrix S,
// as the alternating sum over descending index paths.
NCElement s_inverse_entry(const AlgebraPtr& orth, int k, int l);

// For every defining relation of m.source, reduces the image (word order
// reversed when m.anti) in the target; pass means zero.
std::vector<CheckResult> check_homomorphism(const GenMap& m);
std::vector<CheckResult> check_homomorphism(const GenMap& m,
                                            const std::vector<AlgebraSpec::Relation>& rels);

// Checks lhs == rhs as compositions (right-to-left application) on every
// generator of the common source.
std::vector<CheckResult> check_map_identity(const std::string& id,
                                            const std::vector<const GenMap*>& lhs,
                                            const std::vector<const GenMap*>& rhs);

// Symplectic probes, run inside U_q(gl_2n) through the embedding.
std::vector<CheckResult> sp_braid_odd_probe(int n, int j);
std::vector<CheckResult> sp_gamma_probe(int n, int j);

struct Gamma2Result {
  GenMap map;
  std::vector<CheckResult> asserted;    // displayed relations and their images
  std::vector<CheckResult> exploratory; // full relation-set findings
};

// The gamma'_1 substitution on the extended symplectic algebra for n = 2.
// extend_2143 additionally swaps s_21 and s_43; without it the relations
// touching those generators are skipped.
Gamma2Result gamma2_map(bool extend_2143);

}  // namespace tqa

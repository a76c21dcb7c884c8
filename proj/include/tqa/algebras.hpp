#pragma once

#include <string>
#include <vector>

#include "tqa/genmap.hpp"
#include "tqa/nc.hpp"
#include "tqa/parallel.hpp"

namespace tqa {

// Presented algebras. Builders are cached, so repeated calls share specs.
AlgebraPtr build_uq_gl(int N);
AlgebraPtr build_uqp_o(int N);
AlgebraPtr build_uqp_sp_ext(int n);

// Embeddings: s_ij -> sum of t/tbar products, into U_q(gl).
GenMap embed_o_in_gl(int N);
GenMap embed_sp_in_gl(int n);

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string witness;  // normal form text when the check fails
};

// Reduces each labelled element to normal form; pass means zero. Checks are
// independent and fan out across threads unless mode says otherwise.
std::vector<CheckResult> check_relation_set(const AlgebraPtr& spec,
                                            const std::vector<AlgebraSpec::Relation>& relations,
                                            RunMode mode = default_run_mode());

// Raw instance builders (each element normal-forms to zero in its algebra).
TermMap rel_gl_tt(const AlgebraSpec& sp, int i, int a, int j, int b);    // t/t
TermMap rel_gl_bb(const AlgebraSpec& sp, int i, int a, int j, int b);    // tbar/tbar
TermMap rel_gl_bt(const AlgebraSpec& sp, int i, int a, int j, int b);    // tbar/t
TermMap rel_reflection(const AlgebraSpec& sp, int i, int j, int k, int l);

// All reflection-equation instances over the spec's support (test vectors).
std::vector<AlgebraSpec::Relation> reflection_instances(const AlgebraPtr& spec);

// Serre-type relations in the Gavrilik-Klimyk generators s_k = s_{k+1,k},
// plus distant commutation; move-to-one-side form.
std::vector<AlgebraSpec::Relation> serre_relations(const AlgebraPtr& orth);

// The cubic exchange relation s_ij s_ki^2 - (q+q^-1) s_ki s_ij s_ki +
// s_ki^2 s_ij + q^-1 (q-q^-1)^2 s_ij for k > i > j.
AlgebraSpec::Relation generalized_serre_relation(const AlgebraPtr& orth, int k, int i, int j);

// s_kl written with nested q-brackets of the s_{j+1,j}; normal-forms to the
// single word s_kl.
NCElement s_from_serre_generators(const AlgebraPtr& orth, int k, int l);

// Expected number of stored t/tbar relation instances for U_q(gl_N).
std::size_t expected_gl_relation_count(int N);

}  // namespace tqa

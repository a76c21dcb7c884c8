#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "tqa/laurent.hpp"
#include "tqa/words.hpp"

namespace tqa {

enum class AlgebraFamily { UqGl, UqpO, UqpSpExt };

struct NonTermination : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The value of a supported generator symbol: a plain generator, the unit
// (s_ii = 1 in the orthogonal algebra, say), or zero by the support pattern.
struct GenValue {
  enum Tag { Atom, Unit, Zero } tag = Zero;
  Gen gen{};
  static GenValue atom(Gen g) { return {Atom, g}; }
  static GenValue unit() { return {Unit, {}}; }
  static GenValue zero() { return {Zero, {}}; }
};

using TermMap = std::map<Word, Laurent>;

// A presented algebra, carrying its generator support and the oriented
// rewrite rules that bring words into normal (non-decreasing) order.
class AlgebraSpec {
 public:
  AlgebraFamily family;
  int n = 0;  // matrix size N (2n for the symplectic family)
  std::string name;

  // All generator atoms, ascending in the normal order.
  std::vector<Gen> atoms;

  // Normal-ordering rules g*h -> linear combination, keyed by pair_code,
  // for out-of-order pairs of non-diagonal atoms.
  std::unordered_map<uint64_t, TermMap> rules;

  // q-commutation exponents: diag(i)^1 * g = q^c g * diag(i)^1.
  // Keyed by (i << 32) | gen_code(g).
  std::unordered_map<uint64_t, int> diag_comm;

  // Defining relation instances (each normal-forms to zero), with labels
  // for reports.
  struct Relation {
    std::string id;
    TermMap element;
  };
  std::vector<Relation> relations;

  std::size_t rewrite_cap = 1'000'000;

  GenValue resolve(GenKind kind, int i, int j) const;
  bool is_supported_atom(const Gen& g) const;

  // q-commutation exponent c with diag(i) g = q^c g diag(i).
  int diag_exponent(int i, const Gen& g) const;
};

using AlgebraPtr = std::shared_ptr<const AlgebraSpec>;

enum class ReduceStrategy { Leftmost, Rightmost };

// A finite linear combination of generator words over the Laurent ring.
class NCElement {
 public:
  NCElement() = default;
  explicit NCElement(AlgebraPtr spec) : spec_(std::move(spec)) {}

  static NCElement zero(AlgebraPtr spec) { return NCElement(std::move(spec)); }
  static NCElement unit(AlgebraPtr spec, const Laurent& c = Laurent::one());
  static NCElement monomial(AlgebraPtr spec, const Word& w, const Laurent& c = Laurent::one());
  static NCElement generator(AlgebraPtr spec, const Gen& g);

  const AlgebraPtr& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  NCElement operator-() const;
  NCElement operator+(const NCElement& o) const;
  NCElement operator-(const NCElement& o) const;
  NCElement& operator+=(const NCElement& o);
  NCElement& operator-=(const NCElement& o);
  NCElement scaled(const Laurent& c) const;
  NCElement div_coeffs_exact(const Laurent& c) const;

  bool operator==(const NCElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const NCElement& o) const { return !(*this == o); }

  void add_term(const Word& w, const Laurent& c);

  std::string to_string() const;

 private:
  friend NCElement normal_form(const NCElement&, ReduceStrategy);
  friend NCElement nc_mul(const NCElement&, const NCElement&);
  AlgebraPtr spec_;
  TermMap terms_;
};

// Rewrites every word into normal order; canonical and idempotent.
NCElement normal_form(const NCElement& e, ReduceStrategy strategy = ReduceStrategy::Leftmost);
NCElement nc_mul(const NCElement& a, const NCElement& b);
NCElement nc_commutator(const NCElement& a, const NCElement& b);
NCElement nc_pow(const NCElement& a, int k);

// Turns a raw term map into the normal form of the element it denotes.
NCElement normal_form_terms(AlgebraPtr spec, const TermMap& terms,
                            ReduceStrategy strategy = ReduceStrategy::Leftmost);

struct ConfluenceReport {
  int samples = 0;
  int divergences = 0;
  std::vector<std::string> witnesses;
};

// Empirical confluence check: reduces random words with the leftmost and
// rightmost strategies and compares results.
ConfluenceReport confluence_probe(const AlgebraPtr& spec, int max_len, int samples, uint64_t seed);

std::size_t rewrite_cap_from_env(std::size_t fallback);

}  // namespace tqa

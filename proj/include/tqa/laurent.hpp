#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "tqa/rational.hpp"

namespace tqa {

// Coefficient ring: sparse Laurent polynomials over Q in the fixed
// variable set {q, u, v, w, lam}. Exponents may be negative except for
// lam, which stays >= 0.
enum Var : int { VQ = 0, VU = 1, VV = 2, VW = 3, VLAM = 4 };
constexpr int kNumVars = 5;

using ExpVec = std::array<int32_t, kNumVars>;

struct NotDivisible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Laurent {
 public:
  // Term order: lexicographic on exponent vectors in variable order
  // (q,u,v,w,lam). Used for canonical serialization and division.
  using TermMap = std::map<ExpVec, Rational>;

  Laurent() = default;
  explicit Laurent(const Rational& c);
  explicit Laurent(long c);

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }
  // c * var^e
  static Laurent monomial(const Rational& c, Var var, int e);
  static Laurent monomial(const Rational& c, const ExpVec& exps);
  static Laurent q(int e = 1) { return monomial(Rational(1), VQ, e); }
  static Laurent u(int e = 1) { return monomial(Rational(1), VU, e); }
  static Laurent var(Var v, int e = 1) { return monomial(Rational(1), v, e); }
  // q - q^-1, used all over the defining relations
  static Laurent q_minus_qinv();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_constant() const;
  // Requires is_constant().
  Rational constant_value() const;

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // Total order for use as map key (lexicographic on the term list).
  bool operator<(const Laurent& o) const { return terms_ < o.terms_; }

  Laurent scaled(const Rational& c) const;
  // Multiply by a single monomial c*x^e (cheap exponent shift).
  Laurent mono_shifted(const Rational& c, const ExpVec& e) const;
  Laurent pow(int k) const;  // k >= 0, or k < 0 if *this is a unit monomial

  // Exact division; throws NotDivisible when no exact quotient exists.
  Laurent div_exact(const Laurent& g) const;

  // Substitute q = 1; other variables untouched.
  Laurent eval_q1() const;
  // (f / (1-q)) at q = 1; requires f|_{q=1} = 0.
  Laurent classical_rate() const;
  // Substitute u = val (val must be a unit monomial or any Laurent if all
  // u-exponents are >= 0); general substitution of one variable.
  Laurent subst(Var v, const Laurent& val) const;

  // Coefficient of var^e viewed as a polynomial in `var` (result no longer
  // depends on `var`).
  Laurent coeff_of(Var v, int e) const;
  int min_exp(Var v) const;
  int max_exp(Var v) const;

  std::string to_string() const;

 private:
  void add_term(const ExpVec& e, const Rational& c);
  TermMap terms_;
};

inline Laurent operator*(const Rational& c, const Laurent& f) { return f.scaled(c); }

std::string exponent_vector_to_string(const ExpVec& e);

}  // namespace tqa

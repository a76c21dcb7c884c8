#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tqa/rational.hpp"

namespace tqa {

// Commutative exact polynomials for the Poisson side: variables are the
// matrix entries a_ij, the spectral letters u/v/lam, and auxiliary d_i used
// by restriction checks. Exponents of u may be negative (Laurent).
namespace pvar {
constexpr int32_t a(int i, int j) { return (1 << 16) | (i << 8) | j; }
constexpr int32_t lam = 2 << 16;
constexpr int32_t u = (2 << 16) + 1;
constexpr int32_t d(int i) { return (3 << 16) | i; }
bool is_a(int32_t code);
int a_row(int32_t code);
int a_col(int32_t code);
std::string name(int32_t code);
}  // namespace pvar

// Sorted (code, exponent) pairs, exponents nonzero.
using PMono = std::vector<std::pair<int32_t, int32_t>>;

class CommPoly {
 public:
  using TermMap = std::map<PMono, Rational>;

  CommPoly() = default;
  explicit CommPoly(const Rational& c);
  explicit CommPoly(long c);
  static CommPoly variable(int32_t code, int e = 1);
  static CommPoly zero() { return CommPoly(); }
  static CommPoly one() { return CommPoly(1); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;
  const TermMap& terms() const { return terms_; }

  CommPoly operator-() const;
  CommPoly operator+(const CommPoly& o) const;
  CommPoly operator-(const CommPoly& o) const;
  CommPoly operator*(const CommPoly& o) const;
  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  CommPoly& operator*=(const CommPoly& o) { return *this = *this * o; }
  CommPoly scaled(const Rational& c) const;
  CommPoly pow(int k) const;  // k >= 0

  bool operator==(const CommPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const CommPoly& o) const { return !(*this == o); }

  // d/dx for the given variable.
  CommPoly derivative(int32_t code) const;
  // Substitute a single variable by a polynomial (exponents must be >= 0
  // for that variable unless the value is an invertible monomial).
  CommPoly subst(int32_t code, const CommPoly& value) const;
  // Evaluate the a_ij variables at rational values; other variables must be
  // absent.
  Rational eval(const std::map<int32_t, Rational>& point) const;

  // Coefficient of code^e (the result no longer involves the variable).
  CommPoly coeff_of(int32_t code, int e) const;
  int max_exp(int32_t code) const;
  int min_exp(int32_t code) const;

  void add_term(const PMono& m, const Rational& c);
  std::string to_string() const;

 private:
  TermMap terms_;
};

inline CommPoly operator*(const Rational& c, const CommPoly& f) { return f.scaled(c); }

}  // namespace tqa

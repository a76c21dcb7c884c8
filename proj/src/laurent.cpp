#include "tqa/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace tqa {

namespace {
const char* kVarNames[kNumVars] = {"q", "u", "v", "w", "lam"};

ExpVec add_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
  return r;
}

ExpVec sub_exps(const ExpVec& a, const ExpVec& b) {
  ExpVec r;
  for (int i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
  return r;
}
}  // namespace

Laurent::Laurent(const Rational& c) {
  if (c != 0) terms_.emplace(ExpVec{}, c);
}

Laurent::Laurent(long c) : Laurent(Rational(c)) {}

Laurent Laurent::monomial(const Rational& c, Var var, int e) {
  ExpVec ev{};
  ev[var] = e;
  return monomial(c, ev);
}

Laurent Laurent::monomial(const Rational& c, const ExpVec& exps) {
  Laurent f;
  if (c != 0) f.terms_.emplace(exps, c);
  return f;
}

Laurent Laurent::q_minus_qinv() { return q(1) - q(-1); }

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{} && terms_.begin()->second == 1;
}

bool Laurent::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == ExpVec{};
}

Rational Laurent::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("laurent: not a constant: " + to_string());
  return terms_.begin()->second;
}

void Laurent::add_term(const ExpVec& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent r = *this;
  r += o;
  return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
  Laurent r = *this;
  r -= o;
  return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(add_exps(e1, e2), c1 * c2);
  return r;
}

Laurent Laurent::scaled(const Rational& c) const {
  Laurent r;
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, c * k);
  return r;
}

Laurent Laurent::mono_shifted(const Rational& c, const ExpVec& e) const {
  Laurent r;
  if (c == 0) return r;
  for (const auto& [e1, c1] : terms_) r.terms_.emplace(add_exps(e1, e), c * c1);
  return r;
}

Laurent Laurent::pow(int k) const {
  if (k < 0) {
    if (terms_.size() != 1) throw std::logic_error("laurent: pow(<0) needs a unit monomial");
    const auto& [e, c] = *terms_.begin();
    ExpVec ne;
    for (int i = 0; i < kNumVars; ++i) ne[i] = -e[i];
    Rational inv = Rational(1) / c;
    Laurent base = monomial(inv, ne);
    return base.pow(-k);
  }
  Laurent r = one();
  Laurent b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

Laurent Laurent::div_exact(const Laurent& g) const {
  if (g.is_zero()) throw NotDivisible("division by zero");
  if (is_zero()) return Laurent();
  // Shift both operands so all exponents are >= 0, divide as ordinary
  // polynomials, then shift the quotient back. For an exact quotient the
  // leading term of the remainder is always divisible by the leading term
  // of the divisor; otherwise the division is not exact.
  ExpVec fmin{}, gmin{};
  for (int i = 0; i < kNumVars; ++i) {
    fmin[i] = min_exp(static_cast<Var>(i));
    gmin[i] = g.min_exp(static_cast<Var>(i));
  }
  Laurent r = mono_shifted(Rational(1), sub_exps(ExpVec{}, fmin));
  Laurent gs = g.mono_shifted(Rational(1), sub_exps(ExpVec{}, gmin));
  const auto& glead = *gs.terms_.rbegin();
  Laurent h;
  while (!r.is_zero()) {
    const auto& rlead = *r.terms_.rbegin();
    ExpVec te = sub_exps(rlead.first, glead.first);
    for (int i = 0; i < kNumVars; ++i)
      if (te[i] < 0) throw NotDivisible("not divisible: " + to_string() + " by " + g.to_string());
    Rational tc = rlead.second / glead.second;
    h.add_term(te, tc);
    r -= gs.mono_shifted(tc, te);
  }
  return h.mono_shifted(Rational(1), sub_exps(fmin, gmin));
}

Laurent Laurent::eval_q1() const {
  Laurent r;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    ne[VQ] = 0;
    r.add_term(ne, c);
  }
  return r;
}

Laurent Laurent::classical_rate() const {
  Laurent num = div_exact(one() - q());
  return num.eval_q1();
}

Laurent Laurent::subst(Var v, const Laurent& val) const {
  Laurent r;
  for (const auto& [e, c] : terms_) {
    ExpVec ne = e;
    int k = ne[v];
    ne[v] = 0;
    r += monomial(c, ne) * val.pow(k);
  }
  return r;
}

Laurent Laurent::coeff_of(Var v, int e) const {
  Laurent r;
  for (const auto& [ev, c] : terms_) {
    if (ev[v] != e) continue;
    ExpVec ne = ev;
    ne[v] = 0;
    r.add_term(ne, c);
  }
  return r;
}

int Laurent::min_exp(Var v) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[v] < m) m = e[v];
    first = false;
  }
  return m;
}

int Laurent::max_exp(Var v) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first || e[v] > m) m = e[v];
    first = false;
  }
  return m;
}

std::string exponent_vector_to_string(const ExpVec& e) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < kNumVars; ++i) {
    if (e[i] == 0) continue;
    if (any) os << ' ';
    os << kVarNames[i];
    if (e[i] != 1) os << '^' << e[i];
    any = true;
  }
  return os.str();
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    std::string vars = exponent_vector_to_string(e);
    if (vars.empty()) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << ' ';
      os << vars;
    }
    first = false;
  }
  return os.str();
}

}  // namespace tqa

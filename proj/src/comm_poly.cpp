#include "tqa/comm_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tqa {

namespace pvar {
bool is_a(int32_t code) { return (code >> 16) == 1; }
int a_row(int32_t code) { return (code >> 8) & 0xff; }
int a_col(int32_t code) { return code & 0xff; }
std::string name(int32_t code) {
  if (is_a(code))
    return "a[" + std::to_string(a_row(code)) + "," + std::to_string(a_col(code)) + "]";
  if (code == lam) return "lam";
  if (code == u) return "u";
  if ((code >> 16) == 3) return "d" + std::to_string(code & 0xffff);
  return "x" + std::to_string(code);
}
}  // namespace pvar

namespace {
PMono mono_mul(const PMono& a, const PMono& b) {
  PMono r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first == b[j].first) {
      int32_t e = a[i].second + b[j].second;
      if (e != 0) r.emplace_back(a[i].first, e);
      ++i;
      ++j;
    } else if (a[i].first < b[j].first) {
      r.push_back(a[i++]);
    } else {
      r.push_back(b[j++]);
    }
  }
  while (i < a.size()) r.push_back(a[i++]);
  while (j < b.size()) r.push_back(b[j++]);
  return r;
}
}  // namespace

CommPoly::CommPoly(const Rational& c) {
  if (c != 0) terms_.emplace(PMono{}, c);
}
CommPoly::CommPoly(long c) : CommPoly(Rational(c)) {}

CommPoly CommPoly::variable(int32_t code, int e) {
  CommPoly f;
  if (e == 0) return CommPoly(1);
  f.terms_.emplace(PMono{{code, e}}, Rational(1));
  return f;
}

bool CommPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational CommPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("comm_poly: not constant: " + to_string());
  return terms_.begin()->second;
}

void CommPoly::add_term(const PMono& m, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

CommPoly CommPoly::operator-() const {
  CommPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CommPoly CommPoly::operator+(const CommPoly& o) const {
  CommPoly r = *this;
  r += o;
  return r;
}

CommPoly CommPoly::operator-(const CommPoly& o) const {
  CommPoly r = *this;
  r -= o;
  return r;
}

CommPoly CommPoly::operator*(const CommPoly& o) const {
  CommPoly r;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

CommPoly CommPoly::scaled(const Rational& c) const {
  CommPoly r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, c * k);
  return r;
}

CommPoly CommPoly::pow(int k) const {
  if (k < 0) throw std::logic_error("comm_poly: negative power");
  CommPoly r = one();
  CommPoly b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

CommPoly CommPoly::derivative(int32_t code) const {
  CommPoly r;
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k].first != code) continue;
      PMono nm = m;
      int e = nm[k].second;
      if (e == 1)
        nm.erase(nm.begin() + k);
      else
        nm[k].second = e - 1;
      r.add_term(nm, c * e);
    }
  }
  return r;
}

CommPoly CommPoly::subst(int32_t code, const CommPoly& value) const {
  CommPoly r;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    PMono nm;
    for (const auto& p : m) {
      if (p.first == code)
        e = p.second;
      else
        nm.push_back(p);
    }
    CommPoly base;
    base.terms_.emplace(nm, c);
    if (e == 0) {
      r += base;
    } else if (e > 0) {
      r += base * value.pow(e);
    } else {
      if (value.terms_.size() != 1)
        throw std::logic_error("comm_poly: negative power substitution needs a monomial");
      const auto& [vm, vc] = *value.terms_.begin();
      PMono inv;
      for (const auto& p : vm) inv.emplace_back(p.first, -p.second);
      CommPoly invp;
      invp.terms_.emplace(inv, Rational(1) / vc);
      r += base * invp.pow(-e);
    }
  }
  return r;
}

Rational CommPoly::eval(const std::map<int32_t, Rational>& point) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [code, e] : m) {
      auto it = point.find(code);
      if (it == point.end())
        throw std::logic_error("comm_poly: eval missing value for " + pvar::name(code));
      if (e < 0) throw std::logic_error("comm_poly: eval with negative exponent");
      for (int k = 0; k < e; ++k) v *= it->second;
    }
    total += v;
  }
  return total;
}

CommPoly CommPoly::coeff_of(int32_t code, int e) const {
  CommPoly r;
  for (const auto& [m, c] : terms_) {
    int have = 0;
    PMono nm;
    for (const auto& p : m) {
      if (p.first == code)
        have = p.second;
      else
        nm.push_back(p);
    }
    if (have == e) r.add_term(nm, c);
  }
  return r;
}

int CommPoly::max_exp(int32_t code) const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int have = 0;
    for (const auto& p : m)
      if (p.first == code) have = p.second;
    if (first || have > best) best = have;
    first = false;
  }
  return best;
}

int CommPoly::min_exp(int32_t code) const {
  int best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    int have = 0;
    for (const auto& p : m)
      if (p.first == code) have = p.second;
    if (first || have < best) best = have;
    first = false;
  }
  return best;
}

std::string CommPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
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
    if (m.empty()) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << ' ';
      bool anyv = false;
      for (const auto& [code, e] : m) {
        if (anyv) os << ' ';
        os << pvar::name(code);
        if (e != 1) os << '^' << e;
        anyv = true;
      }
    }
    first = false;
  }
  return os.str();
}

}  // namespace tqa

#include "tqa/nc.hpp"

#include <cstdlib>
#include <random>
#include <sstream>

namespace tqa {

std::string Gen::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case GenKind::T:
      os << "t[" << int(i) << "," << int(j) << "]";
      break;
    case GenKind::TBAR:
      os << "tbar[" << int(i) << "," << int(j) << "]";
      break;
    case GenKind::S:
      os << "s[" << int(i) << "," << int(j) << "]";
      break;
    case GenKind::DIAG:
      os << "t[" << int(i) << "," << int(i) << "]";
      if (e != 1) os << "^" << e;
      break;
  }
  return os.str();
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    s += w[k].to_string();
  }
  return s;
}

GenValue AlgebraSpec::resolve(GenKind kind, int i, int j) const {
  if (i < 1 || j < 1 || i > n || j > n) return GenValue::zero();
  switch (family) {
    case AlgebraFamily::UqGl:
      if (kind == GenKind::T) {
        if (i == j) return GenValue::atom(Gen::diag(i, 1));
        return i > j ? GenValue::atom(Gen::t(i, j)) : GenValue::zero();
      }
      if (kind == GenKind::TBAR) {
        if (i == j) return GenValue::atom(Gen::diag(i, -1));
        return i < j ? GenValue::atom(Gen::tbar(i, j)) : GenValue::zero();
      }
      return GenValue::zero();
    case AlgebraFamily::UqpO:
      if (kind != GenKind::S) return GenValue::zero();
      if (i == j) return GenValue::unit();
      return i > j ? GenValue::atom(Gen::s(i, j)) : GenValue::zero();
    case AlgebraFamily::UqpSpExt:
      if (kind != GenKind::S) return GenValue::zero();
      if (j <= i) return GenValue::atom(Gen::s(i, j));
      if (j == i + 1 && i % 2 == 1) return GenValue::atom(Gen::s(i, j));
      return GenValue::zero();
  }
  return GenValue::zero();
}

bool AlgebraSpec::is_supported_atom(const Gen& g) const {
  GenValue v = resolve(g.kind == GenKind::DIAG ? GenKind::T : g.kind, g.i,
                       g.kind == GenKind::DIAG ? g.i : g.j);
  return v.tag == GenValue::Atom;
}

int AlgebraSpec::diag_exponent(int i, const Gen& g) const {
  auto it = diag_comm.find((uint64_t(i) << 32) | gen_code(g));
  if (it == diag_comm.end())
    throw std::logic_error("missing diagonal commutation entry for diag " + std::to_string(i) +
                           " vs " + g.to_string());
  return it->second;
}

NCElement NCElement::unit(AlgebraPtr spec, const Laurent& c) {
  NCElement e(std::move(spec));
  e.add_term({}, c);
  return e;
}

NCElement NCElement::monomial(AlgebraPtr spec, const Word& w, const Laurent& c) {
  NCElement e(std::move(spec));
  e.add_term(w, c);
  return e;
}

NCElement NCElement::generator(AlgebraPtr spec, const Gen& g) {
  return monomial(std::move(spec), {g});
}

void NCElement::add_term(const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NCElement NCElement::operator-() const {
  NCElement r(spec_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

NCElement& NCElement::operator+=(const NCElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCElement& NCElement::operator-=(const NCElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCElement NCElement::operator+(const NCElement& o) const {
  NCElement r = *this;
  r += o;
  return r;
}

NCElement NCElement::operator-(const NCElement& o) const {
  NCElement r = *this;
  r -= o;
  return r;
}

NCElement NCElement::scaled(const Laurent& c) const {
  NCElement r(spec_);
  if (c.is_zero()) return r;
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
  return r;
}

NCElement NCElement::div_coeffs_exact(const Laurent& c) const {
  NCElement r(spec_);
  for (const auto& [w, k] : terms_) r.terms_.emplace(w, k.div_exact(c));
  return r;
}

std::string NCElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    std::string cs = c.to_string();
    bool simple = c.terms().size() == 1;
    if (w.empty()) {
      os << (simple ? cs : "(" + cs + ")");
    } else {
      if (!c.is_one()) os << (simple ? cs : "(" + cs + ")") << " ";
      os << word_to_string(w);
    }
    first = false;
  }
  return os.str();
}

namespace {

// Reducibility of the adjacent pair (a, b): merge of equal-index diagonals,
// scalar move of a diagonal, or a table rule.
enum class StepKind { None, Merge, DiagSwap, Rule };

StepKind classify(const AlgebraSpec& spec, const Gen& a, const Gen& b) {
  if (a.is_diag() && b.is_diag() && a.i == b.i) return StepKind::Merge;
  if (!(b.order_key() < a.order_key())) return StepKind::None;
  if (a.is_diag() || b.is_diag()) return StepKind::DiagSwap;
  return StepKind::Rule;
}

struct Pending {
  Word word;
  Laurent coeff;
};

}  // namespace

NCElement normal_form(const NCElement& e, ReduceStrategy strategy) {
  if (!e.spec()) return e;
  return normal_form_terms(e.spec(), e.terms(), strategy);
}

NCElement normal_form_terms(AlgebraPtr spec, const TermMap& terms, ReduceStrategy strategy) {
  NCElement out(spec);
  const AlgebraSpec& sp = *spec;
  for (const auto& [w0, c0] : terms) {
    std::vector<Pending> stack;
    stack.push_back({w0, c0});
    std::size_t steps = 0;
    while (!stack.empty()) {
      Pending cur = std::move(stack.back());
      stack.pop_back();
      Word& w = cur.word;

      int pos = -1;
      StepKind kind = StepKind::None;
      if (w.size() >= 2) {
        if (strategy == ReduceStrategy::Leftmost) {
          for (std::size_t p = 0; p + 1 < w.size(); ++p) {
            kind = classify(sp, w[p], w[p + 1]);
            if (kind != StepKind::None) {
              pos = int(p);
              break;
            }
          }
        } else {
          for (int p = int(w.size()) - 2; p >= 0; --p) {
            kind = classify(sp, w[p], w[p + 1]);
            if (kind != StepKind::None) {
              pos = p;
              break;
            }
          }
        }
      }
      if (pos < 0) {
        out.add_term(w, cur.coeff);
        continue;
      }
      if (++steps > sp.rewrite_cap)
        throw NonTermination("rewrite cap exceeded on word " + word_to_string(w0) + " (in " +
                             sp.name + ")");

      const Gen a = w[pos], b = w[pos + 1];
      switch (kind) {
        case StepKind::Merge: {
          int e2 = a.e + b.e;
          Word nw;
          nw.reserve(w.size() - (e2 == 0 ? 2 : 1));
          nw.insert(nw.end(), w.begin(), w.begin() + pos);
          if (e2 != 0) nw.push_back(Gen::diag(a.i, e2));
          nw.insert(nw.end(), w.begin() + pos + 2, w.end());
          stack.push_back({std::move(nw), std::move(cur.coeff)});
          break;
        }
        case StepKind::DiagSwap: {
          int qexp = 0;
          if (a.is_diag() && b.is_diag()) {
            qexp = 0;  // distinct diagonal indices commute
          } else if (a.is_diag()) {
            qexp = sp.diag_exponent(a.i, b) * a.e;
          } else {
            qexp = -sp.diag_exponent(b.i, a) * b.e;
          }
          Word nw = w;
          std::swap(nw[pos], nw[pos + 1]);
          Laurent nc = qexp == 0 ? std::move(cur.coeff)
                                 : cur.coeff.mono_shifted(Rational(1), [&] {
                                     ExpVec ev{};
                                     ev[VQ] = qexp;
                                     return ev;
                                   }());
          stack.push_back({std::move(nw), std::move(nc)});
          break;
        }
        case StepKind::Rule: {
          auto it = sp.rules.find(pair_code(a, b));
          if (it == sp.rules.end())
            throw std::logic_error("no rewrite rule for " + a.to_string() + " * " + b.to_string() +
                                   " in " + sp.name);
          for (const auto& [rw, rc] : it->second) {
            Word nw;
            nw.reserve(w.size() - 2 + rw.size());
            nw.insert(nw.end(), w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            stack.push_back({std::move(nw), cur.coeff * rc});
          }
          break;
        }
        case StepKind::None:
          break;
      }
    }
  }
  return out;
}

NCElement nc_mul(const NCElement& a, const NCElement& b) {
  AlgebraPtr spec = a.spec() ? a.spec() : b.spec();
  TermMap prod;
  for (const auto& [w1, c1] : a.terms())
    for (const auto& [w2, c2] : b.terms()) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      auto it = prod.find(w);
      if (it == prod.end()) {
        prod.emplace(std::move(w), c1 * c2);
      } else {
        it->second += c1 * c2;
        if (it->second.is_zero()) prod.erase(it);
      }
    }
  return normal_form_terms(spec, prod);
}

NCElement nc_commutator(const NCElement& a, const NCElement& b) {
  return nc_mul(a, b) - nc_mul(b, a);
}

NCElement nc_pow(const NCElement& a, int k) {
  if (k < 0) throw std::logic_error("nc_pow: negative power");
  NCElement r = NCElement::unit(a.spec());
  for (int i = 0; i < k; ++i) r = nc_mul(r, a);
  return r;
}

ConfluenceReport confluence_probe(const AlgebraPtr& spec, int max_len, int samples,
                                  uint64_t seed) {
  ConfluenceReport rep;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> atom_dist(0, spec->atoms.size() - 1);
  std::uniform_int_distribution<int> exp_dist(-2, 2);
  for (int s = 0; s < samples; ++s) {
    int len = len_dist(rng);
    Word w;
    for (int k = 0; k < len; ++k) {
      Gen g = spec->atoms[atom_dist(rng)];
      if (g.is_diag()) {
        int e = exp_dist(rng);
        if (e == 0) e = 1;
        g = Gen::diag(g.i, e);
      }
      w.push_back(g);
    }
    NCElement m = NCElement::monomial(spec, w);
    NCElement left = normal_form(m, ReduceStrategy::Leftmost);
    NCElement right = normal_form(m, ReduceStrategy::Rightmost);
    ++rep.samples;
    if (left != right) {
      ++rep.divergences;
      rep.witnesses.push_back(word_to_string(w));
    }
  }
  return rep;
}

std::size_t rewrite_cap_from_env(std::size_t fallback) {
  if (const char* v = std::getenv("TQA_REWRITE_CAP")) {
    char* end = nullptr;
    unsigned long long cap = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && cap > 0) return cap;
  }
  return fallback;
}

}  // namespace tqa

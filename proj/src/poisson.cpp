#include "tqa/poisson.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace tqa {

namespace {
int lt(int a, int b) { return a < b ? 1 : 0; }
int dlt(int a, int b) { return a == b ? 1 : 0; }
}  // namespace

bool PoissonSpec::supported(int i, int j) const {
  if (i < 1 || j < 1 || i > N || j > N) return false;
  if (family == PoissonFamily::Orth) return i > j;
  return j <= i || (j == i + 1 && i % 2 == 1);
}

CommPoly PoissonSpec::entry(int i, int j) const {
  if (supported(i, j)) return CommPoly::variable(pvar::a(i, j));
  if (family == PoissonFamily::Orth && i >= 1 && j >= 1 && i == j && i <= N) return CommPoly(1);
  return CommPoly();
}

CommPoly PoissonSpec::gen_bracket(int32_t x, int32_t y) const {
  auto pit = patches.find({x, y});
  if (pit != patches.end()) return pit->second;
  pit = patches.find({y, x});
  if (pit != patches.end()) return -pit->second;

  if (x == y) return CommPoly();
  const int i = pvar::a_row(x), j = pvar::a_col(x);
  const int k = pvar::a_row(y), l = pvar::a_col(y);

  if (family == PoissonFamily::Symp) {
    // {a_ij,a_kl} = (d_ik+d_jk-d_il-d_jl) a_ij a_kl - 2 (d_{l<j}-d_{i<k}) a_kj a_il
    //               - 2 d_{l<i} a_ki a_lj + 2 d_{j<k} a_ik a_jl
    CommPoly r = (entry(i, j) * entry(k, l)).scaled(Rational(dlt(i, k) + dlt(j, k) - dlt(i, l) -
                                                             dlt(j, l)));
    r -= (entry(k, j) * entry(i, l)).scaled(Rational(2 * (lt(l, j) - lt(i, k))));
    r -= (entry(k, i) * entry(l, j)).scaled(Rational(2 * lt(l, i)));
    r += (entry(i, k) * entry(j, l)).scaled(Rational(2 * lt(j, k)));
    return r;
  }

  // Orthogonal case: the six displayed forms plus antisymmetry.
  if (j == k) {
    // {a_ij, a_jl} = a_ij a_jl - 2 a_il   (i > j > l)
    return entry(i, j) * entry(j, l) - CommPoly(2) * entry(i, l);
  }
  if (i == k) {
    // same row: {a_ij, a_il} = a_ij a_il - 2 a_lj for i > l > j
    if (l > j) return entry(i, j) * entry(i, l) - CommPoly(2) * entry(l, j);
    return -gen_bracket(y, x);
  }
  if (j == l) {
    // same column: {a_ij, a_kj} = a_ij a_kj - 2 a_ki for k > i > j
    if (k > i) return entry(i, j) * entry(k, j) - CommPoly(2) * entry(k, i);
    return -gen_bracket(y, x);
  }
  if (i == l) return -gen_bracket(y, x);
  if (i > k) {
    if (j > k) return CommPoly();                      // i > j > k > l
    if (k > j && l > j) return CommPoly();             // i > k > l > j
    // i > k > j > l
    return (entry(i, k) * entry(j, l) - entry(k, j) * entry(i, l)).scaled(Rational(2));
  }
  return -gen_bracket(y, x);
}

PoissonSpec build_poisson_o(int N) {
  if (N < 2) throw std::invalid_argument("build_poisson_o: N >= 2");
  PoissonSpec sp;
  sp.family = PoissonFamily::Orth;
  sp.N = N;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j < i; ++j) sp.gens.push_back(pvar::a(i, j));
  return sp;
}

PoissonSpec build_poisson_sp(int n) {
  if (n < 1) throw std::invalid_argument("build_poisson_sp: n >= 1");
  PoissonSpec sp;
  sp.family = PoissonFamily::Symp;
  sp.N = 2 * n;
  for (int i = 1; i <= sp.N; ++i) {
    for (int j = 1; j <= i; ++j) sp.gens.push_back(pvar::a(i, j));
    if (i % 2 == 1) sp.gens.push_back(pvar::a(i, i + 1));
  }
  return sp;
}

CommPoly bracket(const CommPoly& f, const CommPoly& g, const PoissonSpec& spec) {
  CommPoly out;
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) {
      for (std::size_t a = 0; a < m1.size(); ++a) {
        if (!pvar::is_a(m1[a].first)) continue;
        for (std::size_t b = 0; b < m2.size(); ++b) {
          if (!pvar::is_a(m2[b].first)) continue;
          CommPoly gb = spec.gen_bracket(m1[a].first, m2[b].first);
          if (gb.is_zero()) continue;
          PMono r1 = m1;
          if (r1[a].second == 1)
            r1.erase(r1.begin() + a);
          else
            --r1[a].second;
          PMono r2 = m2;
          if (r2[b].second == 1)
            r2.erase(r2.begin() + b);
          else
            --r2[b].second;
          CommPoly partial;
          partial.add_term(r1, c1 * c2 * m1[a].second * m2[b].second);
          CommPoly rest;
          rest.add_term(r2, Rational(1));
          out += partial * rest * gb;
        }
      }
    }
  }
  return out;
}

std::vector<CheckResult> check_jacobi(const PoissonSpec& spec) {
  std::vector<CheckResult> out;
  const auto& g = spec.gens;
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = a; b < g.size(); ++b)
      for (std::size_t c = b; c < g.size(); ++c) {
        CommPoly fa = CommPoly::variable(g[a]);
        CommPoly fb = CommPoly::variable(g[b]);
        CommPoly fc = CommPoly::variable(g[c]);
        CommPoly jac = bracket(fa, bracket(fb, fc, spec), spec) +
                       bracket(fb, bracket(fc, fa, spec), spec) +
                       bracket(fc, bracket(fa, fb, spec), spec);
        CheckResult r;
        r.id = "jacobi:" + pvar::name(g[a]) + "," + pvar::name(g[b]) + "," + pvar::name(g[c]);
        r.pass = jac.is_zero();
        if (!r.pass) r.witness = jac.to_string();
        out.push_back(std::move(r));
      }
  return out;
}

CommPoly classical_limit(const NCElement& e) {
  CommPoly out;
  for (const auto& [w, coeff] : e.terms()) {
    PMono avars;
    for (const Gen& gen : w) {
      if (gen.kind != GenKind::S)
        throw std::logic_error("classical_limit: non-twisted generator " + gen.to_string());
      PMono one{{pvar::a(gen.i, gen.j), 1}};
      PMono merged;
      std::size_t i = 0, j = 0;
      while (i < avars.size() && j < one.size()) {
        if (avars[i].first == one[j].first) {
          merged.emplace_back(avars[i].first, avars[i].second + one[j].second);
          ++i, ++j;
        } else if (avars[i].first < one[j].first) {
          merged.push_back(avars[i++]);
        } else {
          merged.push_back(one[j++]);
        }
      }
      while (i < avars.size()) merged.push_back(avars[i++]);
      while (j < one.size()) merged.push_back(one[j++]);
      avars = std::move(merged);
    }
    Laurent c1 = coeff.eval_q1();
    for (const auto& [ev, c] : c1.terms()) {
      if (ev[VV] != 0 || ev[VW] != 0)
        throw std::logic_error("classical_limit: unexpected spectral letters");
      PMono m = avars;
      if (ev[VLAM] != 0) m.insert(m.begin(), {pvar::lam, ev[VLAM]});
      if (ev[VU] != 0) m.insert(m.begin(), {pvar::u, ev[VU]});
      std::sort(m.begin(), m.end());
      CommPoly t;
      t.add_term(m, c);
      out += t;
    }
  }
  return out;
}

namespace {

NCElement lift_to_quantum(const CommPoly& f, const AlgebraPtr& algebra, uint64_t seed,
                          uint64_t salt) {
  NCElement out(algebra);
  std::mt19937_64 rng(seed ^ (salt * 0x9e3779b97f4a7c15ull));
  for (const auto& [m, c] : f.terms()) {
    Word w;
    for (const auto& [code, e] : m) {
      if (!pvar::is_a(code))
        throw std::logic_error("bracket_via_quantum: cannot lift " + pvar::name(code));
      if (e < 0) throw std::logic_error("bracket_via_quantum: negative exponent");
      for (int r = 0; r < e; ++r) w.push_back(Gen::s(pvar::a_row(code), pvar::a_col(code)));
    }
    if (seed != 0) std::shuffle(w.begin(), w.end(), rng);
    out += NCElement::monomial(algebra, w, Laurent(c));
  }
  return out;
}

}  // namespace

CommPoly bracket_via_quantum(const CommPoly& f, const CommPoly& g, const AlgebraPtr& algebra,
                             uint64_t lift_seed) {
  NCElement F = lift_to_quantum(f, algebra, lift_seed, 1);
  NCElement G = lift_to_quantum(g, algebra, lift_seed, 2);
  NCElement comm = nc_mul(F, G) - nc_mul(G, F);
  CommPoly out;
  for (const auto& [w, coeff] : comm.terms()) {
    Laurent rate = coeff.classical_rate();
    NCElement word_elem = NCElement::monomial(algebra, w, rate);
    out += classical_limit(word_elem);
  }
  return out;
}

CommPoly PoissonMap::apply(const CommPoly& f) const {
  CommPoly out;
  for (const auto& [m, c] : f.terms()) {
    CommPoly term(c);
    for (const auto& [code, e] : m) {
      auto it = images.find(code);
      if (it == images.end()) {
        term *= CommPoly::variable(code, e);
      } else {
        if (e < 0) throw std::logic_error("poisson map: negative exponent");
        term *= it->second.pow(e);
      }
    }
    out += term;
  }
  return out;
}

PoissonMap braid_poisson(int N, int i) {
  if (i < 1 || i > N - 1) throw std::invalid_argument("braid_poisson: index range");
  PoissonMap m;
  m.name = "pbeta_" + std::to_string(i);
  auto A = [](int r, int c) { return CommPoly::variable(pvar::a(r, c)); };
  m.images[pvar::a(i + 1, i)] = -A(i + 1, i);
  for (int k = 1; k <= i - 1; ++k) {
    m.images[pvar::a(i, k)] = A(i + 1, k) - A(i + 1, i) * A(i, k);
    m.images[pvar::a(i + 1, k)] = A(i, k);
  }
  for (int l = i + 2; l <= N; ++l) {
    m.images[pvar::a(l, i)] = A(l, i + 1) - A(l, i) * A(i + 1, i);
    m.images[pvar::a(l, i + 1)] = A(l, i);
  }
  return m;
}

CommPoly a_inverse_entry(int k, int l) {
  if (k == l) return CommPoly(1);
  if (k < l) return CommPoly();
  CommPoly out;
  int span = k - l - 1;
  for (uint32_t mask = 0; mask < (1u << span); ++mask) {
    PMono m;
    int prev = k;
    int p = 0;
    auto push = [&m](int r, int c) {
      PMono one{{pvar::a(r, c), 1}};
      PMono merged;
      std::size_t i = 0, j = 0;
      while (i < m.size() && j < one.size()) {
        if (m[i].first == one[j].first) {
          merged.emplace_back(m[i].first, m[i].second + 1);
          ++i, ++j;
        } else if (m[i].first < one[j].first) {
          merged.push_back(m[i++]);
        } else {
          merged.push_back(one[j++]);
        }
      }
      while (i < m.size()) merged.push_back(m[i++]);
      while (j < one.size()) merged.push_back(one[j++]);
      m = std::move(merged);
    };
    for (int r = k - 1; r >= l + 1; --r) {
      if (mask & (1u << (r - l - 1))) {
        push(prev, r);
        prev = r;
        ++p;
      }
    }
    push(prev, l);
    CommPoly t;
    t.add_term(m, Rational(p % 2 == 0 ? -1 : 1));  // (-1)^{p+1}
    out += t;
  }
  return out;
}

PoissonMap poisson_inv(int N) {
  PoissonMap m;
  m.name = "varrho";
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l < k; ++l) m.images[pvar::a(k, l)] = a_inverse_entry(k, l);
  return m;
}

PoissonMap poisson_flip(int N) {
  PoissonMap m;
  m.name = "varpi";
  for (int k = 1; k <= N; ++k)
    for (int l = 1; l < k; ++l)
      m.images[pvar::a(k, l)] = CommPoly::variable(pvar::a(N - l + 1, N - k + 1));
  return m;
}

namespace {

std::vector<CheckResult> map_bracket_check(const PoissonSpec& spec, const PoissonMap& m,
                                           int sign) {
  std::vector<CheckResult> out;
  for (std::size_t a = 0; a < spec.gens.size(); ++a)
    for (std::size_t b = a; b < spec.gens.size(); ++b) {
      CommPoly x = CommPoly::variable(spec.gens[a]);
      CommPoly y = CommPoly::variable(spec.gens[b]);
      CommPoly lhs = bracket(m.apply(x), m.apply(y), spec);
      CommPoly rhs = m.apply(bracket(x, y, spec)).scaled(Rational(sign));
      CheckResult r;
      r.id = m.name + ":" + pvar::name(spec.gens[a]) + "," + pvar::name(spec.gens[b]);
      r.pass = lhs == rhs;
      if (!r.pass) r.witness = lhs.to_string() + " != " + rhs.to_string();
      out.push_back(std::move(r));
    }
  return out;
}

}  // namespace

std::vector<CheckResult> bracket_invariance_check(const PoissonSpec& spec, const PoissonMap& m) {
  return map_bracket_check(spec, m, 1);
}

std::vector<CheckResult> bracket_reversal_check(const PoissonSpec& spec, const PoissonMap& m) {
  return map_bracket_check(spec, m, -1);
}

std::vector<CheckResult> rmatrix_bracket_check(const PoissonSpec& spec) {
  const int N = spec.N;
  const int D = N * N;
  using Mat = std::vector<std::vector<CommPoly>>;
  auto zeros = [D] { return Mat(D, std::vector<CommPoly>(D)); };
  auto idx = [N](int a, int b) { return (a - 1) * N + (b - 1); };

  Mat a1 = zeros(), a2 = zeros(), r = zeros(), rt = zeros();
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      CommPoly eij = spec.entry(i, j);
      for (int k = 1; k <= N; ++k) {
        a1[idx(i, k)][idx(j, k)] += eij;
        a2[idx(k, i)][idx(k, j)] += eij;
      }
    }
  for (int i = 1; i <= N; ++i) r[idx(i, i)][idx(i, i)] += CommPoly(1);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) r[idx(i, j)][idx(j, i)] += CommPoly(2);
  // r^t = sum_i E_ii (x) E_ii + 2 sum_{i<j} E_ji (x) E_ji
  for (int i = 1; i <= N; ++i) rt[idx(i, i)][idx(i, i)] += CommPoly(1);
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) rt[idx(j, j)][idx(i, i)] += CommPoly(2);

  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z = zeros();
    for (int a = 0; a < D; ++a)
      for (int c = 0; c < D; ++c) {
        if (x[a][c].is_zero()) continue;
        for (int b = 0; b < D; ++b) {
          if (y[c][b].is_zero()) continue;
          z[a][b] += x[a][c] * y[c][b];
        }
      }
    return z;
  };
  auto sub = [&](Mat x, const Mat& y) {
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) x[a][b] -= y[a][b];
    return x;
  };

  Mat a12 = mul(a1, a2);
  Mat rhs = sub(mul(r, a12), mul(a12, r));
  rhs = [&] {
    Mat t = mul(mul(a1, rt), a2);
    Mat t2 = mul(mul(a2, rt), a1);
    Mat x = rhs;
    for (int a = 0; a < D; ++a)
      for (int b = 0; b < D; ++b) x[a][b] += t[a][b] - t2[a][b];
    return x;
  }();

  std::vector<CheckResult> out;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          CommPoly lhs = bracket(spec.entry(i, j), spec.entry(k, l), spec);
          CommPoly want = rhs[idx(i, k)][idx(j, l)];
          CheckResult res;
          std::ostringstream os;
          os << "rmatrix:" << i << j << "," << k << l;
          res.id = os.str();
          res.pass = lhs == want;
          if (!res.pass) res.witness = lhs.to_string() + " != " + want.to_string();
          out.push_back(std::move(res));
        }
  return out;
}

}  // namespace tqa

#include "tqa/algebras.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace tqa {

namespace {

int dlt(int a, int b) { return a == b ? 1 : 0; }
int lt(int a, int b) { return a < b ? 1 : 0; }

void add_product(TermMap& out, const Laurent& c, const GenValue& g1, const GenValue& g2) {
  if (c.is_zero() || g1.tag == GenValue::Zero || g2.tag == GenValue::Zero) return;
  Word w;
  if (g1.tag == GenValue::Atom) w.push_back(g1.gen);
  if (g2.tag == GenValue::Atom) w.push_back(g2.gen);
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(std::move(w), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

Laurent qp(int e) { return Laurent::q(e); }
Laurent qmqi() { return Laurent::q_minus_qinv(); }

// Solves a relation instance for the product g*h: the instance must contain
// the word [g h] with a monomial coefficient after collection.
TermMap solve_for_pair(const TermMap& rel, const Gen& g, const Gen& h, const std::string& ctx) {
  Word key{g, h};
  auto it = rel.find(key);
  if (it == rel.end())
    throw std::logic_error("rule solver: product " + word_to_string(key) + " absent in " + ctx);
  Laurent coeff = it->second;
  TermMap rule;
  for (const auto& [w, c] : rel) {
    if (w == key) continue;
    rule.emplace(w, (-c).div_exact(coeff));
  }
  return rule;
}

std::string idx4(const char* tag, int i, int j, int k, int l) {
  std::ostringstream os;
  os << tag << "-" << i << "." << j << "." << k << "." << l;
  return os.str();
}

}  // namespace

TermMap rel_gl_tt(const AlgebraSpec& sp, int i, int a, int j, int b) {
  TermMap r;
  auto T = [&](int x, int y) { return sp.resolve(GenKind::T, x, y); };
  add_product(r, qp(dlt(i, j)), T(i, a), T(j, b));
  add_product(r, -qp(dlt(a, b)), T(j, b), T(i, a));
  add_product(r, -qmqi().scaled(Rational(lt(b, a) - lt(i, j))), T(j, a), T(i, b));
  return r;
}

TermMap rel_gl_bb(const AlgebraSpec& sp, int i, int a, int j, int b) {
  TermMap r;
  auto B = [&](int x, int y) { return sp.resolve(GenKind::TBAR, x, y); };
  add_product(r, qp(dlt(i, j)), B(i, a), B(j, b));
  add_product(r, -qp(dlt(a, b)), B(j, b), B(i, a));
  add_product(r, -qmqi().scaled(Rational(lt(b, a) - lt(i, j))), B(j, a), B(i, b));
  return r;
}

TermMap rel_gl_bt(const AlgebraSpec& sp, int i, int a, int j, int b) {
  TermMap r;
  auto T = [&](int x, int y) { return sp.resolve(GenKind::T, x, y); };
  auto B = [&](int x, int y) { return sp.resolve(GenKind::TBAR, x, y); };
  add_product(r, qp(dlt(i, j)), B(i, a), T(j, b));
  add_product(r, -qp(dlt(a, b)), T(j, b), B(i, a));
  add_product(r, -qmqi().scaled(Rational(lt(b, a))), T(j, a), B(i, b));
  add_product(r, qmqi().scaled(Rational(lt(i, j))), B(j, a), T(i, b));
  return r;
}

TermMap rel_reflection(const AlgebraSpec& sp, int i, int j, int k, int l) {
  TermMap r;
  auto S = [&](int x, int y) { return sp.resolve(GenKind::S, x, y); };
  add_product(r, qp(dlt(j, k) + dlt(i, k)), S(i, j), S(k, l));
  add_product(r, -qp(dlt(j, l) + dlt(i, l)), S(k, l), S(i, j));
  add_product(r, (qmqi() * qp(dlt(i, j))).scaled(Rational(lt(i, k) - lt(l, j))), S(k, j), S(i, l));
  add_product(r, -(qmqi() * qp(dlt(j, l))).scaled(Rational(lt(l, i))), S(k, i), S(l, j));
  add_product(r, (qmqi() * qp(dlt(i, k))).scaled(Rational(lt(j, k))), S(i, k), S(j, l));
  add_product(r, -(qmqi() * qmqi()).scaled(Rational((lt(l, j) & lt(j, i)) - (lt(j, i) & lt(i, k)))),
              S(k, i), S(j, l));
  return r;
}

namespace {

// The six explicit forms of the reflection relations in the orthogonal
// algebra; `which` selects the case, indices as displayed.
TermMap rel_o_case(const AlgebraSpec& sp, int which, int i, int j, int k, int l) {
  TermMap r;
  auto S = [&](int x, int y) { return sp.resolve(GenKind::S, x, y); };
  switch (which) {
    case 1:  // i>j>k>l: commuting
    case 2:  // i>k>l>j: commuting
      add_product(r, Laurent::one(), S(i, j), S(k, l));
      add_product(r, -Laurent::one(), S(k, l), S(i, j));
      break;
    case 3:  // i>k>j>l
      add_product(r, Laurent::one(), S(i, j), S(k, l));
      add_product(r, -Laurent::one(), S(k, l), S(i, j));
      add_product(r, -qmqi(), S(k, j), S(i, l));
      add_product(r, qmqi(), S(i, k), S(j, l));
      break;
    case 4:  // i>j>l: q s_ij s_jl - s_jl s_ij = (q-q^-1) s_il
      add_product(r, qp(1), S(i, j), S(j, l));
      add_product(r, -Laurent::one(), S(j, l), S(i, j));
      add_product(r, -qmqi(), S(i, l), GenValue::unit());
      break;
    case 5:  // i>l>j: q s_ij s_il - s_il s_ij = (q-q^-1) s_lj
      add_product(r, qp(1), S(i, j), S(i, l));
      add_product(r, -Laurent::one(), S(i, l), S(i, j));
      add_product(r, -qmqi(), S(l, j), GenValue::unit());
      break;
    case 6:  // k>i>j: q s_ij s_kj - s_kj s_ij = (q-q^-1) s_ki
      add_product(r, qp(1), S(i, j), S(k, j));
      add_product(r, -Laurent::one(), S(k, j), S(i, j));
      add_product(r, -qmqi(), S(k, i), GenValue::unit());
      break;
    default:
      throw std::logic_error("bad case");
  }
  return r;
}

void build_gl_rules(AlgebraSpec& sp) {
  const int N = sp.n;
  // Non-diagonal atom pairs, oriented: the left factor is larger.
  for (const Gen& g : sp.atoms) {
    if (g.is_diag()) continue;
    for (const Gen& h : sp.atoms) {
      if (h.is_diag()) continue;
      if (!(h.order_key() < g.order_key())) continue;
      TermMap rel;
      std::string ctx = g.to_string() + "*" + h.to_string();
      if (g.kind == GenKind::T && h.kind == GenKind::T)
        rel = rel_gl_tt(sp, g.i, g.j, h.i, h.j);
      else if (g.kind == GenKind::TBAR && h.kind == GenKind::TBAR)
        rel = rel_gl_bb(sp, g.i, g.j, h.i, h.j);
      else if (g.kind == GenKind::TBAR && h.kind == GenKind::T)
        rel = rel_gl_bt(sp, g.i, g.j, h.i, h.j);
      else
        throw std::logic_error("unexpected out-of-order pair " + ctx);
      sp.rules.emplace(pair_code(g, h), solve_for_pair(rel, g, h, ctx));
    }
  }
  // q-commutation of the diagonal elements with every non-diagonal atom.
  for (int d = 1; d <= N; ++d) {
    for (const Gen& g : sp.atoms) {
      if (g.is_diag()) continue;
      TermMap rel = g.kind == GenKind::T ? rel_gl_tt(sp, d, d, g.i, g.j)
                                         : rel_gl_bt(sp, g.i, g.j, d, d);
      // rel relates [D g] and [g D] (t-case) or [g D] and [D g] (tbar case,
      // where the displayed relation has tbar first); all other words must
      // have vanished by support.
      Word dg{Gen::diag(d, 1), g}, gd{g, Gen::diag(d, 1)};
      auto it_dg = rel.find(dg);
      auto it_gd = rel.find(gd);
      if (rel.size() != 2 || it_dg == rel.end() || it_gd == rel.end())
        throw std::logic_error("diagonal " + std::to_string(d) + " vs " + g.to_string() +
                               " is not a pure q-commutation");
      Laurent ratio = (-it_gd->second).div_exact(it_dg->second);
      if (ratio.terms().size() != 1 || ratio.terms().begin()->second != 1)
        throw std::logic_error("unexpected diagonal commutation factor " + ratio.to_string());
      sp.diag_comm[(uint64_t(d) << 32) | gen_code(g)] = ratio.terms().begin()->first[VQ];
    }
  }
}

void build_gl_relations(AlgebraSpec& sp) {
  const int N = sp.n;
  auto add = [&](const char* tag, TermMap rel, int i, int a, int j, int b) {
    sp.relations.push_back({idx4(tag, i, a, j, b), std::move(rel)});
  };
  for (int i = 1; i <= N; ++i)
    for (int a = 1; a <= i; ++a)
      for (int j = 1; j <= N; ++j)
        for (int b = 1; b <= j; ++b) add("gl-tt", rel_gl_tt(sp, i, a, j, b), i, a, j, b);
  for (int i = 1; i <= N; ++i)
    for (int a = i; a <= N; ++a)
      for (int j = 1; j <= N; ++j)
        for (int b = j; b <= N; ++b) add("gl-bb", rel_gl_bb(sp, i, a, j, b), i, a, j, b);
  for (int i = 1; i <= N; ++i)
    for (int a = i; a <= N; ++a)
      for (int j = 1; j <= N; ++j)
        for (int b = 1; b <= j; ++b) add("gl-bt", rel_gl_bt(sp, i, a, j, b), i, a, j, b);
}

void build_o_rules(AlgebraSpec& sp) {
  for (const Gen& g : sp.atoms) {
    for (const Gen& h : sp.atoms) {
      if (!(h.order_key() < g.order_key())) continue;
      const int a = g.i, b = g.j, c = h.i, d = h.j;
      std::string ctx = g.to_string() + "*" + h.to_string();
      TermMap rel;
      if (b == d)  // same column, a > c: reversed case 6
        rel = rel_o_case(sp, 6, c, b, a, 0);
      else if (a == c)  // same row, b > d: reversed case 5
        rel = rel_o_case(sp, 5, a, d, 0, b);
      else if (b == c)  // chain a > b = c > d: case 4
        rel = rel_o_case(sp, 4, a, b, 0, d);
      else if (a > b && b > c && c > d)
        rel = rel_o_case(sp, 1, a, b, c, d);
      else if (a > c && c > d && d > b)
        rel = rel_o_case(sp, 2, a, b, c, d);
      else if (a > c && c > b && b > d)
        rel = rel_o_case(sp, 3, a, b, c, d);
      else if (d == a)  // cannot happen for an out-of-order pair
        throw std::logic_error("unexpected pair " + ctx);
      else
        throw std::logic_error("no orientation case for " + ctx);
      sp.rules.emplace(pair_code(g, h), solve_for_pair(rel, g, h, ctx));
    }
  }
}

void build_o_relations(AlgebraSpec& sp) {
  const int N = sp.n;
  auto add = [&](int which, TermMap rel, int i, int j, int k, int l) {
    std::ostringstream os;
    os << "o-case" << which << "-" << i << "." << j << "." << k << "." << l;
    sp.relations.push_back({os.str(), std::move(rel)});
  };
  // Cases 1-3: one instance per 4-subset a>b>c>d of row/column indices.
  for (int a = N; a >= 4; --a)
    for (int b = a - 1; b >= 3; --b)
      for (int c = b - 1; c >= 2; --c)
        for (int d = c - 1; d >= 1; --d) {
          add(1, rel_o_case(sp, 1, a, b, c, d), a, b, c, d);
          add(2, rel_o_case(sp, 2, a, d, b, c), a, d, b, c);
          add(3, rel_o_case(sp, 3, a, c, b, d), a, c, b, d);
        }
  // Cases 4-6: one instance per 3-subset a>b>c.
  for (int a = N; a >= 3; --a)
    for (int b = a - 1; b >= 2; --b)
      for (int c = b - 1; c >= 1; --c) {
        add(4, rel_o_case(sp, 4, a, b, 0, c), a, b, 0, c);
        add(5, rel_o_case(sp, 5, a, c, 0, b), a, c, 0, b);
        add(6, rel_o_case(sp, 6, b, c, a, 0), b, c, a, 0);
      }
}

void build_sp_rules(AlgebraSpec& sp) {
  for (const Gen& g : sp.atoms) {
    for (const Gen& h : sp.atoms) {
      if (!(h.order_key() < g.order_key())) continue;
      std::string ctx = g.to_string() + "*" + h.to_string();
      TermMap rel = rel_reflection(sp, g.i, g.j, h.i, h.j);
      sp.rules.emplace(pair_code(g, h), solve_for_pair(rel, g, h, ctx));
    }
  }
}

std::mutex g_cache_mutex;
std::map<std::pair<int, int>, AlgebraPtr> g_cache;

AlgebraPtr cached_build(AlgebraFamily fam, int n,
                        const std::function<void(AlgebraSpec&)>& fill) {
  std::scoped_lock lock(g_cache_mutex);
  auto key = std::make_pair(static_cast<int>(fam), n);
  auto it = g_cache.find(key);
  if (it != g_cache.end()) return it->second;
  auto sp = std::make_shared<AlgebraSpec>();
  sp->family = fam;
  sp->n = n;
  sp->rewrite_cap = rewrite_cap_from_env(1'000'000);
  fill(*sp);
  AlgebraPtr ptr = sp;
  g_cache.emplace(key, ptr);
  return ptr;
}

}  // namespace

AlgebraPtr build_uq_gl(int N) {
  if (N < 2) throw std::invalid_argument("build_uq_gl: N >= 2 required");
  return cached_build(AlgebraFamily::UqGl, N, [N](AlgebraSpec& sp) {
    sp.name = "uq_gl(" + std::to_string(N) + ")";
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j < i; ++j) sp.atoms.push_back(Gen::t(i, j));
    for (int i = 1; i <= N; ++i) sp.atoms.push_back(Gen::diag(i, 1));
    for (int i = 1; i <= N; ++i)
      for (int j = i + 1; j <= N; ++j) sp.atoms.push_back(Gen::tbar(i, j));
    std::sort(sp.atoms.begin(), sp.atoms.end());
    build_gl_rules(sp);
    build_gl_relations(sp);
  });
}

AlgebraPtr build_uqp_o(int N) {
  if (N < 2) throw std::invalid_argument("build_uqp_o: N >= 2 required");
  return cached_build(AlgebraFamily::UqpO, N, [N](AlgebraSpec& sp) {
    sp.name = "uqp_o(" + std::to_string(N) + ")";
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j < i; ++j) sp.atoms.push_back(Gen::s(i, j));
    std::sort(sp.atoms.begin(), sp.atoms.end());
    build_o_rules(sp);
    build_o_relations(sp);
  });
}

AlgebraPtr build_uqp_sp_ext(int n) {
  if (n < 1) throw std::invalid_argument("build_uqp_sp_ext: n >= 1 required");
  return cached_build(AlgebraFamily::UqpSpExt, n, [n](AlgebraSpec& sp) {
    const int N = 2 * n;
    sp.n = N;
    sp.name = "uqp_sp_ext(" + std::to_string(N) + ")";
    for (int i = 1; i <= N; ++i) {
      for (int j = 1; j <= i; ++j) sp.atoms.push_back(Gen::s(i, j));
      if (i % 2 == 1) sp.atoms.push_back(Gen::s(i, i + 1));
    }
    std::sort(sp.atoms.begin(), sp.atoms.end());
    build_sp_rules(sp);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j)
        for (int k = 1; k <= N; ++k)
          for (int l = 1; l <= N; ++l) {
            TermMap rel = rel_reflection(sp, i, j, k, l);
            if (rel.empty()) continue;
            sp.relations.push_back({idx4("sp-refl", i, j, k, l), std::move(rel)});
          }
  });
}

std::size_t expected_gl_relation_count(int N) {
  std::size_t half = std::size_t(N) * (N + 1) / 2;
  return 3 * half * half;
}

std::vector<AlgebraSpec::Relation> reflection_instances(const AlgebraPtr& spec) {
  std::vector<AlgebraSpec::Relation> out;
  const int N = spec->n;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int k = 1; k <= N; ++k)
        for (int l = 1; l <= N; ++l) {
          TermMap rel = rel_reflection(*spec, i, j, k, l);
          if (rel.empty()) continue;
          out.push_back({idx4("refl", i, j, k, l), std::move(rel)});
        }
  return out;
}

std::vector<AlgebraSpec::Relation> serre_relations(const AlgebraPtr& orth) {
  std::vector<AlgebraSpec::Relation> out;
  const int N = orth->n;
  auto gen = [&](int k) { return NCElement::generator(orth, Gen::s(k + 1, k)); };
  Laurent qq = Laurent::q(1) + Laurent::q(-1);
  Laurent tail = Laurent::q(-1) * Laurent::q_minus_qinv() * Laurent::q_minus_qinv();
  for (int k = 1; k + 1 <= N - 1; ++k) {
    NCElement a = gen(k), b = gen(k + 1);
    // s_k s_{k+1}^2 - (q+q^-1) s_{k+1} s_k s_{k+1} + s_{k+1}^2 s_k + q^-1 (q-q^-1)^2 s_k
    NCElement r1 = nc_mul(a, nc_mul(b, b)) - nc_mul(b, nc_mul(a, b)).scaled(qq) +
                   nc_mul(nc_mul(b, b), a) + a.scaled(tail);
    NCElement r2 = nc_mul(nc_mul(a, a), b) - nc_mul(a, nc_mul(b, a)).scaled(qq) +
                   nc_mul(b, nc_mul(a, a)) + b.scaled(tail);
    out.push_back({"serre-a-" + std::to_string(k), r1.terms()});
    out.push_back({"serre-b-" + std::to_string(k), r2.terms()});
  }
  for (int k = 1; k <= N - 1; ++k)
    for (int l = k + 2; l <= N - 1; ++l) {
      NCElement r = nc_commutator(gen(k), gen(l));
      out.push_back({"serre-comm-" + std::to_string(k) + "." + std::to_string(l), r.terms()});
    }
  return out;
}

AlgebraSpec::Relation generalized_serre_relation(const AlgebraPtr& orth, int k, int i, int j) {
  if (!(k > i && i > j)) throw std::invalid_argument("generalized serre: need k > i > j");
  NCElement sij = NCElement::generator(orth, Gen::s(i, j));
  NCElement ski = NCElement::generator(orth, Gen::s(k, i));
  Laurent qq = Laurent::q(1) + Laurent::q(-1);
  Laurent tail = Laurent::q(-1) * Laurent::q_minus_qinv() * Laurent::q_minus_qinv();
  NCElement r = nc_mul(sij, nc_mul(ski, ski)) - nc_mul(ski, nc_mul(sij, ski)).scaled(qq) +
                nc_mul(nc_mul(ski, ski), sij) + sij.scaled(tail);
  std::ostringstream os;
  os << "gen-serre-" << k << "." << i << "." << j;
  return {os.str(), r.terms()};
}

NCElement s_from_serre_generators(const AlgebraPtr& orth, int k, int l) {
  if (!(k > l)) throw std::invalid_argument("s_from_serre_generators: need k > l");
  if (k == l + 1) return NCElement::generator(orth, Gen::s(k, l));
  int j = l + 1;
  NCElement skj = s_from_serre_generators(orth, k, j);
  NCElement sjl = s_from_serre_generators(orth, j, l);
  NCElement num = nc_mul(skj, sjl).scaled(Laurent::q(1)) - nc_mul(sjl, skj);
  return num.div_coeffs_exact(Laurent::q_minus_qinv());
}

std::vector<CheckResult> check_relation_set(const AlgebraPtr& spec,
                                            const std::vector<AlgebraSpec::Relation>& relations) {
  std::vector<CheckResult> out(relations.size());
  for (std::size_t idx = 0; idx < relations.size(); ++idx) {
    NCElement nf = normal_form_terms(spec, relations[idx].element);
    out[idx].id = relations[idx].id;
    out[idx].pass = nf.is_zero();
    if (!out[idx].pass) out[idx].witness = nf.to_string();
  }
  return out;
}

GenMap embed_o_in_gl(int N) {
  GenMap m;
  m.name = "embed-o-gl";
  m.source = build_uqp_o(N);
  m.target = build_uq_gl(N);
  for (const Gen& g : m.source->atoms) {
    TermMap img;
    for (int k = g.j; k <= g.i; ++k)
      add_product(img, Laurent::one(), m.target->resolve(GenKind::T, g.i, k),
                  m.target->resolve(GenKind::TBAR, g.j, k));
    m.set_image(g, normal_form_terms(m.target, img));
  }
  return m;
}

GenMap embed_sp_in_gl(int n) {
  GenMap m;
  m.name = "embed-sp-gl";
  m.source = build_uqp_sp_ext(n);
  m.target = build_uq_gl(2 * n);
  for (const Gen& g : m.source->atoms) {
    TermMap img;
    for (int k = 1; k <= n; ++k) {
      add_product(img, Laurent::q(1), m.target->resolve(GenKind::T, g.i, 2 * k - 1),
                  m.target->resolve(GenKind::TBAR, g.j, 2 * k));
      add_product(img, -Laurent::one(), m.target->resolve(GenKind::T, g.i, 2 * k),
                  m.target->resolve(GenKind::TBAR, g.j, 2 * k - 1));
    }
    m.set_image(g, normal_form_terms(m.target, img));
  }
  return m;
}

}  // namespace tqa

#include "tqa/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

namespace tqa {

PMatrix stokes_matrix(const PoissonSpec& spec) {
  PMatrix a = pmat_zero(spec.N);
  for (int i = 1; i <= spec.N; ++i)
    for (int j = 1; j <= spec.N; ++j) a[i - 1][j - 1] = spec.entry(i, j);
  return a;
}

PMatrix stokes_inverse(const PoissonSpec& spec) {
  if (spec.family != PoissonFamily::Orth)
    throw std::invalid_argument("stokes_inverse: orthogonal family only");
  PMatrix r = pmat_identity(spec.N);
  for (int k = 1; k <= spec.N; ++k)
    for (int l = 1; l < k; ++l) r[k - 1][l - 1] = a_inverse_entry(k, l);
  return r;
}

std::vector<CommPoly> charpoly_coeffs(const PoissonSpec& spec) {
  PMatrix a = stokes_matrix(spec);
  PMatrix at = pmat_transpose(a);
  CommPoly lam = CommPoly::variable(pvar::lam);
  PMatrix m = pmat_add(a, pmat_scale(at, lam));
  CommPoly det = pmat_det(m);
  std::vector<CommPoly> coeffs;
  for (int k = 0; k <= spec.N; ++k) coeffs.push_back(det.coeff_of(pvar::lam, k));
  return coeffs;
}

std::vector<CheckResult> casimir_check(const CommPoly& f, const PoissonSpec& spec,
                                       const std::string& id, RunMode mode) {
  return run_indexed<CheckResult>(
      spec.gens.size(),
      [&](std::size_t k) {
        CheckResult r;
        r.id = id + ":" + pvar::name(spec.gens[k]);
        CommPoly b = bracket(f, CommPoly::variable(spec.gens[k]), spec);
        r.pass = b.is_zero();
        if (!r.pass) r.witness = b.to_string();
        return r;
      },
      mode);
}

CommPoly pf_I(const PMatrix& b, const std::vector<int>& I) {
  PMatrix skew = pmat_sub(pmat_transpose(b), b);
  const int m = int(I.size());
  PMatrix sub(m, std::vector<CommPoly>(m));
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) sub[r][c] = skew[I[r] - 1][I[c] - 1];
  return pmat_pfaffian(sub);
}

namespace {

void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  if (k == 0) {
    std::vector<int> empty;
    fn(empty);
    return;
  }
  while (true) {
    fn(idx);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - (k - 1 - p)) --p;
    if (p < 0) break;
    ++idx[p];
    for (int t = p + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

CommPoly c_k(int N, int k) {
  if (k == 0) return CommPoly(1);
  if (2 * k > N) throw std::invalid_argument("c_k: need 2k <= N");
  PoissonSpec spec = build_poisson_o(N);
  PMatrix a = stokes_matrix(spec);
  PMatrix ainv = stokes_inverse(spec);
  CommPoly total;
  for_each_subset(N, 2 * k, [&](const std::vector<int>& I) {
    total += pf_I(a, I) * pf_I(ainv, I);
  });
  return (k % 2 == 0) ? total : -total;
}

CheckResult identity_3_8_check(int N) {
  PoissonSpec spec = build_poisson_o(N);
  CommPoly lam = CommPoly::variable(pvar::lam);
  CommPoly lhs = pmat_det(pmat_add(stokes_matrix(spec), pmat_scale(pmat_transpose(stokes_matrix(spec)), lam)));
  CommPoly rhs;
  CommPoly one_lam = CommPoly(1) + lam;
  for (int k = 0; 2 * k <= N; ++k) {
    CommPoly term = c_k(N, k) * one_lam.pow(N - 2 * k) * (-lam).pow(k);
    rhs += term;
  }
  CheckResult r;
  r.id = "identity-det-ck-N" + std::to_string(N);
  r.pass = lhs == rhs;
  if (!r.pass) r.witness = (lhs - rhs).to_string();
  return r;
}

CommPoly trace_invariant(int N, int k) {
  PoissonSpec spec = build_poisson_o(N);
  PMatrix h = pmat_mul(stokes_inverse(spec), pmat_transpose(stokes_matrix(spec)));
  PMatrix p = pmat_identity(N);
  for (int t = 0; t < k; ++t) p = pmat_mul(p, h);
  return pmat_trace(p);
}

CheckResult liouville_check(int N, int maxk) {
  PoissonSpec spec = build_poisson_o(N);
  PMatrix h = pmat_mul(stokes_inverse(spec), pmat_transpose(stokes_matrix(spec)));
  CommPoly lam = CommPoly::variable(pvar::lam);
  CommPoly det = pmat_det(pmat_add(pmat_identity(N), pmat_scale(h, lam)));
  // power series inverse of det (constant term 1) through degree maxk - 1
  std::vector<CommPoly> p(maxk), inv(maxk);
  for (int e = 0; e < maxk; ++e) p[e] = det.coeff_of(pvar::lam, e);
  inv[0] = CommPoly(1);
  for (int m = 1; m < maxk; ++m) {
    CommPoly acc;
    for (int i = 1; i <= m; ++i) acc += p[i] * inv[m - i];
    inv[m] = -acc;
  }
  // derivative d/dlam det, truncated
  std::vector<CommPoly> dp(maxk);
  for (int e = 0; e + 1 <= N && e < maxk; ++e)
    dp[e] = det.coeff_of(pvar::lam, e + 1).scaled(Rational(e + 1));
  // logarithmic derivative coefficients
  std::vector<CommPoly> logd(maxk);
  for (int m = 0; m < maxk; ++m) {
    CommPoly acc;
    for (int i = 0; i <= m; ++i) acc += dp[i] * inv[m - i];
    logd[m] = acc;
  }
  CheckResult r;
  r.id = "liouville-N" + std::to_string(N) + "-k" + std::to_string(maxk);
  r.pass = true;
  PMatrix pw = h;
  for (int k = 1; k <= maxk; ++k) {
    CommPoly lhs = pmat_trace(pw).scaled(Rational(k % 2 == 1 ? 1 : -1));
    if (k - 1 < maxk && lhs != logd[k - 1]) {
      r.pass = false;
      r.witness = "degree " + std::to_string(k - 1);
      break;
    }
    pw = pmat_mul(pw, h);
  }
  return r;
}

std::vector<CheckResult> restriction_check(int N, int maxk) {
  const int n = N / 2;
  std::vector<CheckResult> out;
  auto restrict_poly = [&](const CommPoly& f) {
    CommPoly r = f;
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j < i; ++j) {
        CommPoly value;  // zero
        if (N % 2 == 0 && i == n + j) value = CommPoly::variable(pvar::d(j));
        if (N % 2 == 1 && i == n + 1 + j) value = CommPoly::variable(pvar::d(j));
        r = r.subst(pvar::a(i, j), value);
      }
    return r;
  };
  for (int k = 1; k <= maxk && 2 * k <= N; ++k) {
    CommPoly lhs = restrict_poly(c_k(N, k));
    CommPoly rhs;
    for_each_subset(n, k, [&](const std::vector<int>& I) {
      CommPoly term(1);
      for (int i : I) term *= CommPoly::variable(pvar::d(i), 2);
      rhs += term;
    });
    CheckResult r;
    r.id = "restriction-N" + std::to_string(N) + "-c" + std::to_string(k);
    r.pass = lhs == rhs;
    if (!r.pass) r.witness = (lhs - rhs).to_string();
    out.push_back(std::move(r));
  }
  return out;
}

NCElement s_plus(const AlgebraPtr& orth, int i, int j) {
  if (!(i > j)) throw std::invalid_argument("s_plus: need i > j");
  return s_inverse_entry(orth, i, j).scaled(-Laurent::q(i - j - 1));
}

NCElement s_plus_recursive(const AlgebraPtr& orth, int i, int j) {
  if (!(i > j)) throw std::invalid_argument("s_plus_recursive: need i > j");
  if (i == j + 1) return NCElement::generator(orth, Gen::s(i, j));
  NCElement up = s_plus_recursive(orth, i, j + 1);
  NCElement step = NCElement::generator(orth, Gen::s(j + 1, j));
  NCElement num = nc_mul(up, step) - nc_mul(step, up).scaled(Laurent::q());
  return num.div_coeffs_exact(Laurent::q_minus_qinv());
}

namespace {

// Permutations of {0..2k-1} with sigma(2m+1) > sigma(2m) and
// sigma(1) < sigma(3) < ... (0-based positions); the paper's constraint set.
std::vector<std::vector<int>> pfaffian_permutations(int twok) {
  std::vector<int> perm(twok);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> good;
  do {
    bool ok = true;
    for (int m = 0; m + 1 < twok; m += 2)
      if (perm[m + 1] < perm[m]) ok = false;
    for (int m = 1; m + 2 < twok; m += 2)
      if (perm[m] > perm[m + 2]) ok = false;
    if (ok) good.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return good;
}

int inversions(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

}  // namespace

NCElement phi_I(const AlgebraPtr& orth, const std::vector<int>& I) {
  const int twok = int(I.size());
  NCElement out(orth);
  for (const auto& perm : pfaffian_permutations(twok)) {
    Word w;
    for (int m = 0; m + 1 < twok; m += 2) w.push_back(Gen::s(I[perm[m + 1]], I[perm[m]]));
    int len = inversions(perm);
    Laurent c = Laurent::q(-len);
    if (len % 2 == 1) c = -c;  // (-q)^{-len}
    out += NCElement::monomial(orth, w, c);
  }
  return normal_form(out);
}

NCElement phi_plus_I(const AlgebraPtr& orth, const std::vector<int>& I) {
  const int twok = int(I.size());
  NCElement out(orth);
  for (const auto& perm : pfaffian_permutations(twok)) {
    NCElement term = NCElement::unit(orth);
    for (int m = 0; m + 1 < twok; m += 2)
      term = nc_mul(term, s_plus(orth, I[perm[m + 1]], I[perm[m]]));
    int len = inversions(perm);
    Laurent c = Laurent::q(len);
    if (len % 2 == 1) c = -c;  // (-q)^{len}
    out += term.scaled(c);
  }
  return normal_form(out);
}

NCElement phi_k(const AlgebraPtr& orth, int k) {
  const int N = orth->n;
  if (2 * k > N) throw std::invalid_argument("phi_k: need 2k <= N");
  NCElement out(orth);
  for_each_subset(N, 2 * k, [&](const std::vector<int>& I) {
    int weight = std::accumulate(I.begin(), I.end(), 0);
    out += nc_mul(phi_plus_I(orth, I), phi_I(orth, I)).scaled(Laurent::q(weight));
  });
  return out;
}

std::vector<CheckResult> quantum_center_check(const NCElement& e, const std::string& id,
                                              RunMode mode) {
  const AlgebraPtr& spec = e.spec();
  return run_indexed<CheckResult>(
      spec->atoms.size(),
      [&](std::size_t k) {
        CheckResult r;
        r.id = id + ":" + spec->atoms[k].to_string();
        NCElement c = nc_commutator(e, NCElement::generator(spec, spec->atoms[k]));
        r.pass = c.is_zero();
        if (!r.pass) r.witness = c.to_string();
        return r;
      },
      mode);
}

std::vector<CheckResult> quantum_unitri_inverse_check(const AlgebraPtr& orth) {
  const int N = orth->n;
  auto entry = [&](int i, int j) -> NCElement {
    if (i == j) return NCElement::unit(orth);
    if (i < j) return NCElement::zero(orth);
    return NCElement::generator(orth, Gen::s(i, j));
  };
  auto inv_entry = [&](int i, int j) -> NCElement {
    if (i == j) return NCElement::unit(orth);
    if (i < j) return NCElement::zero(orth);
    return s_inverse_entry(orth, i, j);
  };
  std::vector<CheckResult> out;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      NCElement acc(orth);
      for (int k = 1; k <= N; ++k) acc += nc_mul(entry(i, k), inv_entry(k, j));
      CheckResult r;
      r.id = "s-sinv-" + std::to_string(i) + std::to_string(j);
      NCElement want = i == j ? NCElement::unit(orth) : NCElement::zero(orth);
      r.pass = acc == want;
      if (!r.pass) r.witness = acc.to_string();
      out.push_back(std::move(r));
    }
  return out;
}

std::vector<CheckResult> sp_casimir_checks(int n) {
  PoissonSpec spec = build_poisson_sp(n);
  std::vector<CheckResult> out;
  auto av = [](int i, int j) { return CommPoly::variable(pvar::a(i, j)); };
  CommPoly f0_expected(1);
  for (int i = 1; i <= 2 * n - 1; i += 2) {
    CommPoly quad = av(i + 1, i + 1) * av(i, i) - av(i + 1, i) * av(i, i + 1);
    auto res = casimir_check(quad, spec, "sp-quad-" + std::to_string(i));
    out.insert(out.end(), res.begin(), res.end());
    f0_expected *= quad;
  }
  std::vector<CommPoly> f = charpoly_coeffs(spec);
  for (int k = 0; k <= 2 * n; ++k) {
    auto res = casimir_check(f[k], spec, "sp-f" + std::to_string(k));
    out.insert(out.end(), res.begin(), res.end());
  }
  for (int k = 0; k <= 2 * n; ++k) {
    CheckResult r;
    r.id = "sp-palindrome-f" + std::to_string(k);
    r.pass = f[k] == f[2 * n - k];
    if (!r.pass) r.witness = (f[k] - f[2 * n - k]).to_string();
    out.push_back(std::move(r));
  }
  CheckResult r;
  r.id = "sp-f0-factorization";
  r.pass = f[0] == f0_expected;
  if (!r.pass) r.witness = (f[0] - f0_expected).to_string();
  out.push_back(std::move(r));
  return out;
}

std::vector<Finding> conjecture_4_4_probe(int n) {
  PoissonSpec spec = build_poisson_sp(n);
  PMatrix a = stokes_matrix(spec);
  PMatrix skew = pmat_sub(pmat_transpose(a), a);
  CommPoly pf = pmat_pfaffian(skew);
  std::vector<Finding> out;
  {
    Finding f;
    f.id = "pf-squared-equals-det-n" + std::to_string(n);
    f.holds = pf * pf == pmat_det(skew);
    f.detail = "Pf(A^t - A) = " + pf.to_string();
    out.push_back(std::move(f));
  }
  for (int32_t g : spec.gens) {
    CommPoly b = bracket(pf, CommPoly::variable(g), spec);
    Finding f;
    f.id = "pf-bracket-" + pvar::name(g) + "-n" + std::to_string(n);
    f.holds = b.is_zero();
    if (!f.holds) f.detail = "{Pf, " + pvar::name(g) + "} = " + b.to_string();
    out.push_back(std::move(f));
  }
  return out;
}

Finding jacobian_rank_probe(int N, uint64_t seed) {
  PoissonSpec spec = build_poisson_o(N);
  const int n = N / 2;
  std::vector<CommPoly> gens;
  if (N % 2 == 1) {
    for (int k = 1; k <= n; ++k) gens.push_back(c_k(N, k));
  } else {
    for (int k = 1; k <= n - 1; ++k) gens.push_back(c_k(N, k));
    std::vector<int> I0(N);
    std::iota(I0.begin(), I0.end(), 1);
    gens.push_back(pf_I(stokes_matrix(spec), I0));
  }
  std::mt19937_64 rng(seed == 0 ? 0x5eed : seed);
  std::uniform_int_distribution<long> num(-7, 7);
  std::map<int32_t, Rational> point;
  for (int32_t g : spec.gens) point[g] = make_rational(num(rng), 1 + (rng() % 5));
  // exact Jacobian rank at the random point
  std::vector<std::vector<Rational>> jac;
  for (const CommPoly& f : gens) {
    std::vector<Rational> row;
    for (int32_t g : spec.gens) row.push_back(f.derivative(g).eval(point));
    jac.push_back(std::move(row));
  }
  int rank = 0;
  std::size_t cols = spec.gens.size();
  std::vector<std::vector<Rational>> m = jac;
  for (std::size_t c = 0; c < cols && rank < int(m.size()); ++c) {
    int pivot = -1;
    for (std::size_t r = rank; r < m.size(); ++r)
      if (m[r][c] != 0) {
        pivot = int(r);
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (int(r) == rank || m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
    }
    ++rank;
  }
  Finding f;
  f.id = "jacobian-rank-N" + std::to_string(N);
  f.holds = rank == int(gens.size());
  std::ostringstream os;
  os << "rank " << rank << " of " << gens.size() << " generators at a random rational point";
  f.detail = os.str();
  return f;
}

}  // namespace tqa

#include "tqa/matrix_ring.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tqa {

PMatrix pmat_zero(int n) { return PMatrix(n, std::vector<CommPoly>(n)); }

PMatrix pmat_identity(int n) {
  PMatrix m = pmat_zero(n);
  for (int i = 0; i < n; ++i) m[i][i] = CommPoly(1);
  return m;
}

PMatrix pmat_mul(const PMatrix& a, const PMatrix& b) {
  const int n = int(a.size());
  PMatrix r = pmat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

PMatrix pmat_add(const PMatrix& a, const PMatrix& b) {
  PMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] += b[i][j];
  return r;
}

PMatrix pmat_sub(const PMatrix& a, const PMatrix& b) {
  PMatrix r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] -= b[i][j];
  return r;
}

PMatrix pmat_transpose(const PMatrix& a) {
  const int n = int(a.size());
  PMatrix r = pmat_zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[j][i] = a[i][j];
  return r;
}

PMatrix pmat_scale(const PMatrix& a, const CommPoly& c) {
  PMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e *= c;
  return r;
}

CommPoly pmat_trace(const PMatrix& a) {
  CommPoly t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

bool pmat_equal(const PMatrix& a, const PMatrix& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

CommPoly pmat_det(const PMatrix& a) {
  const int n = int(a.size());
  if (n == 0) return CommPoly(1);
  // minor over the first k rows and the column subset encoded in the mask
  std::map<uint32_t, CommPoly> memo;
  std::function<CommPoly(uint32_t)> minor = [&](uint32_t mask) -> CommPoly {
    if (mask == 0) return CommPoly(1);
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int k = __builtin_popcount(mask) - 1;  // expand along this row (0-based)
    CommPoly det;
    int pos = 0;  // column position inside the submatrix
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      if (!a[k][j].is_zero()) {
        CommPoly sub = minor(mask & ~(1u << j));
        det += ((k + pos) % 2 == 0) ? a[k][j] * sub : -(a[k][j] * sub);
      }
      ++pos;
    }
    memo.emplace(mask, det);
    return det;
  };
  return minor((1u << n) - 1);
}

CommPoly pmat_pfaffian(const PMatrix& a) {
  const int n = int(a.size());
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  if (n == 0) return CommPoly(1);
  // recursive expansion along the first row: sum_j (-1)^j a_{0j} Pf(minor)
  std::vector<int> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  std::function<CommPoly(const std::vector<int>&)> rec =
      [&](const std::vector<int>& idx) -> CommPoly {
    if (idx.empty()) return CommPoly(1);
    CommPoly out;
    int i0 = idx[0];
    for (std::size_t p = 1; p < idx.size(); ++p) {
      const CommPoly& e = a[i0][idx[p]];
      if (e.is_zero()) continue;
      std::vector<int> rest;
      for (std::size_t t = 1; t < idx.size(); ++t)
        if (t != p) rest.push_back(idx[t]);
      CommPoly sub = rec(rest);
      if (p % 2 == 1)
        out += e * sub;
      else
        out -= e * sub;
    }
    return out;
  };
  return rec(rows);
}

CommPoly pmat_pfaffian_sym_sum(const PMatrix& a) {
  const int n = int(a.size());
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd size");
  if (n == 0) return CommPoly(1);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CommPoly total;
  long fact = 1;
  for (int k = 2; k <= n / 2; ++k) fact *= k;
  long denom = fact;
  for (int k = 0; k < n / 2; ++k) denom *= 2;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    CommPoly term(1);
    for (int k = 0; k < n / 2; ++k) term *= a[perm[2 * k]][perm[2 * k + 1]];
    total += (inv % 2 == 0) ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total.scaled(make_rational(1, denom));
}

}  // namespace tqa

#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace tqa {

// One letter of a word in algebra generators.
//
// kind T holds the lower-triangular t_ij (i > j), TBAR the upper t-bar_ij
// (i < j), S the twisted-algebra generators s_ij. DIAG packs the invertible
// diagonal pair of U_q(gl): DIAG(i, e) stands for t_ii^e when e > 0 and
// tbar_ii^{-e} when e < 0; e is never 0 in a stored word.
enum class GenKind : uint8_t { T = 0, TBAR = 1, S = 2, DIAG = 3 };

struct Gen {
  GenKind kind;
  uint8_t i = 0;
  uint8_t j = 0;
  int16_t e = 1;  // exponent slot, used by DIAG only

  static Gen t(int i, int j) { return {GenKind::T, (uint8_t)i, (uint8_t)j, 1}; }
  static Gen tbar(int i, int j) { return {GenKind::TBAR, (uint8_t)i, (uint8_t)j, 1}; }
  static Gen s(int i, int j) { return {GenKind::S, (uint8_t)i, (uint8_t)j, 1}; }
  static Gen diag(int i, int e) { return {GenKind::DIAG, (uint8_t)i, (uint8_t)i, (int16_t)e}; }

  bool is_diag() const { return kind == GenKind::DIAG; }

  // Position in the normal order: ascending by (kind, i, j) with kind
  // order t < tbar < s; the diagonal element sits where t_ii would.
  std::tuple<int, int, int> order_key() const {
    int k = kind == GenKind::DIAG ? 0 : static_cast<int>(kind);
    return {k, i, j};
  }

  bool operator==(const Gen& o) const {
    return kind == o.kind && i == o.i && j == o.j && e == o.e;
  }
  bool operator!=(const Gen& o) const { return !(*this == o); }
  bool operator<(const Gen& o) const {
    auto a = order_key(), b = o.order_key();
    if (a != b) return a < b;
    return e < o.e;
  }

  std::string to_string() const;
};

using Word = std::vector<Gen>;

std::string word_to_string(const Word& w);

// Key usable in hash maps for generator pairs.
inline uint64_t gen_code(const Gen& g) {
  return (uint64_t(static_cast<uint8_t>(g.kind)) << 16) | (uint64_t(g.i) << 8) | g.j;
}
inline uint64_t pair_code(const Gen& a, const Gen& b) { return (gen_code(a) << 24) | gen_code(b); }

}  // namespace tqa

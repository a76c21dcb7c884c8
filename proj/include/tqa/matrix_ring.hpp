#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "tqa/comm_poly.hpp"

namespace tqa {

// Dense square matrix over the commutative polynomial ring.
using PMatrix = std::vector<std::vector<CommPoly>>;

PMatrix pmat_zero(int n);
PMatrix pmat_identity(int n);
PMatrix pmat_mul(const PMatrix& a, const PMatrix& b);
PMatrix pmat_add(const PMatrix& a, const PMatrix& b);
PMatrix pmat_sub(const PMatrix& a, const PMatrix& b);
PMatrix pmat_transpose(const PMatrix& a);
PMatrix pmat_scale(const PMatrix& a, const CommPoly& c);
CommPoly pmat_trace(const PMatrix& a);
bool pmat_equal(const PMatrix& a, const PMatrix& b);

// Exact determinant by expansion over column subsets with memoization.
CommPoly pmat_det(const PMatrix& a);

// Pfaffian of a skew-symmetric matrix by first-row expansion; throws on odd
// size. The empty matrix has Pfaffian 1.
CommPoly pmat_pfaffian(const PMatrix& a);
// Independent oracle: the sum over the symmetric group (sizes <= 4).
CommPoly pmat_pfaffian_sym_sum(const PMatrix& a);

}  // namespace tqa

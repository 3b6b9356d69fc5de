#pragma once

// Dense exact linear algebra over Q, row-major.

#include "schubert/rational.hpp"

#include <optional>
#include <vector>

namespace schubert {

using RationalMatrix = std::vector<RationalVector>;

/// Reduced row echelon form with zero rows removed.
RationalMatrix row_reduce(RationalMatrix a);
std::size_t rank(const RationalMatrix& a);
/// Basis (as rows) of {v : a v = 0}; `cols` is needed when a has no rows.
RationalMatrix nullspace(const RationalMatrix& a, std::size_t cols);
/// Throws std::invalid_argument if a is not square.
Rational determinant(const RationalMatrix& a);
std::optional<RationalMatrix> inverse(const RationalMatrix& a);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& a, std::size_t cols);
/// Row spaces coincide.
bool same_row_space(const RationalMatrix& a, const RationalMatrix& b);
Rational dot(const RationalVector& a, const RationalVector& b);

}  // namespace schubert

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "subword/numeric.hpp"

namespace subword {

// Sparse integer row: (column, value) pairs, strictly increasing columns,
// nonzero values.
using SparseRow = std::vector<std::pair<int, Integer>>;

// Rank of an integer matrix by exact fraction-free elimination.  Pivots are
// chosen to prefer unit entries and low fill; rows are combined as
// pivot*row - entry*pivot_row and renormalized by their content, so all
// arithmetic stays in the integers.
std::size_t exact_rank(std::vector<SparseRow> rows, int ncols);

// Determinant of a dense integer matrix by Bareiss one-step elimination.
Integer exact_determinant(std::vector<std::vector<Integer>> m);

// Solves A x = b over the rationals.  Returns nullopt when inconsistent;
// requires the columns of A to be linearly independent.
std::optional<std::vector<Rational>> solve_rational(std::vector<std::vector<Rational>> a,
                                                    std::vector<Rational> b);

} // namespace subword

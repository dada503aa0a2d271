#pragma once

#include <vector>

#include "pgldpc/rational.hpp"

namespace pgldpc {

/// Rank over the rationals, exact. Rows are scaled to integers and reduced
/// by fraction-free (Bareiss) elimination.
int rank_exact(const std::vector<std::vector<Rat>>& M);

/// Same, for integer input.
int rank_exact_int(std::vector<std::vector<Int>> M);

/// Exact rank of a small-integer matrix on at most 26 columns. Bareiss
/// intermediates are minors of the input, so for entries in {-1,0,1} they
/// stay below 2^63 up to that width; wider or larger-entry input must go
/// through rank_exact_int.
int rank_small_int64(const std::vector<std::vector<long long>>& M, int ncols);

}  // namespace pgldpc

#pragma once

#include <vector>

#include "pgldpc/bitset.hpp"

namespace pgldpc {

/// 0/1 matrix stored as sorted row supports.
struct BinaryMatrix {
    int m = 0;
    int n = 0;
    std::vector<std::vector<int>> row_supports;

    /// Validates sortedness, uniqueness and index range; throws std::invalid_argument.
    static BinaryMatrix from_rows(int n, std::vector<std::vector<int>> rows);

    Bitset row_bits(int j) const;
    bool square() const { return m == n; }
};

/// True iff row i equals row 0 cyclically shifted by i, for every i.
/// Throws std::invalid_argument on a non-square matrix.
bool is_circulant(const BinaryMatrix& H);

/// Rank over GF(2).
int rank_gf2(const BinaryMatrix& H);

/// Basis of the GF(2) nullspace {x : H x^T = 0}, one bitset per basis vector.
std::vector<Bitset> gf2_nullspace_basis(const BinaryMatrix& H);

}  // namespace pgldpc

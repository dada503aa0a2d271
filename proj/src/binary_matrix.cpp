#include "pgldpc/binary_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pgldpc {

BinaryMatrix BinaryMatrix::from_rows(int n, std::vector<std::vector<int>> rows) {
    if (n <= 0) throw std::invalid_argument("matrix width must be positive");
    for (const auto& r : rows) {
        if (!std::is_sorted(r.begin(), r.end())) throw std::invalid_argument("row support not sorted");
        if (std::adjacent_find(r.begin(), r.end()) != r.end())
            throw std::invalid_argument("row support has duplicate index");
        if (!r.empty() && (r.front() < 0 || r.back() >= n))
            throw std::invalid_argument("row support index out of [0,n)");
    }
    BinaryMatrix H;
    H.m = static_cast<int>(rows.size());
    H.n = n;
    H.row_supports = std::move(rows);
    return H;
}

Bitset BinaryMatrix::row_bits(int j) const {
    Bitset b(n);
    for (int i : row_supports[static_cast<std::size_t>(j)]) b.set(i);
    return b;
}

bool is_circulant(const BinaryMatrix& H) {
    if (!H.square()) throw std::invalid_argument("is_circulant requires a square matrix");
    const int n = H.n;
    for (int i = 1; i < H.m; ++i) {
        std::vector<int> shifted;
        shifted.reserve(H.row_supports[0].size());
        for (int x : H.row_supports[0]) shifted.push_back((x + i) % n);
        std::sort(shifted.begin(), shifted.end());
        if (shifted != H.row_supports[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

namespace {

// Row-echelon form over GF(2); returns rank, leaves echelon rows and pivot
// columns for nullspace extraction.
int gf2_echelon(const BinaryMatrix& H, std::vector<Bitset>& rows, std::vector<int>& pivot_cols) {
    rows.clear();
    rows.reserve(static_cast<std::size_t>(H.m));
    for (int j = 0; j < H.m; ++j) rows.push_back(H.row_bits(j));

    pivot_cols.clear();
    int r = 0;
    for (int c = 0; c < H.n && r < H.m; ++c) {
        int piv = -1;
        for (int i = r; i < H.m; ++i) {
            if (rows[static_cast<std::size_t>(i)].test(c)) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(r)], rows[static_cast<std::size_t>(piv)]);
        for (int i = 0; i < H.m; ++i) {
            if (i != r && rows[static_cast<std::size_t>(i)].test(c))
                rows[static_cast<std::size_t>(i)] ^= rows[static_cast<std::size_t>(r)];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return r;
}

}  // namespace

int rank_gf2(const BinaryMatrix& H) {
    std::vector<Bitset> rows;
    std::vector<int> pivots;
    return gf2_echelon(H, rows, pivots);
}

std::vector<Bitset> gf2_nullspace_basis(const BinaryMatrix& H) {
    std::vector<Bitset> rows;
    std::vector<int> pivots;
    int rank = gf2_echelon(H, rows, pivots);

    std::vector<bool> is_pivot(static_cast<std::size_t>(H.n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<Bitset> basis;
    basis.reserve(static_cast<std::size_t>(H.n - rank));
    for (int f = 0; f < H.n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        Bitset v(H.n);
        v.set(f);
        for (int r = 0; r < rank; ++r) {
            if (rows[static_cast<std::size_t>(r)].test(f)) v.set(pivots[static_cast<std::size_t>(r)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pgldpc

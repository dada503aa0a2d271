#include "pgldpc/rank.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace pgldpc {

namespace {

// One-pass fraction-free elimination; entries stay minors of the input, so
// every division is exact (Sylvester identity).
int bareiss_rank(std::vector<std::vector<Int>>& M) {
    const int nrows = static_cast<int>(M.size());
    if (nrows == 0) return 0;
    const int ncols = static_cast<int>(M[0].size());

    Int prev = 1;
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r) {
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(M[static_cast<std::size_t>(rank)], M[static_cast<std::size_t>(piv)]);
        const auto& prow = M[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < nrows; ++r) {
            auto& row = M[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            for (int c = col + 1; c < ncols; ++c) {
                row[static_cast<std::size_t>(c)] =
                    (prow[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(c)] -
                     row[static_cast<std::size_t>(col)] * prow[static_cast<std::size_t>(c)]) /
                    prev;
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = prow[static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

}  // namespace

int rank_exact_int(std::vector<std::vector<Int>> M) { return bareiss_rank(M); }

int rank_exact(const std::vector<std::vector<Rat>>& M) {
    std::vector<std::vector<Int>> Z;
    Z.reserve(M.size());
    for (const auto& row : M) {
        Int l = 1;
        for (const auto& x : row) {
            Rat c = x;
            c.canonicalize();
            l = lcm(l, Int(c.get_den()));
        }
        std::vector<Int> zrow;
        zrow.reserve(row.size());
        for (const auto& x : row) {
            Rat scaled = x * Rat(l);
            scaled.canonicalize();
            if (scaled.get_den() != 1) throw std::logic_error("denominator clearing failed");
            zrow.push_back(scaled.get_num());
        }
        Z.push_back(std::move(zrow));
    }
    return bareiss_rank(Z);
}

int rank_small_int64(const std::vector<std::vector<long long>>& M, int ncols) {
    if (ncols > 26) throw std::invalid_argument("rank_small_int64 supports at most 26 columns");
    const int nrows = static_cast<int>(M.size());
    if (nrows == 0) return 0;

    std::vector<std::vector<long long>> W = M;
    long long prev = 1;
    int rank = 0;
    for (int col = 0; col < ncols && rank < nrows; ++col) {
        int piv = -1;
        for (int r = rank; r < nrows; ++r) {
            if (W[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(W[static_cast<std::size_t>(rank)], W[static_cast<std::size_t>(piv)]);
        const auto& prow = W[static_cast<std::size_t>(rank)];
        for (int r = rank + 1; r < nrows; ++r) {
            auto& row = W[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            for (int c = col + 1; c < ncols; ++c) {
                __int128 v = static_cast<__int128>(prow[static_cast<std::size_t>(col)]) *
                                 row[static_cast<std::size_t>(c)] -
                             static_cast<__int128>(row[static_cast<std::size_t>(col)]) *
                                 prow[static_cast<std::size_t>(c)];
                v /= prev;
                if (v > INT64_MAX || v < INT64_MIN)
                    throw std::logic_error("rank_small_int64 minor bound violated");
                row[static_cast<std::size_t>(c)] = static_cast<long long>(v);
            }
            row[static_cast<std::size_t>(col)] = 0;
        }
        prev = prow[static_cast<std::size_t>(col)];
        ++rank;
    }
    return rank;
}

}  // namespace pgldpc

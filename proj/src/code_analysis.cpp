#include "pgldpc/code_analysis.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace pgldpc {

CodeSummary analyze_code(const BinaryMatrix& H, int k_limit) {
    CodeSummary s;
    s.n = H.n;
    auto basis = gf2_nullspace_basis(H);
    s.k = static_cast<int>(basis.size());
    if (s.k > k_limit)
        throw std::invalid_argument("code dimension " + std::to_string(s.k) +
                                    " exceeds the sweep limit " + std::to_string(k_limit));

    const std::uint64_t total = std::uint64_t{1} << s.k;
    s.codewords.reserve(total);
    // Gray-code sweep: successive masks differ in one basis vector.
    Bitset cur(H.n);
    std::uint64_t prev_gray = 0;
    s.codewords.push_back(cur);
    for (std::uint64_t m = 1; m < total; ++m) {
        std::uint64_t gray = m ^ (m >> 1);
        std::uint64_t flip = gray ^ prev_gray;
        int b = std::countr_zero(flip);
        cur ^= basis[static_cast<std::size_t>(b)];
        prev_gray = gray;
        s.codewords.push_back(cur);
    }
    std::sort(s.codewords.begin(), s.codewords.end(), Bitset::lex_less);

    for (const auto& w : s.codewords) ++s.weight_enumerator[w.count()];
    for (const auto& w : s.codewords) {
        int wt = w.count();
        if (wt > 0 && (!s.d_min || wt < *s.d_min)) s.d_min = wt;
    }
    s.minimal = minimal_codewords(s);
    return s;
}

std::vector<Bitset> minimal_codewords(const CodeSummary& code) {
    std::vector<Bitset> nonzero;
    nonzero.reserve(code.codewords.size());
    for (const auto& w : code.codewords)
        if (w.any()) nonzero.push_back(w);

    std::vector<Bitset> out;
    for (const auto& w : nonzero) {
        bool minimal = true;
        for (const auto& other : nonzero) {
            if (&other == &w) continue;
            if (other == w) continue;
            if (other.is_subset_of(w)) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(w);
    }
    std::sort(out.begin(), out.end(), Bitset::lex_less);
    return out;
}

bool is_codeword(const std::vector<std::uint8_t>& x, const BinaryMatrix& H) {
    if (static_cast<int>(x.size()) != H.n) throw std::invalid_argument("is_codeword: length mismatch");
    for (const auto& supp : H.row_supports) {
        int parity = 0;
        for (int i : supp) parity ^= x[static_cast<std::size_t>(i)] & 1;
        if (parity) return false;
    }
    return true;
}

}  // namespace pgldpc

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pgldpc/binary_matrix.hpp"

namespace pgldpc {

/// The binary code with parity-check matrix H: dimension, distance, the full
/// codeword list (feasible at desk scale) and the support-minimal codewords.
struct CodeSummary {
    int n = 0;
    int k = 0;
    std::optional<int> d_min;                   // none when only the zero codeword exists
    std::vector<Bitset> codewords;              // all 2^k, sorted lexicographically
    std::vector<Bitset> minimal;                // support-minimal nonzero codewords, sorted
    std::map<int, std::uint64_t> weight_enumerator;
};

/// Exhaustive sweep over the nullspace of H. Throws std::invalid_argument
/// when k = n - rank exceeds k_limit (2^k enumeration infeasible).
CodeSummary analyze_code(const BinaryMatrix& H, int k_limit = 16);

/// Nonzero codewords whose support contains no other nonzero codeword's
/// support as a proper subset; sorted lexicographically.
std::vector<Bitset> minimal_codewords(const CodeSummary& code);

/// H x^T = 0 (mod 2). Throws std::invalid_argument on length mismatch.
bool is_codeword(const std::vector<std::uint8_t>& x, const BinaryMatrix& H);

}  // namespace pgldpc

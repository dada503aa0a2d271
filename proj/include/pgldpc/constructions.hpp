#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgldpc/enumerate.hpp"
#include "pgldpc/pseudoweight.hpp"

namespace pgldpc {

/// The maximal-support pseudo-codeword built from one line: value q on the
/// q+1 points of the line, value 1 on the q^2 points off it.
struct LineConstruction {
    int q = 0;
    int line_index = 0;
    RayVector omega;
    Rat claimed_weight;                           // (2q+1)^2/(q+2)
    std::vector<std::vector<int>> active_matrix;  // tight parity coefficient rows
};

/// Builds the construction on line `line_index` of the cone's matrix and
/// verifies cone membership and the claimed weight. Throws
/// std::invalid_argument on a bad line index, std::logic_error if the
/// verification fails.
LineConstruction build_line_pcw(const ConeSystem& cone, int line_index);

/// Exact minimality certificate for the construction:
///  (a) exactly n-1 parity inequalities tight, no nonnegativity tight;
///  (b) A . omega = 0 for the tight coefficient matrix A;
///  (c) A A^T = q I + J entrywise;
///  (d) rank(A) = n-1 by direct fraction-free elimination.
/// The eigenvalues of q I + J follow in closed form and are recorded:
/// q with multiplicity n-2 and q^2+2q with multiplicity 1, all positive,
/// which re-derives rank n-1 independently of (d).
struct MinimalityCertificate {
    int tight_parity = 0;
    int tight_nonneg = 0;
    bool product_zero = false;
    bool aat_structure = false;
    int rank = -1;
    long long eig_repeated = 0;  // q, multiplicity n-2
    long long eig_simple = 0;    // q^2 + 2q, multiplicity 1
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

MinimalityCertificate certify_minimality(const LineConstruction& c, const ConeSystem& cone);

/// Evidence report for the maximum-weight conjecture: the largest
/// non-codeword-class pseudo-weight against (2q+1)^2/(q+2).
struct MaxConjectureReport {
    Rat bound;
    std::optional<Rat> max_noncodeword_weight;
    bool vacuous = false;
    bool consistent = false;
    std::vector<std::string> counterexamples;
    std::string summary;
};

MaxConjectureReport check_conjecture_max(const SpectrumReport& spec, int q);

}  // namespace pgldpc

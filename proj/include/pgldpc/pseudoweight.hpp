#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pgldpc/code_analysis.hpp"
#include "pgldpc/cone.hpp"
#include "pgldpc/enumerate.hpp"

namespace pgldpc {

/// AWGNC pseudo-weight ||w||_1^2 / ||w||_2^2 as an exact fraction.
/// Throws std::invalid_argument on the zero vector.
Rat pseudo_weight(std::span<const Int> w);
Rat pseudo_weight(std::span<const Rat> w);
Rat pseudo_weight(const RayVector& w);

/// One pseudo-weight class of the spectrum (an orbit of minimal
/// pseudo-codewords under the cyclic group).
struct SpectrumEntry {
    RayVector ray;  // orbit representative, canonical scaling
    Rat weight;
    bool is_codeword_multiple = false;
    int orbit_size = 0;
};

struct SpectrumReport {
    std::vector<SpectrumEntry> entries;  // sorted by weight, then representative
    int d_min = 0;
    Rat w_p_min;
    /// min over non-codeword-multiple classes of w_p, minus d_min; absent
    /// when every class is a codeword multiple.
    std::optional<Rat> gap;
};

/// Classifies a complete ray set against the code and computes the
/// pseudo-weight spectrum gap.
SpectrumReport spectrum(const RaySet& rays, const CodeSummary& code);

/// Pass/fail record for one verified bound.
struct BoundCertificate {
    std::string bound_name;
    std::vector<std::pair<std::string, std::string>> parameters;
    Rat bound_value;
    std::vector<std::string> witnesses;
    std::vector<std::string> violations;
    bool passed() const { return violations.empty(); }
};

/// sum_i w_i >= (q+2) w_l for every coordinate l; holds for every cone
/// member of a PG(2,q) cone. Throws std::invalid_argument on a non-member.
BoundCertificate check_sum_bound(const RayVector& w, const ConeSystem& cone, int q);

/// q+2 <= w_p(w) <= |supp(w)| for a nonzero cone member.
BoundCertificate check_weight_window(const RayVector& w, const ConeSystem& cone, int q);

/// Lower bound N * 4mM/(m+M)^2 on the pseudo-weight of vectors with N
/// nonzero integer entries in [m, M]. Throws on nonpositive m or m > M.
Rat two_value_lower_bound(long long N, long long m, long long M);

/// Equality in the bound needs N*M/(m+M) components of value m (and the
/// complementary count of value M) to be integral.
bool two_value_equality_attainable(long long N, long long m, long long M);

/// Rows (M, coefficient of N) reproducing the printed lower-bound table.
std::vector<std::pair<long long, Rat>> bound_table(long long m, long long M_max);

struct BruteForceMin {
    Rat min_weight;
    std::vector<int> witness;                   // lex-smallest minimizer, entries ascending
    std::vector<std::vector<int>> minimizers;   // all minimizing multisets
};

/// Exhaustive minimum of w_p over vectors with N nonzero integer entries in
/// [m, M], at least one m and at least one M. The weight is permutation
/// invariant, so multisets are enumerated. Throws when the search space is
/// out of bounds (N > 8 or M > 6).
BruteForceMin brute_force_min_weight(int N, int m, int M);

/// Zeroing one minimum-value entry (after scaling the minimum to 1) strictly
/// lowers the pseudo-weight. Requires at least 2 positive entries.
bool check_zero_component_lemma(std::span<const Rat> x);

/// For canonical {0,1,2} vectors with at least one 2 whose mod-2 reduction
/// is a nonzero codeword: |supp| >= (3/2)(q+2) and w_p >= (4/3)(q+2).
/// Precondition violations are reported as errors (std::invalid_argument).
BoundCertificate check_012_bounds(const RayVector& w, int q, const CodewordOracle& code);

/// Evidence report for the minimum-weight conjecture: is the smallest
/// non-codeword-class weight attained by a {0,1,2} ray?
struct MinConjectureReport {
    bool vacuous = false;  // no non-codeword classes
    bool attained_by_012 = false;
    std::optional<Rat> min_noncodeword_weight;
    std::vector<Int> attaining_ray;  // a minimum-weight {0,1,2} attaining ray, if any
    std::string summary;
};

MinConjectureReport check_conjecture_min_012(const RaySet& rays, const SpectrumReport& spec);

}  // namespace pgldpc

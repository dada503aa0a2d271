#pragma once

#include <cstdint>
#include <vector>

#include "pgldpc/code_analysis.hpp"
#include "pgldpc/enumerate.hpp"

namespace pgldpc {

/// Log-likelihood ratios lambda_i = log(p(y_i|0)/p(y_i|1)); positive values
/// favor bit 0.
struct LlrVector {
    std::vector<double> values;
};

struct MlDecision {
    Bitset codeword;  // lexicographically smallest cost minimizer
    bool tie = false; // more than one codeword attains the minimum cost
    double cost = 0;
};

/// Brute-force ML decoding: argmin over the codeword list of sum x_i lambda_i.
/// Ties break toward the lexicographically smallest codeword.
MlDecision ml_decode(const LlrVector& llr, const CodeSummary& code);

enum class LpOutcome { correct, error, tie };

/// Zero-codeword decision of the LP decoder via minimal pseudo-codewords:
/// correct iff every minimal pseudo-codeword has positive correlation with
/// lambda, tie if the minimum correlation is exactly zero.
LpOutcome lp_zero_region_test(const LlrVector& llr, const RaySet& rays);

struct SimReport {
    int q = 0;
    double snr_db = 0;
    long long trials = 0;
    std::uint64_t seed = 0;
    long long ml_errors = 0;
    long long lp_errors = 0;
    long long ml_ties = 0;
    long long lp_ties = 0;
    double ml_fer = 0;
    double lp_fer = 0;
    bool ran_ml = false;
    bool ran_lp = false;
};

enum class DecoderChoice { ml, lp, both };

/// AWGN Monte-Carlo under the all-zero codeword: BPSK 0 -> +1, noise
/// variance from snr_db = Eb/N0 in dB at the code rate k/n. LLRs are drawn
/// by a counter-based generator keyed on (seed, trial), so reports are
/// reproducible and independent of trial order. Ties count as errors.
SimReport awgn_simulate(const CodeSummary& code, const RaySet& rays, int q, double snr_db,
                        long long trials, std::uint64_t seed, DecoderChoice which = DecoderChoice::both);

/// Counter-based standard normal draw: index i of trial `trial` under `seed`.
/// Deterministic and order-independent by construction.
double counter_gaussian(std::uint64_t seed, std::uint64_t trial, std::uint32_t index);

}  // namespace pgldpc

#include "pgldpc/decoder.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pgldpc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t index) {
    std::uint64_t x = splitmix64(splitmix64(seed ^ 0x6a09e667f3bcc909ULL) ^ trial);
    x = splitmix64(x ^ index);
    // (0,1]: 53 mantissa bits, never exactly zero.
    return static_cast<double>((x >> 11) + 1) * 0x1.0p-53;
}

double codeword_cost(const Bitset& word, const LlrVector& llr) {
    double c = 0;
    word.for_each_set([&](int i) { c += llr.values[static_cast<std::size_t>(i)]; });
    return c;
}

}  // namespace

double counter_gaussian(std::uint64_t seed, std::uint64_t trial, std::uint32_t index) {
    // Box-Muller on two counter-derived uniforms.
    double u1 = counter_uniform(seed, trial, 2ULL * index);
    double u2 = counter_uniform(seed, trial, 2ULL * index + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

MlDecision ml_decode(const LlrVector& llr, const CodeSummary& code) {
    if (static_cast<int>(llr.values.size()) != code.n)
        throw std::invalid_argument("ml_decode: LLR length mismatch");
    if (code.codewords.empty()) throw std::invalid_argument("ml_decode: codeword list unavailable");

    MlDecision best;
    bool have = false;
    for (const auto& w : code.codewords) {  // lex order: first minimizer wins
        double c = codeword_cost(w, llr);
        if (!have || c < best.cost) {
            best.codeword = w;
            best.cost = c;
            best.tie = false;
            have = true;
        } else if (c == best.cost) {
            best.tie = true;
        }
    }
    return best;
}

LpOutcome lp_zero_region_test(const LlrVector& llr, const RaySet& rays) {
    if (rays.rays.empty()) throw std::invalid_argument("lp_zero_region_test: empty ray set");
    if (static_cast<int>(llr.values.size()) != rays.n)
        throw std::invalid_argument("lp_zero_region_test: LLR length mismatch");

    bool tie = false;
    for (const auto& r : rays.rays) {
        double corr = 0;
        for (std::size_t i = 0; i < r.canonical_int.size(); ++i)
            corr += r.canonical_int[i].get_d() * llr.values[i];
        if (corr < 0) return LpOutcome::error;
        if (corr == 0) tie = true;
    }
    return tie ? LpOutcome::tie : LpOutcome::correct;
}

SimReport awgn_simulate(const CodeSummary& code, const RaySet& rays, int q, double snr_db,
                        long long trials, std::uint64_t seed, DecoderChoice which) {
    if (trials <= 0) throw std::invalid_argument("awgn_simulate: trials must be positive");
    const bool run_ml = which != DecoderChoice::lp;
    const bool run_lp = which != DecoderChoice::ml;
    if (run_ml && code.codewords.empty())
        throw std::invalid_argument("awgn_simulate: code analysis unavailable");
    if (run_lp && rays.rays.empty()) throw std::invalid_argument("awgn_simulate: ray set unavailable");

    const int n = code.n;
    const double rate = static_cast<double>(code.k) / n;
    const double ebn0 = std::pow(10.0, snr_db / 10.0);
    const double sigma2 = 1.0 / (2.0 * rate * ebn0);
    const double sigma = std::sqrt(sigma2);

    SimReport rep;
    rep.q = q;
    rep.snr_db = snr_db;
    rep.trials = trials;
    rep.seed = seed;
    rep.ran_ml = run_ml;
    rep.ran_lp = run_lp;

    LlrVector llr;
    llr.values.resize(static_cast<std::size_t>(n));
    for (long long t = 0; t < trials; ++t) {
        // All-zero codeword, BPSK 0 -> +1: y_i = 1 + sigma z_i, LLR = 2 y / sigma^2.
        for (int i = 0; i < n; ++i) {
            double y = 1.0 + sigma * counter_gaussian(seed, static_cast<std::uint64_t>(t),
                                                      static_cast<std::uint32_t>(i));
            llr.values[static_cast<std::size_t>(i)] = 2.0 * y / sigma2;
        }
        if (run_ml) {
            MlDecision d = ml_decode(llr, code);
            if (d.tie) ++rep.ml_ties;
            if (d.tie || d.codeword.any()) ++rep.ml_errors;  // ties count as errors
        }
        if (run_lp) {
            LpOutcome o = lp_zero_region_test(llr, rays);
            if (o == LpOutcome::tie) ++rep.lp_ties;
            if (o != LpOutcome::correct) ++rep.lp_errors;
        }
    }
    rep.ml_fer = run_ml ? static_cast<double>(rep.ml_errors) / static_cast<double>(trials) : 0.0;
    rep.lp_fer = run_lp ? static_cast<double>(rep.lp_errors) / static_cast<double>(trials) : 0.0;
    return rep;
}

}  // namespace pgldpc

#include "pgldpc/pseudoweight.hpp"

#include <algorithm>
#include <stdexcept>

namespace pgldpc {

namespace {

std::string render_ints(std::span<const Int> v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace

Rat pseudo_weight(std::span<const Int> w) {
    Int s1 = 0, s2 = 0;
    for (const auto& x : w) {
        s1 += x;
        s2 += x * x;
    }
    if (s2 == 0) throw std::invalid_argument("pseudo-weight of the zero vector");
    Rat r(s1 * s1, s2);
    r.canonicalize();
    return r;
}

Rat pseudo_weight(std::span<const Rat> w) {
    Rat s1 = 0, s2 = 0;
    for (const auto& x : w) {
        s1 += x;
        s2 += x * x;
    }
    if (s2 == 0) throw std::invalid_argument("pseudo-weight of the zero vector");
    Rat r = s1 * s1 / s2;
    r.canonicalize();
    return r;
}

Rat pseudo_weight(const RayVector& w) { return pseudo_weight(std::span<const Rat>(w.entries)); }

SpectrumReport spectrum(const RaySet& rays, const CodeSummary& code) {
    if (!code.d_min) throw std::invalid_argument("spectrum needs a code with nonzero codewords");
    SpectrumReport rep;
    rep.d_min = *code.d_min;

    for (std::size_t k = 0; k < rays.orbit_reps.size(); ++k) {
        const RayVector& r = rays.rays[static_cast<std::size_t>(rays.orbit_reps[k])];
        SpectrumEntry e;
        e.ray = r;
        e.weight = pseudo_weight(std::span<const Int>(r.canonical_int));
        e.is_codeword_multiple = r.is_codeword_multiple;
        e.orbit_size = rays.orbit_sizes[k];
        rep.entries.push_back(std::move(e));
    }
    std::sort(rep.entries.begin(), rep.entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.weight != b.weight) return a.weight < b.weight;
        return a.ray.canonical_int < b.ray.canonical_int;
    });

    if (rep.entries.empty()) throw std::invalid_argument("spectrum of an empty ray set");
    rep.w_p_min = rep.entries.front().weight;

    std::optional<Rat> min_noncw;
    for (const auto& e : rep.entries) {
        if (!e.is_codeword_multiple && (!min_noncw || e.weight < *min_noncw)) min_noncw = e.weight;
    }
    if (min_noncw) {
        Rat g = *min_noncw - rep.d_min;
        g.canonicalize();
        rep.gap = g;
    }
    return rep;
}

BoundCertificate check_sum_bound(const RayVector& w, const ConeSystem& cone, int q) {
    MembershipFailure f;
    if (!is_pseudocodeword(w, cone, &f))
        throw std::invalid_argument("check_sum_bound requires a cone member: " + f.diagnostic);

    BoundCertificate cert;
    cert.bound_name = "sum_bound";
    cert.parameters = {{"q", std::to_string(q)}};
    cert.bound_value = Rat(q + 2);
    cert.witnesses.push_back(render_ints(w.canonical_int));

    Rat total = 0;
    for (const auto& x : w.entries) total += x;
    for (std::size_t l = 0; l < w.entries.size(); ++l) {
        if (total < Rat(q + 2) * w.entries[l])
            cert.violations.push_back("coordinate " + std::to_string(l) + ": sum " +
                                      to_fraction_string(total) + " < (q+2)*w_l");
    }
    return cert;
}

BoundCertificate check_weight_window(const RayVector& w, const ConeSystem& cone, int q) {
    MembershipFailure f;
    if (!is_pseudocodeword(w, cone, &f))
        throw std::invalid_argument("check_weight_window requires a cone member: " + f.diagnostic);
    bool nonzero = false;
    for (const auto& x : w.entries)
        if (x != 0) nonzero = true;
    if (!nonzero) throw std::invalid_argument("check_weight_window of the zero vector");

    int supp = 0;
    for (const auto& x : w.entries)
        if (x != 0) ++supp;
    Rat wp = pseudo_weight(w);

    BoundCertificate cert;
    cert.bound_name = "weight_window";
    cert.parameters = {{"q", std::to_string(q)}, {"supp", std::to_string(supp)}};
    cert.bound_value = Rat(q + 2);
    cert.witnesses.push_back(render_ints(w.canonical_int) + " w_p=" + to_fraction_string(wp));
    if (wp < q + 2)
        cert.violations.push_back("w_p " + to_fraction_string(wp) + " < q+2 = " + std::to_string(q + 2));
    if (wp > supp)
        cert.violations.push_back("w_p " + to_fraction_string(wp) + " > |supp| = " + std::to_string(supp));
    return cert;
}

Rat two_value_lower_bound(long long N, long long m, long long M) {
    if (m <= 0) throw std::invalid_argument("two_value_lower_bound: m must be positive");
    if (m > M) throw std::invalid_argument("two_value_lower_bound: m must not exceed M");
    if (N < 1) throw std::invalid_argument("two_value_lower_bound: N must be at least 1");
    Rat r(Int(4) * m * M * N, Int(m + M) * (m + M));
    r.canonicalize();
    return r;
}

bool two_value_equality_attainable(long long N, long long m, long long M) {
    // N*M/(m+M) integral iff N*m/(m+M) is, since the two add up to N.
    return (Int(N) * M) % (m + M) == 0;
}

std::vector<std::pair<long long, Rat>> bound_table(long long m, long long M_max) {
    if (M_max < m) throw std::invalid_argument("bound_table: M_max must be at least m");
    std::vector<std::pair<long long, Rat>> rows;
    for (long long M = m; M <= M_max; ++M) {
        Rat c(Int(4) * m * M, Int(m + M) * (m + M));
        c.canonicalize();
        rows.emplace_back(M, c);
    }
    return rows;
}

namespace {

void enumerate_multisets(int remaining, int value, int M, std::vector<int>& counts,
                         const std::function<void(const std::vector<int>&)>& emit) {
    if (value > M) {
        if (remaining == 0) emit(counts);
        return;
    }
    for (int c = remaining; c >= 0; --c) {
        counts.push_back(c);
        enumerate_multisets(remaining - c, value + 1, M, counts, emit);
        counts.pop_back();
    }
}

}  // namespace

BruteForceMin brute_force_min_weight(int N, int m, int M) {
    if (m <= 0 || m > M) throw std::invalid_argument("brute_force_min_weight: need 0 < m <= M");
    if (N > 8 || M > 6) throw std::invalid_argument("brute_force_min_weight: search space too large");
    if (N < 1) throw std::invalid_argument("brute_force_min_weight: N must be at least 1");
    if (N == 1 && m != M)
        throw std::invalid_argument("brute_force_min_weight: no length-1 vector can contain both m and M");

    BruteForceMin best;
    std::vector<int> counts;
    auto consider = [&](const std::vector<int>& cnt) {
        // cnt[v - m] = number of entries of value v
        if (cnt[0] < 1) return;                              // at least one m
        if (cnt[static_cast<std::size_t>(M - m)] < 1) return;  // at least one M
        Int s1 = 0, s2 = 0;
        std::vector<int> entries;
        for (int v = m; v <= M; ++v) {
            int c = cnt[static_cast<std::size_t>(v - m)];
            s1 += Int(c) * v;
            s2 += Int(c) * v * v;
            entries.insert(entries.end(), static_cast<std::size_t>(c), v);
        }
        Rat wp(s1 * s1, s2);
        wp.canonicalize();
        if (best.minimizers.empty() || wp < best.min_weight) {
            best.min_weight = wp;
            best.minimizers.clear();
            best.minimizers.push_back(entries);
        } else if (wp == best.min_weight) {
            best.minimizers.push_back(entries);
        }
    };
    enumerate_multisets(N, m, M, counts, consider);
    if (best.minimizers.empty()) throw std::logic_error("brute_force_min_weight found no feasible vector");
    std::sort(best.minimizers.begin(), best.minimizers.end());
    best.witness = best.minimizers.front();
    return best;
}

bool check_zero_component_lemma(std::span<const Rat> x) {
    std::optional<Rat> min_pos;
    int positives = 0;
    for (const auto& v : x) {
        if (v < 0) throw std::invalid_argument("check_zero_component_lemma: negative entry");
        if (v > 0) {
            ++positives;
            if (!min_pos || v < *min_pos) min_pos = v;
        }
    }
    if (positives < 2) throw std::invalid_argument("check_zero_component_lemma needs at least 2 positive entries");

    // Scale the smallest positive entry to 1, then zero one such entry.
    std::vector<Rat> scaled;
    scaled.reserve(x.size());
    for (const auto& v : x) scaled.push_back(v / *min_pos);
    std::vector<Rat> dropped = scaled;
    for (auto& v : dropped) {
        if (v == 1) {
            v = 0;
            break;
        }
    }
    return pseudo_weight(std::span<const Rat>(dropped)) < pseudo_weight(std::span<const Rat>(scaled));
}

BoundCertificate check_012_bounds(const RayVector& w, int q, const CodewordOracle& code) {
    int t1 = 0, t2 = 0;
    std::vector<std::uint8_t> mod2;
    mod2.reserve(w.canonical_int.size());
    for (const auto& x : w.canonical_int) {
        if (x != 0 && x != 1 && x != 2)
            throw std::invalid_argument("check_012_bounds: canonical entries must lie in {0,1,2}");
        if (x == 1) ++t1;
        if (x == 2) ++t2;
        mod2.push_back(static_cast<std::uint8_t>(x == 1 ? 1 : 0));
    }
    if (t2 < 1) throw std::invalid_argument("check_012_bounds: no entry equal to 2");
    if (t1 < 1) throw std::invalid_argument("check_012_bounds: mod-2 reduction is the zero vector");
    if (!code(mod2)) throw std::invalid_argument("check_012_bounds: mod-2 reduction is not a codeword");

    const int supp = t1 + t2;
    Rat wp = pseudo_weight(std::span<const Int>(w.canonical_int));
    Rat supp_bound(3 * (q + 2), 2);
    supp_bound.canonicalize();
    Rat weight_bound(4 * (q + 2), 3);
    weight_bound.canonicalize();

    BoundCertificate cert;
    cert.bound_name = "zero_one_two_bounds";
    cert.parameters = {{"q", std::to_string(q)},
                       {"t1", std::to_string(t1)},
                       {"t2", std::to_string(t2)}};
    cert.bound_value = weight_bound;
    cert.witnesses.push_back(render_ints(w.canonical_int) + " w_p=" + to_fraction_string(wp));
    if (Rat(supp) < supp_bound)
        cert.violations.push_back("|supp| = " + std::to_string(supp) + " < 3/2*(q+2) = " +
                                  to_fraction_string(supp_bound));
    if (wp < weight_bound)
        cert.violations.push_back("w_p = " + to_fraction_string(wp) + " < 4/3*(q+2) = " +
                                  to_fraction_string(weight_bound));
    return cert;
}

MinConjectureReport check_conjecture_min_012(const RaySet& rays, const SpectrumReport& spec) {
    MinConjectureReport rep;
    std::optional<Rat> min_weight;
    for (const auto& e : spec.entries)
        if (!e.is_codeword_multiple && (!min_weight || e.weight < *min_weight)) min_weight = e.weight;
    if (!min_weight) {
        rep.vacuous = true;
        rep.summary = "no non-codeword minimal pseudo-codewords; conjecture check is vacuous";
        return rep;
    }
    rep.min_noncodeword_weight = *min_weight;
    for (const auto& e : spec.entries) {
        if (e.is_codeword_multiple || e.weight != *min_weight) continue;
        bool all012 = true;
        for (const auto& x : e.ray.canonical_int)
            if (x != 0 && x != 1 && x != 2) all012 = false;
        if (all012) {
            rep.attained_by_012 = true;
            rep.attaining_ray = e.ray.canonical_int;
            break;
        }
    }
    rep.summary = rep.attained_by_012
                      ? "minimum non-codeword weight " + to_fraction_string(*min_weight) +
                            " is attained by a {0,1,2} pseudo-codeword: consistent with the conjecture"
                      : "minimum non-codeword weight " + to_fraction_string(*min_weight) +
                            " is not attained by any {0,1,2} pseudo-codeword: counterexample";
    (void)rays;
    return rep;
}

}  // namespace pgldpc

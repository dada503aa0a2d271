#include "pgldpc/constructions.hpp"

#include <stdexcept>

#include "pgldpc/rank.hpp"

namespace pgldpc {

LineConstruction build_line_pcw(const ConeSystem& cone, int line_index) {
    const BinaryMatrix& H = cone.matrix();
    if (line_index < 0 || line_index >= H.m) throw std::invalid_argument("invalid line index");
    const int n = H.n;
    const auto& line = H.row_supports[static_cast<std::size_t>(line_index)];
    const int q = static_cast<int>(line.size()) - 1;

    LineConstruction c;
    c.q = q;
    c.line_index = line_index;

    std::vector<Int> v(static_cast<std::size_t>(n), 1);
    for (int i : line) v[static_cast<std::size_t>(i)] = q;
    c.omega = canonical_scale(std::span<const Int>(v), make_codeword_oracle(H));

    MembershipFailure f;
    if (!is_pseudocodeword(c.omega, cone, &f))
        throw std::logic_error("line construction is not a cone member: " + f.diagnostic);

    c.claimed_weight = Rat(Int(2 * q + 1) * (2 * q + 1), Int(q + 2));
    c.claimed_weight.canonicalize();
    Rat actual = pseudo_weight(std::span<const Int>(v));
    if (actual != c.claimed_weight)
        throw std::logic_error("line construction weight " + to_fraction_string(actual) +
                               " does not match (2q+1)^2/(q+2)");

    for (int k = 0; k < cone.parity_count(); ++k) {
        if (cone.evaluate(k, std::span<const Int>(v)) == 0) c.active_matrix.push_back(cone.coefficient_row(k));
    }
    return c;
}

MinimalityCertificate certify_minimality(const LineConstruction& c, const ConeSystem& cone) {
    MinimalityCertificate cert;
    const int n = cone.n();
    const int q = c.q;
    const auto& v = c.omega.entries;

    // (a) tight counts: n-1 parity, zero nonnegativity.
    for (int k = 0; k < static_cast<int>(cone.inequalities().size()); ++k) {
        if (cone.evaluate(k, std::span<const Rat>(v)) == 0) {
            if (cone.inequalities()[static_cast<std::size_t>(k)].kind == Inequality::Kind::parity)
                ++cert.tight_parity;
            else
                ++cert.tight_nonneg;
        }
    }
    if (cert.tight_parity != n - 1)
        cert.failures.push_back("tight parity inequalities: " + std::to_string(cert.tight_parity) +
                                ", expected n-1 = " + std::to_string(n - 1));
    if (cert.tight_nonneg != 0)
        cert.failures.push_back("tight nonnegativity inequalities: " + std::to_string(cert.tight_nonneg) +
                                ", expected 0");
    if (static_cast<int>(c.active_matrix.size()) != cert.tight_parity)
        cert.failures.push_back("active matrix row count does not match the tight parity count");

    // (b) A . omega = 0 exactly.
    cert.product_zero = true;
    for (const auto& row : c.active_matrix) {
        Rat acc = 0;
        for (int i = 0; i < n; ++i) acc += Rat(row[static_cast<std::size_t>(i)]) * v[static_cast<std::size_t>(i)];
        if (acc != 0) {
            cert.product_zero = false;
            cert.failures.push_back("A*omega has a nonzero entry");
            break;
        }
    }

    // (c) A A^T = q I + J entrywise.
    cert.aat_structure = true;
    const auto rows = static_cast<int>(c.active_matrix.size());
    for (int a = 0; a < rows && cert.aat_structure; ++a) {
        for (int b = a; b < rows; ++b) {
            long long acc = 0;
            for (int i = 0; i < n; ++i)
                acc += static_cast<long long>(c.active_matrix[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)]) *
                       c.active_matrix[static_cast<std::size_t>(b)][static_cast<std::size_t>(i)];
            long long expected = (a == b) ? q + 1 : 1;
            if (acc != expected) {
                cert.aat_structure = false;
                cert.failures.push_back("A*A^T entry (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") = " + std::to_string(acc) + ", expected " +
                                        std::to_string(expected));
                break;
            }
        }
    }

    // Closed-form eigenvalues of q I + J, all positive: a second route to
    // rank n-1 besides the direct elimination below.
    cert.eig_repeated = q;
    cert.eig_simple = static_cast<long long>(q) * q + 2 * q;

    // (d) rank(A) = n-1 by direct exact elimination.
    {
        std::vector<std::vector<Int>> M;
        M.reserve(c.active_matrix.size());
        for (const auto& row : c.active_matrix) M.emplace_back(row.begin(), row.end());
        cert.rank = rank_exact_int(std::move(M));
        if (cert.rank != n - 1)
            cert.failures.push_back("rank(A) = " + std::to_string(cert.rank) + ", expected n-1 = " +
                                    std::to_string(n - 1));
    }
    return cert;
}

MaxConjectureReport check_conjecture_max(const SpectrumReport& spec, int q) {
    MaxConjectureReport rep;
    rep.bound = Rat(Int(2 * q + 1) * (2 * q + 1), Int(q + 2));
    rep.bound.canonicalize();

    std::optional<Rat> max_w;
    for (const auto& e : spec.entries) {
        if (e.is_codeword_multiple) continue;
        if (!max_w || e.weight > *max_w) max_w = e.weight;
        if (e.weight > rep.bound) {
            std::string s = "(";
            for (std::size_t i = 0; i < e.ray.canonical_int.size(); ++i) {
                if (i) s += ",";
                s += e.ray.canonical_int[i].get_str();
            }
            s += ") w_p=" + to_fraction_string(e.weight);
            rep.counterexamples.push_back(s);
        }
    }
    if (!max_w) {
        rep.vacuous = true;
        rep.consistent = true;
        rep.summary = "no non-codeword classes; conjecture check is vacuous";
        return rep;
    }
    rep.max_noncodeword_weight = max_w;
    rep.consistent = rep.counterexamples.empty();
    rep.summary = rep.consistent
                      ? "max non-codeword weight " + to_fraction_string(*max_w) + " <= bound " +
                            to_fraction_string(rep.bound) + ": consistent with the conjecture"
                      : "bound " + to_fraction_string(rep.bound) + " exceeded: counterexample found";
    return rep;
}

}  // namespace pgldpc

#include "pgldpc/cone.hpp"

#include <stdexcept>

#include "pgldpc/rank.hpp"

namespace pgldpc {

ConeSystem ConeSystem::build(BinaryMatrix H) {
    if (H.m == 0 || H.n == 0) throw std::invalid_argument("cannot build a cone from an empty matrix");
    ConeSystem c;
    c.H_ = std::move(H);
    for (int j = 0; j < c.H_.m; ++j)
        for (int i : c.H_.row_supports[static_cast<std::size_t>(j)])
            c.ineqs_.push_back({Inequality::Kind::parity, j, i});
    c.parity_count_ = static_cast<int>(c.ineqs_.size());
    for (int i = 0; i < c.H_.n; ++i) c.ineqs_.push_back({Inequality::Kind::nonneg, -1, i});
    return c;
}

Int ConeSystem::evaluate(int k, std::span<const Int> w) const {
    const auto& q = ineqs_[static_cast<std::size_t>(k)];
    if (q.kind == Inequality::Kind::nonneg) return w[static_cast<std::size_t>(q.index)];
    Int acc = 0;
    for (int i : H_.row_supports[static_cast<std::size_t>(q.row)]) acc += w[static_cast<std::size_t>(i)];
    acc -= 2 * w[static_cast<std::size_t>(q.index)];
    return acc;
}

Rat ConeSystem::evaluate(int k, std::span<const Rat> w) const {
    const auto& q = ineqs_[static_cast<std::size_t>(k)];
    if (q.kind == Inequality::Kind::nonneg) return w[static_cast<std::size_t>(q.index)];
    Rat acc = 0;
    for (int i : H_.row_supports[static_cast<std::size_t>(q.row)]) acc += w[static_cast<std::size_t>(i)];
    acc -= 2 * w[static_cast<std::size_t>(q.index)];
    return acc;
}

std::vector<int> ConeSystem::coefficient_row(int k) const {
    const auto& q = ineqs_[static_cast<std::size_t>(k)];
    std::vector<int> row(static_cast<std::size_t>(H_.n), 0);
    if (q.kind == Inequality::Kind::nonneg) {
        row[static_cast<std::size_t>(q.index)] = 1;
    } else {
        for (int i : H_.row_supports[static_cast<std::size_t>(q.row)]) row[static_cast<std::size_t>(i)] = 1;
        row[static_cast<std::size_t>(q.index)] = -1;
    }
    return row;
}

RayVector RayVector::from_ints(std::vector<Int> v) {
    RayVector r;
    r.entries.reserve(v.size());
    for (const auto& x : v) r.entries.emplace_back(x);
    r.canonical_int = std::move(v);
    return r;
}

CodewordOracle make_codeword_oracle(const BinaryMatrix& H) {
    return [H](const std::vector<std::uint8_t>& x) {
        if (static_cast<int>(x.size()) != H.n)
            throw std::invalid_argument("codeword oracle: length mismatch");
        for (const auto& supp : H.row_supports) {
            int parity = 0;
            for (int i : supp) parity ^= x[static_cast<std::size_t>(i)] & 1;
            if (parity) return false;
        }
        return true;
    };
}

bool is_pseudocodeword(std::span<const Rat> w, const ConeSystem& cone, MembershipFailure* failure) {
    if (static_cast<int>(w.size()) != cone.n())
        throw std::invalid_argument("membership test: length mismatch");
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0) {
            if (failure) *failure = {-1, "negative entry at coordinate " + std::to_string(i)};
            return false;
        }
    }
    const int count = static_cast<int>(cone.inequalities().size());
    for (int k = 0; k < count; ++k) {
        if (cone.evaluate(k, w) < 0) {
            if (failure) *failure = {k, "inequality " + std::to_string(k) + " violated"};
            return false;
        }
    }
    return true;
}

bool is_pseudocodeword(const RayVector& w, const ConeSystem& cone, MembershipFailure* failure) {
    return is_pseudocodeword(std::span<const Rat>(w.entries), cone, failure);
}

std::vector<int> active_set(std::span<const Rat> w, const ConeSystem& cone) {
    MembershipFailure f;
    if (!is_pseudocodeword(w, cone, &f))
        throw std::invalid_argument("active_set requires a cone member: " + f.diagnostic);
    std::vector<int> out;
    const int count = static_cast<int>(cone.inequalities().size());
    for (int k = 0; k < count; ++k)
        if (cone.evaluate(k, w) == 0) out.push_back(k);
    return out;
}

std::vector<int> active_set(const RayVector& w, const ConeSystem& cone) {
    return active_set(std::span<const Rat>(w.entries), cone);
}

bool is_minimal_pseudocodeword(std::span<const Rat> w, const ConeSystem& cone) {
    bool all_zero = true;
    for (const auto& x : w)
        if (x != 0) {
            all_zero = false;
            break;
        }
    if (all_zero) throw std::invalid_argument("the cone apex is not a ray");

    std::vector<int> act = active_set(w, cone);  // validates membership
    std::vector<std::vector<Int>> M;
    M.reserve(act.size());
    for (int k : act) {
        auto row = cone.coefficient_row(k);
        M.emplace_back(row.begin(), row.end());
    }
    return rank_exact_int(std::move(M)) == cone.n() - 1;
}

bool is_minimal_pseudocodeword(const RayVector& w, const ConeSystem& cone) {
    return is_minimal_pseudocodeword(std::span<const Rat>(w.entries), cone);
}

namespace {

RayVector canonical_scale_impl(std::vector<Rat> entries, std::vector<Int> primitive,
                               const CodewordOracle& code) {
    std::vector<std::uint8_t> mod2(primitive.size());
    bool zero_one = true;
    for (std::size_t i = 0; i < primitive.size(); ++i) {
        mod2[i] = static_cast<std::uint8_t>(mpz_odd_p(primitive[i].get_mpz_t()) ? 1 : 0);
        if (primitive[i] > 1) zero_one = false;
    }
    bool reduction_is_codeword = code(mod2);

    RayVector out;
    out.entries = std::move(entries);
    out.is_codeword_multiple = zero_one && reduction_is_codeword;
    if (reduction_is_codeword) {
        out.canonical_int = std::move(primitive);
    } else {
        out.canonical_int.reserve(primitive.size());
        for (auto& x : primitive) out.canonical_int.push_back(x * 2);
    }
    return out;
}

}  // namespace

RayVector canonical_scale(std::span<const Rat> w, const CodewordOracle& code) {
    bool any = false;
    for (const auto& x : w) {
        if (x < 0) throw std::invalid_argument("canonical_scale requires a nonnegative vector");
        if (x != 0) any = true;
    }
    if (!any) throw std::invalid_argument("canonical_scale of the zero vector");
    return canonical_scale_impl(std::vector<Rat>(w.begin(), w.end()), primitive_from_rationals(w), code);
}

RayVector canonical_scale(std::span<const Int> w, const CodewordOracle& code) {
    bool any = false;
    for (const auto& x : w) {
        if (x < 0) throw std::invalid_argument("canonical_scale requires a nonnegative vector");
        if (x != 0) any = true;
    }
    if (!any) throw std::invalid_argument("canonical_scale of the zero vector");
    std::vector<Rat> entries;
    entries.reserve(w.size());
    for (const auto& x : w) entries.emplace_back(x);
    return canonical_scale_impl(std::move(entries), make_primitive(std::vector<Int>(w.begin(), w.end())), code);
}

}  // namespace pgldpc

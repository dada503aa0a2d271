#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace pgldpc {

/// GF(2^s) arithmetic through exponent/discrete-log tables with respect to
/// the primitive element alpha = x mod primitive_poly.
///
/// The primitive polynomial per degree is a fixed built-in constant (the
/// lowest-weight, then numerically smallest, primitive polynomial), so field
/// tables and everything built on them are reproducible run to run.
class FieldTable {
public:
    /// Builds GF(2^s). Throws std::invalid_argument unless 1 <= s <= 16.
    static FieldTable build(int s);

    /// Bitmask of the built-in degree-s primitive polynomial (bit i = coefficient of x^i).
    static std::uint32_t primitive_poly_for(int s);

    int degree() const { return s_; }
    std::uint32_t order() const { return q_; }  // q = 2^s
    std::uint32_t primitive_poly() const { return poly_; }

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on a == 0
    std::uint32_t pow(std::uint32_t a, long e) const;

    /// alpha^k for any integer k (reduced mod q-1).
    std::uint32_t exp_at(long k) const;
    /// Discrete log of a nonzero element, in [0, q-1). Throws on 0.
    long log_at(std::uint32_t a) const;

    std::uint32_t generator() const { return exp_at(1); }

private:
    int s_ = 0;
    std::uint32_t q_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<std::uint32_t> exp_;  // size q-1
    std::vector<std::int32_t> log_;   // size q, log_[0] = -1
};

}  // namespace pgldpc

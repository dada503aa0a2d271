#include "pgldpc/field.hpp"

#include <stdexcept>
#include <string>

namespace pgldpc {

namespace {
// Lowest-weight, then numerically smallest, primitive polynomial over GF(2)
// for each degree 1..16. Index = degree.
constexpr std::array<std::uint32_t, 17> kPrimitivePoly = {
    0,       0x3,     0x7,     0xB,     0x13,    0x25,    0x43,    0x83,
    0x11D,   0x211,   0x409,   0x805,   0x1053,  0x201B,  0x402B,  0x8003,
    0x1002D,
};
}  // namespace

std::uint32_t FieldTable::primitive_poly_for(int s) {
    if (s < 1 || s > 16) throw std::invalid_argument("field degree s must be in [1,16], got " + std::to_string(s));
    return kPrimitivePoly[static_cast<std::size_t>(s)];
}

FieldTable FieldTable::build(int s) {
    FieldTable f;
    f.s_ = s;
    f.poly_ = primitive_poly_for(s);
    f.q_ = std::uint32_t{1} << s;
    f.exp_.assign(f.q_ - 1, 0);
    f.log_.assign(f.q_, -1);

    std::uint32_t b = 1;
    for (std::uint32_t k = 0; k < f.q_ - 1; ++k) {
        f.exp_[k] = b;
        f.log_[b] = static_cast<std::int32_t>(k);
        b <<= 1;
        if (b & f.q_) b ^= f.poly_;
    }
    if (b != 1) throw std::logic_error("primitive polynomial table is corrupt for s=" + std::to_string(s));
    return f;
}

std::uint32_t FieldTable::mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    long k = log_[a] + log_[b];
    long period = q_ - 1;
    return exp_[static_cast<std::size_t>(k % period)];
}

std::uint32_t FieldTable::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of 0 in GF(2^s)");
    long period = q_ - 1;
    return exp_[static_cast<std::size_t>((period - log_[a]) % period)];
}

std::uint32_t FieldTable::pow(std::uint32_t a, long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::invalid_argument("negative power of 0");
        return 0;
    }
    long period = q_ - 1;
    long k = (log_[a] * (e % period)) % period;
    if (k < 0) k += period;
    return exp_[static_cast<std::size_t>(k)];
}

std::uint32_t FieldTable::exp_at(long k) const {
    long period = q_ - 1;
    long r = k % period;
    if (r < 0) r += period;
    return exp_[static_cast<std::size_t>(r)];
}

long FieldTable::log_at(std::uint32_t a) const {
    if (a == 0 || a >= q_) throw std::invalid_argument("log of element outside GF(2^s)*");
    return log_[a];
}

}  // namespace pgldpc

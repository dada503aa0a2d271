#include "pgldpc/rational.hpp"

#include <stdexcept>

namespace pgldpc {

std::string to_decimal_string(const Rat& r, int digits) {
    Rat c = r;
    c.canonicalize();
    bool neg = c < 0;
    Int num = abs(Int(c.get_num()));
    Int den = c.get_den();
    Int ip = num / den;
    Int rem = num % den;
    std::string out = (neg ? "-" : "") + ip.get_str();
    if (rem != 0 && digits > 0) {
        std::string frac;
        for (int i = 0; i < digits && rem != 0; ++i) {
            rem *= 10;
            Int d = rem / den;
            rem %= den;
            frac += static_cast<char>('0' + d.get_si());
        }
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += "." + frac;
    }
    return out;
}

Int vector_content(std::span<const Int> v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, x);
    return g;
}

std::vector<Int> make_primitive(std::vector<Int> v) {
    Int g = vector_content(v);
    if (g == 0) throw std::invalid_argument("cannot make the zero vector primitive");
    if (g != 1)
        for (auto& x : v) x /= g;
    return v;
}

std::vector<Int> primitive_from_rationals(std::span<const Rat> v) {
    Int l = 1;
    for (const auto& x : v) {
        Rat c = x;
        c.canonicalize();
        l = lcm(l, Int(c.get_den()));
    }
    std::vector<Int> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        Rat scaled = x * Rat(l);
        scaled.canonicalize();
        out.push_back(scaled.get_num());
    }
    return make_primitive(std::move(out));
}

}  // namespace pgldpc

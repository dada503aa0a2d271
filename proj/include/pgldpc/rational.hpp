#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

namespace pgldpc {

using Int = mpz_class;
using Rat = mpq_class;

/// Render a rational as "p/q" (or just "p" when q == 1).
inline std::string to_fraction_string(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

/// Fixed decimal rendering with enough digits for reports; the exact
/// fraction is always carried alongside in serialized artifacts.
std::string to_decimal_string(const Rat& r, int digits = 6);

/// gcd of absolute values over a vector; 0 for the zero vector.
Int vector_content(std::span<const Int> v);

/// Divide a nonzero integer vector by its content, making it primitive.
std::vector<Int> make_primitive(std::vector<Int> v);

/// Clear denominators then divide by the content: the unique primitive
/// nonnegative-integer representative of the positive-scaling class.
std::vector<Int> primitive_from_rationals(std::span<const Rat> v);

}  // namespace pgldpc

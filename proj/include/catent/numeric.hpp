#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstddef>

namespace catent {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Natural logarithm of a positive big integer. Stays accurate when the
// value is far beyond double range by splitting off a power of two.
inline double log_big(const Int& n) {
    if (n <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(n);
    if (bits < 512) return std::log(n.convert_to<double>());
    const std::size_t shift = bits - 100;
    const double head = Int(n >> shift).convert_to<double>();
    return std::log(head) + static_cast<double>(shift) * M_LN2;
}

inline int sign_of(const Int& n) { return n > 0 ? 1 : (n < 0 ? -1 : 0); }

// cpp_int's string constructor does not take a leading '+'.
inline Int int_from_decimal(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    return Int(std::string(text));
}

inline bool fits_int64(const Int& n) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    return n >= lo && n <= hi;
}

}  // namespace catent

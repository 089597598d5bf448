#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>

namespace eigenflow {

using BigInt = boost::multiprecision::cpp_int;

// value * 2^exp2 as a double, safe for values far beyond double range as
// long as the scaled result fits. Truncates below the top 53 bits, so the
// result is within 1 ulp of exact.
// GCC 11 cannot bound cpp_int's dynamic right shift under -O3 and reports a
// spurious stringop overread through the inlined backend; suppressed here.
#pragma GCC diagnostic push
#pragma GCC diagnostic ignored "-Wstringop-overread"
#pragma GCC diagnostic ignored "-Wstringop-overflow"
inline double big_ldexp_to_double(const BigInt& value, long exp2) {
    if (value == 0) return 0.0;
    const BigInt mag = abs(value);
    const long bits = static_cast<long>(boost::multiprecision::msb(mag)) + 1;
    if (bits <= 960) {
        return std::ldexp(value.convert_to<double>(), static_cast<int>(exp2));
    }
    const long shift = bits - 53;
    const BigInt top = value >> shift;
    return std::ldexp(static_cast<double>(top.convert_to<std::int64_t>()),
                      static_cast<int>(exp2 + shift));
}
#pragma GCC diagnostic pop

inline double big_to_double(const BigInt& value) { return big_ldexp_to_double(value, 0); }

// bit length of |value|; 0 for value == 0
inline long big_bits(const BigInt& value) {
    if (value == 0) return 0;
    return static_cast<long>(boost::multiprecision::msb(abs(value))) + 1;
}

}  // namespace eigenflow

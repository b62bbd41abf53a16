#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace subpart {

/// Exact integer used for every count that can grow like q^n.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt ipow(const BigInt& base, int exponent) {
    BigInt result = 1;
    BigInt b = base;
    unsigned e = exponent < 0 ? 0u : static_cast<unsigned>(exponent);
    while (e != 0) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e != 0) b *= b;
    }
    return result;
}

inline BigInt ipow(int base, int exponent) { return ipow(BigInt(base), exponent); }

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Binomial coefficient C(m, 2) for m >= 0.
inline BigInt choose2(const BigInt& m) { return m * (m - 1) / 2; }

}  // namespace subpart

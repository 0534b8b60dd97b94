#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace negaseq {

using BigInt = boost::multiprecision::cpp_int;

[[nodiscard]] inline BigInt ipow(unsigned base, unsigned exponent) {
    return boost::multiprecision::pow(BigInt(base), exponent);
}

[[nodiscard]] inline std::string to_string(const BigInt& v) { return v.str(); }

[[nodiscard]] inline bool fits_u64(const BigInt& v) {
    return v >= 0 && v <= BigInt(std::numeric_limits<std::uint64_t>::max());
}

}  // namespace negaseq

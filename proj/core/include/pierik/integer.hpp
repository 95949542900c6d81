#pragma once

#include <gmpxx.h>

#include <string>

namespace pierik {

/// All coefficient arithmetic is arbitrary precision.
using Integer = mpz_class;

/// Renders an integer for JSON output: a plain numeric token while
/// |value| < 2^53 (exact in every JSON reader), a quoted decimal string
/// beyond that.
inline std::string json_integer(const Integer& value) {
    static const Integer limit = Integer(1) << 53;
    if (cmp(abs(value), limit) < 0) {
        return value.get_str();
    }
    return "\"" + value.get_str() + "\"";
}

}  // namespace pierik

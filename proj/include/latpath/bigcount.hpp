#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace latpath {

// Exact arbitrary-precision count. All divisions in this library are exact;
// exact_div is the single place that enforces it.
using BigCount = boost::multiprecision::cpp_int;

inline BigCount exact_div(const BigCount& numerator, const BigCount& divisor) {
    if (divisor == 0) throw std::invalid_argument("exact_div: division by zero");
    BigCount q = numerator / divisor;
    if (q * divisor != numerator)
        throw std::logic_error("exact_div: " + numerator.str() + " is not divisible by " +
                               divisor.str());
    return q;
}

inline std::string to_decimal(const BigCount& value) { return value.str(); }

}  // namespace latpath

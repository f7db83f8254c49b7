// Exact arbitrary-precision integers and rationals used throughout the core.
// No floating point anywhere: every quantity we compute is an exact integer
// or an exact fraction.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latroot {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int floor_div(const Int& a, const Int& b) {
    // b != 0; rounds toward negative infinity
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    return -floor_div(-a, b);
}

inline bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline Int to_int(const Rat& r) {
    return boost::multiprecision::numerator(r) / boost::multiprecision::denominator(r);
}

inline long to_long(const Int& v) { return static_cast<long>(v); }

}  // namespace latroot

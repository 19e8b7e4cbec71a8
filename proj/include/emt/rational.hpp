#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "emt/errors.hpp"

namespace emt {

// Exact arbitrary-precision rational. cpp_rational keeps lowest terms with a
// positive denominator, which is exactly the invariant the value types need.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline std::string rat_to_string(const Rat& r) { return r.str(); }

// Accepts "12", "-12", "3/4", "-3/4".
inline Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        return r;
    } catch (const std::exception&) {
        throw SortError("not a rational literal: " + s);
    }
}

} // namespace emt

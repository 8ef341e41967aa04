#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace primfree {

// Exact arbitrary-precision rationals. cpp_rational keeps the canonical
// form we rely on everywhere: denominator > 0, gcd(|num|, den) = 1, zero
// stored as 0/1. All linear algebra in this library is exact; there is no
// floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Incompatible ambient dimensions, out-of-range degrees, length mismatches.
struct dimension_error : error {
    using error::error;
};

// Structurally invalid presentation data (bad indices, non-connected, ...).
struct presentation_error : error {
    using error::error;
};

// Layer tables that are not nested/terminating filtrations.
struct filtration_error : error {
    using error::error;
};

// Bracket tables violating antisymmetry or the Jacobi identity.
struct lie_error : error {
    using error::error;
};

// Operations past the truncation degree.
struct truncation_error : error {
    using error::error;
};

// Configured caps exceeded (e.g. permutations model past its degree cap).
struct resource_error : error {
    using error::error;
};

// File / serialization problems.
struct io_error : error {
    using error::error;
};

inline Rational rat(long long num, long long den = 1) {
    if (den == 0)
        throw dimension_error("rational with zero denominator");
    return Rational(num) / Rational(den);  // normalizes sign and gcd
}

inline std::string to_string(const Rational& q) {
    return q.str();
}

}  // namespace primfree

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fgl {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a computation contradicts a structural guarantee of its input
// (divisibility failures, non-unit determinants and the like). Distinct from
// std::domain_error so callers can tell bad inputs from broken invariants.
struct InconsistencyError : std::runtime_error {
    explicit InconsistencyError(const std::string& what) : std::runtime_error(what) {}
};

inline Int ipow(std::int64_t base, unsigned exp) {
    return boost::multiprecision::pow(Int(base), exp);
}

// Floor division with b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// Inverse of a modulo m (m >= 2), via the extended Euclidean algorithm.
Int inv_mod(Int a, const Int& m);

// a^e mod m with e >= 0.
Int pow_mod(Int a, Int e, const Int& m);

std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace fgl

#pragma once

// Brute-force oracles shared by the test suites. These stay deliberately
// naive and independent of the library's computation paths.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fgl/numbers.hpp"
#include "fgl/padic.hpp"

namespace oracle {

// All (n1, n2) with n1 + n2 p^{l(n1)} = n and n2 > 0, by exhaustive search
// over n1.
inline std::vector<std::pair<std::int64_t, std::int64_t>> splittings_brute(
    std::int64_t n, const fgl::Prime& p) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t n1 = 0; n1 < n; ++n1) {
        const fgl::Int step = p.pow(fgl::length_l(n1, p));
        const fgl::Int rest = fgl::Int(n) - n1;
        if (rest % step != 0) continue;
        const fgl::Int n2 = rest / step;
        if (n2 > 0) out.emplace_back(n1, n2.convert_to<std::int64_t>());
    }
    return out;
}

// The alternating sum over all decompositions n = n1 * n2 * ... * nk with
// n1 >= 0 and the rest positive (identity Frobenius), enumerated as explicit
// tuples by peeling the top part of the digit string.
inline fgl::Rat p_seq_alternating(const std::vector<fgl::Rat>& b, std::int64_t n,
                                  const fgl::Prime& p) {
    struct Enum {
        const std::vector<fgl::Rat>& b;
        const fgl::Prime& p;
        fgl::Rat total = 0;
        void walk(std::int64_t head, const fgl::Rat& product, int parity) {
            const fgl::Rat term = b[static_cast<std::size_t>(head)] * product;
            total += (parity % 2 == 0) ? term : -term;
            for (const auto& [n1, n2] : splittings_brute(head, p))
                walk(n1, product * b[static_cast<std::size_t>(n2)], parity + 1);
        }
    };
    Enum e{b, p, 0};
    e.walk(n, fgl::Rat(1), 0);
    return e.total;
}

// ord_p(n!) the slow way.
inline fgl::Int legendre_factorial_ord(const fgl::Int& n, const fgl::Prime& p) {
    fgl::Int total = 0;
    for (fgl::Int pw = p.value(); pw <= n; pw *= p.value()) total += n / pw;
    return total;
}

// Largest k admitting n + 1 = m p^k with m > 1, by exhaustive search.
inline long required_valuation_brute(std::int64_t n, const fgl::Prime& p) {
    long best = -1;
    fgl::Int pw = 1;
    for (long k = 0;; ++k) {
        if (pw > fgl::Int(n) + 1) break;
        if ((fgl::Int(n) + 1) % pw == 0 && (fgl::Int(n) + 1) / pw > 1) best = k;
        pw *= p.value();
    }
    return best;
}

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracle

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fgl/charpoly.hpp"
#include "fgl/padic.hpp"
#include "fgl/series.hpp"

namespace fgl {

/// Local Euler factor P_p(T) = 1 + sum_{i=1}^{d} gamma_i T^i.
struct EulerFactor {
    Prime prime;
    std::vector<Int> gamma;

    int degree() const noexcept { return static_cast<int>(gamma.size()); }
};

/// Finitely many nontrivial Euler factors; absent primes have P_p = 1.
struct EulerSystem {
    std::map<std::int64_t, EulerFactor> factors;
};

/// a_{p^s} for s = 0..s_max by the prime-power recurrence
/// a_{p^s} + sum gamma_i a_{p^{s-i}} = 0 (a at negative levels is 0).
std::vector<Int> prime_power_coeffs(const EulerFactor& f, int s_max);

/// Shifted Dirichlet coefficients b_n = a_{n+1} for n = 0..N, generated by
/// multiplicativity and the prime-power recurrences.
CoeffSeq dirichlet_coeffs(const EulerSystem& L, std::size_t N);

/// Exact criterion: the formal group law of the L-sequence is p-integral iff
/// p^{i-1} | gamma_i for all i, i.e. Q(T) = p P_p(T/p) has integer
/// coefficients.
bool lfun_integrality(const EulerFactor& f);

/// Q(T) = p P_p(T/p); Q(0) = p.
struct QPoly {
    Prime prime;
    std::vector<Rat> q;  // q[i] = coefficient of T^i, q[0] = p

    int degree() const noexcept { return static_cast<int>(q.size()) - 1; }
};
QPoly q_poly(const EulerFactor& f);

/// Exact height: the multiplicity of T in Q mod p, infinite when Q = 0 mod p
/// (the law is then strictly isomorphic to the additive one).
Height lfun_height(const EulerFactor& f);

/// The characteristic polynomial as the Eisenstein factor of Q, lifted from
/// the factorization Q = T^h * U mod p, normalized to constant term p. The
/// monic associate is kept in the result's metadata. Height infinity yields
/// Psi = p.
CharPoly eisenstein_factor(const QPoly& Q, int k);

struct PseqStructure {
    bool pass = true;
    std::int64_t index = -1;  // first violating index when !pass
    std::string detail;
};

/// Checks the structural shape of the p-sequence of the shifted coefficients:
/// c_{m p^k - 1} = 0 for m > 1 prime to p with k > 0, and c_{p^i-1} = -gamma_i
/// (0 beyond the degree), up to index N.
PseqStructure lfun_pseq_structure(const EulerFactor& f, std::int64_t N);

/// p-adic view of the shifted coefficient sequence of the single-factor
/// system {p: f}: nonzero only at indices p^s - 1. Supports the huge indices
/// that the matrix formula needs at higher precision.
PadicCoeffFn euler_coeff_view(const EulerFactor& f);

}  // namespace fgl

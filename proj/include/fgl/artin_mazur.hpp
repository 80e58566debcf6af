#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fgl/charpoly.hpp"
#include "fgl/padic.hpp"
#include "fgl/series.hpp"

namespace fgl {

/// Laurent polynomial in up to three variables with integer coefficients.
struct LaurentPoly {
    int vars = 0;
    std::map<std::vector<int>, Int> terms;  // exponent vector -> coefficient

    LaurentPoly(int variables, std::map<std::vector<int>, Int> t);
};

using LatticePoint = std::vector<int>;

/// The unique interior lattice point of the Newton polytope of V. Throws
/// when the polytope is not full-dimensional or the interior point count is
/// not one (the offending points are listed in the message).
LatticePoint newton_interior(const LaurentPoly& V);

/// b_n = coefficient of x^{n w} in V(x)^n, for n = 0..N. Sparse power
/// accumulation; monomials that can no longer reach any remaining target are
/// dropped along the way.
CoeffSeq am_coeffs(const LaurentPoly& V, const LatticePoint& w, std::size_t N);

/// The K3 double-covering sequence: b_n = binom(n/2, n/4)^2 when 4 | n,
/// otherwise 0.
CoeffSeq k3_coeffs(std::size_t N);

/// Same sequence presented p-adically, for indices beyond exact reach.
PadicCoeffFn k3_coeff_view(const Prime& p);

struct K3Report {
    Prime prime;
    int precision;
    Height height;
    std::optional<Residue> alpha;  // unit root, p = 1 mod 4 only
    std::optional<Residue> a_p;    // -alpha - p^2 alpha^{-1}
};

/// The local invariants of the K3 law at an odd prime: for p = 1 mod 4 the
/// unit root alpha = -gamma_p(1/4)^4 and the trace a_p, checked against the
/// quadratic alpha^2 + a_p alpha + p^2 = 0 and against 2p - 4a^2 with
/// p = a^2 + 4b^2; for p = 3 mod 4 the vanishing c_{p^s-1} = 0 mod p^s for
/// s <= inf_bound.
K3Report k3_invariants(const Prime& p, int k, int inf_bound = 4);

}  // namespace fgl

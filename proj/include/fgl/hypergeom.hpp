#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "fgl/charpoly.hpp"
#include "fgl/padic.hpp"
#include "fgl/series.hpp"

namespace fgl {

/// Finite system of integral weights gamma_nu with sum nu gamma_nu = 0 and a
/// nonnegative Landau function (so the factorial ratios u_n are integers);
/// both conditions are checked at construction. N = lcm of the supported nu.
class WeightSystem {
public:
    explicit WeightSystem(std::map<std::int64_t, std::int64_t> gamma);

    const std::map<std::int64_t, std::int64_t>& gamma() const noexcept { return gamma_; }
    std::int64_t modulus() const noexcept { return lcm_; }  // N
    std::int64_t gamma_at(std::int64_t nu) const;

private:
    std::map<std::int64_t, std::int64_t> gamma_;
    std::int64_t lcm_;
};

/// u_n = prod (nu n)!^{gamma_nu}, exact.
Rat u_value(const WeightSystem& w, std::int64_t n);

/// Landau function L(t) = sum gamma_nu floor(nu t); 1-periodic.
std::int64_t landau(const WeightSystem& w, const Rat& t);

/// ord_p(u_n) = sum_{i>=1} L(n / p^i).
Int ordp_u(const WeightSystem& w, const Int& n, const Prime& p);

/// u_n presented p-adically: ord_p and the unit part mod p^{precision of
/// table}. Handles indices far beyond exact factorial reach.
PadicValue u_value_padic(const WeightSystem& w, const Int& n, const GammaTable& table);

/// Coefficients of the hypergeometric logarithm: b_m = u_{m/N} when N | m,
/// else 0, for m = 0..N_deg.
CoeffSeq hg_coeff_seq(const WeightSystem& w, std::size_t N_deg);

/// p-adic view of the same sequence (for the matrix formula and the
/// residue-level integrality scan).
PadicCoeffFn hg_coeff_view(const WeightSystem& w, const Prime& p);

struct HGReport {
    std::int64_t modulus = 0;          // N
    int order = 0;                     // d = ord of p mod N
    std::vector<std::int64_t> m;       // m[a] for 0 <= a < d, m[0] = 1
    std::vector<Int> lambda;           // lambda[a] = ord_p(u_{(m_a p^a - 1)/N}), lambda[0] = 0
    bool integral = false;
    std::optional<Height> height;      // d or exact infinity; absent if non-integral
    std::optional<Residue> xi;         // Psi = p - xi T^d, when the height is d
};

/// The finite integrality criterion, exact height, and the gamma-product
/// unit xi at a prime p > N.
HGReport hg_classify(const WeightSystem& w, const Prime& p, int k);

struct HGTableEntry {
    bool integral = false;
    std::optional<int> height;  // nullopt = infinite
};

/// Verdict and height per invertible residue class mod N, from the Landau
/// function alone.
std::map<std::int64_t, HGTableEntry> hg_residue_table(const WeightSystem& w);

}  // namespace fgl

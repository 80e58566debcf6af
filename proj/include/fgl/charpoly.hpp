#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgl/padic.hpp"
#include "fgl/pseq.hpp"
#include "fgl/series.hpp"

namespace fgl {

/// Height of a formal group law at p. Heights from the p-sequence scan are
/// only certified up to a bound; some constructions prove exact infinity.
struct Height {
    enum class Kind { finite, infinite_up_to, infinite } kind = Kind::finite;
    int value = 0;  // h when finite, the scanned bound s_max otherwise

    static Height finite(int h) { return {Kind::finite, h}; }
    static Height infinite_up_to(int bound) { return {Kind::infinite_up_to, bound}; }
    static Height infinite() { return {Kind::infinite, 0}; }
    bool is_finite() const { return kind == Kind::finite; }
    std::string to_string() const;
};

/// The local characteristic polynomial Psi(T) = p - sum alpha_i T^i, with
/// alpha_h a unit and alpha_i in pZ_p for i < h. The matrix formula yields
/// alpha_i/p mod p^k for i < h, hence those residues carry precision k+1
/// while alpha_h carries precision k. Psi = p when the height is infinite.
struct CharPoly {
    Prime prime;
    Height height;
    int precision = 0;            // the k the computation was run at
    std::vector<Residue> alphas;  // alphas[i-1] = alpha_i; empty when infinite

    const Residue& alpha(int i) const;  // 1-based
    /// Monic associate of Psi (the Eisenstein factor normalization), when the
    /// producing route computed one. Coefficients of T^0..T^h.
    std::vector<Residue> monic_associate;
};

/// Exact functional-equation coefficients v_s = c_{p^s-1}/p^{s-1} for
/// s = 1..s_max. Divisibility failure signals a non-integral input law.
std::vector<Rat> v_coeffs(const PSeq& c, int s_max);

/// g(x) = f(x) - (1/p) sum_s v_s f(x^{p^s}) truncated at N, where f is the
/// logarithm of b. Integral g certifies the functional equation.
UniSeries functional_residual(const CoeffSeq& b, const std::vector<Rat>& v, const Prime& p,
                              int degree);

/// Height by the p-sequence: least s with ord_p(c_{p^s-1}) = s-1, else
/// infinite up to s_max. Throws on evidence of non-integrality.
Height height(const PSeq& c, int s_max);

/// beta_n = b_{p^n-1} / p^{n - floor(n/h)}, exact. A divisibility failure
/// means the claimed height (or integrality) is wrong and throws.
struct BetaSeq {
    Prime prime;
    int height;
    std::vector<Rat> beta;  // indices 0..n_max
};
BetaSeq betas(const CoeffSeq& b, const Prime& p, int h, int n_max);

/// A coefficient b_n presented p-adically: exact zero, or unit * p^ord with
/// the unit known mod p^{unit_precision}. This is how coefficient families
/// with astronomically large exact values (factorial ratios at indices like
/// p^16) are fed to the matrix formula.
struct PadicValue {
    bool zero = false;
    Int ord = 0;
    Int unit = 0;  // representative mod p^{unit_precision} of the unit part

    static PadicValue exact_zero() { return {true, 0, 0}; }
};

/// index -> b_index at the requested unit precision.
using PadicCoeffFn = std::function<PadicValue(const Int& index, int unit_precision)>;

/// View of an exact coefficient sequence; indices must stay within range.
PadicCoeffFn padic_view(const CoeffSeq& b, const Prime& p);

/// Theorem-2 matrix formula: solves D_k (alpha_1/p, ..., alpha_{h-1}/p,
/// alpha_h)^T = (beta_{kh}, ..., beta_{kh+h-1})^T mod p^k after asserting
/// det D_k = (-1)^{h-1} beta_h^{kh-1} mod p.
CharPoly charpoly_matrix(const PadicCoeffFn& b, const Prime& p, int h, int k);
CharPoly charpoly_matrix(const CoeffSeq& b, const Prime& p, int h, int k);

/// Height-1 closed form alpha_1 = b_{p^k-1} / b_{p^{k-1}-1} mod p^k.
Residue unit_root_h1(const PadicCoeffFn& b, const Prime& p, int k);
Residue unit_root_h1(const CoeffSeq& b, const Prime& p, int k);

/// Height-2 closed forms for (alpha_1, alpha_2) mod p^k, evaluated from the
/// exact coefficients at indices p^{2k-2}-1 .. p^{2k+1}-1.
std::pair<Residue, Residue> charpoly_h2(const std::function<Rat(const Int&)>& b, const Prime& p,
                                        int k);
std::pair<Residue, Residue> charpoly_h2(const CoeffSeq& b, const Prime& p, int k);

/// det D_k mod p, exposed for the structural invariant checks.
Residue det_dk_mod_p(const PadicCoeffFn& b, const Prime& p, int h, int k);

}  // namespace fgl

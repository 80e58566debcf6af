#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fgl/padic.hpp"
#include "fgl/series.hpp"

namespace fgl {

/// The p-sequence {c_n} attached to a coefficient sequence {b_n}: the
/// alternating sum over digit-concatenation decompositions, computed here by
/// the recursion c_n = b_n - sum_{n = n1*n2, n2>0} c_{n1} b_{n2}.
struct PSeq {
    Prime prime;
    std::vector<Rat> c;

    std::size_t size() const noexcept { return c.size(); }
    const Rat& at(std::size_t n) const;
};

/// c_0..c_N of the p-sequence of b.
PSeq p_sequence(const CoeffSeq& b, const Prime& p, std::size_t N);

/// Inverse transform: the b with p_sequence(b) = c, up to index N.
CoeffSeq p_sequence_inverse(const PSeq& c, std::size_t N);

/// The binding congruence exponent at index n: the largest k such that
/// n + 1 = m p^k with m > 1. Equals ord_p(n+1), minus one when n+1 is a
/// power of p.
long required_valuation(std::int64_t n, const Prime& p);

struct CongruenceWitness {
    std::int64_t n = 0;
    long actual = 0;    // ord_p(c_n); only meaningful when a witness exists
    long required = 0;
};

struct CongruenceVerdict {
    bool pass = false;
    std::int64_t bound = 0;
    std::optional<CongruenceWitness> witness;
};

/// Integrality criterion: the formal group law of b is p-integral up to the
/// checked bound iff ord_p(c_n) >= required_valuation(n) for 1 <= n <= N.
/// Reports the least failing index otherwise. Requires p-integral b.
CongruenceVerdict check_integrality(const CoeffSeq& b, const Prime& p, std::int64_t N);

/// The stronger congruence ord_p(c_n) >= l(n) - 1 for 0 <= n <= N, satisfied
/// by constant-term sequences of Laurent polynomial powers.
CongruenceVerdict check_strong_congruence(const CoeffSeq& b, const Prime& p, std::int64_t N);

/// Residue-level evaluation of the same criteria for integer sequences too
/// large to carry exactly: the recursion is run in Z/p^R where R exceeds
/// every congruence requirement up to N, so verdicts and witnesses are
/// exact. b_mod must return b_n reduced mod p^R.
using ResidueSeqFn = std::function<Int(std::int64_t)>;

std::vector<Int> p_sequence_mod(const ResidueSeqFn& b_mod, const Prime& p, int R,
                                std::int64_t N);
CongruenceVerdict check_integrality_mod(const ResidueSeqFn& b_mod, const Prime& p,
                                        std::int64_t N);

}  // namespace fgl

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fgl/numbers.hpp"

namespace fgl {

/// A prime number, primality-checked at construction (trial division).
class Prime {
public:
    explicit Prime(std::int64_t p);
    std::int64_t value() const noexcept { return p_; }
    /// p^k for k >= 0.
    Int pow(int k) const;
    friend bool operator==(const Prime& a, const Prime& b) noexcept { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) noexcept { return a.p_ != b.p_; }

private:
    std::int64_t p_;
};

/// ord_p of a nonzero rational; negative for values with p in the denominator.
/// Throws std::domain_error on x = 0 (use val_p_probe when 0 is expected).
long val_p(const Rat& x, const Prime& p);
long val_p(const Int& x, const Prime& p);
/// nullopt encodes ord_p(0) = +infinity.
std::optional<long> val_p_probe(const Rat& x, const Prime& p);

/// Length of the base-p expansion: l(n) = min{ s >= 1 : n < p^s }, so l(0) = 1.
int length_l(const Int& n, const Prime& p);
int length_l(std::int64_t n, const Prime& p);

/// Digit concatenation n * m = n + m p^{l(n)}. Satisfies n * 0 = n and
/// l(n * m) = l(n) + l(m) exactly when m > 0.
std::int64_t concat(std::int64_t n, std::int64_t m, const Prime& p);

/// All pairs (n1, n2) with n = n1 * n2 and n2 > 0, i.e. the cut points of the
/// digit string of n whose lower chunk is a valid expansion on its own.
std::vector<std::pair<std::int64_t, std::int64_t>> splittings(std::int64_t n, const Prime& p);

/// Base-p digits of a non-negative integer, little-endian. The digit vector
/// always has length l(n); in particular 0 is the single digit 0.
struct DigitString {
    Prime prime;
    std::vector<std::int32_t> digits;

    static DigitString of(const Int& n, const Prime& p);
    Int value() const;
};

/// Element of Z/p^k with the prime and the precision k carried explicitly.
/// Arithmetic requires equal primes and truncates to the smaller precision.
/// Division is defined only by units.
class Residue {
public:
    Residue(const Prime& p, int precision, Int value);

    const Prime& prime() const noexcept { return p_; }
    int precision() const noexcept { return k_; }
    /// Canonical representative in [0, p^k).
    const Int& value() const noexcept { return v_; }
    const Int& modulus() const noexcept { return mod_; }

    bool is_zero() const noexcept { return v_ == 0; }
    bool is_unit() const { return v_ % p_.value() != 0; }

    /// Truncation to a coarser precision (k <= precision()).
    Residue with_precision(int k) const;
    Residue inverse() const;
    Residue pow(const Int& e) const;

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    friend Residue operator/(const Residue& a, const Residue& b);
    Residue operator-() const;

    /// Equality compares values at the smaller of the two precisions.
    friend bool operator==(const Residue& a, const Residue& b);
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

private:
    Prime p_;
    int k_;
    Int mod_;
    Int v_;
};

/// Reduction of a p-integral rational mod p^k.
Residue residue_of(const Rat& x, const Prime& p, int k);
Residue residue_of(const Int& x, const Prime& p, int k);

/// Morita's p-adic gamma at integer arguments, mod p^k:
/// gamma(0) = 1, gamma(1) = -1, gamma(n) = (-1)^n prod_{1<=j<n, p∤j} j.
/// Always a unit. Large n is reduced through the congruence
/// gamma(n) = gamma(n mod p^k) mod p^k (window p^{k+1} when p = 2).
Residue gamma_p_integer(const Int& n, const Prime& p, int k);

/// Gamma at a p-integral rational, computed at the integer representative of
/// x inside the reduction window. The paper-level statements only use odd p;
/// for p = 2 the wider window keeps the value well-defined.
Residue gamma_p(const Rat& x, const Prime& p, int k);

/// Precomputed gamma values mod p^k for all reduced arguments. Useful when
/// gamma is evaluated many times at one (p, k), e.g. inside factorial units.
class GammaTable {
public:
    GammaTable(const Prime& p, int precision);
    const Prime& prime() const noexcept { return p_; }
    int precision() const noexcept { return k_; }
    Residue at(const Int& n) const;

private:
    Prime p_;
    int k_;
    Int window_;
    Int mod_;
    std::vector<Int> values_;
};

/// ord_p(n!) by Legendre's formula.
Int factorial_ord(const Int& n, const Prime& p);

/// The unit part of n!, i.e. n!/p^{ord_p(n!)} mod p^k, through the recursion
/// n! = p^{floor(n/p)} floor(n/p)! (-1)^{n+1} gamma(n+1).
Residue factorial_unit(const Int& n, const GammaTable& table);
Residue factorial_unit(const Int& n, const Prime& p, int k);

}  // namespace fgl

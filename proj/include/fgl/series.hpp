#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fgl/numbers.hpp"
#include "fgl/padic.hpp"

namespace fgl {

/// Coefficients of the invariant differential f'(x) = sum b_n x^n, b_0 = 1.
/// The associated logarithm is f(x) = sum b_{n-1} x^n / n.
struct CoeffSeq {
    std::vector<Rat> b;

    CoeffSeq() = default;
    explicit CoeffSeq(std::vector<Rat> coeffs);

    static CoeffSeq ones(std::size_t size);
    static CoeffSeq from_ints(const std::vector<Int>& coeffs);

    std::size_t size() const noexcept { return b.size(); }
    const Rat& at(std::size_t n) const;
    bool all_integral() const;
};

/// Truncated power series in x Q[[x]] (no constant term), exact rationals.
class UniSeries {
public:
    explicit UniSeries(int degree);
    int degree() const noexcept { return degree_; }
    const Rat& coeff(int n) const;
    void set_coeff(int n, Rat value);

private:
    int degree_;
    std::vector<Rat> c_;  // index n in [0, degree], c_[0] stays 0
};

/// Truncated power series in two variables, total degree <= N.
class BiSeries {
public:
    explicit BiSeries(int degree);
    int degree() const noexcept { return degree_; }
    const Rat& coeff(int i, int j) const;
    void set_coeff(int i, int j, Rat value);

    BiSeries mul(const BiSeries& other) const;
    void add_scaled(const BiSeries& other, const Rat& scale);  // *this += scale * other

private:
    std::size_t index(int i, int j) const;
    int degree_;
    std::vector<Rat> c_;
};

/// f(x) = sum_{n=1}^{N} (b_{n-1}/n) x^n.
UniSeries log_from_coeffs(const CoeffSeq& b, int degree);

/// Compositional inverse of f = x + ..., by back-substitution; the result g
/// satisfies f(g(x)) = g(f(x)) = x up to the truncation degree.
UniSeries reversion(const UniSeries& f);

/// Composition f(g(x)) truncated at the common degree; g must have no
/// constant term.
UniSeries compose(const UniSeries& f, const UniSeries& g);

/// The formal group law F(x,y) = f^{-1}(f(x) + f(y)) truncated at total
/// degree N, where f is the logarithm of b.
BiSeries fgl_from_log(const CoeffSeq& b, int degree);

struct IntegralityWitness {
    int i = 0;
    int j = 0;
    Rat coefficient;
};

/// Direct inspection: integral iff every stored coefficient of F has
/// ord_p >= 0; otherwise the lexicographically least failing bidegree.
std::optional<IntegralityWitness> p_integrality_oracle(const BiSeries& F, const Prime& p);

/// Same verdict as fgl_from_log + p_integrality_oracle, but building F layer
/// by layer and stopping at the first non-integral homogeneous part. The
/// witness is the least failing bidegree within its layer.
std::optional<IntegralityWitness> fgl_integrality_scan(const CoeffSeq& b, const Prime& p,
                                                       int degree);

struct AxiomsReport {
    bool pass = true;
    std::string failure;  // description of the first failing axiom/monomial
};

/// Checks F(x,0) = x and F(0,y) = y exactly, and associativity
/// F(F(x,y),z) = F(x,F(y,z)) up to the truncation degree of F.
AxiomsReport axioms_check(const BiSeries& F);

}  // namespace fgl

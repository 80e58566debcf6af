#include "fgl/series.hpp"

#include <sstream>

namespace fgl {

CoeffSeq::CoeffSeq(std::vector<Rat> coeffs) : b(std::move(coeffs)) {
    if (b.empty() || b[0] != 1)
        throw std::invalid_argument("CoeffSeq: b_0 must be 1");
}

CoeffSeq CoeffSeq::ones(std::size_t size) {
    return CoeffSeq(std::vector<Rat>(size, Rat(1)));
}

CoeffSeq CoeffSeq::from_ints(const std::vector<Int>& coeffs) {
    std::vector<Rat> b;
    b.reserve(coeffs.size());
    for (const Int& v : coeffs) b.emplace_back(v);
    return CoeffSeq(std::move(b));
}

const Rat& CoeffSeq::at(std::size_t n) const {
    if (n >= b.size()) throw std::out_of_range("CoeffSeq: index beyond stored length");
    return b[n];
}

bool CoeffSeq::all_integral() const {
    for (const Rat& v : b)
        if (denominator(v) != 1) return false;
    return true;
}

UniSeries::UniSeries(int degree) : degree_(degree), c_(static_cast<std::size_t>(degree) + 1) {
    if (degree < 1) throw std::invalid_argument("UniSeries: degree must be >= 1");
}

const Rat& UniSeries::coeff(int n) const {
    if (n < 1 || n > degree_) throw std::out_of_range("UniSeries: degree out of range");
    return c_[static_cast<std::size_t>(n)];
}

void UniSeries::set_coeff(int n, Rat value) {
    if (n < 1 || n > degree_) throw std::out_of_range("UniSeries: degree out of range");
    c_[static_cast<std::size_t>(n)] = std::move(value);
}

BiSeries::BiSeries(int degree)
    : degree_(degree),
      c_(static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2) {
    if (degree < 1) throw std::invalid_argument("BiSeries: degree must be >= 1");
}

std::size_t BiSeries::index(int i, int j) const {
    // Rows by i, each row holding j in [0, degree - i].
    const std::size_t n = static_cast<std::size_t>(degree_);
    const std::size_t ii = static_cast<std::size_t>(i);
    return ii * (n + 1) - ii * (ii - 1) / 2 + static_cast<std::size_t>(j);
}

const Rat& BiSeries::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("BiSeries: bidegree out of range");
    return c_[index(i, j)];
}

void BiSeries::set_coeff(int i, int j, Rat value) {
    if (i < 0 || j < 0 || i + j > degree_) throw std::out_of_range("BiSeries: bidegree out of range");
    c_[index(i, j)] = std::move(value);
}

BiSeries BiSeries::mul(const BiSeries& other) const {
    if (other.degree_ != degree_) throw std::invalid_argument("BiSeries::mul: degree mismatch");
    BiSeries out(degree_);
    for (int i1 = 0; i1 <= degree_; ++i1)
        for (int j1 = 0; i1 + j1 <= degree_; ++j1) {
            const Rat& a = c_[index(i1, j1)];
            if (a == 0) continue;
            for (int i2 = 0; i1 + j1 + i2 <= degree_; ++i2)
                for (int j2 = 0; i1 + j1 + i2 + j2 <= degree_; ++j2) {
                    const Rat& b = other.c_[other.index(i2, j2)];
                    if (b == 0) continue;
                    out.c_[out.index(i1 + i2, j1 + j2)] += a * b;
                }
        }
    return out;
}

void BiSeries::add_scaled(const BiSeries& other, const Rat& scale) {
    if (other.degree_ != degree_) throw std::invalid_argument("BiSeries::add_scaled: degree mismatch");
    for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += scale * other.c_[t];
}

UniSeries log_from_coeffs(const CoeffSeq& b, int degree) {
    if (static_cast<std::size_t>(degree) > b.size())
        throw std::invalid_argument("log_from_coeffs: coefficient sequence too short");
    UniSeries f(degree);
    for (int n = 1; n <= degree; ++n) f.set_coeff(n, b.at(static_cast<std::size_t>(n) - 1) / n);
    return f;
}

UniSeries reversion(const UniSeries& f) {
    const int N = f.degree();
    if (f.coeff(1) != 1) throw std::invalid_argument("reversion: leading coefficient must be 1");
    // pow[k][m] = [x^m] g^k for the partial inverse g; filled degree by degree.
    std::vector<std::vector<Rat>> pow(static_cast<std::size_t>(N) + 1,
                                      std::vector<Rat>(static_cast<std::size_t>(N) + 1));
    UniSeries g(N);
    g.set_coeff(1, 1);
    pow[1][1] = 1;
    for (int n = 2; n <= N; ++n) {
        for (int k = 2; k <= n; ++k) {
            Rat s = 0;
            for (int j = k - 1; j <= n - 1; ++j) {
                if (pow[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(j)] == 0) continue;
                s += pow[static_cast<std::size_t>(k) - 1][static_cast<std::size_t>(j)] * g.coeff(n - j);
            }
            pow[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)] = std::move(s);
        }
        Rat gn = 0;
        for (int k = 2; k <= n; ++k)
            gn -= f.coeff(k) * pow[static_cast<std::size_t>(k)][static_cast<std::size_t>(n)];
        g.set_coeff(n, gn);
        pow[1][static_cast<std::size_t>(n)] = g.coeff(n);
    }
    return g;
}

UniSeries compose(const UniSeries& f, const UniSeries& g) {
    const int N = std::min(f.degree(), g.degree());
    // Horner in g, with a scratch vector that allows a constant slot.
    std::vector<Rat> acc(static_cast<std::size_t>(N) + 1);
    for (int k = f.degree() <= N ? f.degree() : N; k >= 1; --k) {
        // acc <- acc * g + f_k
        std::vector<Rat> next(static_cast<std::size_t>(N) + 1);
        for (int a = 0; a <= N; ++a) {
            if (acc[static_cast<std::size_t>(a)] == 0) continue;
            for (int m = 1; a + m <= N; ++m)
                next[static_cast<std::size_t>(a + m)] +=
                    acc[static_cast<std::size_t>(a)] * g.coeff(m);
        }
        next[0] += f.coeff(k);
        acc = std::move(next);
    }
    // One final multiplication by g turns sum f_k g^{k-1} into f(g).
    UniSeries out(N);
    for (int n = 1; n <= N; ++n) {
        Rat s = 0;
        for (int a = 0; a < n; ++a) {
            if (acc[static_cast<std::size_t>(a)] == 0) continue;
            s += acc[static_cast<std::size_t>(a)] * g.coeff(n - a);
        }
        out.set_coeff(n, std::move(s));
    }
    return out;
}

BiSeries fgl_from_log(const CoeffSeq& b, int degree) {
    const UniSeries f = log_from_coeffs(b, degree);
    const UniSeries g = reversion(f);
    BiSeries S(degree);
    for (int n = 1; n <= degree; ++n) {
        S.set_coeff(n, 0, f.coeff(n));
        S.set_coeff(0, n, f.coeff(n));
    }
    // Horner: F = S (g_1 + S (g_2 + ...)).
    BiSeries acc(degree);
    acc.set_coeff(0, 0, g.coeff(degree));
    for (int k = degree - 1; k >= 1; --k) {
        acc = acc.mul(S);
        acc.set_coeff(0, 0, acc.coeff(0, 0) + g.coeff(k));
    }
    return acc.mul(S);
}

std::optional<IntegralityWitness> p_integrality_oracle(const BiSeries& F, const Prime& p) {
    for (int i = 0; i <= F.degree(); ++i)
        for (int j = 0; i + j <= F.degree(); ++j) {
            const Rat& c = F.coeff(i, j);
            if (c == 0) continue;
            if (val_p(c, p) < 0) return IntegralityWitness{i, j, c};
        }
    return std::nullopt;
}

std::optional<IntegralityWitness> fgl_integrality_scan(const CoeffSeq& b, const Prime& p,
                                                       int degree) {
    const UniSeries f = log_from_coeffs(b, degree);
    BiSeries S(degree);
    for (int n = 1; n <= degree; ++n) {
        S.set_coeff(n, 0, f.coeff(n));
        S.set_coeff(0, n, f.coeff(n));
    }
    // Build F = S - sum_{k>=2} f_k F^k layer by layer; pow[k] holds F^k.
    std::vector<BiSeries> pw;
    pw.reserve(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k <= degree; ++k) pw.emplace_back(degree);
    pw[1].set_coeff(1, 0, 1);
    pw[1].set_coeff(0, 1, 1);
    for (int d = 2; d <= degree; ++d) {
        for (int k = 2; k <= d; ++k) {
            // Layer d of F^k from lower layers of F^{k-1} and F.
            for (int e = k - 1; e <= d - 1; ++e)
                for (int i1 = 0; i1 <= e; ++i1)
                    for (int i2 = 0; i2 <= d - e; ++i2) {
                        const Rat& a = pw[static_cast<std::size_t>(k) - 1].coeff(i1, e - i1);
                        if (a == 0) continue;
                        const Rat& f2 = pw[1].coeff(i2, d - e - i2);
                        if (f2 == 0) continue;
                        const int i = i1 + i2, j = d - i;
                        pw[static_cast<std::size_t>(k)].set_coeff(
                            i, j, pw[static_cast<std::size_t>(k)].coeff(i, j) + a * f2);
                    }
        }
        for (int i = 0; i <= d; ++i) {
            const int j = d - i;
            Rat c = S.coeff(i, j);
            for (int k = 2; k <= d; ++k) {
                const Rat& q = pw[static_cast<std::size_t>(k)].coeff(i, j);
                if (q != 0) c -= f.coeff(k) * q;
            }
            pw[1].set_coeff(i, j, std::move(c));
        }
        for (int i = 0; i <= d; ++i) {
            const Rat& c = pw[1].coeff(i, d - i);
            if (c != 0 && val_p(c, p) < 0) return IntegralityWitness{i, d - i, c};
        }
    }
    return std::nullopt;
}

namespace {

// Dense truncated series in three variables, used only for associativity.
class TriSeries {
public:
    explicit TriSeries(int degree)
        : n_(degree), c_(count(degree)) {}

    static std::size_t count(int n) {
        const std::size_t m = static_cast<std::size_t>(n);
        return (m + 1) * (m + 2) * (m + 3) / 6;
    }

    int degree() const { return n_; }

    Rat& at(int i, int j, int k) { return c_[index(i, j, k)]; }
    const Rat& at(int i, int j, int k) const { return c_[index(i, j, k)]; }

    TriSeries mul(const TriSeries& o) const {
        TriSeries out(n_);
        for (int i1 = 0; i1 <= n_; ++i1)
            for (int j1 = 0; i1 + j1 <= n_; ++j1)
                for (int k1 = 0; i1 + j1 + k1 <= n_; ++k1) {
                    const Rat& a = at(i1, j1, k1);
                    if (a == 0) continue;
                    const int rest = n_ - i1 - j1 - k1;
                    for (int i2 = 0; i2 <= rest; ++i2)
                        for (int j2 = 0; i2 + j2 <= rest; ++j2)
                            for (int k2 = 0; i2 + j2 + k2 <= rest; ++k2) {
                                const Rat& b = o.at(i2, j2, k2);
                                if (b == 0) continue;
                                out.at(i1 + i2, j1 + j2, k1 + k2) += a * b;
                            }
                }
        return out;
    }

private:
    std::size_t index(int i, int j, int k) const {
        // Slices by i, rows by j.
        const std::size_t rem = static_cast<std::size_t>(n_ - i);
        std::size_t base = count(n_) - count(n_ - i);
        const std::size_t jj = static_cast<std::size_t>(j);
        return base + jj * (rem + 1) - jj * (jj - 1) / 2 + static_cast<std::size_t>(k);
    }

    int n_;
    std::vector<Rat> c_;
};

// F(A, B) for truncated three-variable arguments with no constant term.
TriSeries substitute(const BiSeries& F, const TriSeries& A, const TriSeries& B) {
    const int N = F.degree();
    // Row polynomials in B first: R_i = sum_j F_{ij} B^j, then sum_i R_i A^i.
    std::vector<TriSeries> bpow;
    bpow.emplace_back(N);
    bpow[0].at(0, 0, 0) = 1;
    for (int j = 1; j <= N; ++j) bpow.push_back(bpow.back().mul(B));
    TriSeries out(N);
    TriSeries apow(N);
    apow.at(0, 0, 0) = 1;
    for (int i = 0; i <= N; ++i) {
        if (i > 0) apow = apow.mul(A);
        TriSeries row(N);
        bool any = false;
        for (int j = 0; i + j <= N; ++j) {
            const Rat& c = F.coeff(i, j);
            if (c == 0) continue;
            any = true;
            for (int a = 0; a <= N; ++a)
                for (int b = 0; a + b <= N; ++b)
                    for (int cdeg = 0; a + b + cdeg <= N; ++cdeg) {
                        const Rat& v = bpow[static_cast<std::size_t>(j)].at(a, b, cdeg);
                        if (v != 0) row.at(a, b, cdeg) += c * v;
                    }
        }
        if (!any) continue;
        TriSeries term = row.mul(apow);
        for (int a = 0; a <= N; ++a)
            for (int b = 0; a + b <= N; ++b)
                for (int cdeg = 0; a + b + cdeg <= N; ++cdeg)
                    out.at(a, b, cdeg) += term.at(a, b, cdeg);
    }
    return out;
}

}  // namespace

AxiomsReport axioms_check(const BiSeries& F) {
    const int N = F.degree();
    for (int i = 0; i <= N; ++i) {
        const Rat expect = (i == 1) ? Rat(1) : Rat(0);
        if (F.coeff(i, 0) != expect) {
            std::ostringstream os;
            os << "unit axiom: coefficient of x^" << i << " in F(x,0) is " << F.coeff(i, 0);
            return {false, os.str()};
        }
        if (F.coeff(0, i) != expect) {
            std::ostringstream os;
            os << "unit axiom: coefficient of y^" << i << " in F(0,y) is " << F.coeff(0, i);
            return {false, os.str()};
        }
    }
    // Associativity, compared as series in three variables.
    TriSeries x(N), y(N), z(N), Fxy(N), Fyz(N);
    x.at(1, 0, 0) = 1;
    y.at(0, 1, 0) = 1;
    z.at(0, 0, 1) = 1;
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j) {
            Fxy.at(i, j, 0) = F.coeff(i, j);
            Fyz.at(0, i, j) = F.coeff(i, j);
        }
    const TriSeries lhs = substitute(F, Fxy, z);
    const TriSeries rhs = substitute(F, x, Fyz);
    for (int i = 0; i <= N; ++i)
        for (int j = 0; i + j <= N; ++j)
            for (int k = 0; i + j + k <= N; ++k)
                if (lhs.at(i, j, k) != rhs.at(i, j, k)) {
                    std::ostringstream os;
                    os << "associativity fails at x^" << i << " y^" << j << " z^" << k << ": "
                       << lhs.at(i, j, k) << " vs " << rhs.at(i, j, k);
                    return {false, os.str()};
                }
    return {true, {}};
}

}  // namespace fgl

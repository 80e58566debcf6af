#include "fgl/charpoly.hpp"

#include <sstream>

namespace fgl {

std::string Height::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::finite: os << value; break;
        case Kind::infinite_up_to: os << "infinite-up-to-" << value; break;
        case Kind::infinite: os << "infinite"; break;
    }
    return os.str();
}

const Residue& CharPoly::alpha(int i) const {
    if (i < 1 || static_cast<std::size_t>(i) > alphas.size())
        throw std::out_of_range("CharPoly::alpha: index out of range");
    return alphas[static_cast<std::size_t>(i) - 1];
}

std::vector<Rat> v_coeffs(const PSeq& c, int s_max) {
    std::vector<Rat> v;
    v.reserve(static_cast<std::size_t>(s_max));
    for (int s = 1; s <= s_max; ++s) {
        const Int idx = c.prime.pow(s) - 1;
        if (idx >= Int(c.size()))
            throw std::invalid_argument("v_coeffs: p-sequence too short for s_max");
        const Rat& cv = c.at(static_cast<std::size_t>(idx));
        if (cv == 0) {
            v.emplace_back(0);
            continue;
        }
        if (val_p(cv, c.prime) < s - 1) {
            std::ostringstream os;
            os << "v_coeffs: ord_p(c_{p^" << s << "-1}) < " << s - 1
               << "; the input law is not p-integral";
            throw InconsistencyError(os.str());
        }
        v.push_back(cv / Rat(c.prime.pow(s - 1)));
    }
    return v;
}

UniSeries functional_residual(const CoeffSeq& b, const std::vector<Rat>& v, const Prime& p,
                              int degree) {
    if (static_cast<std::size_t>(degree) > b.size())
        throw std::invalid_argument("functional_residual: coefficient sequence too short");
    UniSeries g(degree);
    for (int n = 1; n <= degree; ++n) {
        Rat d = b.at(static_cast<std::size_t>(n) - 1) / n;
        Int power = p.value();  // p^s
        for (std::size_t s = 1; s <= v.size() && power <= n; ++s, power *= p.value()) {
            if (Int(n) % power == 0 && v[s - 1] != 0) {
                const std::int64_t m = n / static_cast<std::int64_t>(power);
                d -= v[s - 1] * b.at(static_cast<std::size_t>(m) - 1) / (Int(p.value()) * m);
            }
        }
        g.set_coeff(n, std::move(d));
    }
    return g;
}

Height height(const PSeq& c, int s_max) {
    for (int s = 1; s <= s_max; ++s) {
        const Int idx = c.prime.pow(s) - 1;
        if (idx >= Int(c.size()))
            throw std::invalid_argument("height: p-sequence too short for s_max");
        const Rat& cv = c.at(static_cast<std::size_t>(idx));
        if (cv == 0) continue;
        const long v = val_p(cv, c.prime);
        if (v == s - 1) return Height::finite(s);
        if (v < s - 1) {
            std::ostringstream os;
            os << "height: ord_p(c_{p^" << s << "-1}) = " << v
               << " < " << s - 1 << "; the input law is not p-integral";
            throw InconsistencyError(os.str());
        }
    }
    return Height::infinite_up_to(s_max);
}

BetaSeq betas(const CoeffSeq& b, const Prime& p, int h, int n_max) {
    if (h < 1) throw std::invalid_argument("betas: height must be >= 1");
    BetaSeq out{p, h, {}};
    out.beta.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const Int idx = p.pow(n) - 1;
        if (idx >= Int(b.size())) throw std::invalid_argument("betas: sequence too short");
        const Rat& bv = b.at(static_cast<std::size_t>(idx));
        const int shift = n - n / h;
        if (bv == 0) {
            out.beta.emplace_back(0);
            continue;
        }
        Rat beta = bv / Rat(p.pow(shift));
        if (val_p(beta, p) < 0) {
            std::ostringstream os;
            os << "betas: ord_p(b_{p^" << n << "-1}) < " << shift
               << "; height " << h << " (or integrality) is inconsistent";
            throw InconsistencyError(os.str());
        }
        out.beta.push_back(std::move(beta));
    }
    return out;
}

PadicCoeffFn padic_view(const CoeffSeq& b, const Prime& p) {
    return [b, p](const Int& index, int unit_precision) -> PadicValue {
        if (index < 0 || index >= Int(b.size()))
            throw std::invalid_argument("padic_view: index beyond stored length");
        const Rat& v = b.at(static_cast<std::size_t>(index));
        if (v == 0) return PadicValue::exact_zero();
        const long ord = val_p(v, p);
        Rat unit = v;
        if (ord >= 0)
            unit /= Rat(p.pow(static_cast<int>(ord)));
        else
            unit *= Rat(p.pow(static_cast<int>(-ord)));
        return PadicValue{false, Int(ord), residue_of(unit, p, unit_precision).value()};
    };
}

namespace {

// beta_n reduced mod p^k, fetched through the view.
Int beta_mod(const PadicCoeffFn& b, const Prime& p, int h, const Int& n, int k) {
    const Int idx = ipow(p.value(), n.convert_to<unsigned>()) - 1;
    const PadicValue v = b(idx, k);
    if (v.zero) return 0;
    const Int shift = n - n / h;
    const Int ord = v.ord - shift;
    if (ord < 0) {
        std::ostringstream os;
        os << "beta: ord_p(b_{p^" << n << "-1}) = " << v.ord << " < " << shift
           << "; height " << h << " (or integrality) is inconsistent";
        throw InconsistencyError(os.str());
    }
    if (ord >= k) return 0;
    const Int mod = p.pow(k);
    return v.unit * pow_mod(Int(p.value()), ord, mod) % mod;
}

Int det_mod_p(std::vector<std::vector<Int>> m, const Prime& p) {
    const Int pv = p.value();
    const std::size_t n = m.size();
    for (auto& row : m)
        for (auto& e : row) {
            e %= pv;
            if (e < 0) e += pv;
        }
    Int det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = pv - det % pv;
        }
        det = det * m[col][col] % pv;
        const Int inv = inv_mod(m[col][col], pv);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Int f = m[r][col] * inv % pv;
            for (std::size_t cc = col; cc < n; ++cc) {
                m[r][cc] = (m[r][cc] - f * m[col][cc]) % pv;
                if (m[r][cc] < 0) m[r][cc] += pv;
            }
        }
    }
    return det % pv;
}

struct DkSystem {
    std::vector<std::vector<Int>> matrix;  // h x h, entries mod p^k
    std::vector<Int> rhs;                  // beta_{kh} .. beta_{kh+h-1}
    Int beta_h_mod_p;
};

DkSystem build_dk(const PadicCoeffFn& b, const Prime& p, int h, int k) {
    DkSystem sys;
    sys.matrix.assign(static_cast<std::size_t>(h), std::vector<Int>(static_cast<std::size_t>(h)));
    sys.rhs.resize(static_cast<std::size_t>(h));
    const Int mod = p.pow(k);
    for (int i = 0; i < h; ++i) {
        for (int j = 0; j < h; ++j) {
            const int eps = (i <= j && j < h - 1) ? 1 : 0;
            Int entry = beta_mod(b, p, h, Int(k) * h - 1 + i - j, k);
            if (eps == 1) entry = entry * p.value() % mod;
            sys.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry;
        }
        sys.rhs[static_cast<std::size_t>(i)] = beta_mod(b, p, h, Int(k) * h + i, k);
    }
    sys.beta_h_mod_p = beta_mod(b, p, h, h, k) % p.value();
    return sys;
}

void assert_det_formula(const DkSystem& sys, const Prime& p, int h, int k) {
    const Int pv = p.value();
    const Int det = det_mod_p(sys.matrix, p);
    Int expected = pow_mod(sys.beta_h_mod_p, Int(k) * h - 1, pv);
    if (h % 2 == 0) expected = (pv - expected) % pv;
    if (det != expected) {
        std::ostringstream os;
        os << "charpoly_matrix: det D_k = " << det << " mod " << pv << ", expected "
           << expected << "; input is not an integral law of height " << h;
        throw InconsistencyError(os.str());
    }
    if (det == 0) throw InconsistencyError("charpoly_matrix: det D_k = 0 mod p");
}

std::vector<Int> solve_mod_pk(DkSystem sys, const Prime& p, int k) {
    const Int mod = p.pow(k);
    const Int pv = p.value();
    const std::size_t h = sys.matrix.size();
    for (std::size_t col = 0; col < h; ++col) {
        std::size_t piv = col;
        while (piv < h && sys.matrix[piv][col] % pv == 0) ++piv;
        if (piv == h) throw InconsistencyError("charpoly_matrix: no unit pivot");
        std::swap(sys.matrix[piv], sys.matrix[col]);
        std::swap(sys.rhs[piv], sys.rhs[col]);
        const Int inv = inv_mod(sys.matrix[col][col], mod);
        for (std::size_t cc = 0; cc < h; ++cc)
            sys.matrix[col][cc] = sys.matrix[col][cc] * inv % mod;
        sys.rhs[col] = sys.rhs[col] * inv % mod;
        for (std::size_t r = 0; r < h; ++r) {
            if (r == col || sys.matrix[r][col] == 0) continue;
            const Int f = sys.matrix[r][col];
            for (std::size_t cc = 0; cc < h; ++cc) {
                sys.matrix[r][cc] = (sys.matrix[r][cc] - f * sys.matrix[col][cc]) % mod;
                if (sys.matrix[r][cc] < 0) sys.matrix[r][cc] += mod;
            }
            sys.rhs[r] = (sys.rhs[r] - f * sys.rhs[col]) % mod;
            if (sys.rhs[r] < 0) sys.rhs[r] += mod;
        }
    }
    return sys.rhs;
}

}  // namespace

CharPoly charpoly_matrix(const PadicCoeffFn& b, const Prime& p, int h, int k) {
    if (h < 1) throw std::invalid_argument("charpoly_matrix: height must be >= 1");
    if (k < 1) throw std::invalid_argument("charpoly_matrix: precision must be >= 1");
    DkSystem sys = build_dk(b, p, h, k);
    assert_det_formula(sys, p, h, k);
    const std::vector<Int> y = solve_mod_pk(std::move(sys), p, k);
    CharPoly out{p, Height::finite(h), k, {}, {}};
    for (int i = 1; i < h; ++i)
        out.alphas.emplace_back(p, k + 1, Int(p.value()) * y[static_cast<std::size_t>(i) - 1]);
    Residue top(p, k, y[static_cast<std::size_t>(h) - 1]);
    if (!top.is_unit())
        throw InconsistencyError("charpoly_matrix: alpha_h is not a unit");
    out.alphas.push_back(std::move(top));
    return out;
}

CharPoly charpoly_matrix(const CoeffSeq& b, const Prime& p, int h, int k) {
    return charpoly_matrix(padic_view(b, p), p, h, k);
}

Residue det_dk_mod_p(const PadicCoeffFn& b, const Prime& p, int h, int k) {
    const DkSystem sys = build_dk(b, p, h, k);
    return Residue(p, 1, det_mod_p(sys.matrix, p));
}

Residue unit_root_h1(const PadicCoeffFn& b, const Prime& p, int k) {
    const PadicValue first = b(Int(p.value()) - 1, 1);
    if (first.zero || first.ord != 0)
        throw std::domain_error("unit_root_h1: p divides b_{p-1}; the height is not 1");
    const PadicValue num = b(p.pow(k) - 1, k);
    const PadicValue den = b(p.pow(k - 1) - 1, k);
    if (num.zero || num.ord != 0 || den.zero || den.ord != 0)
        throw InconsistencyError("unit_root_h1: b_{p^j-1} is not a unit");
    const Int mod = p.pow(k);
    return Residue(p, k, num.unit * inv_mod(den.unit, mod));
}

Residue unit_root_h1(const CoeffSeq& b, const Prime& p, int k) {
    return unit_root_h1(padic_view(b, p), p, k);
}

std::pair<Residue, Residue> charpoly_h2(const std::function<Rat(const Int&)>& b, const Prime& p,
                                        int k) {
    if (k < 1) throw std::invalid_argument("charpoly_h2: precision must be >= 1");
    const Rat b_p = b(Int(p.value()) - 1);
    const Rat b_p2 = b(p.pow(2) - 1);
    if (b_p != 0 && val_p(b_p, p) < 1)
        throw std::domain_error("charpoly_h2: ord_p(b_{p-1}) = 0; the height is 1");
    if (b_p2 == 0 || val_p(b_p2, p) != 1)
        throw std::domain_error("charpoly_h2: ord_p(b_{p^2-1}) != 1; the height is not 2");
    const Rat b0 = b(p.pow(2 * k - 2) - 1);
    const Rat b1 = b(p.pow(2 * k - 1) - 1);
    const Rat b2 = b(p.pow(2 * k) - 1);
    const Rat b3 = b(p.pow(2 * k + 1) - 1);
    const Rat den = b1 * b1 - b2 * b0;
    if (den == 0 || val_p(den, p) != 2 * k - 1)
        throw InconsistencyError("charpoly_h2: denominator is not p^{2k-1} times a unit");
    const Rat a1 = (b1 * b2 - b0 * b3) / den;
    if (a1 != 0 && val_p(a1, p) < 1)
        throw InconsistencyError("charpoly_h2: alpha_1 is not divisible by p");
    const Rat a2 = (b1 * b3 - b2 * b2) / (den * p.value());
    if (a2 == 0 || val_p(a2, p) != 0)
        throw InconsistencyError("charpoly_h2: alpha_2 is not a unit");
    return {residue_of(a1, p, k), residue_of(a2, p, k)};
}

std::pair<Residue, Residue> charpoly_h2(const CoeffSeq& b, const Prime& p, int k) {
    return charpoly_h2(
        [&b](const Int& idx) -> Rat {
            if (idx < 0 || idx >= Int(b.size()))
                throw std::invalid_argument("charpoly_h2: index beyond stored length");
            return b.at(static_cast<std::size_t>(idx));
        },
        p, k);
}

}  // namespace fgl

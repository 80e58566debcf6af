#include "fgl/lfun.hpp"

#include <memory>
#include <sstream>

#include "fgl/pseq.hpp"

namespace fgl {

std::vector<Int> prime_power_coeffs(const EulerFactor& f, int s_max) {
    std::vector<Int> a(static_cast<std::size_t>(s_max) + 1);
    a[0] = 1;
    const int d = f.degree();
    for (int s = 1; s <= s_max; ++s) {
        Int v = 0;
        for (int i = 1; i <= d && i <= s; ++i)
            v -= f.gamma[static_cast<std::size_t>(i) - 1] * a[static_cast<std::size_t>(s - i)];
        a[static_cast<std::size_t>(s)] = std::move(v);
    }
    return a;
}

CoeffSeq dirichlet_coeffs(const EulerSystem& L, std::size_t N) {
    const std::size_t top = N + 1;  // a_1 .. a_{N+1}
    // Smallest prime factor sieve.
    std::vector<std::int64_t> spf(top + 1, 0);
    for (std::size_t i = 2; i <= top; ++i) {
        if (spf[i] != 0) continue;
        for (std::size_t j = i; j <= top; j += i)
            if (spf[j] == 0) spf[j] = static_cast<std::int64_t>(i);
    }
    std::map<std::int64_t, std::vector<Int>> powers;
    for (const auto& [p, f] : L.factors) {
        int s_max = 0;
        Int pw = 1;
        while (pw <= Int(top)) {
            pw *= p;
            ++s_max;
        }
        powers[p] = prime_power_coeffs(f, s_max);
    }
    std::vector<Int> a(top + 1);
    a[1] = 1;
    for (std::size_t n = 2; n <= top; ++n) {
        const std::int64_t p = spf[n];
        std::size_t rest = n;
        int e = 0;
        while (rest % static_cast<std::size_t>(p) == 0) {
            rest /= static_cast<std::size_t>(p);
            ++e;
        }
        auto it = powers.find(p);
        if (it == powers.end()) {
            a[n] = 0;  // trivial factor: a_{p^e} = 0 for e >= 1
            continue;
        }
        a[n] = it->second[static_cast<std::size_t>(e)] * a[rest];
    }
    std::vector<Rat> b;
    b.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) b.emplace_back(a[n + 1]);
    return CoeffSeq(std::move(b));
}

bool lfun_integrality(const EulerFactor& f) {
    for (int i = 1; i <= f.degree(); ++i) {
        const Int& g = f.gamma[static_cast<std::size_t>(i) - 1];
        if (g % f.prime.pow(i - 1) != 0) return false;
    }
    return true;
}

QPoly q_poly(const EulerFactor& f) {
    QPoly Q{f.prime, {}};
    Q.q.reserve(static_cast<std::size_t>(f.degree()) + 1);
    Q.q.emplace_back(f.prime.value());
    for (int i = 1; i <= f.degree(); ++i)
        Q.q.push_back(Rat(f.gamma[static_cast<std::size_t>(i) - 1]) / Rat(f.prime.pow(i - 1)));
    return Q;
}

Height lfun_height(const EulerFactor& f) {
    if (!lfun_integrality(f))
        throw std::domain_error("lfun_height: the factor fails the integrality criterion");
    for (int i = 1; i <= f.degree(); ++i) {
        const Int& g = f.gamma[static_cast<std::size_t>(i) - 1];
        if (g == 0) continue;
        if (val_p(g, f.prime) == i - 1) return Height::finite(i);
    }
    return Height::infinite();
}

namespace {

// Small dense polynomial arithmetic over Z/p (coefficients as Int).
using Poly = std::vector<Int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % m;
    }
    trim(r);
    return r;
}

Poly poly_sub_mod(Poly a, const Poly& b, const Int& m) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        a[i] = (a[i] - b[i]) % m;
        if (a[i] < 0) a[i] += m;
    }
    trim(a);
    return a;
}

// Division with remainder by a monic divisor, coefficients mod m.
std::pair<Poly, Poly> poly_divmod_monic(Poly a, const Poly& d, const Int& m) {
    if (d.empty() || d.back() != 1)
        throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
    const std::size_t dd = d.size() - 1;
    if (a.size() <= dd) return {{}, a};
    Poly q(a.size() - dd);
    for (std::size_t i = a.size(); i-- > dd;) {
        Int f = a[i] % m;
        if (f < 0) f += m;
        q[i - dd] = f;
        if (f != 0)
            for (std::size_t j = 0; j <= dd; ++j) {
                Int& slot = a[i - dd + j];
                slot = (slot - f * d[j]) % m;
                if (slot < 0) slot += m;
            }
    }
    a.resize(dd);
    trim(a);
    trim(q);
    return {q, a};
}

// Extended gcd over F_p for monic-normalized inputs; returns (g, u, v) with
// u a + v b = g.
struct PolyEgcd {
    Poly g, u, v;
};

Poly poly_scale_mod(Poly a, const Int& c, const Int& m) {
    for (auto& x : a) x = x * c % m;
    trim(a);
    return a;
}

PolyEgcd poly_egcd_mod_p(Poly a, Poly b, const Int& p) {
    Poly r0 = std::move(a), r1 = std::move(b);
    Poly u0{Int(1)}, u1{}, v0{}, v1{Int(1)};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        const Int lead = r1.back();
        const Int inv = inv_mod(lead, p);
        Poly r1m = poly_scale_mod(r1, inv, p);
        auto [q, rem] = poly_divmod_monic(r0, r1m, p);
        q = poly_scale_mod(q, inv, p);
        Poly u2 = poly_sub_mod(u0, poly_mul_mod(q, u1, p), p);
        Poly v2 = poly_sub_mod(v0, poly_mul_mod(q, v1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    return {std::move(r0), std::move(u0), std::move(v0)};
}

std::vector<Int> q_as_ints(const QPoly& Q) {
    std::vector<Int> q;
    q.reserve(Q.q.size());
    for (const Rat& c : Q.q) {
        if (denominator(c) != 1)
            throw std::domain_error("eisenstein_factor: Q has non-integer coefficients");
        q.push_back(numerator(c));
    }
    trim(q);
    return q;
}

}  // namespace

CharPoly eisenstein_factor(const QPoly& Q, int k) {
    if (k < 1) throw std::invalid_argument("eisenstein_factor: precision must be >= 1");
    const Prime& p = Q.prime;
    const Int pv = p.value();
    std::vector<Int> q = q_as_ints(Q);
    if (q.empty() || q[0] != pv)
        throw std::invalid_argument("eisenstein_factor: Q(0) must equal p");

    // Height = multiplicity of T in Q mod p.
    int h = 0;
    for (std::size_t i = 1; i < q.size(); ++i)
        if (q[i] % pv != 0) {
            h = static_cast<int>(i);
            break;
        }
    if (h == 0) {
        // Q = 0 mod p: additive reduction, Psi = p.
        return CharPoly{p, Height::infinite(), k, {}, {}};
    }

    const int d = static_cast<int>(q.size()) - 1;
    const int K = k + h + 1;
    const Int modK = p.pow(K);

    Poly E;  // monic, degree h, = T^h mod p
    Poly U;  // cofactor, U(0) a unit
    if (h == d) {
        const Int lead_inv = inv_mod(q.back(), modK);
        E.resize(static_cast<std::size_t>(h) + 1);
        for (int i = 0; i <= h; ++i) E[static_cast<std::size_t>(i)] = q[static_cast<std::size_t>(i)] * lead_inv % modK;
        U = {q.back() % modK};
    } else {
        // Initial factorization mod p and fixed Bezout pair u E0 + v U0 = 1.
        Poly E0(static_cast<std::size_t>(h) + 1);
        E0[static_cast<std::size_t>(h)] = 1;
        Poly U0;
        for (std::size_t i = static_cast<std::size_t>(h); i < q.size(); ++i) {
            Int c = q[i] % pv;
            if (c < 0) c += pv;
            U0.push_back(c);
        }
        trim(U0);
        PolyEgcd eg = poly_egcd_mod_p(E0, U0, pv);
        if (eg.g.size() != 1)
            throw InconsistencyError("eisenstein_factor: T^h and U are not coprime mod p");
        const Int norm = inv_mod(eg.g[0], pv);
        Poly bez_u = poly_scale_mod(eg.u, norm, pv);  // multiplies E0
        Poly bez_v = poly_scale_mod(eg.v, norm, pv);  // multiplies U0

        E = E0;
        U = U0;
        Int pj = pv;  // p^j
        for (int j = 1; j < K; ++j) {
            // err = (Q - E U) / p^j mod p
            Poly prod = poly_mul_mod(E, U, modK);
            Poly err;
            {
                Poly diff(q.size());
                for (std::size_t i = 0; i < q.size(); ++i) {
                    Int c = q[i] - (i < prod.size() ? prod[i] : Int(0));
                    if (c % pj != 0)
                        throw InconsistencyError("eisenstein_factor: lift invariant broken");
                    c = c / pj % pv;
                    if (c < 0) c += pv;
                    diff[i] = c;
                }
                err = std::move(diff);
                trim(err);
            }
            // Split the correction: dE = (bez_v err) rem E0, dU = (err - dE U0) / E0.
            Poly ve = poly_mul_mod(bez_v, err, pv);
            auto [quot, dE] = poly_divmod_monic(ve, E0, pv);
            (void)quot;
            Poly rest = poly_sub_mod(err, poly_mul_mod(dE, U0, pv), pv);
            // Exact division by T^h: the low h coefficients must vanish.
            Poly dU;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (i < static_cast<std::size_t>(h)) {
                    if (rest[i] != 0)
                        throw InconsistencyError("eisenstein_factor: correction not divisible");
                } else {
                    dU.push_back(rest[i]);
                }
            }
            trim(dU);
            if (E.size() < static_cast<std::size_t>(h) + 1) E.resize(static_cast<std::size_t>(h) + 1);
            for (std::size_t i = 0; i < dE.size(); ++i) E[i] = (E[i] + pj * dE[i]) % modK;
            if (U.size() < dU.size()) U.resize(dU.size());
            for (std::size_t i = 0; i < dU.size(); ++i) U[i] = (U[i] + pj * dU[i]) % modK;
            pj *= pv;
            // Re-multiplication check at the new precision.
            Poly chk = poly_mul_mod(E, U, modK);
            for (std::size_t i = 0; i < std::max(q.size(), chk.size()); ++i) {
                Int lhs = (i < q.size() ? q[i] : Int(0)) % pj;
                Int rhs = (i < chk.size() ? chk[i] : Int(0)) % pj;
                if (lhs < 0) lhs += pj;
                if (rhs < 0) rhs += pj;
                if (lhs != rhs)
                    throw InconsistencyError("eisenstein_factor: E*U != Q after lift step");
            }
        }
    }

    // Psi = (p / E(0)) E, so that Psi(0) = p exactly.
    if (E[0] % pv != 0 || E[0] % (pv * pv) == 0)
        throw InconsistencyError("eisenstein_factor: E(0) does not have valuation 1");
    const Int modW = p.pow(K - 1);
    const Int w = E[0] / pv % modW;
    const Int c = inv_mod(w, modW);
    CharPoly out{p, Height::finite(h), k, {}, {}};
    // alpha_i = -e_i / w (e_i = 0 mod p by construction), alpha_h = -1 / w.
    for (int i = 1; i < h; ++i)
        out.alphas.emplace_back(p, k + 1, -(E[static_cast<std::size_t>(i)] * c));
    out.alphas.emplace_back(p, k, -c);
    out.monic_associate.reserve(static_cast<std::size_t>(h) + 1);
    for (int i = 0; i <= h; ++i)
        out.monic_associate.emplace_back(p, k, E[static_cast<std::size_t>(i)]);
    return out;
}

PseqStructure lfun_pseq_structure(const EulerFactor& f, std::int64_t N) {
    EulerSystem sys;
    sys.factors.emplace(f.prime.value(), f);
    const CoeffSeq b = dirichlet_coeffs(sys, static_cast<std::size_t>(N));
    const PSeq c = p_sequence(b, f.prime, static_cast<std::size_t>(N));
    const std::int64_t pv = f.prime.value();
    for (std::int64_t n = 1; n <= N; ++n) {
        std::int64_t m = n + 1;
        int j = 0;
        while (m % pv == 0) {
            m /= pv;
            ++j;
        }
        const Rat& got = c.at(static_cast<std::size_t>(n));
        if (m == 1) {
            const Rat expected =
                (j <= f.degree()) ? Rat(-f.gamma[static_cast<std::size_t>(j) - 1]) : Rat(0);
            if (got != expected) {
                std::ostringstream os;
                os << "c_{p^" << j << "-1} = " << got << ", expected " << expected;
                return {false, n, os.str()};
            }
        } else if (m > 1 && j > 0) {
            if (got != 0) {
                std::ostringstream os;
                os << "c_" << n << " = " << got << ", expected 0 (index " << m << " p^" << j
                   << " - 1)";
                return {false, n, os.str()};
            }
        }
    }
    return {true, -1, {}};
}

PadicCoeffFn euler_coeff_view(const EulerFactor& f) {
    auto cache = std::make_shared<std::vector<Int>>(prime_power_coeffs(f, 1));
    const Prime p = f.prime;
    const EulerFactor factor = f;
    return [cache, p, factor](const Int& index, int unit_precision) -> PadicValue {
        Int t = index + 1;
        int s = 0;
        while (t % p.value() == 0) {
            t /= p.value();
            ++s;
        }
        if (t != 1) return PadicValue::exact_zero();  // a_{n+1} = 0 off prime powers
        if (static_cast<std::size_t>(s) >= cache->size())
            *cache = prime_power_coeffs(factor, s);
        const Int& a = (*cache)[static_cast<std::size_t>(s)];
        if (a == 0) return PadicValue::exact_zero();
        const long ord = val_p(a, p);
        const Int unit = a / p.pow(static_cast<int>(ord));
        return PadicValue{false, Int(ord), residue_of(unit, p, unit_precision).value()};
    };
}

}  // namespace fgl

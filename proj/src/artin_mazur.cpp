#include "fgl/artin_mazur.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fgl/pseq.hpp"

namespace fgl {

LaurentPoly::LaurentPoly(int variables, std::map<std::vector<int>, Int> t)
    : vars(variables), terms(std::move(t)) {
    if (vars < 1 || vars > 3)
        throw std::invalid_argument("LaurentPoly: supported dimensions are 1..3");
    for (auto it = terms.begin(); it != terms.end();) {
        if (static_cast<int>(it->first.size()) != vars)
            throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
        it = (it->second == 0) ? terms.erase(it) : std::next(it);
    }
    if (terms.empty()) throw std::invalid_argument("LaurentPoly: zero polynomial");
}

namespace {

long dot(const std::vector<long>& n, const std::vector<int>& x) {
    long s = 0;
    for (std::size_t t = 0; t < n.size(); ++t) s += n[t] * x[t];
    return s;
}

// Supporting half-spaces n.x <= c of the convex hull, from all hyperplanes
// spanned by point subsets of size m.
struct HalfSpace {
    std::vector<long> normal;
    long offset;
};

std::vector<HalfSpace> supporting_halfspaces(const std::vector<std::vector<int>>& pts, int m) {
    std::vector<HalfSpace> out;
    auto consider = [&](std::vector<long> n, const std::vector<int>& base) {
        bool all_le = true, all_ge = true;
        const long c = dot(n, base);
        for (const auto& q : pts) {
            const long v = dot(n, q);
            all_le = all_le && v <= c;
            all_ge = all_ge && v >= c;
        }
        if (all_le && !all_ge) out.push_back({n, c});
        if (all_ge && !all_le) {
            for (auto& x : n) x = -x;
            out.push_back({std::move(n), -c});
        }
    };
    const std::size_t count = pts.size();
    if (m == 1) {
        for (const auto& q : pts) consider({1}, q);
    } else if (m == 2) {
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b) {
                const long dx = pts[b][0] - pts[a][0];
                const long dy = pts[b][1] - pts[a][1];
                if (dx == 0 && dy == 0) continue;
                consider({-dy, dx}, pts[a]);
            }
    } else {
        for (std::size_t a = 0; a < count; ++a)
            for (std::size_t b = a + 1; b < count; ++b)
                for (std::size_t c = b + 1; c < count; ++c) {
                    long u[3], v[3];
                    for (int t = 0; t < 3; ++t) {
                        u[t] = pts[b][t] - pts[a][t];
                        v[t] = pts[c][t] - pts[a][t];
                    }
                    std::vector<long> n = {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                           u[0] * v[1] - u[1] * v[0]};
                    if (n[0] == 0 && n[1] == 0 && n[2] == 0) continue;
                    consider(std::move(n), pts[a]);
                }
    }
    return out;
}

bool full_dimensional(const std::vector<std::vector<int>>& pts, int m) {
    // Rank of the differences against the first point, exact over Q.
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rat> r(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t) r[static_cast<std::size_t>(t)] = pts[i][t] - pts[0][t];
        rows.push_back(std::move(r));
    }
    int rank = 0;
    for (int col = 0; col < m; ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][static_cast<std::size_t>(col)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
        const Rat inv = 1 / rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank)) continue;
            const Rat f = rows[r][static_cast<std::size_t>(col)] * inv;
            if (f == 0) continue;
            for (int cc = col; cc < m; ++cc)
                rows[r][static_cast<std::size_t>(cc)] -=
                    f * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)];
        }
        ++rank;
    }
    return rank == m;
}

}  // namespace

LatticePoint newton_interior(const LaurentPoly& V) {
    const int m = V.vars;
    std::vector<std::vector<int>> pts;
    pts.reserve(V.terms.size());
    for (const auto& [e, c] : V.terms) pts.push_back(e);
    if (!full_dimensional(pts, m))
        throw std::domain_error("newton_interior: Newton polytope is not full-dimensional");
    const auto faces = supporting_halfspaces(pts, m);
    std::vector<int> lo(static_cast<std::size_t>(m)), hi(static_cast<std::size_t>(m));
    for (int t = 0; t < m; ++t) {
        lo[static_cast<std::size_t>(t)] = hi[static_cast<std::size_t>(t)] = pts[0][t];
        for (const auto& q : pts) {
            lo[static_cast<std::size_t>(t)] = std::min(lo[static_cast<std::size_t>(t)], q[t]);
            hi[static_cast<std::size_t>(t)] = std::max(hi[static_cast<std::size_t>(t)], q[t]);
        }
    }
    std::vector<LatticePoint> interior;
    LatticePoint z(static_cast<std::size_t>(m));
    auto scan = [&](auto&& self, int t) -> void {
        if (t == m) {
            for (const auto& f : faces)
                if (dot(f.normal, z) >= f.offset) return;
            interior.push_back(z);
            return;
        }
        for (int v = lo[static_cast<std::size_t>(t)]; v <= hi[static_cast<std::size_t>(t)]; ++v) {
            z[static_cast<std::size_t>(t)] = v;
            self(self, t + 1);
        }
    };
    scan(scan, 0);
    if (interior.size() != 1) {
        std::ostringstream os;
        os << "newton_interior: expected exactly one interior lattice point, found "
           << interior.size() << ":";
        for (const auto& q : interior) {
            os << " (";
            for (std::size_t t = 0; t < q.size(); ++t) os << (t ? "," : "") << q[t];
            os << ")";
        }
        throw std::domain_error(os.str());
    }
    return interior[0];
}

namespace {

// Can some remaining target n w - e still be reached in n - j more factors?
bool reachable(const std::vector<int>& e, const LatticePoint& w, std::size_t j, std::size_t N,
               const std::vector<int>& lo, const std::vector<int>& hi) {
    // Componentwise: lo_t (n-j) <= n w_t - e_t <= hi_t (n-j) for some n in [j, N].
    double nmin = static_cast<double>(j), nmax = static_cast<double>(N);
    for (std::size_t t = 0; t < e.size(); ++t) {
        // (w_t - lo_t) n >= e_t - j lo_t  and  (hi_t - w_t) n >= j hi_t - e_t
        const long a1 = w[t] - lo[t], b1 = e[t] - static_cast<long>(j) * lo[t];
        const long a2 = hi[t] - w[t], b2 = static_cast<long>(j) * hi[t] - e[t];
        if (a1 == 0) {
            if (b1 > 0) return false;
        } else {
            nmin = std::max(nmin, static_cast<double>(b1) / a1);
        }
        if (a2 == 0) {
            if (b2 > 0) return false;
        } else {
            nmin = std::max(nmin, static_cast<double>(b2) / a2);
        }
    }
    return nmin <= nmax + 1e-9;
}

}  // namespace

CoeffSeq am_coeffs(const LaurentPoly& V, const LatticePoint& w, std::size_t N) {
    if (static_cast<int>(w.size()) != V.vars)
        throw std::invalid_argument("am_coeffs: interior point arity mismatch");
    const int m = V.vars;
    std::vector<int> lo(static_cast<std::size_t>(m), 0), hi(static_cast<std::size_t>(m), 0);
    bool first = true;
    for (const auto& [e, c] : V.terms) {
        for (int t = 0; t < m; ++t) {
            if (first) {
                lo[static_cast<std::size_t>(t)] = hi[static_cast<std::size_t>(t)] = e[t];
            } else {
                lo[static_cast<std::size_t>(t)] = std::min(lo[static_cast<std::size_t>(t)], e[t]);
                hi[static_cast<std::size_t>(t)] = std::max(hi[static_cast<std::size_t>(t)], e[t]);
            }
        }
        first = false;
    }
    std::vector<Rat> b(N + 1);
    b[0] = 1;
    std::map<std::vector<int>, Int> power{{std::vector<int>(static_cast<std::size_t>(m), 0), 1}};
    std::vector<int> target(static_cast<std::size_t>(m));
    for (std::size_t n = 1; n <= N; ++n) {
        std::map<std::vector<int>, Int> next;
        std::vector<int> sum(static_cast<std::size_t>(m));
        for (const auto& [e1, c1] : power)
            for (const auto& [e2, c2] : V.terms) {
                for (int t = 0; t < m; ++t)
                    sum[static_cast<std::size_t>(t)] = e1[static_cast<std::size_t>(t)] + e2[t];
                if (!reachable(sum, w, n, N, lo, hi)) continue;
                next[sum] += c1 * c2;
            }
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        power = std::move(next);
        for (int t = 0; t < m; ++t)
            target[static_cast<std::size_t>(t)] = static_cast<int>(n) * w[static_cast<std::size_t>(t)];
        auto hit = power.find(target);
        b[n] = (hit == power.end()) ? Rat(0) : Rat(hit->second);
    }
    return CoeffSeq(std::move(b));
}

CoeffSeq k3_coeffs(std::size_t N) {
    std::vector<Rat> b(N + 1);
    b[0] = 1;
    std::vector<Int> factorial(N / 2 + 1);
    factorial[0] = 1;
    for (std::size_t i = 1; i * 2 <= N; ++i) factorial[i] = factorial[i - 1] * i;
    for (std::size_t n = 4; n <= N; n += 4) {
        const Int binom = factorial[n / 2] / (factorial[n / 4] * factorial[n / 4]);
        b[n] = Rat(binom * binom);
    }
    return CoeffSeq(std::move(b));
}

PadicCoeffFn k3_coeff_view(const Prime& p) {
    return [p](const Int& index, int unit_precision) -> PadicValue {
        if (index == 0) return PadicValue{false, 0, 1};
        if (index % 4 != 0) return PadicValue::exact_zero();
        const Int half = index / 2, quarter = index / 4;
        const Int ord = factorial_ord(half, p) - 2 * factorial_ord(quarter, p);
        GammaTable table(p, unit_precision);
        Residue unit = factorial_unit(half, table) /
                       (factorial_unit(quarter, table) * factorial_unit(quarter, table));
        unit = unit * unit;
        return PadicValue{false, 2 * ord, unit.value()};
    };
}

K3Report k3_invariants(const Prime& p, int k, int inf_bound) {
    if (p.value() == 2) throw std::domain_error("k3_invariants: p must be odd");
    if (p.value() % 4 == 1) {
        const Int bound = p.pow(k);  // coefficients through b_{p^k - 1}
        const CoeffSeq b = k3_coeffs(static_cast<std::size_t>(bound - 1) + 1);
        const Residue alpha = unit_root_h1(b, p, k);
        const Residue gamma4 = gamma_p(Rat(1, 4), p, k).pow(4);
        if (alpha != -gamma4)
            throw InconsistencyError("k3_invariants: unit root != -gamma_p(1/4)^4");
        const Residue pres(p, k, p.value());
        const Residue ap = -alpha - pres * pres * alpha.inverse();
        // Trace against the quadratic alpha^2 + a_p alpha + p^2 = 0.
        if (!(alpha * alpha + ap * alpha + pres * pres).is_zero())
            throw InconsistencyError("k3_invariants: quadratic relation fails");
        // And against 2p - 4a^2 for the decomposition p = a^2 + 4b^2.
        std::int64_t a2 = -1;
        for (std::int64_t a = 1; a * a <= p.value(); ++a) {
            const std::int64_t rest = p.value() - a * a;
            if (rest % 4 != 0) continue;
            const auto broot = static_cast<std::int64_t>(std::llround(std::sqrt(rest / 4.0)));
            for (std::int64_t c = std::max<std::int64_t>(0, broot - 1); c <= broot + 1; ++c)
                if (4 * c * c == rest) a2 = a * a;
        }
        if (a2 < 0) throw InconsistencyError("k3_invariants: no decomposition p = a^2 + 4b^2");
        if (ap != Residue(p, k, 2 * p.value() - 4 * a2))
            throw InconsistencyError("k3_invariants: a_p != 2p - 4a^2");
        const Residue gamma34 = gamma_p(Rat(3, 4), p, k).pow(4);
        if (ap != gamma4 + pres * pres * gamma34)
            throw InconsistencyError("k3_invariants: a_p != gamma(1/4)^4 + p^2 gamma(3/4)^4");
        return K3Report{p, k, Height::finite(1), alpha, ap};
    }
    // p = 3 mod 4: the law is additive to the checked depth.
    const Int top = p.pow(inf_bound) - 1;
    const CoeffSeq b = k3_coeffs(static_cast<std::size_t>(top) + 1);
    const PSeq c = p_sequence(b, p, static_cast<std::size_t>(top));
    for (int s = 1; s <= inf_bound; ++s) {
        const Rat& cv = c.at(static_cast<std::size_t>(p.pow(s) - 1));
        if (cv != 0 && val_p(cv, p) < s)
            throw InconsistencyError("k3_invariants: c_{p^s-1} != 0 mod p^s");
    }
    return K3Report{p, k, Height::infinite_up_to(inf_bound), std::nullopt, std::nullopt};
}

}  // namespace fgl

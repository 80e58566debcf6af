#include "fgl/pseq.hpp"

#include <sstream>

namespace fgl {

const Rat& PSeq::at(std::size_t n) const {
    if (n >= c.size()) throw std::out_of_range("PSeq: index beyond stored length");
    return c[n];
}

namespace {

// Integer fast path of the defining recursion; valid whenever b is integral.
std::vector<Int> transform_int(const std::function<Int(std::int64_t)>& b, const Prime& p,
                               std::int64_t N, const Int* mod) {
    std::vector<Int> c(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        Int v = b(n);
        for (const auto& [n1, n2] : splittings(n, p))
            v -= c[static_cast<std::size_t>(n1)] * b(n2);
        if (mod) {
            v %= *mod;
            if (v < 0) v += *mod;
        }
        c[static_cast<std::size_t>(n)] = std::move(v);
    }
    return c;
}

std::vector<Rat> transform_rat(const CoeffSeq& b, const Prime& p, std::int64_t N) {
    std::vector<Rat> c(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        Rat v = b.at(static_cast<std::size_t>(n));
        for (const auto& [n1, n2] : splittings(n, p))
            v -= c[static_cast<std::size_t>(n1)] * b.at(static_cast<std::size_t>(n2));
        c[static_cast<std::size_t>(n)] = std::move(v);
    }
    return c;
}

}  // namespace

PSeq p_sequence(const CoeffSeq& b, const Prime& p, std::size_t N) {
    if (N >= b.size()) throw std::invalid_argument("p_sequence: bound exceeds stored length");
    const std::int64_t bound = static_cast<std::int64_t>(N);
    if (b.all_integral()) {
        auto c_int = transform_int(
            [&b](std::int64_t n) { return numerator(b.at(static_cast<std::size_t>(n))); }, p,
            bound, nullptr);
        std::vector<Rat> c;
        c.reserve(c_int.size());
        for (Int& v : c_int) c.emplace_back(std::move(v));
        return PSeq{p, std::move(c)};
    }
    return PSeq{p, transform_rat(b, p, bound)};
}

CoeffSeq p_sequence_inverse(const PSeq& c, std::size_t N) {
    if (N >= c.size()) throw std::invalid_argument("p_sequence_inverse: bound exceeds length");
    if (c.at(0) != 1) throw std::invalid_argument("p_sequence_inverse: c_0 must be 1");
    std::vector<Rat> b(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        Rat v = c.at(n);
        for (const auto& [n1, n2] : splittings(static_cast<std::int64_t>(n), c.prime))
            v += c.at(static_cast<std::size_t>(n1)) * b[static_cast<std::size_t>(n2)];
        b[n] = std::move(v);
    }
    return CoeffSeq(std::move(b));
}

long required_valuation(std::int64_t n, const Prime& p) {
    if (n < 1) throw std::domain_error("required_valuation: index must be >= 1");
    const Int target = Int(n) + 1;
    long v = val_p(target, p);
    // When n+1 is a pure power of p the representation with m = 1 is excluded,
    // so the strongest admissible one is m = p, k = v - 1.
    if (p.pow(static_cast<int>(v)) == target) --v;
    return v;
}

namespace {

void require_p_integral(const CoeffSeq& b, const Prime& p, std::int64_t N) {
    for (std::int64_t n = 0; n <= N; ++n) {
        const Rat& v = b.at(static_cast<std::size_t>(n));
        if (v != 0 && val_p(v, p) < 0) {
            std::ostringstream os;
            os << "coefficient b_" << n << " is not p-integral at p = " << p.value();
            throw std::domain_error(os.str());
        }
    }
}

// Shared scan over c with a per-index valuation threshold; early exit at the
// least failing index.
template <typename Threshold>
CongruenceVerdict scan_exact(const CoeffSeq& b, const Prime& p, std::int64_t N,
                             std::int64_t first, Threshold threshold) {
    require_p_integral(b, p, N);
    CongruenceVerdict out{true, N, std::nullopt};
    const bool integral = b.all_integral();
    if (integral) {
        std::vector<Int> c(static_cast<std::size_t>(N) + 1);
        for (std::int64_t n = 0; n <= N; ++n) {
            Int v = numerator(b.at(static_cast<std::size_t>(n)));
            for (const auto& [n1, n2] : splittings(n, p))
                v -= c[static_cast<std::size_t>(n1)] * numerator(b.at(static_cast<std::size_t>(n2)));
            c[static_cast<std::size_t>(n)] = std::move(v);
            if (n < first || c[static_cast<std::size_t>(n)] == 0) continue;
            const long need = threshold(n);
            if (need <= 0) continue;
            const long got = val_p(c[static_cast<std::size_t>(n)], p);
            if (got < need) {
                out.pass = false;
                out.witness = CongruenceWitness{n, got, need};
                return out;
            }
        }
        return out;
    }
    std::vector<Rat> c(static_cast<std::size_t>(N) + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        Rat v = b.at(static_cast<std::size_t>(n));
        for (const auto& [n1, n2] : splittings(n, p))
            v -= c[static_cast<std::size_t>(n1)] * b.at(static_cast<std::size_t>(n2));
        c[static_cast<std::size_t>(n)] = std::move(v);
        if (n < first || c[static_cast<std::size_t>(n)] == 0) continue;
        const long need = threshold(n);
        const long got = val_p(c[static_cast<std::size_t>(n)], p);
        if (got < need) {
            out.pass = false;
            out.witness = CongruenceWitness{n, got, need};
            return out;
        }
    }
    return out;
}

}  // namespace

CongruenceVerdict check_integrality(const CoeffSeq& b, const Prime& p, std::int64_t N) {
    if (static_cast<std::size_t>(N) >= b.size())
        throw std::invalid_argument("check_integrality: bound exceeds stored length");
    return scan_exact(b, p, N, 1, [&p](std::int64_t n) { return required_valuation(n, p); });
}

CongruenceVerdict check_strong_congruence(const CoeffSeq& b, const Prime& p, std::int64_t N) {
    if (static_cast<std::size_t>(N) >= b.size())
        throw std::invalid_argument("check_strong_congruence: bound exceeds stored length");
    return scan_exact(b, p, N, 0,
                      [&p](std::int64_t n) { return static_cast<long>(length_l(n, p)) - 1; });
}

namespace {

int modulus_exponent_for(const Prime& p, std::int64_t N) {
    // One digit above every requirement that can bind at indices <= N.
    int R = 1;
    Int power = p.value();
    while (power <= Int(N) + 1) {
        power *= p.value();
        ++R;
    }
    return R;
}

}  // namespace

std::vector<Int> p_sequence_mod(const ResidueSeqFn& b_mod, const Prime& p, int R,
                                std::int64_t N) {
    const Int mod = p.pow(R);
    return transform_int(b_mod, p, N, &mod);
}

CongruenceVerdict check_integrality_mod(const ResidueSeqFn& b_mod, const Prime& p,
                                        std::int64_t N) {
    const int R = modulus_exponent_for(p, N);
    const Int mod = p.pow(R);
    std::vector<Int> c(static_cast<std::size_t>(N) + 1);
    CongruenceVerdict out{true, N, std::nullopt};
    for (std::int64_t n = 0; n <= N; ++n) {
        Int v = b_mod(n);
        for (const auto& [n1, n2] : splittings(n, p))
            v -= c[static_cast<std::size_t>(n1)] * b_mod(n2);
        v %= mod;
        if (v < 0) v += mod;
        c[static_cast<std::size_t>(n)] = std::move(v);
        if (n < 1 || c[static_cast<std::size_t>(n)] == 0) continue;
        const long need = required_valuation(n, p);
        if (need <= 0) continue;
        const long got = val_p(c[static_cast<std::size_t>(n)], p);  // exact: got < R here or c == 0
        if (got < need) {
            out.pass = false;
            out.witness = CongruenceWitness{n, got, need};
            return out;
        }
    }
    return out;
}

}  // namespace fgl

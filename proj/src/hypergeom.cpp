#include "fgl/hypergeom.hpp"

#include <memory>
#include <sstream>

namespace fgl {

WeightSystem::WeightSystem(std::map<std::int64_t, std::int64_t> gamma) : gamma_(std::move(gamma)) {
    for (auto it = gamma_.begin(); it != gamma_.end();) {
        if (it->first < 1) throw std::invalid_argument("WeightSystem: weights live on nu >= 1");
        it = (it->second == 0) ? gamma_.erase(it) : std::next(it);
    }
    if (gamma_.empty()) throw std::invalid_argument("WeightSystem: empty weight system");
    Int balance = 0;
    lcm_ = 1;
    for (const auto& [nu, g] : gamma_) {
        balance += Int(nu) * g;
        lcm_ = lcm64(lcm_, nu);
    }
    if (balance != 0)
        throw std::invalid_argument("WeightSystem: sum nu gamma_nu must vanish");
    for (std::int64_t j = 0; j < lcm_; ++j)
        if (landau(*this, Rat(j, lcm_)) < 0) {
            std::ostringstream os;
            os << "WeightSystem: Landau function is negative at t = " << j << "/" << lcm_
               << "; the factorial ratios are not integers";
            throw std::domain_error(os.str());
        }
}

std::int64_t WeightSystem::gamma_at(std::int64_t nu) const {
    auto it = gamma_.find(nu);
    return it == gamma_.end() ? 0 : it->second;
}

Rat u_value(const WeightSystem& w, std::int64_t n) {
    if (n < 0) throw std::domain_error("u_value: negative index");
    std::int64_t top = 0;
    for (const auto& [nu, g] : w.gamma()) top = std::max(top, nu * n);
    std::vector<Int> factorial(static_cast<std::size_t>(top) + 1);
    factorial[0] = 1;
    for (std::int64_t i = 1; i <= top; ++i)
        factorial[static_cast<std::size_t>(i)] = factorial[static_cast<std::size_t>(i - 1)] * i;
    Int num = 1, den = 1;
    for (const auto& [nu, g] : w.gamma()) {
        const Int& f = factorial[static_cast<std::size_t>(nu * n)];
        for (std::int64_t e = 0; e < (g > 0 ? g : -g); ++e)
            (g > 0 ? num : den) *= f;
    }
    if (num % den == 0) return Rat(num / den);
    return Rat(num, den);
}

std::int64_t landau(const WeightSystem& w, const Rat& t) {
    Int total = 0;
    for (const auto& [nu, g] : w.gamma()) total += Int(g) * rat_floor(Rat(nu) * t);
    // 1-periodicity makes the alternating sum small even for huge t.
    return total.convert_to<std::int64_t>();
}

Int ordp_u(const WeightSystem& w, const Int& n, const Prime& p) {
    if (n < 0) throw std::domain_error("ordp_u: negative index");
    if (n == 0) return 0;
    Int total = 0;
    const Int reach = Int(w.modulus()) * n;  // L(n/p^i) = 0 once p^i > N n
    for (Int power = p.value(); power <= reach; power *= p.value())
        total += landau(w, Rat(n, power));
    return total;
}

PadicValue u_value_padic(const WeightSystem& w, const Int& n, const GammaTable& table) {
    if (n == 0) return PadicValue{false, 0, 1};
    const Prime& p = table.prime();
    Int ord = 0;
    Residue unit(p, table.precision(), 1);
    for (const auto& [nu, g] : w.gamma()) {
        const Int arg = Int(nu) * n;
        ord += Int(g) * factorial_ord(arg, p);
        unit = unit * factorial_unit(arg, table).pow(g);
    }
    if (ord < 0) throw InconsistencyError("u_value_padic: negative valuation");
    return PadicValue{false, ord, unit.value()};
}

CoeffSeq hg_coeff_seq(const WeightSystem& w, std::size_t N_deg) {
    const std::int64_t N = w.modulus();
    std::vector<Rat> b(N_deg + 1);
    b[0] = 1;
    for (std::size_t m = static_cast<std::size_t>(N); m <= N_deg; m += static_cast<std::size_t>(N))
        b[m] = u_value(w, static_cast<std::int64_t>(m) / N);
    return CoeffSeq(std::move(b));
}

PadicCoeffFn hg_coeff_view(const WeightSystem& w, const Prime& p) {
    auto tables = std::make_shared<std::map<int, GammaTable>>();
    return [w, p, tables](const Int& index, int unit_precision) -> PadicValue {
        if (index == 0) return PadicValue{false, 0, 1};
        if (index % w.modulus() != 0) return PadicValue::exact_zero();
        auto it = tables->find(unit_precision);
        if (it == tables->end())
            it = tables->emplace(unit_precision, GammaTable(p, unit_precision)).first;
        return u_value_padic(w, index / w.modulus(), it->second);
    };
}

namespace {

int multiplicative_order(std::int64_t r, std::int64_t N) {
    std::int64_t x = r % N;
    int d = 1;
    while (x != 1) {
        x = x * (r % N) % N;
        ++d;
        if (d > N) throw std::logic_error("multiplicative_order: not invertible");
    }
    return d;
}

}  // namespace

HGReport hg_classify(const WeightSystem& w, const Prime& p, int k) {
    const std::int64_t N = w.modulus();
    if (p.value() <= N) {
        std::ostringstream os;
        os << "hg_classify: requires p > N = " << N;
        throw std::domain_error(os.str());
    }
    HGReport rep;
    rep.modulus = N;
    const std::int64_t r = p.value() % N;
    const int d = multiplicative_order(r, N);
    rep.order = d;
    rep.m.resize(static_cast<std::size_t>(d));
    rep.lambda.resize(static_cast<std::size_t>(d));
    rep.m[0] = 1;
    rep.lambda[0] = 0;
    // m_a = r^{d-a} mod N is the inverse of p^a mod N.
    for (int a = 1; a < d; ++a) {
        std::int64_t ma = 1;
        for (int j = 0; j < d - a; ++j) ma = ma * r % N;
        rep.m[static_cast<std::size_t>(a)] = ma;
        const Int idx = (Int(ma) * p.pow(a) - 1) / N;
        rep.lambda[static_cast<std::size_t>(a)] = ordp_u(w, idx, p);
    }
    rep.integral = true;
    for (int a = 1; a < d; ++a)
        if (rep.lambda[static_cast<std::size_t>(a)] < a) rep.integral = false;
    if (!rep.integral) return rep;

    if (rep.lambda[static_cast<std::size_t>(d) - 1] == d - 1) {
        rep.height = Height::finite(d);
        // xi = (-1)^{(gamma_2+1)d-1} prod_nu prod_a gamma_p(1 - [m_a]/(N/nu))^{gamma_nu}.
        Residue xi(p, k, 1);
        for (const auto& [nu, g] : w.gamma()) {
            const std::int64_t Nnu = N / nu;
            if (Nnu == 1) continue;  // [m]_1 = 1 makes the factor gamma_p(0) = 1
            for (int a = 0; a < d; ++a) {
                const std::int64_t repr = (rep.m[static_cast<std::size_t>(a)] - 1) % Nnu + 1;
                const Rat arg(Nnu - repr, Nnu);
                xi = xi * gamma_p(arg, p, k).pow(g);
            }
        }
        const std::int64_t sign = ((w.gamma_at(2) + 1) * d - 1) % 2;
        if (sign != 0) xi = -xi;
        rep.xi = xi;
    } else {
        rep.height = Height::infinite();
    }
    return rep;
}

std::map<std::int64_t, HGTableEntry> hg_residue_table(const WeightSystem& w) {
    const std::int64_t N = w.modulus();
    std::map<std::int64_t, HGTableEntry> table;
    for (std::int64_t r = 1; r < N; ++r) {
        if (gcd64(r, N) != 1) continue;
        const int d = multiplicative_order(r, N);
        // lambda_a = sum_{i=1}^{a} L(((r^{d-i} mod N) - 1)/N), by the Landau
        // reduction of ord_p(u_{(m_a p^a - 1)/N}).
        std::vector<std::int64_t> step(static_cast<std::size_t>(d));
        std::int64_t pw = 1;
        std::vector<std::int64_t> rpow(static_cast<std::size_t>(d));
        for (int j = 0; j < d; ++j) {
            rpow[static_cast<std::size_t>(j)] = pw;  // r^j mod N
            pw = pw * r % N;
        }
        for (int i = 1; i < d; ++i)
            step[static_cast<std::size_t>(i)] =
                landau(w, Rat(rpow[static_cast<std::size_t>(d - i)] - 1, N));
        HGTableEntry e;
        e.integral = true;
        std::int64_t lambda_a = 0;
        std::int64_t lambda_top = 0;  // lambda_{d-1} (0 when d = 1)
        for (int a = 1; a < d; ++a) {
            lambda_a += step[static_cast<std::size_t>(a)];
            if (lambda_a < a) e.integral = false;
            if (a == d - 1) lambda_top = lambda_a;
        }
        if (e.integral && lambda_top == d - 1) e.height = d;
        table.emplace(r, e);
    }
    return table;
}

}  // namespace fgl

#include "fgl/padic.hpp"

#include <algorithm>
#include <sstream>

namespace fgl {

Int inv_mod(Int a, const Int& m) {
    a %= m;
    if (a < 0) a += m;
    Int r0 = m, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("inv_mod: argument is not invertible");
    if (t0 < 0) t0 += m;
    return t0;
}

Int pow_mod(Int a, Int e, const Int& m) {
    if (e < 0) throw std::domain_error("pow_mod: negative exponent");
    a %= m;
    if (a < 0) a += m;
    Int r = 1;
    while (e > 0) {
        if ((e & 1) != 0) r = r * a % m;
        a = a * a % m;
        e >>= 1;
    }
    return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) { return a / gcd64(a, b) * b; }

Prime::Prime(std::int64_t p) : p_(p) {
    if (p < 2) throw std::domain_error("Prime: value must be >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            std::ostringstream os;
            os << "Prime: " << p << " is composite (divisor " << d << ")";
            throw std::domain_error(os.str());
        }
    }
}

Int Prime::pow(int k) const {
    if (k < 0) throw std::domain_error("Prime::pow: negative exponent");
    return ipow(p_, static_cast<unsigned>(k));
}

long val_p(const Int& x, const Prime& p) {
    if (x == 0) throw std::domain_error("val_p: ord_p(0) is +infinity");
    Int n = x;
    const std::int64_t pv = p.value();
    long v = 0;
    while (n % pv == 0) {
        n /= pv;
        ++v;
    }
    return v;
}

long val_p(const Rat& x, const Prime& p) {
    if (x == 0) throw std::domain_error("val_p: ord_p(0) is +infinity");
    // Reduced fraction: at most one of the parts is divisible by p.
    const Int num = numerator(x), den = denominator(x);
    if (num % p.value() == 0) return val_p(num, p);
    if (den % p.value() == 0) return -val_p(den, p);
    return 0;
}

std::optional<long> val_p_probe(const Rat& x, const Prime& p) {
    if (x == 0) return std::nullopt;
    return val_p(x, p);
}

int length_l(const Int& n, const Prime& p) {
    if (n < 0) throw std::domain_error("length_l: negative argument");
    int s = 1;
    Int bound = p.value();
    while (n >= bound) {
        bound *= p.value();
        ++s;
    }
    return s;
}

int length_l(std::int64_t n, const Prime& p) { return length_l(Int(n), p); }

std::int64_t concat(std::int64_t n, std::int64_t m, const Prime& p) {
    if (n < 0 || m < 0) throw std::domain_error("concat: negative argument");
    Int r = Int(n) + Int(m) * p.pow(length_l(n, p));
    return static_cast<std::int64_t>(r);
}

std::vector<std::pair<std::int64_t, std::int64_t>> splittings(std::int64_t n, const Prime& p) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    if (n <= 0) return out;
    const std::int64_t pv = p.value();
    std::int64_t power = 1;            // p^t
    std::int64_t prev_power = 0;       // p^{t-1}
    const int len = length_l(n, p);
    for (int t = 1; t < len; ++t) {
        prev_power = power;
        power *= pv;
        const std::int64_t n1 = n % power;
        const std::int64_t n2 = n / power;
        // l(n1) == t: either t == 1 (any single digit, including 0) or the
        // top digit of the lower chunk is nonzero.
        if (t == 1 || n1 >= prev_power) out.emplace_back(n1, n2);
    }
    return out;
}

DigitString DigitString::of(const Int& n, const Prime& p) {
    if (n < 0) throw std::domain_error("DigitString: negative value");
    DigitString ds{p, {}};
    Int rest = n;
    do {
        ds.digits.push_back(static_cast<std::int32_t>(rest % p.value()));
        rest /= p.value();
    } while (rest > 0);
    return ds;
}

Int DigitString::value() const {
    Int v = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * prime.value() + *it;
    return v;
}

Residue::Residue(const Prime& p, int precision, Int value)
    : p_(p), k_(precision), mod_(p.pow(precision)), v_(std::move(value)) {
    if (precision < 1) throw std::invalid_argument("Residue: precision must be >= 1");
    v_ %= mod_;
    if (v_ < 0) v_ += mod_;
}

Residue Residue::with_precision(int k) const {
    if (k > k_) throw std::invalid_argument("Residue::with_precision: cannot refine");
    return Residue(p_, k, v_);
}

Residue Residue::inverse() const {
    if (!is_unit()) throw std::domain_error("Residue::inverse: not a unit");
    return Residue(p_, k_, inv_mod(v_, mod_));
}

Residue Residue::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    return Residue(p_, k_, pow_mod(v_, e, mod_));
}

namespace {
void require_same_prime(const Residue& a, const Residue& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("Residue: mixed primes in arithmetic");
}
}  // namespace

Residue operator+(const Residue& a, const Residue& b) {
    require_same_prime(a, b);
    const int k = std::min(a.precision(), b.precision());
    return Residue(a.prime(), k, a.value() + b.value());
}

Residue operator-(const Residue& a, const Residue& b) {
    require_same_prime(a, b);
    const int k = std::min(a.precision(), b.precision());
    return Residue(a.prime(), k, a.value() - b.value());
}

Residue operator*(const Residue& a, const Residue& b) {
    require_same_prime(a, b);
    const int k = std::min(a.precision(), b.precision());
    return Residue(a.prime(), k, a.value() * b.value());
}

Residue operator/(const Residue& a, const Residue& b) {
    require_same_prime(a, b);
    const int k = std::min(a.precision(), b.precision());
    return a.with_precision(k) * b.with_precision(k).inverse();
}

Residue Residue::operator-() const { return Residue(p_, k_, mod_ - v_); }

bool operator==(const Residue& a, const Residue& b) {
    if (a.prime() != b.prime()) return false;
    const int k = std::min(a.precision(), b.precision());
    const Int m = a.prime().pow(k);
    return a.value() % m == b.value() % m;
}

Residue residue_of(const Rat& x, const Prime& p, int k) {
    if (x == 0) return Residue(p, k, 0);
    if (val_p(x, p) < 0) throw std::domain_error("residue_of: value is not p-integral");
    const Int m = p.pow(k);
    Int num = numerator(x) % m;
    if (num < 0) num += m;
    return Residue(p, k, num * inv_mod(denominator(x), m));
}

Residue residue_of(const Int& x, const Prime& p, int k) { return Residue(p, k, x); }

namespace {

// Reduction window: gamma(n) mod p^k depends on n mod p^k for odd p and on
// n mod 2^{k+1} for p = 2 (the product of odd residues in a window of length
// 2^k is -1 mod 2^k for k = 2, so one extra digit is needed there).
Int gamma_window(const Prime& p, int k) {
    return p.value() == 2 ? p.pow(k + 1) : p.pow(k);
}

Int gamma_reduced(const Int& r, const Prime& p, int k, const Int& mod) {
    // Direct product over j in [1, r), skipping multiples of p.
    Int acc = 1;
    for (Int j = 1; j < r; ++j) {
        if (j % p.value() == 0) continue;
        acc = acc * j % mod;
    }
    if (r % 2 != 0) acc = mod - acc % mod;  // (-1)^r with r odd
    (void)k;
    return acc % mod;
}

}  // namespace

Residue gamma_p_integer(const Int& n, const Prime& p, int k) {
    if (n < 0) throw std::domain_error("gamma_p_integer: negative argument");
    const Int window = gamma_window(p, k);
    const Int mod = p.pow(k);
    const Int r = n % window;
    return Residue(p, k, gamma_reduced(r, p, k, mod));
}

Residue gamma_p(const Rat& x, const Prime& p, int k) {
    if (x != 0 && val_p(x, p) < 0)
        throw std::domain_error("gamma_p: argument is not a p-adic integer");
    const Int window = gamma_window(p, k);
    Int num = numerator(x) % window;
    if (num < 0) num += window;
    const Int m = num * inv_mod(denominator(x), window) % window;
    return gamma_p_integer(m, p, k);
}

GammaTable::GammaTable(const Prime& p, int precision)
    : p_(p), k_(precision), window_(gamma_window(p, precision)), mod_(p.pow(precision)) {
    if (window_ > 50'000'000) throw std::invalid_argument("GammaTable: window too large");
    const std::size_t size = static_cast<std::size_t>(window_);
    values_.reserve(size);
    // gamma(n+1) = -gamma(n) * (n if p does not divide n, else 1)
    Int g = 1;
    for (std::size_t n = 0; n < size; ++n) {
        values_.push_back(g % mod_);
        Int step = (n % static_cast<std::size_t>(p_.value()) == 0) ? Int(1) : Int(n);
        g = mod_ - g * step % mod_;
        if (g == mod_) g = 0;
    }
}

Residue GammaTable::at(const Int& n) const {
    if (n < 0) throw std::domain_error("GammaTable::at: negative argument");
    const Int r = n % window_;
    return Residue(p_, k_, values_[static_cast<std::size_t>(r)]);
}

Int factorial_ord(const Int& n, const Prime& p) {
    if (n < 0) throw std::domain_error("factorial_ord: negative argument");
    Int total = 0;
    Int m = n / p.value();
    while (m > 0) {
        total += m;
        m /= p.value();
    }
    return total;
}

Residue factorial_unit(const Int& n, const GammaTable& table) {
    if (n < 0) throw std::domain_error("factorial_unit: negative argument");
    const Prime& p = table.prime();
    Residue acc(p, table.precision(), 1);
    Int m = n;
    while (m > 1) {
        Residue g = table.at(m + 1);
        acc = (m % 2 == 0) ? acc * (-g) : acc * g;  // (-1)^{m+1} gamma(m+1)
        m /= p.value();
    }
    return acc;
}

Residue factorial_unit(const Int& n, const Prime& p, int k) {
    return factorial_unit(n, GammaTable(p, k));
}

}  // namespace fgl

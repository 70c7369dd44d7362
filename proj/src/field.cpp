#include "fano/field.hpp"

namespace fano {

namespace {

std::uint64_t splitmix(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, a, m);
        a = mulmod64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Rng::Rng(std::uint64_t seed, std::string_view label) {
    std::uint64_t s = seed ^ fnv1a(label);
    state_ = splitmix(s);
}

std::uint64_t Rng::next() { return splitmix(state_); }

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        std::uint64_t x = next();
        if (x < limit) return x % n;
    }
}

long long Rng::range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rng Rng::split(std::string_view label) {
    std::uint64_t s = next() ^ fnv1a(label);
    return Rng(splitmix(s));
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t prime) : p(prime) {
    if (prime <= 2 || prime >= (1ULL << 32) || !is_prime_u64(prime))
        throw std::invalid_argument("PrimeField needs an odd prime below 2^32, got " +
                                    std::to_string(prime));
}

PrimeField::elem PrimeField::pow(elem a, std::uint64_t e) const {
    elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

PrimeField::elem PrimeField::inv(elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_p");
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    return from_int(t);
}

bool PrimeField::is_square(elem a) const { return a == 0 || pow(a, (p - 1) / 2) == 1; }

PrimeField::elem PrimeField::non_residue() const {
    for (elem z = 2;; ++z)
        if (!is_square(z)) return z;
}

std::optional<PrimeField::elem> PrimeField::sqrt(elem a) const {
    if (a == 0) return elem{0};
    if (!is_square(a)) return std::nullopt;
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    elem z = non_residue();
    elem m = static_cast<elem>(s);
    elem c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
        elem i = 0, tt = t;
        while (tt != 1) {
            tt = mul(tt, tt);
            ++i;
        }
        elem b = c;
        for (elem j = 0; j + 1 < m - i; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        t = mul(t, c);
        r = mul(r, b);
    }
    return r;
}

Fp2Field::Fp2Field(std::uint64_t prime) : base(prime), nr(base.non_residue()) {}

Fp2Field::elem Fp2Field::mul(elem x, elem y) const {
    const PrimeField& F = base;
    return {F.add(F.mul(x.a, y.a), F.mul(nr, F.mul(x.b, y.b))),
            F.add(F.mul(x.a, y.b), F.mul(x.b, y.a))};
}

Fp2Field::elem Fp2Field::inv(elem x) const {
    const PrimeField& F = base;
    // (a + b r)^-1 = (a - b r) / (a^2 - nr b^2); the norm vanishes only at 0.
    elem conj{x.a, F.neg(x.b)};
    auto norm = F.sub(F.mul(x.a, x.a), F.mul(nr, F.mul(x.b, x.b)));
    if (norm == 0) throw std::domain_error("inverse of zero in F_p^2");
    auto ni = F.inv(norm);
    return {F.mul(conj.a, ni), F.mul(conj.b, ni)};
}

Fp2Field::elem Fp2Field::sqrt_of_base(PrimeField::elem x) const {
    if (auto s = base.sqrt(x)) return {*s, 0};
    // x = nr * y^2 with y = sqrt(x / nr), so sqrt(x) = y r.
    auto y = base.sqrt(base.div(x, nr));
    return {0, *y};
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    PrimeField check(p);
    return {Kind::prime, p};
}

FieldSpec FieldSpec::prime_square(std::uint64_t p) {
    PrimeField check(p);
    return {Kind::prime_square, p};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "QQ" || s == "rationals") return rationals();
    try {
        if (s.rfind("p2=", 0) == 0) return prime_square(std::stoull(s.substr(3)));
        if (s.rfind("p=", 0) == 0) return prime(std::stoull(s.substr(2)));
        return prime(std::stoull(s));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("unrecognized field '" + s + "' (expected Q, p=<prime> or p2=<prime>)");
    }
}

std::string FieldSpec::str() const {
    switch (kind) {
        case Kind::rationals: return "Q";
        case Kind::prime: return "p=" + std::to_string(p);
        case Kind::prime_square: return "p2=" + std::to_string(p);
    }
    return "?";
}

}  // namespace fano

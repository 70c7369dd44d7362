#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fano {

/// Deterministic splittable generator keyed by (seed, label).
/// The output stream is fixed by splitmix64, so results do not depend on the
/// standard library's distribution implementations.
class Rng {
public:
    Rng(std::uint64_t seed, std::string_view label);

    std::uint64_t next();
    /// Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    long long range(long long lo, long long hi);
    Rng split(std::string_view label);

private:
    explicit Rng(std::uint64_t state) : state_(state) {}
    std::uint64_t state_;
};

std::uint64_t fnv1a(std::string_view s);

bool is_prime_u64(std::uint64_t n);

/// Prime used for all interpolation work: 2^31 - 1.
inline constexpr std::uint64_t kInterpolationPrime = 2147483647ULL;

/// Z/p with p < 2^32, so that products of reduced residues fit in 64 bits.
struct PrimeField {
    using elem = std::uint64_t;
    std::uint64_t p;

    explicit PrimeField(std::uint64_t prime);

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long long x) const {
        long long m = static_cast<long long>(p);
        long long r = x % m;
        return static_cast<elem>(r < 0 ? r + m : r);
    }
    elem add(elem a, elem b) const {
        elem s = a + b;
        return s >= p ? s - p : s;
    }
    elem sub(elem a, elem b) const { return a >= b ? a - b : a + p - b; }
    elem neg(elem a) const { return a == 0 ? 0 : p - a; }
    elem mul(elem a, elem b) const { return (a * b) % p; }
    elem pow(elem a, std::uint64_t e) const;
    elem inv(elem a) const;
    elem div(elem a, elem b) const { return mul(a, inv(b)); }
    bool is_zero(elem a) const { return a == 0; }
    bool eq(elem a, elem b) const { return a == b; }
    elem random(Rng& rng) const { return rng.below(p); }
    /// Symmetric representative in (-p/2, p/2].
    long long to_int(elem a) const {
        return a > p / 2 ? static_cast<long long>(a) - static_cast<long long>(p)
                         : static_cast<long long>(a);
    }
    std::string str(elem a) const { return std::to_string(a); }
    std::uint64_t size() const { return p; }

    bool is_square(elem a) const;
    /// Tonelli-Shanks; nullopt when a is a non-residue.
    std::optional<elem> sqrt(elem a) const;
    /// Smallest quadratic non-residue.
    elem non_residue() const;
};

/// Q via GMP rationals.
struct RationalField {
    using elem = mpq_class;

    elem zero() const { return 0; }
    elem one() const { return 1; }
    elem from_int(long long x) const { return mpq_class(static_cast<long>(x)); }
    elem add(const elem& a, const elem& b) const { return a + b; }
    elem sub(const elem& a, const elem& b) const { return a - b; }
    elem neg(const elem& a) const { return -a; }
    elem mul(const elem& a, const elem& b) const { return a * b; }
    elem inv(const elem& a) const {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
    elem div(const elem& a, const elem& b) const { return a * inv(b); }
    bool is_zero(const elem& a) const { return sgn(a) == 0; }
    bool eq(const elem& a, const elem& b) const { return a == b; }
    /// Small integers in [-9, 9].
    elem random(Rng& rng) const { return from_int(rng.range(-9, 9)); }
    std::string str(const elem& a) const { return a.get_str(); }
    /// Infinite; reported as 0.
    std::uint64_t size() const { return 0; }
};

/// F_{p^2} = F_p[r]/(r^2 - nr) for the smallest non-residue nr.
struct Fp2Field {
    struct elem {
        std::uint64_t a = 0, b = 0;
        bool operator==(const elem& o) const { return a == o.a && b == o.b; }
    };
    PrimeField base;
    std::uint64_t nr;

    explicit Fp2Field(std::uint64_t prime);

    elem zero() const { return {0, 0}; }
    elem one() const { return {1, 0}; }
    elem from_int(long long x) const { return {base.from_int(x), 0}; }
    elem embed(PrimeField::elem x) const { return {x, 0}; }
    elem add(elem x, elem y) const { return {base.add(x.a, y.a), base.add(x.b, y.b)}; }
    elem sub(elem x, elem y) const { return {base.sub(x.a, y.a), base.sub(x.b, y.b)}; }
    elem neg(elem x) const { return {base.neg(x.a), base.neg(x.b)}; }
    elem mul(elem x, elem y) const;
    elem inv(elem x) const;
    elem div(elem x, elem y) const { return mul(x, inv(y)); }
    bool is_zero(elem x) const { return x.a == 0 && x.b == 0; }
    bool eq(elem x, elem y) const { return x == y; }
    elem random(Rng& rng) const { return {base.random(rng), base.random(rng)}; }
    std::string str(elem x) const {
        return std::to_string(x.a) + "+" + std::to_string(x.b) + "r";
    }
    std::uint64_t size() const { return base.p * base.p; }
    /// Every element of F_p has a square root here.
    elem sqrt_of_base(PrimeField::elem x) const;
};

/// Field selector used by instances and the CLI.
struct FieldSpec {
    enum class Kind { rationals, prime, prime_square };
    Kind kind = Kind::prime;
    std::uint64_t p = kInterpolationPrime;

    static FieldSpec rationals() { return {Kind::rationals, 0}; }
    static FieldSpec prime(std::uint64_t p);
    static FieldSpec prime_square(std::uint64_t p);
    /// Accepts "Q", "p=<n>", "p2=<n>" or a bare prime.
    static FieldSpec parse(const std::string& s);
    std::string str() const;
    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

}  // namespace fano

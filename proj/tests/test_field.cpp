#include <doctest.h>

#include "fano/poly.hpp"

using namespace fano;
using Fe = PrimeField::elem;

TEST_CASE("prime field arithmetic and square roots") {
    PrimeField F(101);
    for (Fe a = 1; a < 101; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
    int squares = 0;
    for (Fe a = 0; a < 101; ++a)
        if (auto r = F.sqrt(a)) {
            CHECK(F.mul(*r, *r) == a);
            ++squares;
        }
    CHECK(squares == 51);
    CHECK_THROWS(PrimeField(2));
    CHECK_THROWS(PrimeField(91));
    PrimeField G(kInterpolationPrime);
    Fe x = 123456789;
    auto s = G.sqrt(G.mul(x, x));
    REQUIRE(s);
    CHECK((*s == x || *s == G.neg(x)));
}

TEST_CASE("F_p^2 has square roots of every base element") {
    Fp2Field E(7);
    for (Fe a = 0; a < 7; ++a) {
        auto r = E.sqrt_of_base(a);
        CHECK(E.mul(r, r) == E.embed(a));
    }
    Rng rng(1, "fp2");
    for (int i = 0; i < 50; ++i) {
        auto x = E.random(rng);
        if (E.is_zero(x)) continue;
        CHECK(E.mul(x, E.inv(x)) == E.one());
    }
}

TEST_CASE("field specs parse") {
    CHECK(FieldSpec::parse("Q").kind == FieldSpec::Kind::rationals);
    CHECK(FieldSpec::parse("p=101").p == 101);
    CHECK(FieldSpec::parse("p2=7").kind == FieldSpec::Kind::prime_square);
    CHECK(FieldSpec::parse("2147483647").p == kInterpolationPrime);
    CHECK_THROWS(FieldSpec::parse("p=100"));
    CHECK_THROWS(FieldSpec::parse("banana"));
}

TEST_CASE("rng streams are keyed by label") {
    Rng a(5, "x"), b(5, "x"), c(5, "y");
    auto va = a.next();
    CHECK(va == b.next());
    CHECK(va != c.next());
    Rng d(9, "range");
    for (int i = 0; i < 1000; ++i) {
        auto v = d.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}

TEST_CASE("rank_kernel basics") {
    PrimeField F(kInterpolationPrime);
    auto I = identity(F, 3);
    auto rk = rank_kernel(F, I);
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.empty());
    auto Z = zeros(F, 2, 5);
    rk = rank_kernel(F, Z);
    CHECK(rk.rank == 0);
    CHECK(rk.kernel.size() == 5);
}

TEST_CASE("rank_kernel properties on random matrices") {
    PrimeField F(1009);
    Rng rng(3, "rank-props");
    for (int t = 0; t < 60; ++t) {
        std::size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
        auto M = random_matrix(F, r, c, rng);
        // Force some rank deficiency half the time.
        if (t % 2 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j) M(r - 1, j) = F.add(M(0, j), M(r - 2, j));
        auto rk = rank_kernel(F, M);
        CHECK(rk.rank == rank(F, transpose(M)));
        CHECK(rk.rank + rk.kernel.size() == c);
        for (const auto& k : rk.kernel) CHECK(is_zero_vec(F, mul_vec(F, M, k)));
    }
}

// A x lies in the column space of A, so appending it keeps the rank.
TEST_CASE("columns from the image do not change rank") {
    PrimeField F(97);
    Rng rng(8, "append");
    for (int t = 0; t < 40; ++t) {
        auto A = mul(F, random_matrix(F, 6, 4, rng), random_matrix(F, 4, 6, rng));
        auto x = random_vec(F, 6, rng);
        auto y = mul_vec(F, A, x);
        auto B = zeros(F, 6, 7);
        for (std::size_t i = 0; i < 6; ++i) {
            for (std::size_t j = 0; j < 6; ++j) B(i, j) = A(i, j);
            B(i, 6) = y[i];
        }
        CHECK(rank(F, B) == rank(F, A));
    }
}

TEST_CASE("rank over Q agrees with a second pivot order") {
    RationalField Q;
    Rng rng(2, "q-rank");
    for (int t = 0; t < 20; ++t) {
        auto M = random_matrix(Q, 4, 5, rng);
        for (std::size_t j = 0; j < 5; ++j) M(3, j) = M(0, j) * 2 - M(1, j);
        auto rk = rank_kernel(Q, M);
        CHECK(rk.rank == rank(Q, transpose(M)));
        for (const auto& k : rk.kernel) CHECK(is_zero_vec(Q, mul_vec(Q, M, k)));
    }
}

namespace {
template <class K>
typename K::elem cofactor_det(const K& F, const Mat<typename K::elem>& M) {
    const std::size_t n = M.rows;
    if (n == 1) return M(0, 0);
    auto s = F.zero();
    for (std::size_t j = 0; j < n; ++j) {
        Mat<typename K::elem> m(n - 1, n - 1, F.zero());
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) m(r - 1, cc++) = M(r, c);
        auto t = F.mul(M(0, j), cofactor_det(F, m));
        s = j % 2 ? F.sub(s, t) : F.add(s, t);
    }
    return s;
}
}  // namespace

TEST_CASE("det_along_line oracles") {
    PrimeField F(kInterpolationPrime);
    // diag(z, z, 1) -> z^2
    auto A0 = zeros(F, 3, 3), A1 = zeros(F, 3, 3);
    A0(2, 2) = 1;
    A1(0, 0) = A1(1, 1) = 1;
    auto c = det_along_line(F, A0, A1);
    REQUIRE(c.size() == 4);
    CHECK(c[0] == 0);
    CHECK(c[1] == 0);
    CHECK(c[2] == 1);
    CHECK(c[3] == 0);
    // Constant singular matrix -> zero polynomial.
    auto S = from_ints(F, {{1, 2}, {2, 4}});
    auto z = det_along_line(F, S, zeros(F, 2, 2));
    CHECK(is_zero_vec(F, z));
    // Field too small.
    PrimeField small(3);
    CHECK_THROWS(det_along_line(small, identity(small, 3), identity(small, 3)));
}

TEST_CASE("det_along_line agrees with cofactor expansion") {
    PrimeField F(kInterpolationPrime);
    Rng rng(11, "det-line");
    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + rng.below(4);
        auto A0 = random_matrix(F, n, n, rng), A1 = random_matrix(F, n, n, rng);
        auto c = det_along_line(F, A0, A1);
        CHECK(c.size() == n + 1);
        auto z = F.random(rng);
        CHECK(upoly::eval(F, c, z) == cofactor_det(F, combo(F, F.one(), A0, z, A1)));
    }
    RationalField Q;
    auto A0 = from_ints(Q, {{1, 2}, {3, 4}}), A1 = from_ints(Q, {{0, 1}, {1, 0}});
    auto c = det_along_line(Q, A0, A1);
    // det [[1, 2+z],[3+z, 4]] = 4 - (2+z)(3+z) = -2 - 5z - z^2
    CHECK(c[0] == -2);
    CHECK(c[1] == -5);
    CHECK(c[2] == -1);
}

TEST_CASE("univariate roots") {
    PrimeField F5(5);
    // lambda mu -> [1:0], [0:1]
    auto r = univariate_roots(F5, BinaryForm<PrimeField>{{0, 1, 0}});
    REQUIRE(r.size() == 2);
    CHECK((r[0].lambda == 0 && r[0].mu == 1));
    CHECK((r[1].lambda == 1 && r[1].mu == 0));
    // lambda^2 + mu^2 over F_5 -> [2:1], [3:1]
    r = univariate_roots(F5, BinaryForm<PrimeField>{{1, 0, 1}});
    REQUIRE(r.size() == 2);
    CHECK(r[0].lambda == 2);
    CHECK(r[1].lambda == 3);
    // (lambda - mu)^2 -> one double root
    PrimeField F(kInterpolationPrime);
    r = univariate_roots(F, BinaryForm<PrimeField>{{1, F.neg(2), 1}});
    REQUIRE(r.size() == 1);
    CHECK(r[0].lambda == 1);
    CHECK(r[0].multiplicity == 2);
    CHECK_THROWS(univariate_roots(F, BinaryForm<PrimeField>{{0, 0}}));
}

TEST_CASE("univariate roots agree with exhaustive evaluation for p <= 97") {
    Rng rng(4, "roots-exhaustive");
    for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 31ULL, 97ULL}) {
        PrimeField F(p);
        for (int t = 0; t < 30; ++t) {
            int d = 1 + static_cast<int>(rng.below(6));
            BinaryForm<PrimeField> f;
            for (int i = 0; i <= d; ++i) f.c.push_back(F.random(rng));
            if (f.is_zero(F)) continue;
            auto roots = univariate_roots(F, f);
            std::size_t expected = 0;
            for (Fe x = 0; x < p; ++x) expected += f.eval(F, x, 1) == 0;
            expected += f.eval(F, 1, 0) == 0;
            CHECK(roots.size() == expected);
            for (const auto& rt : roots) CHECK(f.eval(F, rt.lambda, rt.mu) == 0);
        }
    }
}

TEST_CASE("large-prime root finding splits products of linear factors") {
    PrimeField F(kInterpolationPrime);
    Rng rng(6, "cz");
    for (int t = 0; t < 10; ++t) {
        UPoly f{1};
        std::vector<Fe> rs;
        for (int i = 0; i < 5; ++i) {
            auto x = F.random(rng);
            rs.push_back(x);
            f = upoly::mul(F, f, UPoly{F.neg(x), 1});
        }
        f = upoly::mul(F, f, UPoly{1, 0, 1});  // irreducible or not, adds at most 2 roots
        auto roots = upoly::roots(F, f, t);
        for (auto x : rs) {
            bool hit = false;
            for (const auto& r : roots) hit |= r.x == x;
            CHECK(hit);
        }
    }
}

TEST_CASE("monomial enumeration is graded-lex with the expected count") {
    auto m = monomials(6, 6);
    CHECK(m.size() == 462);
    CHECK(m.front() == Exponent{6, 0, 0, 0, 0, 0});
    CHECK(m.back() == Exponent{0, 0, 0, 0, 0, 6});
    GlexGreater g;
    for (std::size_t i = 1; i < m.size(); ++i) CHECK(g(m[i - 1], m[i]));
}

TEST_CASE("fit_form on the divisor z = 0 sees every multiple of z") {
    PrimeField F(kInterpolationPrime);
    Rng rng(12, "fit-z");
    std::vector<Vec<Fe>> pts;
    for (int i = 0; i < 500; ++i) {
        auto x = random_vec(F, 6, rng);
        x[0] = 0;
        pts.push_back(x);
    }
    // Pointwise vanishing cannot see the multiplicity of z^6: the kernel is
    // z times all quintics, 252-dimensional.
    try {
        fit_form(F, pts, 6);
        CHECK(false);
    } catch (const FitError& e) {
        CHECK(e.nullity() == 252);
    }
    std::vector<Vec<Fe>> few(pts.begin(), pts.begin() + 461);
    CHECK_THROWS_AS(fit_form(F, few, 6), FitError);
    PrimeField small(101);
    CHECK_THROWS_AS(fit_form(small, pts, 6), std::invalid_argument);
}

TEST_CASE("fit_form finds a planted sextic and refitting reproduces it") {
    PrimeField F(kInterpolationPrime);
    Rng rng(13, "fit-planted");
    // A random sextic; sample points by solving for the last coordinate
    // along random lines.
    MultiForm<PrimeField> G{6, 6, {}};
    for (const auto& e : monomials(6, 6)) G.set(F, e, F.random(rng));
    auto sample = [&](int n, Rng& r) {
        std::vector<Vec<Fe>> pts;
        while (static_cast<int>(pts.size()) < n) {
            auto a = random_vec(F, 6, r), b = random_vec(F, 6, r);
            auto c = restrict_to_line(F, G, a, b);
            for (const auto& rt : upoly::roots(F, c, r.next())) {
                Vec<Fe> x(6);
                for (int i = 0; i < 6; ++i) x[i] = F.add(a[i], F.mul(rt.x, b[i]));
                pts.push_back(x);
            }
        }
        return pts;
    };
    auto pts = sample(600, rng);
    auto fit = fit_form(F, pts, 6);
    CHECK(proportional(F, fit, G));
    Rng rng2(14, "fit-refit");
    auto pts2 = sample(600, rng2);
    for (const auto& x : pts2) CHECK(fit.eval(F, x) == 0);
    auto refit = fit_form(F, pts2, 6);
    CHECK(refit == fit);
}

TEST_CASE("multiplicity along random lines") {
    PrimeField F(kInterpolationPrime);
    Rng rng(15, "mult");
    // x0^2 x1 x5^3 + x2^3 x5^3 vanishes to order 3 at e5.
    MultiForm<PrimeField> f{6, 6, {}};
    f.set(F, Exponent{2, 1, 0, 0, 0, 3}, 1);
    f.set(F, Exponent{0, 0, 3, 0, 0, 3}, 1);
    Vec<Fe> p{0, 0, 0, 0, 0, 1};
    CHECK(multiplicity_at(F, f, p, rng) == 3);
    Vec<Fe> off{1, 1, 0, 0, 0, 1};
    CHECK(multiplicity_at(F, f, off, rng) == 0);
}

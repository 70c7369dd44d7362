#include <doctest.h>

#include <map>

#include "fano/wedge5.hpp"

using namespace fano;
using Fe = PrimeField::elem;

namespace {

// Multivectors as maps from sorted index bitmasks to coefficients; the
// product sign counts transpositions needed to merge the index lists.
using Multi = std::map<int, long long>;

Multi wedge(const Multi& a, const Multi& b) {
    Multi out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (ma & mb) continue;
            int swaps = 0;
            for (int i = 0; i < 5; ++i)
                if (mb & (1 << i))
                    for (int j = i + 1; j < 5; ++j)
                        if (ma & (1 << j)) ++swaps;
            out[ma | mb] += (swaps % 2 ? -1 : 1) * ca * cb;
        }
    return out;
}

Multi vec(const std::vector<long long>& v) {
    Multi m;
    for (int i = 0; i < 5; ++i)
        if (v[i]) m[1 << i] = v[i];
    return m;
}

Vec<mpq_class> lift_vec(const RationalField&, const std::vector<long long>& v) {
    Vec<mpq_class> r;
    for (auto x : v) r.push_back(mpq_class(static_cast<long>(x)));
    return r;
}

Multi biv(const std::vector<long long>& x) {
    Multi m;
    for (int a = 0; a < 10; ++a)
        if (x[a]) m[(1 << kPairs[a].first) | (1 << kPairs[a].second)] = x[a];
    return m;
}

}  // namespace

TEST_CASE("pfaffian quadric oracles") {
    PrimeField F(kInterpolationPrime);
    auto M = pfaffian_quadric(F, Vec<Fe>{1, 0, 0, 0, 0});
    Vec<Fe> x(10, 0);
    x[pair_index(1, 2)] = 1;
    x[pair_index(3, 4)] = 1;
    CHECK(bilinear(F, M, x, x) == 2);
    CHECK(is_zero(F, pfaffian_quadric(F, Vec<Fe>(5, 0))));
    Rng rng(1, "pfaff-rank");
    for (int t = 0; t < 20; ++t) {
        auto v = random_vec(F, 5, rng);
        CHECK(rank(F, pfaffian_quadric(F, v)) == 6);
    }
}

TEST_CASE("pfaffian quadric matches direct wedge expansion") {
    Rng rng(2, "pfaff-wedge");
    for (int t = 0; t < 200; ++t) {
        std::vector<long long> v(5), x(10), y(10);
        for (auto& c : v) c = rng.range(-5, 5);
        for (auto& c : x) c = rng.range(-5, 5);
        for (auto& c : y) c = rng.range(-5, 5);
        auto top = wedge(wedge(vec(v), biv(x)), biv(y));
        mpq_class expect(static_cast<long>(top.count(31) ? top[31] : 0));
        RationalField Q;
        auto M = pfaffian_quadric(Q, lift_vec(Q, v));
        CHECK(bilinear(Q, M, lift_vec(Q, x), lift_vec(Q, y)) == expect);
        auto r = wedge_bivectors(Q, lift_vec(Q, x), lift_vec(Q, y));
        mpq_class s = 0;
        for (int m = 0; m < 5; ++m) s += r[m] * static_cast<long>(v[m]);
        CHECK(s == expect);
    }
}

TEST_CASE("v -> P_v is linear") {
    PrimeField F(1009);
    Rng rng(3, "pfaff-linear");
    for (int t = 0; t < 20; ++t) {
        auto v = random_vec(F, 5, rng), w = random_vec(F, 5, rng);
        Vec<Fe> s(5);
        for (int i = 0; i < 5; ++i) s[i] = F.add(v[i], w[i]);
        CHECK(pfaffian_quadric(F, s) == add(F, pfaffian_quadric(F, v), pfaffian_quadric(F, w)));
    }
}

TEST_CASE("bivector rank and support") {
    PrimeField F(kInterpolationPrime);
    Vec<Fe> e12(10, 0);
    e12[pair_index(0, 1)] = 1;
    auto s = bivector_rank_support(F, e12);
    CHECK(s.rank == 2);
    CHECK(s.support == from_ints(F, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}));
    auto w = e12;
    w[pair_index(2, 3)] = 1;
    s = bivector_rank_support(F, w);
    CHECK(s.rank == 4);
    CHECK(s.support == from_ints(F, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}));
    Rng rng(4, "biv-rank");
    for (int t = 0; t < 100; ++t) {
        auto x = random_vec(F, 10, rng);
        auto r = bivector_rank_support(F, x);
        CHECK(r.rank == 4);
        // x lies in wedge^2 of its support.
        auto W = wedge2_basis(F, r.support);
        CHECK(rank(F, stack(F, W, from_rows(F, {x}, 10))) == 6);
    }
}

TEST_CASE("w^w = 0 exactly for rank <= 2, exhaustively over F_3") {
    PrimeField F(3);
    std::size_t decomposable = 0;
    Vec<Fe> x(10, 0);
    for (int code = 0; code < 59049; ++code) {
        int c = code;
        for (int a = 0; a < 10; ++a) {
            x[a] = c % 3;
            c /= 3;
        }
        bool dec = is_decomposable(F, x);
        int r = static_cast<int>(rank(F, skew_matrix(F, x)));
        CHECK(dec == (r <= 2));
        decomposable += dec;
    }
    // Cone over G(2,5)(F_3): 1 + 2 |G(2,5)(F_3)| with |G(2,5)(F_3)| = 1210.
    CHECK(decomposable == 1 + 2 * 1210);
    PrimeField G(kInterpolationPrime);
    Rng rng(5, "biv-decomp");
    for (int t = 0; t < 1000; ++t) {
        Vec<Fe> y;
        if (t % 2) {
            y = wedge2(G, random_vec(G, 5, rng), random_vec(G, 5, rng));
        } else {
            y = random_vec(G, 10, rng);
        }
        CHECK(is_decomposable(G, y) == (rank(G, skew_matrix(G, y)) <= 2));
    }
}

TEST_CASE("restrictions of quadrics") {
    PrimeField F(kInterpolationPrime);
    Rng rng(6, "restrict");
    for (int t = 0; t < 20; ++t) {
        auto V4 = random_matrix(F, 4, 5, rng);
        auto W = wedge2_basis(F, V4);
        auto inside = mul_vec(F, transpose(V4), random_vec(F, 4, rng));
        CHECK(is_zero(F, restrict_quadric(F, pfaffian_quadric(F, inside), W)));
        // v outside V_4: a nonzero multiple of the Pluecker quadric of G(2,V_4).
        auto v = random_vec(F, 5, rng);
        auto R = restrict_quadric(F, pfaffian_quadric(F, v), W);
        auto P = plucker_quadric_g24(F);
        REQUIRE(!is_zero(F, R));
        Fe ratio = 0;
        for (std::size_t i = 0; i < 36; ++i)
            if (P.a[i] != 0) {
                ratio = F.div(R.a[i], P.a[i]);
                break;
            }
        CHECK(ratio != 0);
        CHECK(R == scale(F, ratio, P));
    }
    auto Q = random_symmetric(F, 10, rng);
    auto x = random_vec(F, 10, rng);
    auto one = restrict_quadric(F, Q, from_rows(F, {x}, 10));
    CHECK(one(0, 0) == bilinear(F, Q, x, x));
    // Nested restriction.
    auto S = random_matrix(F, 6, 10, rng);
    auto T = random_matrix(F, 3, 6, rng);
    CHECK(restrict_quadric(F, Q, mul(F, T, S)) == restrict_quadric(F, restrict_quadric(F, Q, S), T));
    CHECK_THROWS(restrict_quadric(F, Q, from_rows(F, {x, x}, 10)));
}

TEST_CASE("P_v vanishes on wedge^2 V_4 exactly when v lies in V_4") {
    PrimeField F(101);
    Rng rng(7, "pv-v4");
    for (int t = 0; t < 50; ++t) {
        auto x = random_vec(F, 10, rng);
        auto sup = bivector_rank_support(F, x);
        if (sup.rank != 4) continue;
        auto W = wedge2_basis(F, sup.support);
        auto v = random_vec(F, 5, rng);
        bool in_v4 = rank(F, stack(F, sup.support, from_rows(F, {v}, 5))) == 4;
        CHECK(is_zero(F, restrict_quadric(F, pfaffian_quadric(F, v), W)) == in_v4);
        auto u = mul_vec(F, transpose(sup.support), random_vec(F, 4, rng));
        CHECK(is_zero(F, restrict_quadric(F, pfaffian_quadric(F, u), W)));
    }
}

TEST_CASE("contraction follows the Leibniz rule") {
    PrimeField F(kInterpolationPrime);
    Rng rng(8, "contract");
    auto w = random_vec(F, 10, rng);
    CHECK(is_zero_vec(F, contract(F, zeros(F, 5, 5), w)));
    // phi(v1) = u, phi(v2) = 0 on omega = v1 ^ v2.
    Vec<Fe> v1{1, 0, 0, 0, 0}, v2{0, 1, 0, 0, 0}, f{1, 0, 0, 0, 0};
    auto u = random_vec(F, 5, rng);
    CHECK(contract(F, rank_one_map(F, u, f), wedge2(F, v1, v2)) == wedge2(F, u, v2));
    for (int t = 0; t < 20; ++t) {
        auto phi = random_matrix(F, 5, 5, rng);
        std::vector<Vec<Fe>> v;
        for (int i = 0; i < 4; ++i) v.push_back(random_vec(F, 5, rng));
        auto omega = wedge2(F, v[0], v[1]);
        auto second = wedge2(F, v[2], v[3]);
        for (int a = 0; a < 10; ++a) omega[a] = F.add(omega[a], second[a]);
        auto img = [&](const Vec<Fe>& x) { return mul_vec(F, phi, x); };
        Vec<Fe> expect(10, 0);
        for (const auto& term : {wedge2(F, img(v[0]), v[1]), wedge2(F, v[0], img(v[1])), wedge2(F, img(v[2]), v[3]),
                                 wedge2(F, v[2], img(v[3]))})
            for (int a = 0; a < 10; ++a) expect[a] = F.add(expect[a], term[a]);
        CHECK(contract(F, phi, omega) == expect);
    }
}

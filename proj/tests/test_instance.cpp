#include <doctest.h>

#include "fano/instance.hpp"

using namespace fano;
using Fe = PrimeField::elem;

namespace {
const FieldSpec kBig = FieldSpec::prime(kInterpolationPrime);
}

TEST_CASE("random instances are reproducible") {
    auto a = random_instance(1, kBig, 42);
    auto b = random_instance(1, kBig, 42);
    CHECK(a == b);
    CHECK(digest(a) == digest(b));
    auto c = random_instance(2, kBig, 42);
    CHECK(c.V.rows == 8);
    CHECK(!(c == a));
    auto q = random_instance(0, FieldSpec::rationals(), 7);
    CHECK(q.V.rows == 10);
    for (auto x : q.Q.a) CHECK(std::llabs(x) <= 9);
}

TEST_CASE("instance JSON round trip is exact") {
    for (int k = 0; k < 4; ++k) {
        auto inst = random_instance(k, kBig, 100 + k);
        auto back = instance_from_json(to_json(inst));
        CHECK(back == inst);
        CHECK(to_json(back) == to_json(inst));
    }
    auto q = random_instance(1, FieldSpec::rationals(), 3);
    CHECK(instance_from_json(to_json(q)) == q);
    CHECK_THROWS(instance_from_json("{\"k\": 1}"));
    CHECK_THROWS(instance_from_json("not json"));
}

TEST_CASE("prime-field JSON input is reduced on load") {
    auto inst = random_instance(1, FieldSpec::prime(101), 5);
    auto text = to_json(inst);
    auto shifted = inst;
    shifted.Q.a[0] += 101;
    shifted.Q.a[0] -= 0;
    // A representative outside [0, p) reduces to the same residue.
    auto j = to_json(make_instance(1, inst.field, inst.seed, inst.V, shifted.Q));
    CHECK(instance_from_json(j) == inst);
}

TEST_CASE("smoothness probe") {
    auto inst = random_instance(1, kBig, 9);
    auto rep = smoothness_probe(inst, 50, 1);
    CHECK(rep.failures == 0);
    // A random quartic slice has a root about 5/8 of the time.
    CHECK(rep.points >= 15);
    auto empty = smoothness_probe(inst, 0, 1);
    CHECK(empty.trials == 0);
    CHECK(empty.points == 0);

    // Q = P_v is a Pfaffian: Z is a cone section and every point is singular.
    PrimeField F(kInterpolationPrime);
    auto P = pfaffian_quadric(F, Vec<Fe>{1, 2, 3, 4, 5});
    auto bad = make_instance(1, kBig, 0, inst.V, lower(F, P));
    auto brep = smoothness_probe(bad, 10, 2);
    CHECK(brep.points > 0);
    CHECK(brep.failures == brep.points);
    // Explicit check at one failure point: the gradient of Q lies in the span
    // of the Pfaffian gradients.
    REQUIRE(!brep.failure_points.empty());
    auto x = lift(F, brep.failure_points[0]);
    CHECK(is_decomposable(F, x));
    CHECK(bilinear(F, P, x, x) == 0);
}

TEST_CASE("probe points lie on the variety for every k") {
    PrimeField F(kInterpolationPrime);
    for (int k = 0; k < 4; ++k) {
        auto inst = random_instance(k, kBig, 20 + k);
        auto pts = sample_variety_points(inst, 10, 3);
        CHECK(pts.size() >= 5);
        auto S = quadric_system(F, inst);
        auto V = lift(F, inst.V);
        for (const auto& x : pts) {
            // Coordinates in the basis of V, then every quadric of I vanishes.
            auto c = coordinates_in(F, V, x);
            REQUIRE(c);
            for (int i = 0; i < 6; ++i) CHECK(bilinear(F, S.R[i], *c, *c) == 0);
        }
    }
}

TEST_CASE("chains are nested and share Q") {
    PrimeField F(kInterpolationPrime);
    auto c = random_chain(kBig, 4);
    CHECK(c.X.Q == c.Z.Q);
    CHECK(c.Z.Q == c.W.Q);
    auto V9 = lift(F, c.Z.V), V8 = lift(F, c.W.V);
    CHECK(rank(F, stack(F, V9, V8)) == 9);
    for (const auto* inst : {&c.X, &c.Z, &c.W}) {
        auto S = quadric_system(F, *inst);
        auto V = lift(F, inst->V);
        for (const auto& x : sample_variety_points(*inst, 5, 8)) {
            auto co = coordinates_in(F, V, x);
            REQUIRE(co);
            for (int i = 0; i < 6; ++i) CHECK(bilinear(F, S.R[i], *co, *co) == 0);
        }
    }
}

TEST_CASE("Grassmannian and flag point counts over F_3") {
    PrimeField F(3);
    CHECK(grassmannian_points(F, 3, 5).size() == 1210);
    CHECK(grassmannian_points(F, 1, 5).size() == 121);
    CHECK(grassmannian_points(F, 2, 4).size() == 130);
    auto inst = random_instance(1, FieldSpec::prime(3), 1);
    auto res = plane_search(inst);
    CHECK(res.rho_planes == 1210);
    // |F(1,4;V_5)(F_3)| = |P^4(F_3)| * |P^3(F_3)| = 121 * 40.
    CHECK(res.sigma_planes == 4840);
    for (const auto& p : res.found) CHECK(plane_in_variety(F, inst, p.basis));
}

TEST_CASE("constructed planes are found") {
    for (std::uint64_t p : {3ULL, 5ULL}) {
        PrimeField F(p);
        Mat<Fe> plane;
        auto inst = instance_with_rho_plane(FieldSpec::prime(p), 11, plane);
        CHECK(plane_in_variety(F, inst, plane));
        auto res = plane_search(inst);
        bool hit = false;
        for (const auto& f : res.found)
            hit |= f.type == 'r' && row_basis(F, f.basis) == row_basis(F, plane);
        CHECK(hit);
        auto inst2 = instance_with_sigma_plane(FieldSpec::prime(p), 12, plane);
        auto res2 = plane_search(inst2);
        hit = false;
        for (const auto& f : res2.found)
            hit |= f.type == 's' && row_basis(F, f.basis) == row_basis(F, plane);
        CHECK(hit);
    }
    CHECK_THROWS(plane_search(random_instance(1, FieldSpec::prime(11), 1)));
}

TEST_CASE("Gushel flattening substitutes h_0 / eps for t") {
    PrimeField F(kInterpolationPrime);
    auto g = random_gushel(1, kBig, 3);
    Rng rng(2, "flatten");
    for (Fe eps : {Fe{1}, Fe{7}}) {
        auto Z = gushel_flatten(g, eps);
        CHECK(Z.k == 1);
        auto V = lift(F, Z.V);
        auto Qs = lift(F, Z.Q);
        auto H = lift(F, g.H);
        auto l = lift(F, g.ell);
        auto q = lift(F, g.q);
        for (int t = 0; t < 5; ++t) {
            auto w = mul_vec(F, transpose(V), random_vec(F, V.rows, rng));
            // w satisfies h_1 = 0; t = h_0(w) / eps.
            CHECK(dot(F, H.row(1), w) == 0);
            auto tt = F.div(dot(F, H.row(0), w), eps);
            auto expect = F.add(F.mul(tt, tt), F.add(F.mul(2, F.mul(dot(F, l, w), tt)), bilinear(F, q, w, w)));
            CHECK(bilinear(F, Qs, w, w) == expect);
        }
    }
    CHECK_THROWS(gushel_flatten(g, 0));
    auto X = gushel_companion(g);
    CHECK(X.k == 2);
    CHECK(smoothness_probe(X, 10, 5).failures == 0);
}

#include <doctest.h>

#include "fano/sextic.hpp"

using namespace fano;

namespace {

const FieldSpec kBig = FieldSpec::prime(kInterpolationPrime);

// Dual sextics are reused across cases; fitting one costs about a second.
const Sextic& dual_sextic(int k) {
    static std::map<int, Sextic> cache;
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    PrimeField F(kInterpolationPrime);
    auto inst = random_instance(k, kBig, 500 + k);
    return cache[k] = interpolate_dual(DualContext(F, inst), 1).form;
}

}  // namespace

TEST_CASE("discriminant vanishes to order 4-k at z = 0 with a sextic residual") {
    PrimeField F(kInterpolationPrime);
    for (int k = 0; k < 4; ++k)
        for (int s = 0; s < 2; ++s) {
            auto inst = random_instance(k, kBig, 10 * k + s);
            Rng rng(s, "disc");
            auto rep = discriminant_profile(F, quadric_system(F, inst), 20, rng);
            CHECK(rep.expected_order == 4 - k);
            CHECK(rep.ok());
        }
    // The same over the rationals.
    RationalField Q;
    auto inst = random_instance(1, FieldSpec::rationals(), 4);
    Rng rng(1, "disc-q");
    CHECK(discriminant_profile(Q, quadric_system(Q, inst), 3, rng).ok());
}

TEST_CASE("primal samples are corank-one points away from z = 0") {
    PrimeField F(kInterpolationPrime);
    auto inst = random_instance(1, kBig, 3);
    auto S = quadric_system(F, inst);
    auto pts = sample_primal(F, S, 50, 9);
    REQUIRE(pts.size() == 50);
    for (const auto& p : pts) {
        CHECK(p.x[0] != 0);
        CHECK(p.corank == 1);
        CHECK(is_zero_vec(F, mul_vec(F, member(F, S, p.x), p.kernel)));
    }
}

TEST_CASE("dual pencils have degree 6-k and roots give valid witnesses") {
    PrimeField F(kInterpolationPrime);
    for (int k = 0; k < 3; ++k) {
        DualContext C(F, random_instance(k, kBig, 40 + k));
        Rng rng(k, "pencil");
        auto P = dual_pencil(C, random_vec(F, 5, rng));
        REQUIRE(P);
        CHECK(P->delta.degree() == 6 - k);
        CHECK(P->delta.c.back() != 0);
        CHECK(P->M.rows == static_cast<std::size_t>(6 - k));
    }
    // The hyperplane convention: 100 samples, each hyperplane contains the
    // Pfaffians of V_4 and the singular pencil member, and the witness is
    // singular; swapping the roles of lambda and mu breaks the predicate.
    DualContext C(F, random_instance(1, kBig, 41));
    auto pts = sample_dual(C, 100, 2);
    int swapped_ok = 0;
    for (const auto& d : pts) {
        CHECK(d.corank >= 1);
        CHECK(dual_witness_holds(C, d));
        Vec<Fe> u(5, 0);
        for (int j = 0; j < 5; ++j)
            if (d.w[j] != 0) {
                u[j] = F.inv(d.w[j]);
                break;
            }
        Vec<Fe> member_coords{d.lambda};
        for (auto c : u) member_coords.push_back(F.mul(d.mu, c));
        CHECK(dot(F, d.h, member_coords) == 0);
        auto V4 = rank_kernel(F, from_rows(F, {d.w}, 5)).kernel;
        for (const auto& v : V4) {
            Vec<Fe> pv{0};
            pv.insert(pv.end(), v.begin(), v.end());
            CHECK(dot(F, d.h, pv) == 0);
        }
        auto P = dual_pencil(C, d.w);
        if (witness_corank(C, *P, d.mu, d.lambda) >= 1) ++swapped_ok;
    }
    CHECK(swapped_ok < 10);
}

TEST_CASE("dual sextic interpolation is unique and validates") {
    PrimeField F(kInterpolationPrime);
    auto inst = random_instance(1, kBig, 501);
    DualContext C(F, inst);
    auto a = interpolate_dual(C, 1);
    CHECK(a.heldout_failures == 0);
    CHECK(a.samples == 600);
    auto b = interpolate_dual(C, 77);
    CHECK(proportional(F, a.form, b.form));
    CHECK(a.form == dual_sextic(1));
    // Membership of fresh witnesses.
    for (const auto& d : sample_dual(C, 50, 123)) CHECK(a.form.eval(F, d.h) == 0);
    // Refitting points sampled from the fitted form reproduces it.
    Rng rng(4, "refit");
    CHECK(proportional(F, fit_form(F, sample_hypersurface(F, a.form, 600, rng), 6), a.form));
}

TEST_CASE("Pluecker point: off the sextic for k=0, multiplicity k otherwise") {
    PrimeField F(kInterpolationPrime);
    Rng rng(5, "hp");
    CHECK(dual_sextic(0).eval(F, plucker_point()) != 0);
    CHECK(multiplicity_at(F, dual_sextic(0), plucker_point(), rng) == 0);
    CHECK(multiplicity_at(F, dual_sextic(1), plucker_point(), rng) == 1);
    CHECK(multiplicity_at(F, dual_sextic(2), plucker_point(), rng) == 2);
}

TEST_CASE("primal and dual sextics are projectively dual") {
    PrimeField F(kInterpolationPrime);
    for (int k = 0; k < 2; ++k) {
        auto inst = random_instance(k, kBig, 500 + k);
        auto Y = interpolate_primal(F, quadric_system(F, inst), 3).form;
        auto rep = duality_check(F, Y, dual_sextic(k), 20, 6);
        CHECK(rep.ok());
        CHECK(rep.trials == 20);
    }
    // Mismatched pair.
    auto other = random_instance(1, kBig, 999);
    auto Y = interpolate_primal(F, quadric_system(F, other), 3).form;
    auto rep = duality_check(F, Y, dual_sextic(1), 10, 6);
    CHECK(rep.forward_failures == 10);
    CHECK(rep.backward_failures == 10);
}

TEST_CASE("Lagrangian graph and EPW membership") {
    PrimeField F(kInterpolationPrime);
    auto inst = random_instance(0, kBig, 500);
    auto L = lagrangian_A(F, inst);
    CHECK(is_lagrangian(F, L));
    CHECK(rank(F, L.A) == 10);
    // J is antisymmetric and nondegenerate on wedge^3 of a 6-space.
    CHECK(add(F, L.J, transpose(L.J)) == zeros(F, 20, 20));
    CHECK(rank(F, L.J) == 20);
    CHECK(!is_lagrangian(F, lagrangian_A(F, inst, kLagrangianScale, 4)));

    DualContext C(F, inst);
    const auto& Yv = dual_sextic(0);
    auto wrong = lagrangian_A(F, inst, -kLagrangianScale);
    for (const auto& d : sample_dual(C, 20, 8)) {
        CHECK(epw_membership(F, L, d.h) >= 1);
        CHECK(epw_membership(F, wrong, d.h) == 0);
    }
    Rng rng(9, "epw-off");
    for (int t = 0; t < 20; ++t) {
        auto h = random_vec(F, 6, rng);
        CHECK((epw_membership(F, L, h) >= 1) == (Yv.eval(F, h) == 0));
    }
}

TEST_CASE("corank-two points are singular points of multiplicity two") {
    PrimeField F(101);
    auto inst = random_instance(1, FieldSpec::prime(101), 3);
    DualContext C(F, inst);
    auto found = corank2_sample(C, 2, 1, 100000);
    REQUIRE(found.points.size() == 2);
    CHECK(found.corank3 == 0);
    auto Yv = interpolate_dual(C, 5, FitOptions{101}).form;
    Rng rng(3, "corank2-mult");
    for (const auto& d : found.points) {
        CHECK(d.corank == 2);
        CHECK(dual_witness_holds(C, d));
        CHECK(Yv.eval(F, d.h) == 0);
        CHECK(is_zero_vec(F, Yv.gradient(F, d.h)));
        CHECK(multiplicity_at(F, Yv, d.h, rng) == 2);
    }
    // On k = 0 the same points have EPW intersection dimension >= 2.
    auto X = random_instance(0, FieldSpec::prime(101), 3);
    DualContext CX(F, X);
    auto L = lagrangian_A(F, X);
    for (const auto& d : corank2_sample(CX, 2, 2, 100000).points) CHECK(epw_membership(F, L, d.h) >= 2);
}

TEST_CASE("corank-two loci of W and X lie in the dual sextic of Z") {
    PrimeField F(101);
    auto chain = random_chain(FieldSpec::prime(101), 6);
    DualContext CZ(F, chain.Z);
    auto Yz = interpolate_dual(CZ, 2, FitOptions{101}).form;
    auto sw = containment_SW(chain, Yz, 2, 3, 100000);
    CHECK(sw.points == 2);
    CHECK(sw.all_contained());
    CHECK(sw.exact_corank2 == 2);
    auto sx = containment_SX(chain, Yz, 2, 4, 100000);
    CHECK(sx.points == 2);
    CHECK(sx.all_contained());
    CHECK(sx.exact_corank2 == 2);

    // Against an unrelated Z both predicates fail (up to the 1/p chance of a
    // random value vanishing).
    auto other = random_chain(FieldSpec::prime(101), 60);
    DualContext CO(F, other.Z);
    auto Yo = interpolate_dual(CO, 2, FitOptions{101}).form;
    auto neg = containment(DualContext(F, chain.W), CO, Yo, 2, 3, 100000);
    CHECK(neg.points == 2);
    CHECK(neg.by_sextic + neg.by_restriction <= 1);
}

TEST_CASE("Gushel cone and branch sextics coincide") {
    auto g = random_gushel(1, kBig, 2);
    auto rep = gushel_compare(g, 4, 5);
    CHECK(rep.sextics_equal);
    CHECK(rep.eps_failures == 0);
    CHECK(rep.witness_trials == 5);
    CHECK(rep.witness_failures == 0);
    // Perturbing the cone quadric breaks the equality.
    auto h = g;
    h.q(0, 1) += 1;
    h.q(1, 0) += 1;
    PrimeField F(kInterpolationPrime);
    auto Yc = interpolate_primal(F, gushel_system(F, h), 1).form;
    CHECK(!proportional(F, Yc, rep.branch_sextic));
}

#include <doctest.h>

#include "fano/deform.hpp"

using namespace fano;

namespace {

const FieldSpec kBig = FieldSpec::prime(kInterpolationPrime);

struct SampledConic {
    FanoInstance inst;
    ConicOnZ conic;
    ParametrizedConic param;
};

SampledConic conic_on_random_Z(std::uint64_t seed) {
    auto inst = random_instance(1, kBig, seed);
    auto F = prime_field_of(inst.field);
    auto c = sample_conic(inst, seed);
    Rng rng(seed, "test-parametrize");
    auto P = parametrize(F, c.conic, lift(F, inst.V), rng);
    return {inst, c, P};
}

}  // namespace

TEST_CASE("tangent space of a tau-conic on G has dimension 13") {
    PrimeField F(kInterpolationPrime);
    auto G = grassmannian_quadrics(F);
    Rng rng(3, "tau-on-G");
    for (int i = 0; i < 3; ++i) {
        auto c = random_tau_conic_on_G(F, rng);
        REQUIRE(lies_on(F, c, G));
        auto t = conic_tangent_dim(F, c, G);
        CHECK(t.quotient_inside);
        CHECK(t.quotient_rank == 4);
        CHECK(t.dimension == 13);
    }
}

TEST_CASE("conics on Z: tangent dimension 5 and normal bundle O + O(1) + O(1)") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        auto s = conic_on_random_Z(seed);
        auto F = prime_field_of(s.inst.field);
        auto Q = instance_quadrics(F, s.inst);
        REQUIRE(lies_on(F, s.param, Q));
        auto t = conic_tangent_dim(F, s.param, Q);
        CHECK(t.quotient_rank == 4);
        CHECK(t.dimension == 5);

        auto sp = splitting_type(F, s.param, Q, 2);
        CHECK(sp.h0[0] >= sp.h0[1]);
        CHECK(sp.h0[1] >= sp.h0[2]);
        CHECK(sp.h0[0] == t.dimension);
        CHECK(sp.degrees == std::vector<int>{1, 1, 0});
        CHECK(sp.degree_sum == 2);
    }
}

TEST_CASE("a conic off the variety is rejected") {
    auto s = conic_on_random_Z(7);
    auto F = prime_field_of(s.inst.field);
    auto Q = instance_quadrics(F, s.inst);
    s.param.coeffs(0, 0) = F.add(s.param.coeffs(0, 0), 1);
    CHECK_FALSE(lies_on(F, s.param, Q));
    CHECK_THROWS_AS(conic_tangent_dim(F, s.param, Q), std::domain_error);
}

TEST_CASE("conics on a threefold section W: tangent dimension 2, normal degree 0") {
    auto s = conic_on_random_Z(11);
    auto F = prime_field_of(s.inst.field);
    auto W = section_through_plane(s.inst, s.conic.conic.plane, 11);
    CHECK(W.k == 2);
    Rng rng(11, "test-parametrize-W");
    auto P = parametrize(F, s.conic.conic, lift(F, W.V), rng);
    auto Q = instance_quadrics(F, W);
    REQUIRE(lies_on(F, P, Q));
    auto t = conic_tangent_dim(F, P, Q);
    CHECK(t.dimension == 2);
    auto sp = splitting_type(F, P, Q, 0, 2);
    CHECK(sp.h0[0] == 2);
    CHECK(sp.degrees == std::vector<int>{0, 0});
}

TEST_CASE("double lines: 13 parameters for each orbit type") {
    for (auto t : {DoubleLineType::sigma, DoubleLineType::rho, DoubleLineType::tau}) {
        auto rep = doubleline_hom_dim(t);
        CAPTURE(to_string(t));
        CHECK(rep.dimension == 13);
        CHECK(rep.dimension_next == 13);
        CHECK(rep.dimension_swapped == 13);
        CHECK(rep.table_matches);
        CHECK(rep.solve.generators.size() == 5);
    }
}

TEST_CASE("double lines: the sigma table as printed does not fit, the rho and tau tables do") {
    CHECK_FALSE(doubleline_hom_dim(DoubleLineType::sigma).verbatim_table_matches);
    CHECK(doubleline_hom_dim(DoubleLineType::tau).verbatim_table_matches);
}

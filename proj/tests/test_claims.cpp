#include <doctest.h>

#include "fano/claims.hpp"

using namespace fano;

namespace {

const FieldSpec kBig = FieldSpec::prime(kInterpolationPrime);

nlohmann::json without_time(const Report& r) {
    auto j = to_json(r);
    j.erase("wall_seconds");
    return j;
}

}  // namespace

TEST_CASE("report counts and thresholds") {
    Report r;
    CHECK_FALSE(r.ok());  // no trials, no claim
    r.record(true);
    r.record(false);
    CHECK(r.trials == 2);
    CHECK(r.passed + r.failed == r.trials);
    CHECK_FALSE(r.ok());
    r.required = 1;
    CHECK(r.ok());
    CHECK(to_json(r)["required"] == 1);
    CHECK(csv_row(r).find(",PASS,") != std::string::npos);
    CHECK(reports_csv({r, r}).find(csv_header()) == 0);
}

TEST_CASE("claims are deterministic apart from wall time") {
    auto inst = random_instance(1, kBig, 5);
    ClaimOptions o{3, 0};
    CHECK(without_time(check_discriminant(inst, o)) == without_time(check_discriminant(inst, o)));
    CHECK(without_time(check_conic_pipeline(inst, {3, 5})) == without_time(check_conic_pipeline(inst, {3, 5})));
    CHECK(without_time(check_appendix(o)) == without_time(check_appendix(o)));
}

TEST_CASE("discriminant claim on each k and over the rationals") {
    for (int k = 0; k <= 3; ++k) {
        auto r = check_discriminant(random_instance(k, kBig, 2), {1, 5});
        CHECK(r.ok());
        CHECK(r.metrics["expected_order"] == 4 - k);
    }
    CHECK(check_discriminant(random_instance(1, FieldSpec::rationals(), 2), {1, 3}).ok());
}

TEST_CASE("unsupported k is rejected") {
    auto k3 = random_instance(3, kBig, 1);
    CHECK_THROWS_AS(check_dual_sextic(k3, {}), std::invalid_argument);
    CHECK_THROWS_AS(check_duality(random_instance(2, kBig, 1), {}), std::invalid_argument);
    CHECK_THROWS_AS(check_lagrangian(random_instance(1, kBig, 1), {}), std::invalid_argument);
    CHECK_THROWS_AS(check_conic_pipeline(k3, {}), std::invalid_argument);
}

TEST_CASE("reduction keeps k and lands in the small field") {
    auto inst = random_instance(1, kBig, 4);
    auto r = reduce_instance(inst, kSmallPrime);
    CHECK(r.k == 1);
    CHECK(r.field.p == kSmallPrime);
    for (auto x : r.V.a) CHECK((x >= 0 && x < 101));
    CHECK_THROWS(reduce_instance(random_instance(1, FieldSpec::rationals(), 1), 101));
}

TEST_CASE("kappa reports its threshold and control") {
    auto r = check_kappa(random_instance(1, kBig, 6), {1, 25});
    CHECK(r.required == 24);
    CHECK(r.ok());
    CHECK(r.metrics["control_detected"] == true);
}

TEST_CASE("check_all picks claims by field size") {
    auto names = [](const std::vector<Report>& rs) {
        std::vector<std::string> out;
        for (const auto& r : rs) out.push_back(r.claim);
        return out;
    };
    auto small = names(check_all(random_instance(1, FieldSpec::prime(5), 2), {1, 3}));
    CHECK(small == std::vector<std::string>{"no-planes", "special-families"});
    auto k3 = names(check_all(random_instance(3, kBig, 2), {}));
    CHECK(k3 == std::vector<std::string>{"discriminant-order"});
}

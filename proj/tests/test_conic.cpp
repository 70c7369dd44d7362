#include <doctest.h>

#include "fano/conic.hpp"

using namespace fano;

namespace {

const FieldSpec kBig = FieldSpec::prime(kInterpolationPrime);

Mat<Fe> parabola(const PrimeField& F) {
    // x0 x2 - x1^2 on the basis images of s^2, st, t^2.
    auto M = zeros(F, 3, 3);
    M(0, 2) = M(2, 0) = F.inv(2);
    M(1, 1) = F.neg(1);
    return M;
}

struct Frame {
    Vec<Fe> v[4];
};

Frame random_frame(const PrimeField& F, Rng& rng) {
    for (;;) {
        auto M = random_matrix(F, 4, 5, rng);
        if (rank(F, M) == 4) return {{M.row(0), M.row(1), M.row(2), M.row(3)}};
    }
}

Vec<Fe> plus(const PrimeField& F, Vec<Fe> a, const Vec<Fe>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = F.add(a[i], b[i]);
    return a;
}

Conic tau_example(const PrimeField& F, const Frame& f) {
    // (s v1 + t v2) ^ (s v3 + t v4)
    auto a = wedge2(F, f.v[0], f.v[2]);
    auto b = plus(F, wedge2(F, f.v[0], f.v[3]), wedge2(F, f.v[1], f.v[2]));
    auto c = wedge2(F, f.v[1], f.v[3]);
    return {from_rows(F, {a, b, c}, 10), parabola(F)};
}

Conic sigma_example(const PrimeField& F, const Frame& f) {
    // v1 ^ (s^2 v2 + st v3 + t^2 v4)
    return {from_rows(F, {wedge2(F, f.v[0], f.v[1]), wedge2(F, f.v[0], f.v[2]), wedge2(F, f.v[0], f.v[3])}, 10),
            parabola(F)};
}

Conic rho_example(const PrimeField& F, const Frame& f) {
    // (s v1 + t v2) ^ (s v2 + t v3)
    return {from_rows(F, {wedge2(F, f.v[0], f.v[1]), wedge2(F, f.v[0], f.v[2]), wedge2(F, f.v[1], f.v[2])}, 10),
            parabola(F)};
}

Mat<Fe> span_of(const PrimeField& F, const Frame& f, std::initializer_list<int> idx) {
    std::vector<Vec<Fe>> rows;
    for (int i : idx) rows.push_back(f.v[i]);
    return row_basis(F, from_rows(F, rows, 5));
}

}  // namespace

TEST_CASE("classification of the three conic types") {
    PrimeField F(kInterpolationPrime);
    Rng rng(1, "classify");
    for (int t = 0; t < 10; ++t) {
        auto f = random_frame(F, rng);
        auto tau = tau_example(F, f), sigma = sigma_example(F, f), rho = rho_example(F, f);
        for (const auto* c : {&tau, &sigma, &rho}) CHECK(conic_on_grassmannian(F, *c));
        CHECK(classify_conic(F, tau).cls == ConicClass::tau);
        CHECK(classify_conic(F, sigma).cls == ConicClass::sigma);
        CHECK(classify_conic(F, rho).cls == ConicClass::rho);
        for (const auto* c : {&tau, &sigma, &rho}) CHECK(classify_conic(F, *c).shape == ConicShape::smooth);

        CHECK(supporting_V4(F, tau, rng).basis == span_of(F, f, {0, 1, 2, 3}));
        CHECK(supporting_V4(F, sigma, rng).basis == span_of(F, f, {0, 1, 2, 3}));
        auto rs = supporting_V4(F, rho, rng);
        CHECK(rs.pencil);
        CHECK(rs.basis == span_of(F, f, {0, 1, 2}));

        // Change of plane basis and rescaling of the form.
        auto T = random_matrix(F, 3, 3, rng);
        if (rank(F, T) == 3) {
            // New coordinates y give old coordinates T^T y.
            Conic moved{mul(F, T, tau.plane), scale(F, 5, congruence(F, tau.form, T))};
            CHECK(conic_on_grassmannian(F, moved));
            auto k = classify_conic(F, moved);
            CHECK(k.cls == ConicClass::tau);
            CHECK(k.shape == ConicShape::smooth);
            CHECK(same_conic(F, moved, tau));
        }
    }
    // The plane <e12, e34, e13> meets G in the line pair x0 x1 = 0.
    Frame e{{{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}};
    Conic pair{from_rows(F, {wedge2(F, e.v[0], e.v[1]), wedge2(F, e.v[2], e.v[3]), wedge2(F, e.v[0], e.v[2])}, 10),
               zeros(F, 3, 3)};
    pair.form = congruence(F, pfaffian_quadric(F, Vec<Fe>{0, 0, 0, 0, 1}), pair.plane);
    CHECK(conic_on_grassmannian(F, pair));
    CHECK(classify_conic(F, pair).shape == ConicShape::line_pair);
    CHECK(classify_conic(F, pair).cls == ConicClass::tau);
    Rng r2(3, "pair-support");
    CHECK(supporting_V4(F, pair, r2).basis == span_of(F, e, {0, 1, 2, 3}));
    // A plane of rank-4 points off G is not a conic on G.
    Conic off{random_matrix(F, 3, 10, rng), parabola(F)};
    CHECK(!conic_on_grassmannian(F, off));
    CHECK_THROWS(classify_conic(F, off));
}

TEST_CASE("supporting V_4 agrees with the support of a rank-4 plane point") {
    PrimeField F(kInterpolationPrime);
    auto inst = random_instance(1, kBig, 31);
    Rng rng(2, "support");
    for (int t = 0; t < 5; ++t) {
        auto c = sample_conic(inst, 100 + t);
        auto s = supporting_V4(F, c.conic, rng);
        auto V4 = from_rows(F, rank_kernel(F, from_rows(F, {c.w}, 5)).kernel, 5);
        CHECK(s.basis == row_basis(F, V4));
        auto x = mul_vec(F, transpose(c.conic.plane), random_vec(F, 3, rng));
        auto r = bivector_rank_support(F, x);
        CHECK(r.rank == 4);
        CHECK(r.support == s.basis);
    }
}

TEST_CASE("sampled conics: alpha, partner and rulings") {
    PrimeField F(kInterpolationPrime);
    auto inst = random_instance(1, kBig, 32);
    Rng rng(3, "rulings");
    int kappa_true = 0;
    for (int t = 0; t < 10; ++t) {
        auto c = sample_conic(inst, 200 + t);
        CHECK(conic_on_variety(F, inst, c.conic));
        auto cl = classify_conic(F, c.conic);
        CHECK(cl.cls == ConicClass::tau);
        CHECK(cl.shape == ConicShape::smooth);

        auto a = alpha(inst, c);
        CHECK(a.unique);
        CHECK(a.point.corank == 1);
        CHECK(F.mul(a.point.lambda, c.mu) == F.mul(a.point.mu, c.lambda));
        DualContext C(F, inst);
        CHECK(dual_witness_holds(C, a.point));

        auto fv = fiber_view(inst, c);
        CHECK(fv.corank == 1);
        CHECK(is_zero(F, congruence(F, fv.A, fv.plane)));
        auto vc = coordinates_in(F, fv.plane, fv.vertex);
        REQUIRE(vc);
        CHECK(bilinear(F, c.conic.form, *vc, *vc) != 0);

        auto p = involution_partner(inst, c);
        CHECK(conic_on_variety(F, inst, p.conic));
        CHECK(!same_conic(F, p.conic, c.conic));
        CHECK(p.w == c.w);
        auto ap = alpha(inst, p);
        CHECK(ap.unique);
        CHECK(F.mul(ap.point.lambda, a.point.mu) == F.mul(ap.point.mu, a.point.lambda));
        auto fp = fiber_view(inst, p);
        CHECK(!same_ruling(F, fv.A, fv.plane, fp.plane));
        CHECK(rank(F, stack(F, c.conic.plane, p.conic.plane)) == 4);  // meet in a line
        auto pp = involution_partner(inst, p);
        CHECK(row_basis(F, pp.conic.plane) == row_basis(F, c.conic.plane));
        CHECK(same_conic(F, pp.conic, c.conic));

        // On the 3-space spanned by both planes the member is the product of
        // the two planes' equations, so Q and G cut exactly c and c'.
        auto S4 = row_basis(F, stack(F, fv.plane, fp.plane));
        auto A4 = congruence(F, fv.A, S4);
        CHECK(rank(F, A4) == 2);

        // Six planes through the vertex split into exactly two classes.
        std::vector<Mat<Fe>> planes{fv.plane, fp.plane};
        while (planes.size() < 6) {
            auto L = random_plane_in_member(F, fv.A, fv.vertex, rng);
            if (L) planes.push_back(*L);
        }
        std::vector<int> cls(6, -1);
        int classes = 0;
        for (int i = 0; i < 6; ++i) {
            for (int j = 0; j < i && cls[i] < 0; ++j)
                if (same_ruling(F, fv.A, planes[i], planes[j])) cls[i] = cls[j];
            if (cls[i] < 0) cls[i] = classes++;
        }
        CHECK(classes == 2);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                CHECK(same_ruling(F, fv.A, planes[i], planes[j]) == (cls[i] == cls[j]));
                CHECK(same_ruling(F, fv.A, planes[i], planes[j]) == same_ruling(F, fv.A, planes[j], planes[i]));
            }

        bool k1 = kappa_criterion(inst, c);
        kappa_true += k1;
        CHECK(kappa_criterion(inst, p) == k1);
    }
    CHECK(kappa_true == 10);
}

TEST_CASE("kappa criterion fails on a conic with a base point") {
    PrimeField F(kInterpolationPrime);
    ConicOnZ c;
    auto inst = instance_with_kappa_base_point(kBig, 5, c);
    CHECK(smoothness_probe(inst, 10, 1).failures == 0);
    CHECK(conic_on_variety(F, inst, c.conic));
    auto a = alpha(inst, c);
    CHECK(a.unique);
    CHECK(a.point.corank == 1);
    CHECK(!kappa_criterion(inst, c));
    // Conics sampled on the same instance are generic.
    CHECK(kappa_criterion(inst, sample_conic(inst, 1)));
}

TEST_CASE("conic JSON carries plane, form, V4 and member") {
    PrimeField F(kInterpolationPrime);
    auto inst = random_instance(1, kBig, 33);
    auto c = sample_conic(inst, 7);
    auto s = to_json(F, c);
    for (const char* key : {"\"plane\"", "\"form\"", "\"V4\"", "\"member\""}) CHECK(s.find(key) != std::string::npos);
}

TEST_CASE("rho- and sigma-planes in the hyperplane") {
    auto inst = random_instance(1, FieldSpec::prime(7), 3);
    auto rep = special_family_checks(inst, 20, 4);
    CHECK(rep.rho_planes == 20);
    CHECK(rep.sigma_planes == 20);
    CHECK(rep.rho_controls == 20);
    CHECK(rep.ok());
}

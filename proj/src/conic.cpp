#include "fano/conic.hpp"

#include <json.hpp>
#include <stdexcept>

namespace fano {

namespace {

Vec<Fe> flat(const Mat<Fe>& A) { return A.a; }

/// Both symmetric forms are multiples of one nonzero form (rank <= 1 as vectors).
bool proportional_forms(const PrimeField& F, const Mat<Fe>& A, const Mat<Fe>& B) {
    return rank(F, from_rows(F, {flat(A), flat(B)}, A.a.size())) <= 1;
}

Mat<Fe> normalized_form(const PrimeField& F, Mat<Fe> A) {
    for (auto x : A.a)
        if (x != 0) {
            auto inv = F.inv(x);
            for (auto& y : A.a) y = F.mul(y, inv);
            break;
        }
    return A;
}

Mat<Fe> plane_in(const PrimeField& F, const Mat<Fe>& M, const Mat<Fe>& plane) {
    auto L = zeros(F, plane.rows, M.rows);
    for (std::size_t i = 0; i < plane.rows; ++i) {
        auto c = coordinates_in(F, M, plane.row(i));
        if (!c) throw std::invalid_argument("plane is not inside the V_4 fiber");
        L.set_row(i, *c);
    }
    return L;
}

Mat<Fe> pfaffian_e(const PrimeField& F, int m) {
    Vec<Fe> e(5, 0);
    e[m] = 1;
    return pfaffian_quadric(F, e);
}

/// The conic equation on a plane of the fiber: the Pluecker quadric of V_4,
/// or Q when the plane lies in G.
Mat<Fe> fiber_conic_form(const PrimeField& F, const DualPencil& P, const Mat<Fe>& L) {
    auto f = congruence(F, P.qM, L);
    if (is_zero(F, f)) f = congruence(F, P.QM, L);
    return normalized_form(F, f);
}

/// A hyperplane of M through the vertex, determined by the vertex alone.
Vec<Fe> canonical_hyperplane(const PrimeField& F, const Vec<Fe>& v0) {
    std::size_t i0 = 0;
    while (v0[i0] == 0) ++i0;
    std::size_t j0 = i0 == 0 ? 1 : 0;
    Vec<Fe> g(v0.size(), 0);
    g[j0] = v0[i0];
    g[i0] = F.neg(v0[j0]);
    return g;
}

Mat<Fe> rows_of(const PrimeField& F, std::initializer_list<Vec<Fe>> rows, std::size_t n) {
    return from_rows(F, std::vector<Vec<Fe>>(rows), n);
}

/// First vector of `pool` independent of the rows of B.
std::optional<Vec<Fe>> independent_of(const PrimeField& F, const Mat<Fe>& B, const std::vector<Vec<Fe>>& pool) {
    for (const auto& v : pool)
        if (rank(F, stack(F, B, from_rows(F, {v}, B.cols))) == B.rows + 1) return v;
    return std::nullopt;
}

}  // namespace

std::string to_string(ConicClass c) {
    switch (c) {
        case ConicClass::tau: return "tau";
        case ConicClass::sigma: return "sigma";
        case ConicClass::rho: return "rho";
    }
    return "?";
}

std::string to_string(ConicShape s) {
    switch (s) {
        case ConicShape::smooth: return "smooth";
        case ConicShape::line_pair: return "line-pair";
        case ConicShape::double_line: return "double-line";
    }
    return "?";
}

bool conic_on_grassmannian(const PrimeField& F, const Conic& c) {
    if (c.plane.rows != 3 || rank(F, c.plane) != 3 || is_zero(F, c.form)) return false;
    for (int m = 0; m < 5; ++m)
        if (!proportional_forms(F, congruence(F, pfaffian_e(F, m), c.plane), c.form)) return false;
    return true;
}

Classification classify_conic(const PrimeField& F, const Conic& c) {
    if (!conic_on_grassmannian(F, c)) throw std::invalid_argument("classify_conic: not a conic on G");
    Classification out{ConicClass::tau, ConicShape::smooth};
    bool plane_in_G = true;
    for (int m = 0; m < 5; ++m) plane_in_G &= is_zero(F, congruence(F, pfaffian_e(F, m), c.plane));
    if (plane_in_G) {
        Mat<Fe> span;
        for (std::size_t i = 0; i < 3; ++i) span = stack(F, span, bivector_rank_support(F, c.plane.row(i)).support);
        out.cls = rank(F, span) == 3 ? ConicClass::rho : ConicClass::sigma;
    }
    switch (rank(F, c.form)) {
        case 3: out.shape = ConicShape::smooth; break;
        case 2: out.shape = ConicShape::line_pair; break;
        default: out.shape = ConicShape::double_line; break;
    }
    return out;
}

bool same_conic(const PrimeField& F, const Conic& a, const Conic& b) {
    if (row_basis(F, a.plane) != row_basis(F, b.plane)) return false;
    // Express b's form in a's basis: a.plane = T b.plane.
    auto T = zeros(F, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) T.set_row(i, *coordinates_in(F, b.plane, a.plane.row(i)));
    return proportional_forms(F, a.form, congruence(F, b.form, T));
}

std::vector<Vec<Fe>> conic_points(const PrimeField& F, const Conic& c, int n, Rng& rng) {
    std::vector<Vec<Fe>> out;
    const long budget = 50L * n + 100;
    for (long attempt = 0; static_cast<int>(out.size()) < n && attempt < budget; ++attempt) {
        auto a = random_vec(F, 3, rng), b = random_vec(F, 3, rng);
        UPoly f{bilinear(F, c.form, a, a), F.mul(2, bilinear(F, c.form, a, b)), bilinear(F, c.form, b, b)};
        upoly::trim(f);
        std::vector<Fe> ss;
        if (f.empty()) {
            ss.push_back(F.random(rng));  // the line lies on the conic
        } else if (upoly::degree(f) > 0) {
            for (const auto& r : upoly::roots(F, f, rng.next())) ss.push_back(r.x);
        }
        for (auto s : ss) {
            Vec<Fe> x(3);
            for (int i = 0; i < 3; ++i) x[i] = F.add(a[i], F.mul(s, b[i]));
            if (is_zero_vec(F, x)) continue;
            out.push_back(mul_vec(F, transpose(c.plane), x));
        }
    }
    if (static_cast<int>(out.size()) > n) out.resize(n);
    return out;
}

Support supporting_V4(const PrimeField& F, const Conic& c, Rng& rng) {
    auto cls = classify_conic(F, c);
    Support s;
    Mat<Fe> span;
    if (cls.cls != ConicClass::tau) {
        for (std::size_t i = 0; i < 3; ++i) span = stack(F, span, bivector_rank_support(F, c.plane.row(i)).support);
        s.basis = row_basis(F, span);
        s.pencil = cls.cls == ConicClass::rho;
        if (s.basis.rows != (s.pencil ? 3u : 4u)) throw std::invalid_argument("supporting_V4: unexpected span");
        return s;
    }
    if (cls.shape == ConicShape::smooth) {
        // Three points spanning the plane.
        Mat<Fe> pts;
        for (int attempt = 0; pts.rows < 3 && attempt < 200; ++attempt) {
            auto p = conic_points(F, c, 1, rng);
            if (p.empty()) continue;
            auto trial = stack(F, pts, from_rows(F, {p[0]}, 10));
            if (rank(F, trial) == trial.rows) pts = trial;
        }
        if (pts.rows < 3) throw std::runtime_error("supporting_V4: could not find three spanning points");
        for (std::size_t i = 0; i < 3; ++i) span = stack(F, span, bivector_rank_support(F, pts.row(i)).support);
        s.basis = row_basis(F, span);
    } else {
        for (int attempt = 0; attempt < 200; ++attempt) {
            auto x = mul_vec(F, transpose(c.plane), random_vec(F, 3, rng));
            auto r = bivector_rank_support(F, x);
            if (r.rank == 4) {
                s.basis = r.support;
                break;
            }
        }
    }
    if (s.basis.rows != 4) throw std::invalid_argument("supporting_V4: span is not four-dimensional");
    return s;
}

// ---------------------------------------------------------------------------

bool conic_on_variety(const PrimeField& F, const FanoInstance& inst, const Conic& c) {
    if (!conic_on_grassmannian(F, c)) return false;
    auto V = lift(F, inst.V);
    if (rank(F, stack(F, V, c.plane)) != V.rows) return false;
    auto QL = congruence(F, lift(F, inst.Q), c.plane);
    return proportional_forms(F, QL, c.form);
}

std::optional<Mat<Fe>> random_plane_in_member(const PrimeField& F, const Mat<Fe>& A, const Vec<Fe>& vertex,
                                              Rng& rng) {
    const std::size_t n = A.rows;
    auto v0 = from_rows(F, {vertex}, n);
    // An isotropic vector off the vertex.
    Vec<Fe> x1;
    for (int attempt = 0; attempt < 50 && x1.empty(); ++attempt) {
        auto a = random_vec(F, n, rng), b = random_vec(F, n, rng);
        Fe qa = bilinear(F, A, a, a), qab = bilinear(F, A, a, b), qb = bilinear(F, A, b, b);
        Fe s;
        if (qb == 0) {
            if (qab == 0) continue;
            s = F.div(F.neg(qa), F.mul(2, qab));
        } else {
            auto r = F.sqrt(F.sub(F.mul(qab, qab), F.mul(qa, qb)));
            if (!r) continue;
            s = F.div(F.add(F.neg(qab), rng.next() & 1 ? *r : F.neg(*r)), qb);
        }
        Vec<Fe> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = F.add(a[i], F.mul(s, b[i]));
        if (rank(F, stack(F, v0, from_rows(F, {x}, n))) == 2) x1 = x;
    }
    if (x1.empty()) return std::nullopt;
    // x1^perp / <v0, x1> carries a binary form whose isotropic lines are the
    // two planes through <v0, x1>.
    auto perp = rank_kernel(F, from_rows(F, {mul_vec(F, A, x1)}, n)).kernel;
    auto base = rows_of(F, {vertex, x1}, n);
    auto y1 = independent_of(F, base, perp);
    if (!y1) return std::nullopt;
    auto y2 = independent_of(F, stack(F, base, from_rows(F, {*y1}, n)), perp);
    if (!y2) return std::nullopt;
    Fe b11 = bilinear(F, A, *y1, *y1), b12 = bilinear(F, A, *y1, *y2), b22 = bilinear(F, A, *y2, *y2);
    Fe disc = F.sub(F.mul(b12, b12), F.mul(b11, b22));
    if (disc == 0) return std::nullopt;
    auto r = F.sqrt(disc);
    if (!r) return std::nullopt;  // conjugate rulings
    Vec<Fe> y(n);
    if (b22 != 0) {
        Fe t = F.div(F.add(F.neg(b12), rng.next() & 1 ? *r : F.neg(*r)), b22);
        for (std::size_t i = 0; i < n; ++i) y[i] = F.add((*y1)[i], F.mul(t, (*y2)[i]));
    } else if (rng.next() & 1 || b11 == 0) {
        y = *y2;
    } else {
        Fe t = F.div(F.neg(b11), F.mul(2, b12));
        for (std::size_t i = 0; i < n; ++i) y[i] = F.add((*y1)[i], F.mul(t, (*y2)[i]));
    }
    return rows_of(F, {vertex, x1, y}, n);
}

FiberView fiber_view(const FanoInstance& inst, const ConicOnZ& c) {
    PrimeField F = prime_field_of(inst.field);
    DualContext C(F, inst);
    auto P = dual_pencil(C, c.w);
    if (!P) throw std::invalid_argument("fiber_view: V_4 fiber has unexpected dimension");
    FiberView v;
    v.A = combo(F, c.lambda, P->QM, c.mu, P->qM);
    v.plane = plane_in(F, P->M, c.conic.plane);
    auto rk = rank_kernel(F, v.A);
    v.corank = static_cast<int>(rk.kernel.size());
    if (!rk.kernel.empty()) v.vertex = rk.kernel[0];
    v.pencil = std::move(*P);
    return v;
}

ConicOnZ sample_conic(const FanoInstance& inst, std::uint64_t seed) {
    if (inst.k != 1) throw std::invalid_argument("sample_conic: needs k = 1");
    PrimeField F = prime_field_of(inst.field);
    DualContext C(F, inst);
    Rng rng(seed, "sample-conic");
    int resamples = 0;
    const int budget = 50 * retry_budget();
    for (int attempt = 0; attempt < budget; ++attempt) {
        auto P = dual_pencil(C, random_vec(F, 5, rng));
        if (!P || P->delta.is_zero(F)) continue;
        for (const auto& r : univariate_roots(F, P->delta)) {
            auto A = combo(F, r.lambda, P->QM, r.mu, P->qM);
            auto rk = rank_kernel(F, A);
            if (rk.kernel.size() != 1) continue;  // branch locus
            const auto& v0 = rk.kernel[0];
            auto L = random_plane_in_member(F, A, v0, rng);
            if (!L) {
                ++resamples;
                continue;
            }
            auto form = fiber_conic_form(F, *P, *L);
            if (is_zero(F, congruence(F, P->qM, *L)) || is_zero(F, congruence(F, P->QM, *L))) continue;
            // The vertex stays off the conic, and the canonical line of the
            // partner construction exists.
            auto vc = coordinates_in(F, *L, v0);
            if (bilinear(F, form, *vc, *vc) == 0) continue;
            auto g = canonical_hyperplane(F, v0);
            if (is_zero_vec(F, mul_vec(F, *L, g))) continue;
            ConicOnZ out;
            out.conic = {mul(F, *L, P->M), form};
            out.w = P->w;
            out.lambda = r.lambda;
            out.mu = r.mu;
            out.vertex = mul_vec(F, transpose(P->M), v0);
            out.ruling_resamples = resamples;
            return out;
        }
    }
    throw std::runtime_error("sample_conic: retry budget exhausted");
}

AlphaResult alpha(const FanoInstance& inst, const ConicOnZ& c) {
    PrimeField F = prime_field_of(inst.field);
    DualContext C(F, inst);
    auto P = dual_pencil(C, c.w);
    if (!P) throw std::invalid_argument("alpha: V_4 fiber has unexpected dimension");
    auto L = plane_in(F, P->M, c.conic.plane);
    auto QL = congruence(F, P->QM, L), qL = congruence(F, P->qM, L);
    if (is_zero(F, QL) && is_zero(F, qL)) throw std::domain_error("alpha: the plane lies in the variety");
    AlphaResult res;
    res.unique = rank(F, from_rows(F, {flat(QL), flat(qL)}, 9)) == 1;
    // q_M|L = a q_c and Q_M|L = b q_c; the member (-a) Q_M + b q_M vanishes on L.
    std::size_t i = 0;
    while (c.conic.form.a[i] == 0) ++i;
    Fe inv = F.inv(c.conic.form.a[i]);
    Fe a = F.mul(qL.a[i], inv), b = F.mul(QL.a[i], inv);
    res.point.w = c.w;
    res.point.lambda = F.neg(a);
    res.point.mu = b;
    res.point.h = dual_coordinates(F, c.w, res.point.lambda, res.point.mu);
    res.point.corank = witness_corank(C, *P, res.point.lambda, res.point.mu);
    if (!is_zero(F, combo(F, res.point.lambda, QL, res.point.mu, qL))) res.unique = false;
    return res;
}

bool same_ruling(const PrimeField& F, const Mat<Fe>& A, const Mat<Fe>& P1, const Mat<Fe>& P2) {
    if (!is_zero(F, congruence(F, A, P1)) || !is_zero(F, congruence(F, A, P2)))
        throw std::invalid_argument("same_ruling: plane not in the quadric");
    auto meet = P1.rows + P2.rows - rank(F, stack(F, P1, P2));
    return meet != 2;
}

ConicOnZ involution_partner(const FanoInstance& inst, const ConicOnZ& c) {
    PrimeField F = prime_field_of(inst.field);
    auto fv = fiber_view(inst, c);
    if (fv.corank != 1) throw std::domain_error("involution_partner: member of corank 2 has a single ruling");
    const std::size_t n = fv.A.rows;
    const auto& v0 = fv.vertex;
    auto g = canonical_hyperplane(F, v0);
    auto gl = mul_vec(F, fv.plane, g);
    if (is_zero_vec(F, gl)) throw std::runtime_error("involution_partner: plane inside the canonical hyperplane");
    // The line of the plane cut by g; it contains the vertex.
    auto line = rank_kernel(F, from_rows(F, {gl}, 3)).kernel;
    std::vector<Vec<Fe>> cand;
    for (const auto& cf : line) cand.push_back(mul_vec(F, transpose(fv.plane), cf));
    auto base = from_rows(F, {v0}, n);
    auto x = independent_of(F, base, cand);
    base = stack(F, base, from_rows(F, {*x}, n));
    std::vector<Vec<Fe>> prow;
    for (std::size_t i = 0; i < 3; ++i) prow.push_back(fv.plane.row(i));
    auto yL = independent_of(F, base, prow);
    auto perp = rank_kernel(F, from_rows(F, {mul_vec(F, fv.A, *x)}, n)).kernel;
    auto y2 = independent_of(F, stack(F, base, from_rows(F, {*yL}, n)), perp);
    if (!y2) throw std::logic_error("involution_partner: degenerate perp");
    Fe cross = bilinear(F, fv.A, *yL, *y2);
    if (cross == 0) throw std::logic_error("involution_partner: degenerate binary form");
    Fe t = F.div(F.neg(bilinear(F, fv.A, *y2, *y2)), F.mul(2, cross));
    Vec<Fe> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = F.add(F.mul(t, (*yL)[i]), (*y2)[i]);
    auto L2 = rows_of(F, {v0, *x, y}, n);
    ConicOnZ out = c;
    out.conic = {mul(F, L2, fv.pencil.M), fiber_conic_form(F, fv.pencil, L2)};
    out.ruling_resamples = 0;
    return out;
}

bool kappa_criterion(const FanoInstance& inst, const ConicOnZ& c) {
    PrimeField F = prime_field_of(inst.field);
    auto fv = fiber_view(inst, c);
    auto B = complete_basis(F, fv.plane);
    auto Ap = congruence(F, fv.A, B);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (Ap(i, j) != 0) throw std::invalid_argument("kappa_criterion: member does not contain the plane");
    Vec<Fe> m3(3), m4(3);
    for (int i = 0; i < 3; ++i) {
        m3[i] = Ap(i, 3);
        m4[i] = Ap(i, 4);
    }
    auto rk = rank_kernel(F, from_rows(F, {m3, m4}, 3));
    // A pencil of linear sections of rank <= 1 always meets the conic.
    if (rk.rank < 2) return false;
    const auto& p = rk.kernel[0];
    return bilinear(F, c.conic.form, p, p) != 0;
}

FanoInstance instance_with_kappa_base_point(const FieldSpec& field, std::uint64_t seed, ConicOnZ& conic) {
    PrimeField F = prime_field_of(field);
    const int budget = retry_budget();
    for (int attempt = 0; attempt < budget; ++attempt) {
        Rng rng(seed, "kappa-base-point/" + std::to_string(attempt));
        // V_4 = <e1..e4>, w = e5^*, u = e5.
        Vec<Fe> w{0, 0, 0, 0, 1}, u{0, 0, 0, 0, 1};
        auto W6 = wedge2_basis(F, from_ints(F, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}}));
        auto B = mul(F, random_matrix(F, 5, 6, rng), W6);  // M: rows 0..2 span the plane
        if (rank(F, B) != 5) continue;
        auto V = stack(F, B, random_matrix(F, 4, 10, rng));
        if (rank(F, V) != 9) continue;
        auto q = congruence(F, pfaffian_quadric(F, u), B);
        Mat<Fe> L = zeros(F, 3, 5);
        for (int i = 0; i < 3; ++i) L(i, i) = 1;
        Conic onplane{L, congruence(F, q, L)};
        if (rank(F, onplane.form) != 3) continue;
        // A point of the conic, then m3, m4 vanishing there.
        auto pts = conic_points(F, {L, onplane.form}, 1, rng);
        if (pts.empty()) continue;
        Vec<Fe> p(5, 0);
        for (int i = 0; i < 3; ++i) p[i] = pts[0][i];
        auto ms = rank_kernel(F, from_rows(F, {p}, 5)).kernel;  // forms vanishing at p
        Vec<Fe> m3(5, 0), m4(5, 0);
        for (const auto& v : ms) {
            Fe a = F.random(rng), b = F.random(rng);
            for (int i = 0; i < 5; ++i) {
                m3[i] = F.add(m3[i], F.mul(a, v[i]));
                m4[i] = F.add(m4[i], F.mul(b, v[i]));
            }
        }
        // Member x3 m3 + x4 m4 (coordinates in the basis B).
        auto Am = zeros(F, 5, 5);
        Fe half = F.inv(2);
        for (int i = 0; i < 5; ++i) {
            Am(3, i) = F.add(Am(3, i), F.mul(half, m3[i]));
            Am(i, 3) = F.add(Am(i, 3), F.mul(half, m3[i]));
            Am(4, i) = F.add(Am(4, i), F.mul(half, m4[i]));
            Am(i, 4) = F.add(Am(i, 4), F.mul(half, m4[i]));
        }
        if (rank(F, Am) != 4) continue;
        // Q restricted to M is the member minus q; elsewhere random.
        auto target = combo(F, 1, Am, F.neg(1), q);
        auto T = complete_basis(F, B);
        auto Qt = random_symmetric(F, 10, rng);
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) Qt(i, j) = target(i, j);
        auto Ti = *inverse(F, T);
        auto Q = mul(F, mul(F, Ti, Qt), transpose(Ti));
        auto inst = make_instance(1, field, seed, lower(F, V), lower(F, Q));
        if (system_dimension(F, quadric_system(F, inst)) != 6) continue;
        auto probe = smoothness_probe(inst, 6, rng.next());
        if (probe.failures != 0 || probe.points == 0) continue;
        conic = ConicOnZ{};
        auto Lpl = mul(F, L, B);
        conic.conic = {Lpl, normalized_form(F, congruence(F, pfaffian_quadric(F, u), Lpl))};
        conic.w = w;
        conic.lambda = 1;
        conic.mu = 1;
        auto kv = rank_kernel(F, Am).kernel;
        conic.vertex = mul_vec(F, transpose(B), kv[0]);
        return inst;
    }
    throw std::runtime_error("instance_with_kappa_base_point: retry budget exhausted");
}

std::string to_json(const PrimeField& F, const ConicOnZ& c) {
    auto tolist = [](const Mat<Fe>& M) {
        nlohmann::json j = nlohmann::json::array();
        for (std::size_t i = 0; i < M.rows; ++i) {
            nlohmann::json r = nlohmann::json::array();
            for (std::size_t k = 0; k < M.cols; ++k) r.push_back(M(i, k));
            j.push_back(r);
        }
        return j;
    };
    nlohmann::json j;
    j["plane"] = tolist(c.conic.plane);
    j["form"] = tolist(c.conic.form);
    j["V4"] = tolist(from_rows(F, rank_kernel(F, from_rows(F, {c.w}, 5)).kernel, 5));
    j["member"] = {c.lambda, c.mu};
    return j.dump();
}

// ---------------------------------------------------------------------------

SpecialFamilyReport special_family_checks(const FanoInstance& inst, int n, std::uint64_t seed) {
    if (inst.k != 1) throw std::invalid_argument("special_family_checks: needs k = 1");
    PrimeField F = prime_field_of(inst.field);
    auto h = linear_forms(F, lift(F, inst.V)).row(0);
    auto Om = skew_matrix(F, h);
    if (rank(F, Om) != 4) throw std::invalid_argument("special_family_checks: two-form of rank != 4");
    auto W1 = from_rows(F, rank_kernel(F, Om).kernel, 5);
    SpecialFamilyReport rep;
    rep.p = F.p;
    Rng rng(seed, "special-families");
    const long budget = static_cast<long>(n) * 200 * static_cast<long>(F.p * F.p * F.p) + 1000;
    auto in_H = [&](const Mat<Fe>& P) {
        for (std::size_t i = 0; i < P.rows; ++i)
            if (dot(F, h, P.row(i)) != 0) return false;
        return true;
    };
    while ((rep.rho_planes < n || rep.sigma_planes < n || rep.rho_controls < n) && rep.draws < budget) {
        ++rep.draws;
        auto V3 = random_matrix(F, 3, 5, rng);
        if (rank(F, V3) == 3) {
            bool has_kernel = rank(F, stack(F, V3, W1)) == 3;
            bool inside = in_H(wedge2_basis(F, V3));
            if (inside && rep.rho_planes < n) {
                ++rep.rho_planes;
                rep.rho_contain_kernel += has_kernel;
            }
            if (!has_kernel && rep.rho_controls < n) {
                ++rep.rho_controls;
                rep.rho_controls_outside += !inside;
            }
        }
        auto V4 = random_matrix(F, 4, 5, rng);
        if (rank(F, V4) == 4 && rep.sigma_planes < n) {
            auto v1 = V4.row(0);
            std::vector<Vec<Fe>> rows;
            for (int i = 1; i < 4; ++i) rows.push_back(wedge2(F, v1, V4.row(i)));
            if (in_H(from_rows(F, rows, 10))) {
                ++rep.sigma_planes;
                // V_4 in V_1^perp for the skew form.
                auto img = mul_vec(F, transpose(Om), v1);
                bool iso = true;
                for (int i = 0; i < 4; ++i) iso &= dot(F, img, V4.row(i)) == 0;
                rep.sigma_isotropic += iso;
            }
        }
    }
    return rep;
}

}  // namespace fano

#include "fano/instance.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fano/poly.hpp"

namespace fano {

using Fe = PrimeField::elem;
using json = nlohmann::json;

Mat<long long> lower(const PrimeField& F, const Mat<Fe>& M) {
    Mat<long long> R(M.rows, M.cols, 0);
    for (std::size_t i = 0; i < M.a.size(); ++i) R.a[i] = static_cast<long long>(M.a[i] % F.p);
    return R;
}

std::vector<long long> lower(const PrimeField& F, const Vec<Fe>& v) {
    std::vector<long long> r;
    for (auto x : v) r.push_back(static_cast<long long>(x % F.p));
    return r;
}

PrimeField prime_field_of(const FieldSpec& f) {
    if (f.kind != FieldSpec::Kind::prime)
        throw std::invalid_argument("operation needs a prime field, instance is over " + f.str());
    return PrimeField(f.p);
}

int retry_budget() {
    if (const char* s = std::getenv("FANO_RETRY_BUDGET")) {
        int v = std::atoi(s);
        if (v > 0) return v;
    }
    return 16;
}

namespace {

// Canonical integer data: residues for prime fields, untouched over Q.
Mat<long long> canonical(const FieldSpec& f, const Mat<long long>& M) {
    if (f.kind == FieldSpec::Kind::rationals) return M;
    PrimeField F(f.p);
    return lower(F, lift(F, M));
}

template <class K>
Mat<long long> random_int_matrix(const K& F, std::size_t r, std::size_t c, Rng& rng, bool symmetric) {
    Mat<long long> M(r, c, 0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = symmetric ? i : 0; j < c; ++j) {
            long long x;
            if constexpr (std::is_same_v<K, RationalField>)
                x = rng.range(-9, 9);
            else
                x = static_cast<long long>(F.random(rng));
            M(i, j) = x;
            if (symmetric) M(j, i) = x;
        }
    return M;
}

Mat<long long> random_data(const FieldSpec& f, std::size_t r, std::size_t c, Rng& rng, bool symmetric) {
    if (f.kind == FieldSpec::Kind::rationals) return random_int_matrix(RationalField{}, r, c, rng, symmetric);
    return random_int_matrix(PrimeField(f.p), r, c, rng, symmetric);
}

Mat<long long> identity_ll(std::size_t n) {
    Mat<long long> M(n, n, 0);
    for (std::size_t i = 0; i < n; ++i) M(i, i) = 1;
    return M;
}

// Instances over Q are probed through their reduction at the interpolation prime.
FanoInstance probe_view(const FanoInstance& inst) {
    if (inst.field.kind == FieldSpec::Kind::prime) return inst;
    FanoInstance r = inst;
    r.field = FieldSpec::prime(kInterpolationPrime);
    r.V = canonical(r.field, inst.V);
    r.Q = canonical(r.field, inst.Q);
    return r;
}

bool passes_guards(const FanoInstance& inst, std::uint64_t seed) {
    try {
        validate(inst);
    } catch (const std::invalid_argument&) {
        return false;
    }
    auto view = probe_view(inst);
    auto rep = smoothness_probe(view, 6, seed);
    return rep.failures == 0 && rep.points > 0;
}

}  // namespace

FanoInstance make_instance(int k, const FieldSpec& field, std::uint64_t seed, const Mat<long long>& V,
                           const Mat<long long>& Q) {
    if (k < 0 || k > 3) throw std::invalid_argument("k must be in {0,1,2,3}");
    if (field.kind == FieldSpec::Kind::prime_square)
        throw std::invalid_argument("instances live over Q or a prime field");
    return FanoInstance{field, k, canonical(field, V), canonical(field, Q), seed};
}

void validate(const FanoInstance& inst) {
    if (inst.k < 0 || inst.k > 3) throw std::invalid_argument("k must be in {0,1,2,3}");
    if (inst.V.rows != static_cast<std::size_t>(10 - inst.k) || inst.V.cols != 10)
        throw std::invalid_argument("V must be (10-k) x 10");
    if (inst.Q.rows != 10 || inst.Q.cols != 10) throw std::invalid_argument("Q must be 10 x 10");
    auto check = [&](const auto& F) {
        if (!is_symmetric(F, lift(F, inst.Q))) throw std::invalid_argument("Q is not symmetric");
        if (rank(F, lift(F, inst.V)) != inst.V.rows) throw std::invalid_argument("V is not of full row rank");
        if (system_dimension(F, quadric_system(F, inst)) != 6)
            throw std::invalid_argument("restricted quadric system is not 6-dimensional");
    };
    if (inst.field.kind == FieldSpec::Kind::rationals)
        check(RationalField{});
    else
        check(prime_field_of(inst.field));
}

FanoInstance random_instance(int k, const FieldSpec& field, std::uint64_t seed) {
    if (k < 0 || k > 3) throw std::invalid_argument("k must be in {0,1,2,3}");
    const int budget = retry_budget();
    for (int attempt = 0; attempt < budget; ++attempt) {
        Rng rng(seed, "instance/k" + std::to_string(k) + "/" + std::to_string(attempt));
        Mat<long long> V = k == 0 ? identity_ll(10) : random_data(field, 10 - k, 10, rng, false);
        Mat<long long> Q = random_data(field, 10, 10, rng, true);
        auto inst = make_instance(k, field, seed, V, Q);
        if (passes_guards(inst, rng.next())) return inst;
    }
    throw std::runtime_error("random_instance: retry budget of " + std::to_string(budget) +
                             " exhausted (field too small?)");
}

FanoChain random_chain(const FieldSpec& field, std::uint64_t seed) {
    const int budget = retry_budget();
    for (int attempt = 0; attempt < budget; ++attempt) {
        Rng rng(seed, "chain/" + std::to_string(attempt));
        Mat<long long> Q = random_data(field, 10, 10, rng, true);
        Mat<long long> V9 = random_data(field, 9, 10, rng, false);
        Mat<long long> T = random_data(field, 8, 9, rng, false);
        Mat<long long> V8(8, 10, 0);
        if (field.kind == FieldSpec::Kind::rationals) {
            for (std::size_t i = 0; i < 8; ++i)
                for (std::size_t j = 0; j < 10; ++j)
                    for (std::size_t t = 0; t < 9; ++t) V8(i, j) += T(i, t) * V9(t, j);
        } else {
            PrimeField F(field.p);
            V8 = lower(F, mul(F, lift(F, T), lift(F, V9)));
        }
        FanoChain c{make_instance(0, field, seed, identity_ll(10), Q), make_instance(1, field, seed, V9, Q),
                    make_instance(2, field, seed, V8, Q)};
        if (passes_guards(c.X, rng.next()) && passes_guards(c.Z, rng.next()) && passes_guards(c.W, rng.next()))
            return c;
    }
    throw std::runtime_error("random_chain: retry budget exhausted");
}

// ---------------------------------------------------------------------------

std::string to_json(const FanoInstance& inst) {
    json j;
    json f;
    switch (inst.field.kind) {
        case FieldSpec::Kind::rationals: f["kind"] = "rationals"; break;
        case FieldSpec::Kind::prime: f["kind"] = "prime"; break;
        case FieldSpec::Kind::prime_square: f["kind"] = "prime_square"; break;
    }
    if (inst.field.kind != FieldSpec::Kind::rationals) f["p"] = inst.field.p;
    j["field"] = f;
    j["k"] = inst.k;
    auto rows = [](const Mat<long long>& M) {
        json a = json::array();
        for (std::size_t i = 0; i < M.rows; ++i) a.push_back(M.row(i));
        return a;
    };
    j["V"] = rows(inst.V);
    j["Q"] = rows(inst.Q);
    j["seed"] = inst.seed;
    return j.dump();
}

FanoInstance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("instance JSON: ") + e.what());
    }
    try {
        FieldSpec field;
        std::string kind = j.at("field").at("kind").get<std::string>();
        if (kind == "rationals")
            field = FieldSpec::rationals();
        else if (kind == "prime")
            field = FieldSpec::prime(j.at("field").at("p").get<std::uint64_t>());
        else
            throw std::invalid_argument("instance JSON: unsupported field kind '" + kind + "'");
        auto mat = [](const json& a) {
            std::size_t r = a.size(), c = r ? a[0].size() : 0;
            Mat<long long> M(r, c, 0);
            for (std::size_t i = 0; i < r; ++i) {
                if (a[i].size() != c) throw std::invalid_argument("instance JSON: ragged matrix");
                for (std::size_t t = 0; t < c; ++t) M(i, t) = a[i][t].get<long long>();
            }
            return M;
        };
        auto inst = make_instance(j.at("k").get<int>(), field, j.value("seed", std::uint64_t{0}), mat(j.at("V")),
                                  mat(j.at("Q")));
        validate(inst);
        return inst;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("instance JSON: ") + e.what());
    }
}

void save_instance(const FanoInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << to_json(inst) << "\n";
}

FanoInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

std::string digest(const FanoInstance& inst) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_json(inst))));
    return buf;
}

// ---------------------------------------------------------------------------

namespace {

struct ProbeData {
    PrimeField F;
    int k;
    Mat<Fe> Q, H;
    std::array<Mat<Fe>, 5> P;

    explicit ProbeData(const FanoInstance& inst) : F(prime_field_of(inst.field)), k(inst.k) {
        Q = lift(F, inst.Q);
        H = linear_forms(F, lift(F, inst.V));
        for (int m = 0; m < 5; ++m) {
            Vec<Fe> e(5, 0);
            e[m] = 1;
            P[m] = pfaffian_quadric(F, e);
        }
    }
};

// One attempt at a point of the variety: x(s) = u(s) ^ w(s) with w(s)
// spanning the kernel of [h_j(u(s)^e_i); C], written through 4x4 minors so
// that it is polynomial in s, then a root of Q(x(s)).
std::optional<Vec<Fe>> find_point(const ProbeData& D, Rng& rng) {
    const PrimeField& F = D.F;
    const int k = D.k;
    auto a = random_vec(F, 5, rng), b = random_vec(F, 5, rng);
    auto C = random_matrix(F, 4 - k, 5, rng);
    auto point_at = [&](Fe s) {
        Vec<Fe> u(5);
        for (int i = 0; i < 5; ++i) u[i] = F.add(a[i], F.mul(s, b[i]));
        Mat<Fe> N(4, 5, 0);
        for (int i = 0; i < 5; ++i) {
            Vec<Fe> e(5, 0);
            e[i] = 1;
            auto ue = wedge2(F, u, e);
            for (int j = 0; j < k; ++j) N(j, i) = dot(F, D.H.row(j), ue);
        }
        for (int r = 0; r < 4 - k; ++r)
            for (int i = 0; i < 5; ++i) N(k + r, i) = C(r, i);
        Vec<Fe> w(5);
        for (int i = 0; i < 5; ++i) {
            Mat<Fe> minor(4, 4, 0);
            for (int r = 0; r < 4; ++r)
                for (int c = 0, cc = 0; c < 5; ++c)
                    if (c != i) minor(r, cc++) = N(r, c);
            auto d = det(F, minor);
            w[i] = (i % 2 == 0) ? d : F.neg(d);
        }
        return wedge2(F, u, w);
    };
    auto f_at = [&](const Vec<Fe>& x) { return bilinear(F, D.Q, x, x); };

    const int deg = 2 * k + 2;
    if (F.p > 64) {
        std::vector<Fe> xs, ys;
        for (int i = 0; i <= deg; ++i) {
            xs.push_back(static_cast<Fe>(i));
            ys.push_back(f_at(point_at(static_cast<Fe>(i))));
        }
        UPoly f = interpolate(F, xs, ys);
        upoly::trim(f);
        if (f.empty()) {
            // Q vanishes on the whole slice: any point of it lies on the variety.
            auto cand = point_at(F.random(rng));
            if (!is_zero_vec(F, cand)) return cand;
            return std::nullopt;
        }
        for (const auto& r : upoly::roots(F, f, rng.next())) {
            auto cand = point_at(r.x);
            if (!is_zero_vec(F, cand)) return cand;
        }
        return std::nullopt;
    }
    for (Fe s = 0; s < F.p; ++s) {
        auto cand = point_at(s);
        if (!is_zero_vec(F, cand) && f_at(cand) == 0) return cand;
    }
    return std::nullopt;
}

}  // namespace

std::vector<Vec<Fe>> sample_variety_points(const FanoInstance& inst, int trials, std::uint64_t seed) {
    ProbeData D(inst);
    std::vector<Vec<Fe>> out;
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed, "probe/" + std::to_string(t));
        if (auto x = find_point(D, rng)) out.push_back(*x);
    }
    return out;
}

ProbeReport smoothness_probe(const FanoInstance& inst, int trials, std::uint64_t seed) {
    ProbeReport rep;
    rep.trials = std::max(trials, 0);
    if (trials <= 0) return rep;
    ProbeData D(inst);
    const PrimeField& F = D.F;
    const int k = inst.k;
    for (int t = 0; t < trials; ++t) {
        Rng rng(seed, "probe/" + std::to_string(t));
        auto x = find_point(D, rng);
        if (!x) {
            ++rep.no_point;
            continue;
        }
        ++rep.points;
        // Expected rank: 3 from the Pfaffians (codimension of G), 1 from Q,
        // k from the linear forms.
        Mat<Fe> J(6 + k, 10, 0);
        for (int m = 0; m < 5; ++m) J.set_row(m, mul_vec(F, D.P[m], *x));
        J.set_row(5, mul_vec(F, D.Q, *x));
        for (int j = 0; j < k; ++j) J.set_row(6 + j, D.H.row(j));
        if (rank(F, J) != static_cast<std::size_t>(4 + k)) {
            ++rep.failures;
            rep.failure_points.push_back(lower(F, *x));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

std::vector<Mat<Fe>> grassmannian_points(const PrimeField& F, int r, int n) {
    std::vector<Mat<Fe>> out;
    std::vector<int> piv(r);
    auto fill = [&]() {
        // Free entries: row i, columns after its pivot that are not pivots.
        std::vector<std::pair<int, int>> free;
        for (int i = 0; i < r; ++i)
            for (int c = piv[i] + 1; c < n; ++c)
                if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
        std::vector<Fe> val(free.size(), 0);
        for (;;) {
            Mat<Fe> M(r, n, 0);
            for (int i = 0; i < r; ++i) M(i, piv[i]) = 1;
            for (std::size_t t = 0; t < free.size(); ++t) M(free[t].first, free[t].second) = val[t];
            out.push_back(std::move(M));
            std::size_t t = 0;
            while (t < val.size() && ++val[t] == F.p) val[t++] = 0;
            if (t == val.size()) break;
        }
    };
    auto rec = [&](auto&& self, int i, int start) -> void {
        if (i == r) {
            fill();
            return;
        }
        for (int c = start; c <= n - (r - i); ++c) {
            piv[i] = c;
            self(self, i + 1, c + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

bool plane_in_variety(const PrimeField& F, const FanoInstance& inst, const Mat<Fe>& plane) {
    auto V = lift(F, inst.V);
    auto H = linear_forms(F, V);
    for (std::size_t i = 0; i < plane.rows; ++i)
        for (std::size_t j = 0; j < H.rows; ++j)
            if (dot(F, H.row(j), plane.row(i)) != 0) return false;
    for (std::size_t i = 0; i < plane.rows; ++i)
        if (!is_zero_vec(F, wedge_bivectors(F, plane.row(i), plane.row(i)))) return false;
    return is_zero(F, congruence(F, lift(F, inst.Q), plane));
}

PlaneSearchResult plane_search(const FanoInstance& inst) {
    PrimeField F = prime_field_of(inst.field);
    if (F.p > 7) throw std::invalid_argument("plane_search: exhaustive enumeration needs p <= 7");
    if (inst.k != 1) throw std::invalid_argument("plane_search: expects a k=1 instance");
    PlaneSearchResult res;
    auto V = lift(F, inst.V);
    auto Q = lift(F, inst.Q);
    auto h = linear_forms(F, V).row(0);
    auto inside = [&](const std::vector<Vec<Fe>>& rows) {
        for (const auto& x : rows)
            if (dot(F, h, x) != 0) return false;
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = i; j < rows.size(); ++j)
                if (bilinear(F, Q, rows[i], rows[j]) != 0) return false;
        return true;
    };

    for (const auto& V3 : grassmannian_points(F, 3, 5)) {
        ++res.rho_planes;
        std::vector<Vec<Fe>> rows{wedge2(F, V3.row(0), V3.row(1)), wedge2(F, V3.row(0), V3.row(2)),
                                  wedge2(F, V3.row(1), V3.row(2))};
        if (inside(rows)) res.found.push_back({'r', from_rows(F, rows, 10), V3});
    }
    auto lines = grassmannian_points(F, 1, 5);
    for (const auto& v1m : lines) {
        auto v1 = v1m.row(0);
        for (const auto& phim : lines) {
            if (dot(F, phim.row(0), v1) != 0) continue;
            ++res.sigma_planes;
            auto ker = rank_kernel(F, phim).kernel;
            std::vector<Vec<Fe>> rows;
            for (const auto& w : ker) rows.push_back(wedge2(F, v1, w));
            if (!inside(rows)) continue;
            auto flag = stack(F, v1m, from_rows(F, ker, 5));
            res.found.push_back({'s', row_basis(F, from_rows(F, rows, 10)), flag});
        }
    }
    return res;
}

namespace {

// A k=1 instance whose hyperplane and quadric contain the plane spanned by `B`.
FanoInstance instance_containing(const PrimeField& F, const FieldSpec& field, std::uint64_t seed,
                                 const Mat<Fe>& B, Rng& rng) {
    auto ann = rank_kernel(F, B).kernel;
    Vec<Fe> h(10, 0);
    for (const auto& a : ann) {
        auto c = F.random(rng);
        for (int i = 0; i < 10; ++i) h[i] = F.add(h[i], F.mul(c, a[i]));
    }
    if (is_zero_vec(F, h)) h = ann[0];
    auto hrow = zeros(F, 1, 10);
    hrow.set_row(0, h);
    auto V9 = row_basis(F, from_rows(F, rank_kernel(F, hrow).kernel, 10));
    auto T = complete_basis(F, B);
    auto Qp = random_symmetric(F, 10, rng);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Qp(i, j) = 0;
    auto Ti = *inverse(F, T);
    auto Q = mul(F, mul(F, Ti, Qp), transpose(Ti));
    return make_instance(1, field, seed, lower(F, V9), lower(F, Q));
}

}  // namespace

FanoInstance instance_with_rho_plane(const FieldSpec& field, std::uint64_t seed, Mat<Fe>& plane) {
    PrimeField F = prime_field_of(field);
    Rng rng(seed, "rho-plane-control");
    Mat<Fe> V3;
    do V3 = random_matrix(F, 3, 5, rng);
    while (rank(F, V3) != 3);
    plane = wedge2_basis(F, V3);
    return instance_containing(F, field, seed, plane, rng);
}

FanoInstance instance_with_sigma_plane(const FieldSpec& field, std::uint64_t seed, Mat<Fe>& plane) {
    PrimeField F = prime_field_of(field);
    Rng rng(seed, "sigma-plane-control");
    Mat<Fe> V4;
    do V4 = random_matrix(F, 4, 5, rng);
    while (rank(F, V4) != 4);
    std::vector<Vec<Fe>> rows;
    for (int i = 1; i < 4; ++i) rows.push_back(wedge2(F, V4.row(0), V4.row(i)));
    plane = from_rows(F, rows, 10);
    return instance_containing(F, field, seed, plane, rng);
}

// ---------------------------------------------------------------------------

GushelInstance random_gushel(int k, const FieldSpec& field, std::uint64_t seed) {
    if (k < 0 || k > 2) throw std::invalid_argument("Gushel instances need k in {0,1,2}");
    PrimeField F = prime_field_of(field);
    const int budget = retry_budget();
    for (int attempt = 0; attempt < budget; ++attempt) {
        Rng rng(seed, "gushel/k" + std::to_string(k) + "/" + std::to_string(attempt));
        GushelInstance g{field, k, lower(F, random_vec(F, 10, rng)), lower(F, random_symmetric(F, 10, rng)),
                         lower(F, random_matrix(F, k + 1, 10, rng)), seed};
        if (rank(F, lift(F, g.H)) != static_cast<std::size_t>(k + 1)) continue;
        auto X = gushel_companion(g);
        if (!passes_guards(X, rng.next())) continue;
        if (system_dimension(F, gushel_system(F, g)) != 6) continue;
        return g;
    }
    throw std::runtime_error("random_gushel: retry budget exhausted");
}

Mat<Fe> gushel_base(const PrimeField& F, const GushelInstance& g) {
    return row_basis(F, from_rows(F, rank_kernel(F, lift(F, g.H)).kernel, 10));
}

FanoInstance gushel_companion(const GushelInstance& g) {
    PrimeField F = prime_field_of(g.field);
    auto l = lift(F, g.ell);
    auto Qp = lift(F, g.q);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) Qp(i, j) = F.sub(Qp(i, j), F.mul(l[i], l[j]));
    return make_instance(g.k + 1, g.field, g.seed, lower(F, gushel_base(F, g)), lower(F, Qp));
}

QuadricSystem<Fe> gushel_system(const PrimeField& F, const GushelInstance& g) {
    auto B = gushel_base(F, g);
    const std::size_t n = B.rows + 1;
    QuadricSystem<Fe> S;
    S.n = n;
    S.pfaffian_order = 4 - g.k;
    auto l = mul_vec(F, B, lift(F, g.ell));
    auto qB = congruence(F, lift(F, g.q), B);
    S.R[0] = zeros(F, n, n);
    S.R[0](0, 0) = 1;
    for (std::size_t i = 0; i < B.rows; ++i) {
        S.R[0](0, i + 1) = S.R[0](i + 1, 0) = l[i];
        for (std::size_t j = 0; j < B.rows; ++j) S.R[0](i + 1, j + 1) = qB(i, j);
    }
    for (int m = 0; m < 5; ++m) {
        Vec<Fe> e(5, 0);
        e[m] = 1;
        auto PB = congruence(F, pfaffian_quadric(F, e), B);
        S.R[m + 1] = zeros(F, n, n);
        for (std::size_t i = 0; i < B.rows; ++i)
            for (std::size_t j = 0; j < B.rows; ++j) S.R[m + 1](i + 1, j + 1) = PB(i, j);
    }
    return S;
}

FanoInstance gushel_flatten(const GushelInstance& g, Fe eps) {
    PrimeField F = prime_field_of(g.field);
    if (eps % F.p == 0) throw std::invalid_argument("gushel_flatten: eps = 0 is the Gushel instance itself");
    auto H = lift(F, g.H);
    Vec<Fe> rhs(H.rows, 0);
    rhs[0] = 1;
    auto w1 = solve(F, H, rhs);
    if (!w1) throw std::runtime_error("gushel_flatten: h_0 vanishes on ker(h_1..h_k)");
    auto B = gushel_base(F, g);
    auto wrow = zeros(F, 1, 10);
    wrow.set_row(0, *w1);
    auto Vs = stack(F, B, wrow);
    auto h0 = H.row(0);
    auto l = lift(F, g.ell);
    auto ei = F.inv(eps % F.p);
    auto ei2 = F.mul(ei, ei);
    auto Qs = lift(F, g.q);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            auto t = F.mul(ei2, F.mul(h0[i], h0[j]));
            t = F.add(t, F.mul(ei, F.add(F.mul(l[i], h0[j]), F.mul(h0[i], l[j]))));
            Qs(i, j) = F.add(Qs(i, j), t);
        }
    return make_instance(g.k, g.field, g.seed, lower(F, Vs), lower(F, Qs));
}

}  // namespace fano

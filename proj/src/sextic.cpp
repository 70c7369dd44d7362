#include "fano/sextic.hpp"

#include <set>
#include <stdexcept>

namespace fano {

namespace {

Vec<Fe> projective_normal(const PrimeField& F, Vec<Fe> x) {
    for (auto& c : x)
        if (c != 0) {
            auto inv = F.inv(c);
            for (auto& d : x) d = F.mul(d, inv);
            break;
        }
    return x;
}

bool proportional_vecs(const PrimeField& F, const Vec<Fe>& a, const Vec<Fe>& b) {
    if (is_zero_vec(F, a) || is_zero_vec(F, b)) return false;
    return projective_normal(F, a) == projective_normal(F, b);
}

std::size_t corank_of(const PrimeField& F, const Mat<Fe>& M) { return M.rows - rank(F, M); }

}  // namespace

// ---------------------------------------------------------------------------

std::vector<PrimalPoint> sample_primal(const PrimeField& F, const QuadricSystem<Fe>& S, int n, std::uint64_t seed) {
    Rng rng(seed, "sample-primal");
    std::vector<PrimalPoint> out;
    std::set<Vec<Fe>> seen;
    const long budget = 20L * n + 100L * retry_budget();
    for (long attempt = 0; static_cast<int>(out.size()) < n; ++attempt) {
        if (attempt >= budget) throw std::runtime_error("sample_primal: retry budget exhausted");
        auto v = random_vec(F, 6, rng);
        v[0] = 0;
        auto c = det_along_line(F, member(F, S, v), S.R[0]);
        upoly::trim(c);
        if (c.empty() || upoly::order_at_zero(c) != S.pfaffian_order) continue;
        UPoly residual(c.begin() + S.pfaffian_order, c.end());
        for (const auto& r : upoly::roots(F, residual, rng.next())) {
            auto x = v;
            x[0] = r.x;
            auto A = member(F, S, x);
            auto rk = rank_kernel(F, A);
            PrimalPoint p{x, rk.kernel.empty() ? Vec<Fe>{} : rk.kernel[0], static_cast<int>(rk.kernel.size())};
            if (!seen.insert(projective_normal(F, x)).second) continue;
            out.push_back(std::move(p));
            if (static_cast<int>(out.size()) == n) break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

DualContext::DualContext(const PrimeField& field, const FanoInstance& inst)
    : F(field), k(inst.k), V(lift(field, inst.V)), Q(lift(field, inst.Q)) {}

std::optional<DualPencil> dual_pencil(const DualContext& C, const Vec<Fe>& w) {
    const auto& F = C.F;
    if (is_zero_vec(F, w)) return std::nullopt;
    auto V4 = from_rows(F, rank_kernel(F, from_rows(F, {w}, 5)).kernel, 5);
    auto M = intersect_rows(F, wedge2_basis(F, V4), C.V);
    if (static_cast<int>(M.rows) != 6 - C.k) return std::nullopt;
    Vec<Fe> u(5, 0);
    for (int j = 0; j < 5; ++j)
        if (w[j] != 0) {
            u[j] = F.inv(w[j]);
            break;
        }
    DualPencil P;
    P.w = w;
    P.QM = congruence(F, C.Q, M);
    P.qM = congruence(F, pfaffian_quadric(F, u), M);
    P.delta.c = det_along_line(F, P.qM, P.QM);
    P.M = std::move(M);
    return P;
}

Vec<Fe> dual_coordinates(const PrimeField& F, const Vec<Fe>& w, Fe lambda, Fe mu) {
    Vec<Fe> h{mu};
    for (auto c : w) h.push_back(F.neg(F.mul(lambda, c)));
    return h;
}

int witness_corank(const DualContext& C, const DualPencil& P, Fe lambda, Fe mu) {
    return static_cast<int>(corank_of(C.F, combo(C.F, lambda, P.QM, mu, P.qM)));
}

std::vector<DualPoint> sample_dual(const DualContext& C, int n, std::uint64_t seed) {
    const auto& F = C.F;
    Rng rng(seed, "sample-dual");
    std::vector<DualPoint> out;
    std::set<Vec<Fe>> seen;
    const long budget = 20L * n + 100L * retry_budget();
    for (long attempt = 0; static_cast<int>(out.size()) < n; ++attempt) {
        if (attempt >= budget) throw std::runtime_error("sample_dual: retry budget exhausted");
        auto P = dual_pencil(C, random_vec(F, 5, rng));
        if (!P || P->delta.is_zero(F)) continue;
        for (const auto& r : univariate_roots(F, P->delta)) {
            DualPoint d{dual_coordinates(F, P->w, r.lambda, r.mu), P->w, r.lambda, r.mu,
                        witness_corank(C, *P, r.lambda, r.mu)};
            if (!seen.insert(projective_normal(F, d.h)).second) continue;
            out.push_back(std::move(d));
            if (static_cast<int>(out.size()) == n) break;
        }
    }
    return out;
}

bool dual_witness_holds(const DualContext& C, const DualPoint& d) {
    const auto& F = C.F;
    auto P = dual_pencil(C, d.w);
    if (!P) return false;
    // The hyperplane must contain every P_v with v in V_4 and meet the pencil
    // in the tested member.
    if (!proportional_vecs(F, d.h, dual_coordinates(F, d.w, d.lambda, d.mu))) return false;
    return witness_corank(C, *P, d.lambda, d.mu) >= 1;
}

// ---------------------------------------------------------------------------

namespace {

template <class Sampler>
Interpolated interpolate_with(const PrimeField& F, std::uint64_t seed, const FitOptions& opt, Sampler sample) {
    Interpolated res;
    const int budget = retry_budget();
    for (int attempt = 0; attempt < budget; ++attempt) {
        res.attempts = attempt + 1;
        auto pts = sample(seed + 0x9e3779b97f4a7c15ULL * attempt, kFitSamples + kHeldOut);
        std::vector<Vec<Fe>> fit(pts.begin(), pts.begin() + kFitSamples);
        try {
            res.form = fit_form(F, fit, 6, opt);
        } catch (const FitError&) {
            continue;
        }
        res.samples = kFitSamples;
        res.heldout = kHeldOut;
        res.heldout_failures = 0;
        for (int i = kFitSamples; i < kFitSamples + kHeldOut; ++i)
            if (res.form.eval(F, pts[i]) != 0) ++res.heldout_failures;
        if (res.heldout_failures == 0) return res;
    }
    throw std::runtime_error("interpolation failed on every retry");
}

}  // namespace

Interpolated interpolate_primal(const PrimeField& F, const QuadricSystem<Fe>& S, std::uint64_t seed,
                                const FitOptions& opt) {
    return interpolate_with(F, seed, opt, [&](std::uint64_t s, int n) {
        std::vector<Vec<Fe>> pts;
        for (auto& p : sample_primal(F, S, n, s)) pts.push_back(std::move(p.x));
        return pts;
    });
}

Interpolated interpolate_dual(const DualContext& C, std::uint64_t seed, const FitOptions& opt) {
    return interpolate_with(C.F, seed, opt, [&](std::uint64_t s, int n) {
        std::vector<Vec<Fe>> pts;
        for (auto& d : sample_dual(C, n, s)) pts.push_back(std::move(d.h));
        return pts;
    });
}

std::vector<Vec<Fe>> sample_hypersurface(const PrimeField& F, const Sextic& f, int n, Rng& rng) {
    if (f.is_zero()) throw std::invalid_argument("sample_hypersurface: zero form");
    std::vector<Vec<Fe>> out;
    const long budget = 50L * n + 100L * retry_budget();
    for (long attempt = 0; static_cast<int>(out.size()) < n; ++attempt) {
        if (attempt >= budget) throw std::runtime_error("sample_hypersurface: retry budget exhausted");
        auto a = random_vec(F, f.nvars, rng), b = random_vec(F, f.nvars, rng);
        auto c = restrict_to_line(F, f, a, b);
        upoly::trim(c);
        if (c.empty()) continue;
        for (const auto& r : upoly::roots(F, c, rng.next())) {
            Vec<Fe> x(f.nvars);
            for (int i = 0; i < f.nvars; ++i) x[i] = F.add(a[i], F.mul(r.x, b[i]));
            out.push_back(std::move(x));
            if (static_cast<int>(out.size()) == n) break;
        }
    }
    return out;
}

DualityReport duality_check(const PrimeField& F, const Sextic& Y, const Sextic& Yv, int trials, std::uint64_t seed) {
    DualityReport rep;
    rep.trials = trials;
    Rng rng(seed, "duality");
    auto one_way = [&](const Sextic& A, const Sextic& B, int& failures, bool bidual) {
        int done = 0;
        const int budget = 4 * trials + retry_budget();
        for (int attempt = 0; done < trials; ++attempt) {
            if (attempt >= budget) throw std::runtime_error("duality_check: every sampled point is singular");
            auto x = sample_hypersurface(F, A, 1, rng)[0];
            auto g = A.gradient(F, x);
            if (is_zero_vec(F, g)) {
                ++rep.singular_skipped;
                continue;
            }
            ++done;
            if (B.eval(F, g) != 0) {
                ++failures;
                continue;
            }
            if (bidual && !proportional_vecs(F, B.gradient(F, g), x)) ++rep.bidual_failures;
        }
    };
    one_way(Y, Yv, rep.forward_failures, true);
    one_way(Yv, Y, rep.backward_failures, true);
    return rep;
}

Vec<Fe> plucker_point() { return {1, 0, 0, 0, 0, 0}; }

// ---------------------------------------------------------------------------

const std::vector<std::array<int, 3>>& triples6() {
    static const std::vector<std::array<int, 3>> t = [] {
        std::vector<std::array<int, 3>> r;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) r.push_back({a, b, c});
        return r;
    }();
    return t;
}

namespace {

int triple_index(int a, int b, int c) {
    const auto& T = triples6();
    for (std::size_t i = 0; i < T.size(); ++i)
        if (T[i] == std::array<int, 3>{a, b, c}) return static_cast<int>(i);
    throw std::logic_error("triple_index");
}

}  // namespace

Mat<Fe> wedge_pairing(const PrimeField& F) {
    const auto& T = triples6();
    auto J = zeros(F, 20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) {
            std::array<int, 6> p{T[i][0], T[i][1], T[i][2], T[j][0], T[j][1], T[j][2]};
            int s = perm_sign(p);
            if (s != 0) J(i, j) = F.from_int(s);
        }
    return J;
}

Lagrangian lagrangian_A(const PrimeField& F, const FanoInstance& inst, long long scale, int flip_coordinate) {
    if (inst.k != 0) throw std::invalid_argument("lagrangian_A: needs k = 0");
    auto Q = lift(F, inst.Q);
    Lagrangian L;
    L.J = wedge_pairing(F);
    L.A = zeros(F, 10, 20);
    const Fe c = F.from_int(scale);
    for (int x = 0; x < 10; ++x) {
        // x -> x ^ Q: e_ab goes to f_0 ^ f_a ^ f_b.
        Fe sx = x == flip_coordinate ? F.neg(1) : 1;
        auto [a, b] = kPairs[x];
        L.A(x, triple_index(0, a + 1, b + 1)) = sx;
        // The wedge^3 H_P part is Q_0(x, .) seen through wedge^3 V_5 = wedge^2 V_5^dual.
        for (int y = 0; y < 10; ++y) {
            auto [d, e] = kPairs[y];
            int abc[3], n = 0;
            for (int m = 0; m < 5; ++m)
                if (m != d && m != e) abc[n++] = m;
            int s = perm_sign(std::array<int, 5>{abc[0], abc[1], abc[2], d, e});
            auto v = F.mul(c, F.mul(Q(x, y), F.from_int(s)));
            auto& slot = L.A(x, triple_index(abc[0] + 1, abc[1] + 1, abc[2] + 1));
            slot = F.add(slot, v);
        }
    }
    return L;
}

bool is_lagrangian(const PrimeField& F, const Lagrangian& L) {
    return rank(F, L.A) == 10 && is_zero(F, mul(F, mul(F, L.A, L.J), transpose(L.A)));
}

int epw_membership(const PrimeField& F, const Lagrangian& L, const Vec<Fe>& h) {
    auto H = from_rows(F, rank_kernel(F, from_rows(F, {h}, 6)).kernel, 6);
    const auto& T = triples6();
    auto W = zeros(F, 10, 20);
    int r = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            for (int l = j + 1; l < 5; ++l, ++r)
                for (int t = 0; t < 20; ++t) {
                    Mat<Fe> m(3, 3, 0);
                    for (int a = 0; a < 3; ++a) {
                        m(0, a) = H(i, T[t][a]);
                        m(1, a) = H(j, T[t][a]);
                        m(2, a) = H(l, T[t][a]);
                    }
                    W(r, t) = det(F, m);
                }
    return 20 - static_cast<int>(rank(F, stack(F, L.A, W)));
}

// ---------------------------------------------------------------------------

Corank2Search corank2_sample(const DualContext& C, int n, std::uint64_t seed, long max_scans) {
    const auto& F = C.F;
    Rng rng(seed, "corank2");
    Corank2Search res;
    std::set<Vec<Fe>> seen;
    while (static_cast<int>(res.points.size()) < n && res.scans < max_scans) {
        auto P = dual_pencil(C, random_vec(F, 5, rng));
        if (!P || P->delta.is_zero(F)) continue;
        ++res.scans;
        for (const auto& r : univariate_roots(F, P->delta)) {
            ++res.members;
            if (r.multiplicity < 2) continue;
            ++res.double_roots;
            int cr = witness_corank(C, *P, r.lambda, r.mu);
            if (cr >= 3) ++res.corank3;
            if (cr != 2) continue;
            DualPoint d{dual_coordinates(F, P->w, r.lambda, r.mu), P->w, r.lambda, r.mu, cr};
            if (!seen.insert(projective_normal(F, d.h)).second) continue;
            res.points.push_back(std::move(d));
        }
    }
    return res;
}

ContainmentReport containment(const DualContext& source, const DualContext& target, const Sextic& target_dual,
                              int n, std::uint64_t seed, long max_scans) {
    const auto& F = target.F;
    ContainmentReport rep;
    auto found = corank2_sample(source, n, seed, max_scans);
    rep.scans = found.scans;
    for (const auto& d : found.points) {
        ++rep.points;
        auto S = dual_pencil(source, d.w);
        if (S && witness_corank(source, *S, d.lambda, d.mu) == 2) ++rep.exact_corank2;
        if (target_dual.eval(F, d.h) == 0) ++rep.by_sextic;
        auto T = dual_pencil(target, d.w);
        if (T && witness_corank(target, *T, d.lambda, d.mu) >= 1) ++rep.by_restriction;
        rep.witnesses.push_back(d);
    }
    return rep;
}

ContainmentReport containment_SW(const FanoChain& chain, const Sextic& Yz_dual, int n, std::uint64_t seed,
                                 long max_scans) {
    PrimeField F = prime_field_of(chain.Z.field);
    return containment(DualContext(F, chain.W), DualContext(F, chain.Z), Yz_dual, n, seed, max_scans);
}

ContainmentReport containment_SX(const FanoChain& chain, const Sextic& Yz_dual, int n, std::uint64_t seed,
                                 long max_scans) {
    PrimeField F = prime_field_of(chain.Z.field);
    return containment(DualContext(F, chain.X), DualContext(F, chain.Z), Yz_dual, n, seed, max_scans);
}

// ---------------------------------------------------------------------------

bool flattened_limit_matches(const PrimeField& F, const GushelInstance& g, const Vec<Fe>& x) {
    auto cone = gushel_system(F, g);
    Fe expect = det(F, member(F, cone, x));
    std::vector<Fe> xs, ys;
    for (Fe eps : {Fe{1}, Fe{2}, Fe{3}}) {
        auto S = quadric_system(F, gushel_flatten(g, eps));
        xs.push_back(eps);
        ys.push_back(F.mul(F.mul(eps, eps), det(F, member(F, S, x))));
    }
    // A fourth node confirms the degree bound.
    auto c = interpolate(F, xs, ys);
    auto S4 = quadric_system(F, gushel_flatten(g, 4));
    Fe at4 = F.add(c[0], F.add(F.mul(c[1], 4), F.mul(c[2], 16)));
    if (at4 != F.mul(16, det(F, member(F, S4, x)))) return false;
    return c[0] == expect;
}

GushelReport gushel_compare(const GushelInstance& g, std::uint64_t seed, int trials) {
    PrimeField F = prime_field_of(g.field);
    GushelReport rep;
    auto cone = gushel_system(F, g);
    auto X = gushel_companion(g);
    auto branch = quadric_system(F, X);
    rep.cone_sextic = interpolate_primal(F, cone, seed).form;
    rep.branch_sextic = interpolate_primal(F, branch, seed + 1).form;
    rep.sextics_equal = proportional(F, rep.cone_sextic, rep.branch_sextic);

    Rng rng(seed, "gushel-eps");
    for (int t = 0; t < trials; ++t) {
        ++rep.eps_trials;
        if (!flattened_limit_matches(F, g, random_vec(F, 6, rng))) ++rep.eps_failures;
    }

    // Kernel vectors (t0, w0) of singular cone members satisfy t0 = -l(w0),
    // and w0 is a kernel vector of the branch member.
    auto B = gushel_base(F, g);
    auto l = mul_vec(F, B, lift(F, g.ell));
    for (const auto& p : sample_primal(F, cone, trials, seed + 2)) {
        ++rep.witness_trials;
        if (p.corank != 1) {
            ++rep.witness_failures;
            continue;
        }
        Vec<Fe> w0(p.kernel.begin() + 1, p.kernel.end());
        bool ok = F.add(p.kernel[0], dot(F, l, w0)) == 0 && !is_zero_vec(F, w0) &&
                  is_zero_vec(F, mul_vec(F, member(F, branch, p.x), w0));
        if (!ok) ++rep.witness_failures;
    }
    return rep;
}

}  // namespace fano

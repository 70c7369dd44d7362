#include "fano/deform.hpp"

#include <map>
#include <stdexcept>

#include "fano/symbolic.hpp"

namespace fano {

namespace {

Mat<Fe> parabola_form(const PrimeField& F) {
    // y0 y2 - y1^2, the image of (s^2, st, t^2).
    auto M = zeros(F, 3, 3);
    M(0, 2) = M(2, 0) = F.inv(2);
    M(1, 1) = F.neg(1);
    return M;
}

std::optional<Vec<Fe>> point_on_conic(const PrimeField& F, const Mat<Fe>& f, Rng& rng) {
    auto a = random_vec(F, 3, rng), b = random_vec(F, 3, rng);
    auto faa = bilinear(F, f, a, a), fab = bilinear(F, f, a, b), fbb = bilinear(F, f, b, b);
    if (fbb == 0) return std::nullopt;
    auto disc = F.sub(F.mul(fab, fab), F.mul(faa, fbb));
    auto r = F.sqrt(disc);
    if (!r) return std::nullopt;
    auto x = F.div(F.sub(*r, fab), fbb);
    Vec<Fe> y(3);
    for (int i = 0; i < 3; ++i) y[i] = F.add(a[i], F.mul(x, b[i]));
    if (is_zero_vec(F, y)) return std::nullopt;
    return y;
}

Vec<Fe> axpy(const PrimeField& F, Fe s, const Vec<Fe>& x, Vec<Fe> y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.add(y[i], F.mul(s, x[i]));
    return y;
}

}  // namespace

std::vector<Mat<Fe>> instance_quadrics(const PrimeField& F, const FanoInstance& inst) {
    auto S = quadric_system(F, inst);
    return {S.R.begin(), S.R.end()};
}

std::vector<Mat<Fe>> grassmannian_quadrics(const PrimeField& F) {
    std::vector<Mat<Fe>> out;
    for (int m = 0; m < 5; ++m) {
        Vec<Fe> e(5, 0);
        e[m] = 1;
        out.push_back(pfaffian_quadric(F, e));
    }
    return out;
}

ParametrizedConic parametrize(const PrimeField& F, const Conic& c, const Mat<Fe>& ambient, Rng& rng) {
    std::optional<Vec<Fe>> y0;
    for (int t = 0; t < 200 && !y0; ++t) y0 = point_on_conic(F, c.form, rng);
    if (!y0) throw std::runtime_error("parametrize: no rational point found");
    auto B = complete_basis(F, from_rows(F, {*y0}, 3));
    auto e1 = B.row(1), e2 = B.row(2);
    const auto& f = c.form;
    auto two = F.from_int(2);
    auto b1 = bilinear(F, f, *y0, e1), b2 = bilinear(F, f, *y0, e2);
    // x(s,t) = f(d) y0 - 2 B(y0, d) d with d = s e1 + t e2.
    Vec<Fe> zero(3, 0);
    std::array<Vec<Fe>, 3> plane_coeffs{
        axpy(F, F.neg(F.mul(two, b1)), e1, axpy(F, bilinear(F, f, e1, e1), *y0, zero)),
        axpy(F, F.neg(F.mul(two, b2)), e1,
             axpy(F, F.neg(F.mul(two, b1)), e2, axpy(F, F.mul(two, bilinear(F, f, e1, e2)), *y0, zero))),
        axpy(F, F.neg(F.mul(two, b2)), e2, axpy(F, bilinear(F, f, e2, e2), *y0, zero)),
    };
    ParametrizedConic out{zeros(F, ambient.rows, 3)};
    for (int a = 0; a < 3; ++a) {
        auto x = mul_vec(F, transpose(c.plane), plane_coeffs[a]);
        auto co = coordinates_in(F, ambient, x);
        if (!co) throw std::invalid_argument("parametrize: plane is not inside the ambient space");
        for (std::size_t p = 0; p < ambient.rows; ++p) out.coeffs(p, a) = (*co)[p];
    }
    if (rank(F, out.coeffs) != 3) throw std::invalid_argument("parametrize: conic is singular");
    return out;
}

ParametrizedConic random_tau_conic_on_G(const PrimeField& F, Rng& rng) {
    for (;;) {
        auto M = random_matrix(F, 4, 5, rng);
        if (rank(F, M) < 4) continue;
        auto v = [&](int i) { return M.row(i); };
        auto mid = wedge2(F, v(0), v(3));
        auto b = wedge2(F, v(1), v(2));
        for (int i = 0; i < 10; ++i) mid[i] = F.add(mid[i], b[i]);
        auto C = transpose(from_rows(F, {wedge2(F, v(0), v(2)), mid, wedge2(F, v(1), v(3))}, 10));
        return {C};
    }
}

bool lies_on(const PrimeField& F, const ParametrizedConic& c, const std::vector<Mat<Fe>>& quadrics) {
    for (const auto& Q : quadrics) {
        auto W = congruence(F, Q, transpose(c.coeffs));  // 3 x 3 Gram matrix of the columns
        for (int r = 0; r <= 4; ++r) {
            Fe s = 0;
            for (int a = 0; a <= 2; ++a)
                if (r - a >= 0 && r - a <= 2) s = F.add(s, W(a, r - a));
            if (s != 0) return false;
        }
    }
    return true;
}

TangentReport conic_tangent_dim(const PrimeField& F, const ParametrizedConic& c,
                                const std::vector<Mat<Fe>>& quadrics) {
    const auto& C = c.coeffs;
    const std::size_t n = C.rows;
    TangentReport rep;
    rep.unknowns = static_cast<int>(3 * n);
    // Unknown v_{q,i}: coefficient of s^{2-i} t^i in coordinate q.
    auto M = zeros(F, 5 * quadrics.size(), 3 * n);
    for (std::size_t j = 0; j < quadrics.size(); ++j) {
        auto W = mul(F, transpose(C), quadrics[j]);  // 3 x n
        for (int r = 0; r <= 4; ++r)
            for (std::size_t q = 0; q < n; ++q)
                for (int i = 0; i <= 2; ++i) {
                    int a = r - i;
                    if (a >= 0 && a <= 2) M(5 * j + r, 3 * q + i) = W(a, q);
                }
    }
    rep.raw = static_cast<int>(3 * n - rank(F, M));

    std::vector<Vec<Fe>> quotient(5, Vec<Fe>(3 * n, 0));
    for (std::size_t q = 0; q < n; ++q)
        for (int a = 0; a <= 2; ++a) {
            auto x = C(q, a);
            quotient[0][3 * q + a] = x;                                // Euler
            quotient[1][3 * q + a] = F.mul(F.from_int(2 - a), x);      // s d/ds
            quotient[2][3 * q + a] = F.mul(F.from_int(a), x);          // t d/dt
            if (a < 2) quotient[3][3 * q + a + 1] = F.add(quotient[3][3 * q + a + 1], F.mul(F.from_int(2 - a), x));
            if (a > 0) quotient[4][3 * q + a - 1] = F.add(quotient[4][3 * q + a - 1], F.mul(F.from_int(a), x));
        }
    rep.quotient_inside = true;
    for (const auto& v : quotient)
        if (!is_zero_vec(F, mul_vec(F, M, v))) rep.quotient_inside = false;
    if (!rep.quotient_inside)
        throw std::domain_error("conic_tangent_dim: reparametrizations are not tangent; conic not on the quadrics");
    rep.quotient_rank = static_cast<int>(rank(F, from_rows(F, quotient, 3 * n)));
    rep.dimension = rep.raw - rep.quotient_rank;
    return rep;
}

int normal_h0(const PrimeField& F, const ParametrizedConic& c, const std::vector<Mat<Fe>>& quadrics, int m) {
    if (m < 0 || m > 2) throw std::invalid_argument("normal_h0: twist out of range");
    const std::size_t n = c.coeffs.rows;
    // New coordinates whose first three rows are the coefficient columns, so
    // the conic is (s^2, st, t^2, 0, ..., 0).
    auto T = complete_basis(F, transpose(c.coeffs));
    auto P = parabola_form(F);
    const int dnu = 4 - m, dw = 2 - m;
    const std::size_t nu_count = static_cast<std::size_t>(dnu + 1), w_count = static_cast<std::size_t>(dw + 1);
    const std::size_t unknowns = nu_count + (n - 3) * w_count;
    auto M = zeros(F, quadrics.size() * nu_count, unknowns);
    for (std::size_t j = 0; j < quadrics.size(); ++j) {
        auto Qn = congruence(F, quadrics[j], T);
        // The block on the plane is lambda times the conic.
        Fe lambda = F.neg(Qn(1, 1));
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
                if (Qn(a, b) != F.mul(lambda, P(a, b)))
                    throw std::domain_error("normal_h0: quadric does not restrict to a multiple of the conic");
        for (int r = 0; r <= dnu; ++r) {
            auto row = j * nu_count + static_cast<std::size_t>(r);
            M(row, static_cast<std::size_t>(r)) = lambda;
            for (std::size_t b = 3; b < n; ++b)
                for (int i = 0; i <= dw; ++i) {
                    int a = r - i;
                    if (a < 0 || a > 2) continue;
                    M(row, nu_count + (b - 3) * w_count + static_cast<std::size_t>(i)) =
                        F.mul(F.from_int(2), Qn(static_cast<std::size_t>(a), b));
                }
        }
    }
    return static_cast<int>(unknowns - rank(F, M));
}

SplittingReport splitting_type(const PrimeField& F, const ParametrizedConic& c, const std::vector<Mat<Fe>>& quadrics,
                               int degree, int rank) {
    if (rank < 1 || rank > 8) throw std::invalid_argument("splitting_type: rank out of range");
    SplittingReport rep;
    for (int m = 0; m < 3; ++m) rep.h0[m] = normal_h0(F, c, quadrics, m);
    auto h = [](int a, int m) { return std::max(0, a + 1 - m); };
    // Nonincreasing degree sequences with the given sum; h0 bounds each
    // positive summand, and summands below -1 contribute nothing.
    const int lo = -1 - std::abs(degree) - (rank - 1) * (rep.h0[0] + 1), hi = rep.h0[0] + 1;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int top) -> void {
        if (static_cast<int>(cur.size()) == rank) {
            if (left != 0) return;
            for (int m = 0; m < 3; ++m) {
                int s = 0;
                for (int a : cur) s += h(a, m);
                if (s != rep.h0[m]) return;
            }
            rep.candidates.push_back(cur);
            return;
        }
        for (int a = top; a >= lo; --a) {
            cur.push_back(a);
            self(self, left - a, a);
            cur.pop_back();
        }
    };
    rec(rec, degree, hi);
    if (rep.candidates.empty())
        throw std::runtime_error("splitting_type: no rank-" + std::to_string(rank) + " type of degree " +
                                 std::to_string(degree) + " has h0 (" + std::to_string(rep.h0[0]) + "," +
                                 std::to_string(rep.h0[1]) + "," + std::to_string(rep.h0[2]) + ")");
    if (rep.candidates.size() == 1) {
        rep.degrees = rep.candidates[0];
        rep.degree_sum = degree;
    }
    return rep;
}

FanoInstance section_through_plane(const FanoInstance& inst, const Mat<Fe>& plane, std::uint64_t seed) {
    if (inst.k != 1) throw std::invalid_argument("section_through_plane: needs a k = 1 instance");
    auto F = prime_field_of(inst.field);
    auto V = lift(F, inst.V);
    auto Pc = zeros(F, 3, V.rows);
    for (std::size_t i = 0; i < 3; ++i) {
        auto co = coordinates_in(F, V, plane.row(i));
        if (!co) throw std::invalid_argument("section_through_plane: plane not in V");
        Pc.set_row(i, *co);
    }
    auto forms = rank_kernel(F, Pc).kernel;  // linear forms on V vanishing on the plane
    Rng rng(seed, "section-through-plane");
    for (int attempt = 0; attempt < retry_budget(); ++attempt) {
        Vec<Fe> h(V.rows, 0);
        for (const auto& f : forms) h = axpy(F, F.random(rng), f, h);
        if (is_zero_vec(F, h)) continue;
        auto ker = rank_kernel(F, from_rows(F, {h}, V.rows)).kernel;
        auto V8 = mul(F, from_rows(F, ker, V.rows), V);
        auto W = make_instance(2, inst.field, seed + static_cast<std::uint64_t>(attempt), lower(F, V8), inst.Q);
        if (smoothness_probe(W, 20, seed).failures == 0) return W;
    }
    throw std::runtime_error("section_through_plane: retry budget exhausted");
}

// ---------------------------------------------------------------------------
// Double lines.

std::string to_string(DoubleLineType t) {
    switch (t) {
        case DoubleLineType::sigma: return "sigma";
        case DoubleLineType::rho: return "rho";
        case DoubleLineType::tau: return "tau";
    }
    return "?";
}

namespace {

using sym::Exp;
using sym::Poly;
using Q = mpq_class;

struct Chart {
    int o, x4, x5, f, y4, y5;  // x_o, x_4, x_5 | y_f, y_4, y_5 as in the chart's basis
};

struct ChartIdeal {
    std::vector<Poly> gens;  // five generators; exactly one is eps^2
    int eps = -1;            // chart variable of the nilpotent direction
    int quad = -1;           // index of eps^2 in gens
};

struct Engine {
    sym::Vars vars;
    Chart c1{}, c2{};
    std::array<int, 4> l{};

    Engine() {
        c1 = {vars.add("x3"), vars.add("x4"), vars.add("x5"), vars.add("y3"), vars.add("y4"), vars.add("y5")};
        c2 = {vars.add("z2"), vars.add("z4"), vars.add("z5"), vars.add("t2"), vars.add("t4"), vars.add("t5")};
        for (int i = 0; i < 4; ++i) l[static_cast<std::size_t>(i)] = vars.add("l" + std::to_string(i));
    }

    Poly v(int i, int e = 1) const { return Poly::var(vars.size(), i, e); }

    const Chart& chart(int which) const { return which == 1 ? c1 : c2; }

    /// Target coordinates as Laurent polynomials in the source chart; the
    /// formulas are the same in both directions.
    std::map<int, Poly> transition(const Chart& s, const Chart& t) const {
        auto inv = v(s.f, -1);
        return {{t.o, -(v(s.o) * inv)},
                {t.x4, v(s.x4) - v(s.o) * v(s.y4) * inv},
                {t.x5, v(s.x5) - v(s.o) * v(s.y5) * inv},
                {t.f, inv},
                {t.y4, v(s.y4) * inv},
                {t.y5, v(s.y5) * inv}};
    }

    ChartIdeal ideal(DoubleLineType type, int which) const {
        const auto& c = chart(which);
        ChartIdeal I;
        switch (type) {
            case DoubleLineType::sigma:
                I.gens = {v(c.y4, 2), v(c.y5), v(c.o), v(c.x4), v(c.x5)};
                I.eps = c.y4;
                break;
            case DoubleLineType::rho:
                I.gens = {v(c.o, 2), v(c.y4), v(c.y5), v(c.x4), v(c.x5)};
                I.eps = c.o;
                break;
            case DoubleLineType::tau: {
                // p14 = p23 on the line: t4 - z2 in chart 2, y4 + x3 in chart 1.
                auto lin = which == 2 ? v(c.y4) - v(c.o) : v(c.y4) + v(c.o);
                I.gens = {v(c.y4, 2), v(c.y5), lin, v(c.x5), v(c.x4)};
                I.eps = c.y4;
                break;
            }
        }
        I.quad = 0;
        return I;
    }
};

/// Laurent polynomial in the free coordinate.
using Laurent = std::map<int, Q>;

struct SourceFrame {
    const Engine& E;
    const Chart& S;
    ChartIdeal I;
    std::vector<int> linear;            // generator indices of the linear generators, in order
    std::map<int, Poly> to_new;         // source variables in the new coordinates

    SourceFrame(const Engine& e, const Chart& s, ChartIdeal ideal) : E(e), S(s), I(std::move(ideal)) {
        const std::array<int, 6> cols{S.o, S.x4, S.x5, S.f, S.y4, S.y5};
        RationalField R;
        auto L = zeros(R, 6, 6);
        std::size_t row = 0;
        for (std::size_t j = 0; j < I.gens.size(); ++j) {
            if (static_cast<int>(j) == I.quad) continue;
            linear.push_back(static_cast<int>(j));
            for (const auto& [x, c] : I.gens[j].terms) {
                int deg = 0, var = -1;
                for (std::size_t k = 0; k < x.size(); ++k)
                    if (x[k] != 0) {
                        deg += x[k];
                        var = static_cast<int>(k);
                    }
                if (deg != 1) throw std::logic_error("double line: generator is not linear");
                for (std::size_t k = 0; k < 6; ++k)
                    if (cols[k] == var) L(row, k) = c;
            }
            ++row;
        }
        for (std::size_t k = 0; k < 6; ++k) {
            if (cols[k] == I.eps) L(4, k) = 1;
            if (cols[k] == S.f) L(5, k) = 1;
        }
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t k = 0; k < 6; ++k)
                if (L(r, k) != 0 && cols[k] == S.f) throw std::logic_error("double line: linear generator involves f");
        auto Li = inverse(R, L);
        if (!Li) throw std::logic_error("double line: generators are not coordinates");
        std::array<Poly, 6> fresh{E.v(E.l[0]), E.v(E.l[1]), E.v(E.l[2]), E.v(E.l[3]), E.v(I.eps), E.v(S.f)};
        for (std::size_t k = 0; k < 6; ++k) {
            if (cols[k] == I.eps || cols[k] == S.f) continue;
            Poly p;
            for (std::size_t i = 0; i < 6; ++i)
                if ((*Li)(k, i) != 0) p += fresh[i] * (*Li)(k, i);
            to_new[cols[k]] = p;
        }
    }

    Poly change(Poly p) const {
        for (const auto& [var, expr] : to_new) p = sym::substitute(p, var, expr);
        return p;
    }

    /// p = sum_j c_j g_j; throws on a nonzero remainder.
    std::vector<Poly> divide(const Poly& p) const {
        std::vector<Poly> c(I.gens.size());
        const auto eps = static_cast<std::size_t>(I.eps);
        for (const auto& [x, coef] : p.terms) {
            Exp y = x;
            int bucket = -1;
            for (std::size_t k = 0; k < 4 && bucket < 0; ++k)
                if (x[static_cast<std::size_t>(E.l[k])] > 0) {
                    bucket = linear[k];
                    y[static_cast<std::size_t>(E.l[k])] -= 1;
                }
            if (bucket < 0 && x[eps] >= 2) {
                bucket = I.quad;
                y[eps] -= 2;
            }
            if (bucket < 0) throw std::logic_error("double line: division leaves a remainder");
            c[static_cast<std::size_t>(bucket)].add_term(y, coef);
        }
        return c;
    }

    /// Restriction to the double line: (a, b) with p = a(f) + eps b(f).
    std::pair<Laurent, Laurent> restrict(const Poly& p) const {
        std::vector<int> lin(E.l.begin(), E.l.end());
        auto r = sym::truncate(sym::drop_terms_with(p, lin), I.eps, 2);
        std::pair<Laurent, Laurent> out;
        for (const auto& [x, c] : r.terms) {
            for (std::size_t k = 0; k < x.size(); ++k)
                if (x[k] != 0 && static_cast<int>(k) != I.eps && static_cast<int>(k) != S.f)
                    throw std::logic_error("double line: restriction keeps a stray variable");
            auto& part = x[static_cast<std::size_t>(I.eps)] == 0 ? out.first : out.second;
            part[x[static_cast<std::size_t>(S.f)]] += c;
        }
        return out;
    }
};

struct GluingSystem {
    int unknowns = 0;
    Mat<Q> conditions;
    std::vector<std::string> generators;
    int bound = 0;
};

GluingSystem gluing_system(DoubleLineType type, int source, int bound) {
    Engine E;
    const auto& S = E.chart(source);
    const auto& T = E.chart(3 - source);
    SourceFrame frame(E, S, E.ideal(type, source));
    auto target = E.ideal(type, 3 - source);
    auto tr = E.transition(S, T);
    auto to_source = [&](Poly p) {
        for (const auto& [var, expr] : tr) p = sym::substitute(p, var, expr);
        return frame.change(p);
    };

    // The target's nilpotent coordinate on the line is c eps f^m.
    auto [ea, eb] = frame.restrict(to_source(E.v(target.eps)));
    if (!ea.empty() || eb.size() != 1) throw std::logic_error("double line: nilpotent coordinates do not match");
    const int m = eb.begin()->first;

    const int K = bound + 1;
    GluingSystem G;
    G.bound = bound;
    G.unknowns = 10 * K;
    for (const auto& g : frame.I.gens) G.generators.push_back(sym::str(g, E.vars));
    auto col = [&](int j, int part, int k) { return (2 * j + part) * K + k; };

    std::vector<std::vector<Q>> rows;
    for (const auto& Gi : target.gens) {
        auto c = frame.divide(to_source(Gi));
        std::vector<std::pair<Laurent, Laurent>> res;
        int lo = 0, hi = 0;
        for (const auto& cj : c) {
            res.push_back(frame.restrict(cj));
            for (const auto* part : {&res.back().first, &res.back().second})
                for (const auto& [e, q] : *part) {
                    lo = std::min(lo, e);
                    hi = std::max(hi, e);
                }
        }
        for (int n = lo; n <= hi + bound; ++n) {
            // Plain part at f^n must vanish for n > 0; nilpotent part for n > m.
            if (n > 0) {
                std::vector<Q> row(static_cast<std::size_t>(G.unknowns), 0);
                for (int j = 0; j < 5; ++j)
                    for (int k = 0; k < K; ++k) {
                        auto it = res[j].first.find(n - k);
                        if (it != res[j].first.end()) row[col(j, 0, k)] += it->second;
                    }
                rows.push_back(row);
            }
            if (n > m) {
                std::vector<Q> row(static_cast<std::size_t>(G.unknowns), 0);
                for (int j = 0; j < 5; ++j)
                    for (int k = 0; k < K; ++k) {
                        auto a = res[j].first.find(n - k);
                        if (a != res[j].first.end()) row[col(j, 1, k)] += a->second;
                        auto b = res[j].second.find(n - k);
                        if (b != res[j].second.end()) row[col(j, 0, k)] += b->second;
                    }
                rows.push_back(row);
            }
        }
    }
    RationalField R;
    G.conditions = from_rows(R, rows, static_cast<std::size_t>(G.unknowns));
    return G;
}

struct TableEntry {
    int gen, psi, eps, tpow, coef;
};

// Images on chart 2 in generator order; entry (g, i, e, k, c) adds
// c psi_i eps^e t2^k to the image of generator g.
std::vector<TableEntry> printed_table(DoubleLineType t, bool verbatim) {
    std::vector<TableEntry> base{{0, 1, 0, 0, 1}, {0, 2, 0, 1, 1},  {0, 3, 0, 2, 1}, {0, 4, 1, 0, 1},
                                 {0, 5, 1, 1, 1}, {1, 6, 0, 0, 1},  {1, 7, 0, 1, 1}, {1, 8, 1, 0, 1},
                                 {2, 9, 0, 0, 1}, {2, 10, 0, 1, 1}, {2, 11, 1, 0, 1}};
    switch (t) {
        case DoubleLineType::sigma:
            base.insert(base.end(), {{3, 12, 0, 0, 1}, {3, 10, 1, 0, 1}, {4, 13, 0, 0, 1}});
            if (verbatim) base.push_back({4, 10, 1, 0, 1});
            break;
        case DoubleLineType::rho:
            base.insert(base.end(), {{3, 12, 0, 0, 1}, {3, 7, 1, 0, 1}, {4, 13, 0, 0, 1}, {4, 10, 1, 0, 1}});
            break;
        case DoubleLineType::tau:
            base.insert(base.end(), {{3, 12, 0, 0, 1},
                                     {3, 7, 1, 0, 1},
                                     {4, 13, 0, 0, 1},
                                     {4, 3, 0, 1, 1},
                                     {4, 5, 1, 0, 1},
                                     {4, 10, 1, 0, -1}});
            break;
    }
    return base;
}

bool table_spans(const GluingSystem& G, const std::vector<TableEntry>& table, int dimension) {
    RationalField R;
    const int K = G.bound + 1;
    std::vector<Vec<Q>> vecs(13, Vec<Q>(static_cast<std::size_t>(G.unknowns), 0));
    for (const auto& e : table) vecs[static_cast<std::size_t>(e.psi - 1)][static_cast<std::size_t>((2 * e.gen + e.eps) * K + e.tpow)] += e.coef;
    for (const auto& v : vecs)
        if (!is_zero_vec(R, mul_vec(R, G.conditions, v))) return false;
    return dimension == 13 && rank(R, from_rows(R, vecs, static_cast<std::size_t>(G.unknowns))) == 13;
}

/// Parameters are numbered by first appearance in the printed order.
std::vector<int> psi_numbers(const RankKernel<Q>& rk, int bound) {
    const int K = bound + 1;
    std::vector<int> num(rk.kernel.size(), 0);
    int next = 1;
    for (int gen = 0; gen < 5; ++gen)
        for (int part = 0; part < 2; ++part)
            for (int k = 0; k < K; ++k)
                for (std::size_t r = 0; r < rk.kernel.size(); ++r)
                    if (num[r] == 0 && sgn(rk.kernel[r][static_cast<std::size_t>((2 * gen + part) * K + k)]) != 0)
                        num[r] = next++;
    return num;
}

std::string describe_image(const RankKernel<Q>& rk, const std::vector<int>& num, int gen, int bound,
                           const std::string& f, const std::string& eps) {
    const int K = bound + 1;
    std::string out;
    for (int part = 0; part < 2; ++part)
        for (int k = 0; k < K; ++k) {
            std::map<int, Q> terms;
            for (std::size_t r = 0; r < rk.kernel.size(); ++r) {
                const auto& c = rk.kernel[r][static_cast<std::size_t>((2 * gen + part) * K + k)];
                if (sgn(c) != 0) terms[num[r]] = c;
            }
            std::string comb;
            for (const auto& [i, c] : terms) {
                std::string psi = "psi" + std::to_string(i);
                std::string term = abs(c) == 1 ? psi : mpq_class(abs(c)).get_str() + "*" + psi;
                comb += comb.empty() ? (sgn(c) < 0 ? "-" : "") + term : (sgn(c) < 0 ? " - " : " + ") + term;
            }
            if (comb.empty()) continue;
            std::string mono;
            if (k > 0) mono = f + (k > 1 ? "^" + std::to_string(k) : "");
            if (part) mono += (mono.empty() ? "" : "*") + eps;
            bool single = terms.size() == 1;
            std::string term = mono.empty() ? comb : (single ? comb : "(" + comb + ")") + "*" + mono;
            out += out.empty() ? term : " + " + term;
        }
    return out.empty() ? "0" : out;
}

}  // namespace

HomSolve double_line_hom(DoubleLineType t, int source, int bound) {
    if (source != 1 && source != 2) throw std::invalid_argument("double_line_hom: chart must be 1 or 2");
    auto G = gluing_system(t, source, bound);
    RationalField R;
    auto rk = rank_kernel(R, G.conditions);
    HomSolve out;
    out.unknowns = G.unknowns;
    out.dimension = static_cast<int>(rk.kernel.size());
    out.generators = G.generators;
    Engine E;
    const auto& S = E.chart(source);
    auto I = E.ideal(t, source);
    auto num = psi_numbers(rk, bound);
    for (int j = 0; j < 5; ++j)
        out.images.push_back(describe_image(rk, num, j, bound, E.vars.name(S.f), E.vars.name(I.eps)));
    return out;
}

DoubleLineReport doubleline_hom_dim(DoubleLineType t) {
    DoubleLineReport rep;
    rep.type = t;
    rep.solve = double_line_hom(t, 2, 4);
    rep.dimension = rep.solve.dimension;
    rep.dimension_next = double_line_hom(t, 2, 5).dimension;
    rep.dimension_swapped = double_line_hom(t, 1, 4).dimension;
    auto G = gluing_system(t, 2, 4);
    rep.table_matches = table_spans(G, printed_table(t, false), rep.dimension);
    rep.verbatim_table_matches = table_spans(G, printed_table(t, true), rep.dimension);
    return rep;
}

}  // namespace fano

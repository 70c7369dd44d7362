#include "fano/poly.hpp"

namespace fano {

namespace upoly {

void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const UPoly& f) {
    for (std::size_t i = f.size(); i-- > 0;)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

UPoly add(const PrimeField& F, const UPoly& f, const UPoly& g) {
    UPoly h(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = F.add(h[i], g[i]);
    trim(h);
    return h;
}

UPoly sub(const PrimeField& F, const UPoly& f, const UPoly& g) {
    UPoly h(std::max(f.size(), g.size()), 0);
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[i];
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = F.sub(h[i], g[i]);
    trim(h);
    return h;
}

UPoly mul(const PrimeField& F, const UPoly& f, const UPoly& g) {
    if (f.empty() || g.empty()) return {};
    UPoly h(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = F.add(h[i + j], F.mul(f[i], g[j]));
    }
    trim(h);
    return h;
}

UPoly scale(const PrimeField& F, PrimeField::elem s, const UPoly& f) {
    UPoly h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = F.mul(s, f[i]);
    trim(h);
    return h;
}

void divmod(const PrimeField& F, const UPoly& f, const UPoly& g, UPoly& q, UPoly& r) {
    int dg = degree(g);
    if (dg < 0) throw std::domain_error("polynomial division by zero");
    r = f;
    trim(r);
    q.assign(r.size() > static_cast<std::size_t>(dg) ? r.size() - dg : 0, 0);
    auto lead_inv = F.inv(g[dg]);
    for (int d = degree(r); d >= dg; d = degree(r)) {
        auto c = F.mul(r[d], lead_inv);
        q[d - dg] = c;
        for (int i = 0; i <= dg; ++i) r[d - dg + i] = F.sub(r[d - dg + i], F.mul(c, g[i]));
        trim(r);
    }
    trim(q);
}

UPoly mod(const PrimeField& F, const UPoly& f, const UPoly& g) {
    UPoly q, r;
    divmod(F, f, g, q, r);
    return r;
}

UPoly monic(const PrimeField& F, const UPoly& f) {
    int d = degree(f);
    if (d < 0) return {};
    return scale(F, F.inv(f[d]), f);
}

UPoly gcd(const PrimeField& F, UPoly f, UPoly g) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        UPoly r = mod(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    return monic(F, f);
}

UPoly derivative(const PrimeField& F, const UPoly& f) {
    UPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], F.from_int(static_cast<long long>(i))));
    trim(d);
    return d;
}

PrimeField::elem eval(const PrimeField& F, const UPoly& f, PrimeField::elem x) {
    PrimeField::elem s = 0;
    for (std::size_t i = f.size(); i-- > 0;) s = F.add(F.mul(s, x), f[i]);
    return s;
}

int order_at_zero(const UPoly& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] != 0) return static_cast<int>(i);
    return -1;
}

namespace {

UPoly powmod(const PrimeField& F, UPoly base, std::uint64_t e, const UPoly& m) {
    UPoly r{1};
    base = mod(F, base, m);
    while (e) {
        if (e & 1) r = mod(F, mul(F, r, base), m);
        base = mod(F, mul(F, base, base), m);
        e >>= 1;
    }
    return r;
}

// Splits a monic squarefree product of distinct linear factors.
void split_linear(const PrimeField& F, const UPoly& g, Rng& rng, std::vector<PrimeField::elem>& out) {
    int d = degree(g);
    if (d <= 0) return;
    if (d == 1) {
        out.push_back(F.neg(F.div(g[0], g[1])));
        return;
    }
    for (;;) {
        UPoly t{F.random(rng), 1};
        UPoly h = powmod(F, t, (F.p - 1) / 2, g);
        h = sub(F, h, UPoly{1});
        UPoly a = gcd(F, g, h);
        int da = degree(a);
        if (da > 0 && da < d) {
            UPoly q, r;
            divmod(F, g, a, q, r);
            split_linear(F, a, rng, out);
            split_linear(F, monic(F, q), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<Root> roots(const PrimeField& F, const UPoly& f0, std::uint64_t seed) {
    UPoly f = f0;
    trim(f);
    if (f.empty()) throw std::invalid_argument("roots of the zero polynomial");
    std::vector<PrimeField::elem> distinct;
    if (F.p <= 4096) {
        for (PrimeField::elem x = 0; x < F.p; ++x)
            if (eval(F, f, x) == 0) distinct.push_back(x);
    } else {
        UPoly fm = monic(F, f);
        UPoly xp = powmod(F, UPoly{0, 1}, F.p, fm);
        UPoly g = gcd(F, fm, sub(F, xp, UPoly{0, 1}));
        Rng rng(seed, "upoly-roots");
        split_linear(F, g, rng, distinct);
    }
    std::sort(distinct.begin(), distinct.end());
    std::vector<Root> out;
    for (auto x : distinct) {
        int m = 0;
        UPoly cur = f;
        UPoly lin{F.neg(x), 1};
        for (;;) {
            UPoly q, r;
            divmod(F, cur, lin, q, r);
            if (!r.empty()) break;
            ++m;
            cur = q;
        }
        out.push_back({x, m});
    }
    return out;
}

}  // namespace upoly

std::vector<ProjectiveRoot> univariate_roots(const PrimeField& F, const BinaryForm<PrimeField>& f) {
    if (f.is_zero(F)) throw std::invalid_argument("univariate_roots: zero form");
    UPoly u = f.c;
    upoly::trim(u);
    std::vector<ProjectiveRoot> out;
    for (const auto& r : upoly::roots(F, u)) out.push_back({r.x, 1, r.multiplicity});
    int at_infinity = f.degree() - upoly::degree(u);
    if (at_infinity > 0) out.push_back({1, 0, at_infinity});
    return out;
}

std::vector<Exponent> monomials(int nvars, int degree) {
    std::vector<Exponent> out;
    Exponent e(nvars, 0);
    // Recursive fill in descending lex order.
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == nvars - 1) {
            e[var] = left;
            out.push_back(e);
            return;
        }
        for (int a = left; a >= 0; --a) {
            e[var] = a;
            self(self, var + 1, left - a);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

std::vector<PrimeField::elem> restrict_to_line(const PrimeField& F, const MultiForm<PrimeField>& f,
                                               const std::vector<PrimeField::elem>& a,
                                               const std::vector<PrimeField::elem>& b) {
    const int d = f.degree;
    if (F.p <= static_cast<std::uint64_t>(d)) throw std::invalid_argument("restrict_to_line: field too small");
    std::vector<PrimeField::elem> xs, ys;
    for (int i = 0; i <= d; ++i) {
        auto s = F.from_int(i);
        std::vector<PrimeField::elem> pt(a.size());
        for (std::size_t j = 0; j < a.size(); ++j) pt[j] = F.add(a[j], F.mul(s, b[j]));
        xs.push_back(s);
        ys.push_back(f.eval(F, pt));
    }
    return interpolate(F, xs, ys);
}

int multiplicity_at(const PrimeField& F, const MultiForm<PrimeField>& f, const std::vector<PrimeField::elem>& point,
                    Rng& rng, int lines) {
    if (f.is_zero()) throw std::invalid_argument("multiplicity_at: zero form");
    int best = f.degree + 1;
    for (int l = 0; l < lines; ++l) {
        auto b = random_vec(F, point.size(), rng);
        auto c = restrict_to_line(F, f, point, b);
        int o = upoly::order_at_zero(c);
        if (o < 0) o = f.degree + 1;  // line inside the hypersurface
        best = std::min(best, o);
    }
    return best;
}

MultiForm<PrimeField> fit_form(const PrimeField& F, const std::vector<std::vector<PrimeField::elem>>& points,
                               int degree, const FitOptions& opt) {
    if (F.p < opt.min_prime)
        throw std::invalid_argument("fit_form: prime " + std::to_string(F.p) + " below the interpolation bound " +
                                    std::to_string(opt.min_prime));
    if (points.empty()) throw FitError("fit_form: no points", 0);
    const int n = static_cast<int>(points[0].size());
    auto mons = monomials(n, degree);
    if (points.size() < mons.size())
        throw FitError("fit_form: " + std::to_string(points.size()) + " points for " + std::to_string(mons.size()) +
                           " monomials (underdetermined)",
                       mons.size() - points.size());
    Mat<PrimeField::elem> E(points.size(), mons.size(), 0);
    for (std::size_t r = 0; r < points.size(); ++r) {
        const auto& x = points[r];
        std::vector<std::vector<PrimeField::elem>> pw(n, std::vector<PrimeField::elem>(degree + 1, 1));
        for (int i = 0; i < n; ++i)
            for (int j = 1; j <= degree; ++j) pw[i][j] = F.mul(pw[i][j - 1], x[i]);
        for (std::size_t c = 0; c < mons.size(); ++c) {
            PrimeField::elem t = 1;
            for (int i = 0; i < n; ++i)
                if (mons[c][i]) t = F.mul(t, pw[i][mons[c][i]]);
            E(r, c) = t;
        }
    }
    auto rk = rank_kernel(F, std::move(E));
    if (rk.kernel.size() != 1)
        throw FitError("fit_form: nullspace dimension " + std::to_string(rk.kernel.size()) + " (expected 1)",
                       rk.kernel.size());
    MultiForm<PrimeField> out{n, degree, {}};
    for (std::size_t c = 0; c < mons.size(); ++c) out.set(F, mons[c], rk.kernel[0][c]);
    return out.normalized(F);
}

}  // namespace fano

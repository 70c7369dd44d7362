#include "fano/bott.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <stdexcept>

namespace fano {

namespace {

// Partitions of n with at most `rows` parts, each at most `cols`.
void partitions(int n, int rows, int cols, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == rows) return;
    int top = std::min(n, cur.empty() ? cols : cur.back());
    for (int a = top; a >= 1; --a) {
        cur.push_back(a);
        partitions(n - a, rows, cols, cur, out);
        cur.pop_back();
    }
}

std::vector<int> conjugate(const std::vector<int>& mu, int length) {
    std::vector<int> c(static_cast<std::size_t>(length), 0);
    for (int part : mu)
        for (int i = 0; i < part; ++i) ++c[static_cast<std::size_t>(i)];
    return c;
}

std::vector<std::vector<int>> box_partitions(int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(p, 2, 3, cur, out);
    return out;
}

std::set<int> clip(const std::set<int>& s, int dim) {
    std::set<int> out;
    for (int q : s)
        if (q >= 0 && q <= dim) out.insert(q);
    return out;
}

std::set<int> all_degrees(int dim) {
    std::set<int> out;
    for (int q = 0; q <= dim; ++q) out.insert(q);
    return out;
}

// The degrees of Y' beyond those of Y, when Y' lies in Y.
std::vector<int> extra_degrees(const Variety& Y, const Variety& Yp) {
    auto rest = Yp.degrees;
    for (int d : Y.degrees) {
        auto it = std::find(rest.begin(), rest.end(), d);
        if (it == rest.end())
            throw std::invalid_argument(std::string("chi_chain: ") + Yp.name + " is not inside " + Y.name);
        rest.erase(it);
    }
    return rest;
}

// E|Y' from twists of E on Y through the Koszul complex of the extra hypersurfaces.
ChiBound koszul(const std::function<ChiBound(int)>& on_Y, const std::vector<int>& extra, int twist, int dim) {
    ChiBound out;
    const std::size_t r = extra.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        int shift = 0, j = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) {
                shift += extra[i];
                ++j;
            }
        auto b = on_Y(twist - shift);
        out.chi += (j % 2 ? -1 : 1) * b.chi;
        for (int q : b.possible) out.possible.insert(q - j);
    }
    out.possible = clip(out.possible, dim);
    return out;
}

ChiBound from_table(const CohomologyTable& t) { return {t.chi(), t.support()}; }

}  // namespace

WeightBundle WeightBundle::twist(int t) const {
    WeightBundle w = *this;
    w.alpha[0] += t;
    w.alpha[1] += t;
    return w;
}

long WeightBundle::rank() const {
    return weyl_dimension({alpha[0], alpha[1]}) * weyl_dimension({beta[0], beta[1], beta[2]});
}

std::array<int, 5> WeightBundle::key() const {
    std::array<int, 5> k{alpha[0], alpha[1], beta[0], beta[1], beta[2]};
    const int c = beta[2];
    for (auto& x : k) x -= c;
    return k;
}

std::string to_string(const WeightBundle& w) {
    std::string s = "E[" + std::to_string(w.alpha[0]) + "," + std::to_string(w.alpha[1]) + "|" +
                    std::to_string(w.beta[0]) + "," + std::to_string(w.beta[1]) + "," + std::to_string(w.beta[2]) +
                    "]";
    if (w.multiplicity != 1) s = std::to_string(w.multiplicity) + "*" + s;
    return s;
}

long CohomologyTable::chi() const {
    long c = 0;
    for (std::size_t q = 0; q < h.size(); ++q) c += (q % 2 ? -1 : 1) * h[q];
    return c;
}

std::set<int> CohomologyTable::support() const {
    std::set<int> s;
    for (std::size_t q = 0; q < h.size(); ++q)
        if (h[q] != 0) s.insert(static_cast<int>(q));
    return s;
}

long weyl_dimension(const std::vector<int>& l) {
    // Numerator and denominator stay small for the ranks used here.
    long num = 1, den = 1;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            num *= l[i] - l[j] + static_cast<long>(j - i);
            den *= static_cast<long>(j - i);
        }
    return num / den;
}

CohomologyTable bott_cohomology(const WeightBundle& w) {
    if (!w.valid()) throw std::invalid_argument("bott_cohomology: weights must be nonincreasing");
    std::array<int, 5> v{w.alpha[0] + 5, w.alpha[1] + 4, w.beta[0] + 3, w.beta[1] + 2, w.beta[2] + 1};
    CohomologyTable t;
    int swaps = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (v[i] == v[j]) return t;
            if (v[i] < v[j]) ++swaps;
        }
    std::sort(v.begin(), v.end(), std::greater<>());
    std::vector<int> lambda(5);
    for (int i = 0; i < 5; ++i) lambda[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] - (5 - i);
    t.h[static_cast<std::size_t>(swaps)] = w.multiplicity * weyl_dimension(lambda);
    return t;
}

CohomologyTable bott_cohomology(const std::vector<WeightBundle>& sum) {
    CohomologyTable t;
    for (const auto& w : sum) {
        auto u = bott_cohomology(w);
        for (std::size_t q = 0; q < t.h.size(); ++q) t.h[q] += u.h[q];
    }
    return t;
}

std::vector<WeightBundle> decompose_forms(int p, int twist) {
    if (p < 0 || p > kGrassmannianDim) return {};
    if (p == 0) return {WeightBundle{{twist, twist}, {0, 0, 0}, 1}};
    std::vector<WeightBundle> out;
    for (const auto& mu : box_partitions(p)) {
        auto m = mu;
        m.resize(2, 0);
        auto c = conjugate(mu, 3);
        // Sigma^mu S (x) Sigma^mu' Q^dual
        out.push_back(WeightBundle{{-m[1] + twist, -m[0] + twist}, {c[0], c[1], c[2]}, 1});
    }
    return out;
}

std::vector<WeightBundle> decompose_polyvectors(int p, int twist) {
    if (p < 0 || p > kGrassmannianDim) return {};
    if (p == 0) return {WeightBundle{{twist, twist}, {0, 0, 0}, 1}};
    std::vector<WeightBundle> out;
    for (const auto& mu : box_partitions(p)) {
        auto m = mu;
        m.resize(2, 0);
        auto c = conjugate(mu, 3);
        // Sigma^mu S^dual (x) Sigma^mu' Q
        out.push_back(WeightBundle{{m[0] + twist, m[1] + twist}, {-c[2], -c[1], -c[0]}, 1});
    }
    return out;
}

bool same_bundle(const std::vector<WeightBundle>& a, const std::vector<WeightBundle>& b) {
    auto tally = [](const std::vector<WeightBundle>& s) {
        std::map<std::array<int, 5>, int> m;
        for (const auto& w : s) m[w.key()] += w.multiplicity;
        return m;
    };
    return tally(a) == tally(b);
}

Variety variety(char name) {
    switch (name) {
        case 'G': return {'G', {}};
        case 'L': return {'L', {1}};
        case 'X': return {'X', {2}};
        case 'Z': return {'Z', {1, 2}};
        case 'W': return {'W', {1, 1, 2}};
        default: throw std::invalid_argument(std::string("unknown variety ") + name);
    }
}

Descriptor parse_descriptor(const std::string& s) {
    static const std::regex re(
        R"(^(O|T|Omega\^([0-9])|E\[(-?[0-9]+),(-?[0-9]+)\|(-?[0-9]+),(-?[0-9]+),(-?[0-9]+)\])_([GLXZW])(\((-?[0-9]+)\))?(\|([GLXZW]))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("unsupported descriptor: " + s);
    Descriptor d;
    const std::string head = m[1];
    if (head == "O") {
        d.kind = Descriptor::Kind::structure;
    } else if (head == "T") {
        d.kind = Descriptor::Kind::tangent;
    } else if (head.rfind("Omega", 0) == 0) {
        d.kind = Descriptor::Kind::forms;
        d.p = std::stoi(m[2]);
    } else {
        d.kind = Descriptor::Kind::weight;
        d.weight = WeightBundle{{std::stoi(m[3]), std::stoi(m[4])}, {std::stoi(m[5]), std::stoi(m[6]), std::stoi(m[7])}, 1};
        if (!d.weight.valid()) throw std::invalid_argument("weights must be nonincreasing: " + s);
    }
    d.base = std::string(m[8])[0];
    if (m[10].matched) d.twist = std::stoi(m[10]);
    if (m[12].matched) d.restricted = std::string(m[12])[0];
    if (d.kind == Descriptor::Kind::weight && d.base != 'G')
        throw std::invalid_argument("weight bundles live on G: " + s);
    return d;
}

std::string to_string(const Descriptor& d) {
    std::string s;
    switch (d.kind) {
        case Descriptor::Kind::structure: s = "O"; break;
        case Descriptor::Kind::tangent: s = "T"; break;
        case Descriptor::Kind::forms: s = "Omega^" + std::to_string(d.p); break;
        case Descriptor::Kind::weight: s = to_string(d.weight); break;
    }
    s += std::string("_") + d.base;
    if (d.twist != 0) s += "(" + std::to_string(d.twist) + ")";
    if (d.restricted) s += std::string("|") + d.restricted;
    return s;
}

long ChiBound::h(int q) const {
    if (!determined()) throw std::logic_error("cohomology not determined by chi");
    if (!possible.count(q)) return 0;
    return (q % 2 ? -1 : 1) * chi;
}

namespace {

ChiBound on_G(const Descriptor& d, int twist) {
    switch (d.kind) {
        case Descriptor::Kind::structure: return from_table(bott_cohomology(decompose_forms(0, twist)));
        case Descriptor::Kind::tangent: return from_table(bott_cohomology(decompose_polyvectors(1, twist)));
        case Descriptor::Kind::forms: return from_table(bott_cohomology(decompose_forms(d.p, twist)));
        case Descriptor::Kind::weight: return from_table(bott_cohomology(d.weight.twist(twist)));
    }
    throw std::logic_error("unreachable");
}

ChiBound forms_on(const Variety& Y, int p, int twist);

// A bundle from G restricted to Y.
ChiBound restricted_from_G(const Descriptor& d, const Variety& Y, int twist) {
    return koszul([&](int t) { return on_G(d, t); }, Y.degrees, twist, Y.dim());
}

ChiBound structure_on(const Variety& Y, int twist) {
    Descriptor o;
    return restricted_from_G(o, Y, twist);
}

// T_Y(twist) restricted to Yp inside Y: 0 -> T_Y|Yp -> T_G|Yp -> sum O_Yp(twist + d) -> 0.
ChiBound tangent_on(const Variety& Y, const Variety& Yp, int twist) {
    Descriptor tg;
    tg.kind = Descriptor::Kind::tangent;
    ChiBound B = restricted_from_G(tg, Yp, twist), out;
    out.chi = B.chi;
    out.possible = B.possible;
    for (int d : Y.degrees) {
        auto C = structure_on(Yp, twist + d);
        out.chi -= C.chi;
        for (int q : C.possible) out.possible.insert(q + 1);
    }
    out.possible = clip(out.possible, Yp.dim());
    return out;
}

// Omega^p_G|Y is filtered with quotients Omega^{p-j}_Y (x) wedge^j N^dual.
ChiBound forms_on(const Variety& Y, int p, int twist) {
    if (p < 0 || p > Y.dim()) return {};
    if (Y.degrees.empty()) {
        Descriptor f;
        f.kind = Descriptor::Kind::forms;
        f.p = p;
        return on_G(f, twist);
    }
    Descriptor f;
    f.kind = Descriptor::Kind::forms;
    f.p = p;
    ChiBound out;
    out.chi = restricted_from_G(f, Y, twist).chi;
    const std::size_t r = Y.degrees.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask) {
        int shift = 0, j = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) {
                shift += Y.degrees[i];
                ++j;
            }
        out.chi -= forms_on(Y, p - j, twist - shift).chi;
    }
    out.possible = all_degrees(Y.dim());
    return out;
}

}  // namespace

ChiBound chi_chain(const Descriptor& d) {
    const Variety Y = variety(d.base);
    const Variety Yp = d.restricted ? variety(d.restricted) : Y;
    const auto extra = extra_degrees(Y, Yp);
    switch (d.kind) {
        case Descriptor::Kind::structure: return structure_on(Yp, d.twist);
        case Descriptor::Kind::weight: return restricted_from_G(d, Yp, d.twist);
        case Descriptor::Kind::tangent:
            if (Y.name == 'G') return restricted_from_G(d, Yp, d.twist);
            return tangent_on(Y, Yp, d.twist);
        case Descriptor::Kind::forms:
            if (Y.name == 'G') return restricted_from_G(d, Yp, d.twist);
            if (!extra.empty()) throw std::invalid_argument("chi_chain: forms of Y restricted further are not supported");
            return forms_on(Y, d.p, d.twist);
    }
    throw std::logic_error("unreachable");
}

ChiBound chi_chain(const std::string& descriptor) { return chi_chain(parse_descriptor(descriptor)); }

bool HodgeReport::ok() const {
    return std::all_of(steps.begin(), steps.end(), [](const HodgeStep& s) { return s.holds; });
}

HodgeReport hodge_check() {
    HodgeReport rep;
    auto add = [&](std::string claim, bool holds, std::string detail) {
        rep.steps.push_back({std::move(claim), holds, std::move(detail)});
    };
    auto supp = [](const std::set<int>& s) {
        std::string out = "{";
        for (int q : s) out += (out.size() > 1 ? "," : "") + std::to_string(q);
        return out + "}";
    };

    for (int k = 1; k <= 4; ++k) {
        auto t = bott_cohomology(decompose_polyvectors(1, -k));
        add("TG(-" + std::to_string(k) + ") acyclic", t.support().empty(), "support " + supp(t.support()));
    }
    {
        auto t = bott_cohomology(decompose_polyvectors(1, -5));
        bool iso = same_bundle(decompose_polyvectors(1, -5), decompose_forms(5));
        add("TG(-5) = Omega^5_G with cohomology in degree 5 only", iso && t.support() == std::set<int>{5},
            "support " + supp(t.support()) + ", h^5 = " + std::to_string(t.h[5]));
    }
    {
        auto t = bott_cohomology(decompose_polyvectors(2, -3));
        add("wedge^2 TG(-3) acyclic", t.support().empty(), "support " + supp(t.support()));
        auto u = bott_cohomology(decompose_polyvectors(2, -5));
        bool iso = same_bundle(decompose_polyvectors(2, -5), decompose_forms(4));
        add("wedge^2 TG(-5) = Omega^4_G with cohomology in degree 4 only", iso && u.support() == std::set<int>{4},
            "support " + supp(u.support()));
    }
    const std::vector<std::pair<std::string, long>> chis{
        {"Omega^2_G", 2},   {"Omega^2_G(-1)", 0}, {"Omega^2_G(-2)", 0},
        {"Omega^2_G(-3)", -5}, {"Omega^2_G|Z", -3}, {"Omega^2_Z", 22},
    };
    for (const auto& [d, want] : chis) {
        long got = chi_chain(d).chi;
        add("chi(" + d + ") = " + std::to_string(want), got == want, "computed " + std::to_string(got));
    }

    // h^{3,1}(Z) = h^1(TZ(-2)) since K_Z = O(-2); with L = G cap H,
    // 0 -> TZ(-2) -> TL(-2)|Z -> O_Z -> 0.
    {
        auto tl = chi_chain("T_L(-2)|Z");
        bool low = !tl.possible.count(0) && !tl.possible.count(1);
        add("TL(-2)|Z has no cohomology in degrees 0 and 1", low, "possible degrees " + supp(tl.possible));
        auto oz = chi_chain("O_Z");
        add("h^0(O_Z) = 1", oz.determined() && oz.h(0) == 1, "possible degrees " + supp(oz.possible));
        rep.h31 = low && oz.determined() ? oz.h(0) : -1;
        add("h^{3,1}(Z) = 1", rep.h31 == 1, "h^1(TZ(-2)) = h^0(O_Z)");
    }
    {
        rep.h22 = chi_chain("Omega^2_Z").chi;
        add("h^{2,2}(Z) = 22", rep.h22 == 22, "chi(Omega^2_Z), the other h^{2,q} vanishing");
    }
    for (int p = 0; p <= 4; ++p) rep.chi_forms_Z[static_cast<std::size_t>(p)] = chi_chain(parse_descriptor("Omega^" + std::to_string(p) + "_Z")).chi;
    {
        const std::array<long, 5> want{1, -2, 22, -2, 1};
        add("chi(Omega^p_Z) = 1, -2, 22, -2, 1", rep.chi_forms_Z == want, "from the diamond's columns");
    }
    {
        // X = G cap Q: 0 -> TX(-1) -> TG(-1)|X -> O_X(1) -> 0.
        auto t = chi_chain("T_X(-1)");
        rep.h1_TX_minus1 = t.determined() ? t.h(1) : -1;
        add("h^1(X, TX(-1)) = 10 for X = G cap Q", rep.h1_TX_minus1 == 10,
            "possible degrees " + supp(t.possible) + ", chi " + std::to_string(t.chi));
    }
    return rep;
}

}  // namespace fano

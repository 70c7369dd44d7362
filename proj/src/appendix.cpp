#include "fano/appendix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fano {

namespace {

using sym::Exp;
using sym::Poly;

const std::array<std::string, 10> kPairNames{"12", "13", "14", "15", "23", "24", "25", "34", "35", "45"};

std::string psi(int i) { return "psi" + std::to_string(i); }
std::string qname(int a, int b) { return "q" + kPairNames[static_cast<std::size_t>(a)] + "_" + kPairNames[static_cast<std::size_t>(b)]; }

int pair_index(const std::string& s) {
    return static_cast<int>(std::find(kPairNames.begin(), kPairNames.end(), s) - kPairNames.begin());
}

sym::Vars oracle_vars() {
    sym::Vars v;
    for (const char* n : {"z4", "z5", "s", "t5", "t2", "t4", "z2"}) v.add(n);
    for (int i = 1; i <= 13; ++i) v.add(psi(i));
    for (const auto& n : kPairNames) v.add("h" + n);
    for (int a = 0; a < 10; ++a)
        for (int b = a; b < 10; ++b) v.add(qname(a, b));
    return v;
}

// Coefficients of h and q after the relations forced by containing the
// double line and the normalization by the stabilizer.
Poly h_coef(const sym::Vars& v, int a) {
    const std::string& n = kPairNames[static_cast<std::size_t>(a)];
    if (n == "12" || n == "13") return Poly{};
    if (n == "23") return -Poly::var(v, "h14");
    return Poly::var(v, "h" + n);
}

Poly q_coef(const sym::Vars& v, int a, int b) {
    const std::string A = kPairNames[static_cast<std::size_t>(a)], B = kPairNames[static_cast<std::size_t>(b)];
    auto is = [&](const char* x, const char* y) { return A == x && B == y; };
    if (is("12", "12") || is("12", "13") || is("13", "13")) return Poly{};
    if (is("14", "23") || is("12", "45") || is("13", "45")) return Poly{};
    if (is("12", "23")) return -Poly::var(v, qname(pair_index("12"), pair_index("14")));
    if (is("13", "23")) return -Poly::var(v, qname(pair_index("13"), pair_index("14")));
    for (const auto& [u, w] : {std::pair{A, B}, std::pair{B, A}})
        if (u == "23" && w != "23") return Poly::var(v, qname(pair_index("14"), pair_index(w)));
    return Poly::var(v, qname(a, b));
}

// Pluecker coordinates of w1 ^ w3, w1 = (1, z2, 0, z4, z5), w3 = (0, t2, 1, t4, t5).
std::array<Poly, 10> chart_pluecker(const sym::Vars& v) {
    const int n = v.size();
    auto x = [&](const char* name) { return Poly::var(v, name); };
    const Poly one = Poly::constant(n, 1), zero;
    std::array<Poly, 5> w1{one, x("z2"), zero, x("z4"), x("z5")};
    std::array<Poly, 5> w3{zero, x("t2"), one, x("t4"), x("t5")};
    std::array<Poly, 10> p;
    int k = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) p[static_cast<std::size_t>(k++)] = w1[i] * w3[j] - w1[j] * w3[i];
    return p;
}

// phi(f) for f in the ideal of the tau double line {t4^2, t5, t4 - z2, z5, z4}:
// write f = sum g_k * gen_k and send it to sum g_k|_l * psi(gen_k), in k[t2, t4]/t4^2.
Poly apply_tau(const sym::Vars& v, const Poly& f0) {
    const int z4 = v.index("z4"), z5 = v.index("z5"), s = v.index("s"), t5 = v.index("t5"), t4 = v.index("t4");
    const Poly f = sym::substitute(f0, v.index("z2"), Poly::var(v, "t4") - Poly::var(v, "s"));
    auto x = [&](const char* name) { return Poly::var(v, name); };
    auto P = [&](int i) { return Poly::var(v, psi(i)); };
    const std::array<int, 4> lin{z4, z5, s, t5};
    const std::array<Poly, 5> image{
        P(13) + P(3) * x("t2") + (P(5) - P(10)) * x("t4"),
        P(12) + P(7) * x("t4"),
        P(9) + P(10) * x("t2") + P(11) * x("t4"),
        P(6) + P(7) * x("t2") + P(8) * x("t4"),
        P(1) + P(2) * x("t2") + P(3) * x("t2") * x("t2") + P(4) * x("t4") + P(5) * x("t2") * x("t4"),
    };
    std::array<Poly, 5> quot;
    for (const auto& [e, c] : f.terms) {
        Exp q = e;
        int gen = -1;
        for (std::size_t k = 0; k < lin.size() && gen < 0; ++k)
            if (q[static_cast<std::size_t>(lin[k])] > 0) {
                --q[static_cast<std::size_t>(lin[k])];
                gen = static_cast<int>(k);
            }
        if (gen < 0 && q[static_cast<std::size_t>(t4)] >= 2) {
            q[static_cast<std::size_t>(t4)] -= 2;
            gen = 4;
        }
        if (gen < 0) throw std::logic_error("appendix oracle: form does not vanish on the double line");
        quot[static_cast<std::size_t>(gen)].add_term(q, c);
    }
    Poly out;
    for (std::size_t k = 0; k < 5; ++k) {
        Poly r = sym::truncate(sym::drop_terms_with(quot[k], {z4, z5, s, t5}), t4, 2);
        out += r * image[k];
    }
    return sym::truncate(out, t4, 2);
}

// Coefficients of the listed monomials in t2, t4; anything else is an error.
std::vector<Poly> extract(const sym::Vars& v, const Poly& f, const std::vector<std::array<int, 2>>& monos) {
    const std::vector<int> vars{v.index("t2"), v.index("t4")};
    std::vector<Poly> out;
    Poly rest = f;
    for (const auto& m : monos) {
        Poly c = sym::coeff_of(f, vars, {m[0], m[1]});
        rest -= c * Poly::var(v, "t2", m[0]) * Poly::var(v, "t4", m[1]);
        out.push_back(c);
    }
    if (!rest.is_zero()) throw std::logic_error("appendix oracle: unexpected monomial in t2, t4");
    return out;
}

std::vector<Cell> compare_cells(const Mat<Poly>& A, const Mat<Poly>& B) {
    std::vector<Cell> out;
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j)
            if (!(A(i, j) == B(i, j))) out.push_back({static_cast<int>(i), static_cast<int>(j)});
    return out;
}

std::vector<int> parameter_vars(const sym::Vars& v) {
    std::vector<int> out;
    for (int i = 0; i < v.size(); ++i)
        if (v.name(i)[0] == 'h' || v.name(i)[0] == 'q') out.push_back(i);
    return out;
}

}  // namespace

AppendixParams<Poly> appendix_symbols(const sym::Vars& v) {
    auto x = [&](const std::string& n) { return Poly::var(v, n); };
    auto q = [&](const char* a, const char* b) { return x(qname(pair_index(a), pair_index(b))); };
    AppendixParams<Poly> p;
    p.h14 = x("h14"), p.h15 = x("h15"), p.h24 = x("h24"), p.h25 = x("h25");
    p.h34 = x("h34"), p.h35 = x("h35"), p.h45 = x("h45");
    p.a15 = q("12", "15"), p.a24 = q("12", "24"), p.a25 = q("12", "25"), p.a34 = q("12", "34"), p.a35 = q("12", "35");
    p.b15 = q("13", "15"), p.b24 = q("13", "24"), p.b25 = q("13", "25"), p.b34 = q("13", "34"), p.b35 = q("13", "35");
    p.c15 = 2 * q("14", "15"), p.c24 = 2 * q("14", "24"), p.c25 = 2 * q("14", "25");
    p.c34 = 2 * q("14", "34"), p.c35 = 2 * q("14", "35");
    p.d = q("12", "14");
    p.e = q("13", "14");
    p.f = -2 * q("23", "23");
    p.g = q("14", "14") + q("23", "23");
    return p;
}

std::array<Poly, 8> appendix_forms(const sym::Vars& v, Transcription tr) {
    const auto p = appendix_symbols(v);
    auto P = [&](int i) { return Poly::var(v, psi(i)); };
    const bool fix = tr == Transcription::corrected;
    Poly A = p.h15 * P(6) + p.h14 * P(9) + p.h24 * P(1) - p.h34 * P(13) - p.h35 * P(12);
    Poly B = p.h15 * P(7) + p.h14 * P(10) + p.h24 * (P(2) - P(13)) - p.h34 * P(3) - p.h25 * P(12);
    Poly C = p.h15 * P(fix ? 8 : 3) + p.h14 * P(11) + p.h24 * (P(4) - P(9)) - p.h34 * (P(5) - P(10)) -
             p.h35 * P(7) + p.h25 * P(6) - p.h45 * P(12);
    Poly D = p.b15 * P(6) + (p.b24 + p.g) * P(1) - p.b34 * P(13) - p.b35 * P(12) + p.e * P(9);
    Poly E = p.a15 * P(6) + p.b15 * P(7) + p.a24 * P(1) + p.b24 * (P(2) - P(13)) - (p.a35 + p.b25) * P(12) -
             p.a34 * P(13) - p.b34 * P(3) + p.d * P(9) + p.e * P(10) + p.g * P(2);
    Poly F = p.a15 * P(7) + p.a24 * (P(2) - P(13)) - p.a25 * P(12) + (p.g - p.a34) * P(3) + p.d * P(10);
    Poly G = p.b15 * P(8) + (p.b25 + p.c15) * P(6) + p.c24 * P(1) + p.b24 * (P(4) - P(9)) -
             p.b34 * (P(5) - P(10)) - p.c34 * P(13) - p.b35 * P(7) - p.c35 * P(12) + p.f * P(9) + p.e * P(11) +
             p.g * P(4);
    Poly H = p.a15 * P(8) + p.c15 * P(7) + p.a24 * (P(4) - P(9)) + p.c24 * (P(2) - P(13)) + p.a25 * P(6) -
             p.c25 * P(12) - p.a34 * (P(5) - P(10)) - p.c34 * P(3) - p.a35 * P(7) + p.g * P(5) + p.f * P(10) +
             p.d * P(11);
    return {D, E, F, G, H, A, B, C};
}

std::vector<std::string> compare_forms(const std::array<Poly, 8>& a, const std::array<Poly, 8>& b) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < 8; ++j)
        if (!(a[j] == b[j])) out.emplace_back(kFormNames[j]);
    return out;
}

Mat<Poly> forms_matrix(const sym::Vars& v, const std::array<Poly, 8>& forms) {
    Mat<Poly> M(13, 8, Poly{});
    for (std::size_t j = 0; j < 8; ++j) {
        Poly rest = forms[j];
        for (int i = 1; i <= 13; ++i) {
            const int k = v.index(psi(i));
            M(static_cast<std::size_t>(i - 1), j) = sym::coeff(forms[j], k, 1);
            rest -= M(static_cast<std::size_t>(i - 1), j) * Poly::var(v, psi(i));
        }
        if (!rest.is_zero()) throw std::invalid_argument("forms_matrix: form is not linear in psi");
    }
    return M;
}

AppendixOracle appendix_oracle() {
    AppendixOracle o;
    o.vars = oracle_vars();
    const auto& v = o.vars;
    const auto p = chart_pluecker(v);

    // Dehomogenized by p13 = 1.
    Poly h, q;
    for (int a = 0; a < 10; ++a) {
        h += h_coef(v, a) * p[static_cast<std::size_t>(a)];
        for (int b = a; b < 10; ++b) q += q_coef(v, a, b) * p[static_cast<std::size_t>(a)] * p[static_cast<std::size_t>(b)];
    }
    auto hq = extract(v, apply_tau(v, h), {{{0, 0}}, {{1, 0}}, {{0, 1}}});
    auto qq = extract(v, apply_tau(v, q), {{{0, 0}}, {{1, 0}}, {{2, 0}}, {{0, 1}}, {{1, 1}}});
    o.forms = {qq[0], qq[1], qq[2], qq[3], qq[4], hq[0], hq[1], hq[2]};

    o.forms_vs_printed = compare_forms(o.forms, appendix_forms(v, Transcription::printed));
    o.forms_vs_corrected = compare_forms(o.forms, appendix_forms(v, Transcription::corrected));

    const auto M = forms_matrix(v, o.forms);
    const auto sy = appendix_symbols(v);
    o.matrix_vs_printed = compare_cells(M, appendix_matrix(sy, Transcription::printed));
    o.matrix_vs_corrected = compare_cells(M, appendix_matrix(sy, Transcription::corrected));
    const auto PM = permute_appendix(M);
    o.permuted_vs_printed = compare_cells(PM, appendix_permuted(sy, Transcription::printed));
    o.permuted_vs_corrected = compare_cells(PM, appendix_permuted(sy, Transcription::corrected));

    const auto params = parameter_vars(v);
    {
        PrimeField F(kInterpolationPrime);
        Rng rng(1, "appendix/generic-rank");
        std::vector<PrimeField::elem> x(static_cast<std::size_t>(v.size()), 0);
        for (int i : params) x[static_cast<std::size_t>(i)] = F.random(rng);
        auto N = zeros(F, 13, 8);
        for (std::size_t i = 0; i < 13; ++i)
            for (std::size_t j = 0; j < 8; ++j) N(i, j) = sym::eval(F, M(i, j), x);
        o.generic_rank = static_cast<int>(rank(F, N));
    }
    {
        // phi images at random rational parameters and psi, against the
        // corrected matrix applied to psi.
        Rng rng(2, "appendix/numeric");
        const auto Mc = appendix_matrix(sy, Transcription::corrected);
        o.numeric_agreement = true;
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<mpq_class> x(static_cast<std::size_t>(v.size()), 0);
            for (int i : params) {
                auto& xi = x[static_cast<std::size_t>(i)];
                xi = mpq_class(static_cast<long>(rng.range(-50, 50)), static_cast<unsigned long>(rng.range(1, 7)));
                xi.canonicalize();
            }
            for (int i = 1; i <= 13; ++i) x[static_cast<std::size_t>(v.index(psi(i)))] = mpq_class(static_cast<long>(rng.range(-50, 50)));
            for (std::size_t j = 0; j < 8; ++j) {
                mpq_class lhs = sym::eval(o.forms[j], x), rhs = 0;
                for (int i = 1; i <= 13; ++i)
                    rhs += sym::eval(Mc(static_cast<std::size_t>(i - 1), j), x) * x[static_cast<std::size_t>(v.index(psi(i)))];
                if (lhs != rhs) o.numeric_agreement = false;
            }
        }
    }
    return o;
}

bool AppendixOracle::ok() const {
    const std::vector<std::string> forms{"C"};
    const std::vector<Cell> cells{{5, 3}, {5, 4}};
    const std::vector<Cell> permuted{{3, 5}, {3, 6}, {6, 5}};
    return forms_vs_corrected.empty() && matrix_vs_corrected.empty() && permuted_vs_corrected.empty() &&
           forms_vs_printed == forms && matrix_vs_printed == cells && permuted_vs_printed == permuted &&
           generic_rank == 8 && numeric_agreement;
}

RankStats appendix_rank_stats(std::uint64_t p, long samples, std::uint64_t seed) {
    if (p >= 256 || !is_prime_u64(p)) throw std::invalid_argument("appendix_rank_stats: need a prime below 256");
    std::vector<std::uint8_t> inv(p, 0);
    for (std::uint64_t a = 1; a < p; ++a)
        for (std::uint64_t b = 1; b < p; ++b)
            if (a * b % p == 1) inv[a] = static_cast<std::uint8_t>(b);

    Rng rng(seed, "appendix/rank-stats/" + std::to_string(p));
    RankStats st;
    st.p = p;
    st.samples = samples;
    const auto P = static_cast<long long>(p);
    for (long s = 0; s < samples; ++s) {
        AppendixParams<long long> a{};
        for (long long* f : {&a.h14, &a.h15, &a.h24, &a.h25, &a.h34, &a.h35, &a.h45, &a.a15, &a.a24,
                             &a.a25, &a.a34, &a.a35, &a.b15, &a.b24, &a.b25, &a.b34, &a.b35, &a.c15,
                             &a.c24, &a.c25, &a.c34, &a.c35, &a.d,   &a.e,   &a.f,   &a.g})
            *f = static_cast<long long>(rng.below(p));
        const auto M = appendix_matrix(a, Transcription::corrected);
        std::array<std::array<std::uint32_t, 8>, 13> m{};
        for (std::size_t i = 0; i < 13; ++i)
            for (std::size_t j = 0; j < 8; ++j) m[i][j] = static_cast<std::uint32_t>(((M(i, j) % P) + P) % P);
        int r = 0;
        for (std::size_t c = 0; c < 8 && r < 8; ++c) {
            std::size_t piv = static_cast<std::size_t>(r);
            while (piv < 13 && m[piv][c] == 0) ++piv;
            if (piv == 13) continue;
            std::swap(m[piv], m[static_cast<std::size_t>(r)]);
            auto& pr = m[static_cast<std::size_t>(r)];
            const std::uint32_t iv = inv[pr[c]];
            for (std::size_t j = c; j < 8; ++j) pr[j] = static_cast<std::uint32_t>(pr[j] * iv % p);
            for (std::size_t i = static_cast<std::size_t>(r) + 1; i < 13; ++i) {
                const std::uint32_t f = m[i][c];
                if (f == 0) continue;
                for (std::size_t j = c; j < 8; ++j)
                    m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p - f) * pr[j]) % p);
            }
            ++r;
        }
        if (r < 8) ++st.deficient;
    }
    return st;
}

}  // namespace fano

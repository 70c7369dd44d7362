#pragma once

#include <array>
#include <utility>

#include "fano/matrix.hpp"

namespace fano {

// Pluecker coordinates p_ij, i < j, in the order 12,13,14,15,23,24,25,34,35,45
// (0-based indices below). The orientation is e1^e2^e3^e4^e5 -> 1.

inline constexpr std::array<std::pair<int, int>, 10> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};

/// Index of e_i^e_j in the Pluecker order; requires i < j.
constexpr int pair_index(int i, int j) {
    for (int a = 0; a < 10; ++a)
        if (kPairs[a].first == i && kPairs[a].second == j) return a;
    return -1;
}

/// Sign of the permutation listed in `p` (entries distinct, 0-based); 0 if
/// an entry repeats.
template <std::size_t N>
constexpr int perm_sign(std::array<int, N> p) {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (p[i] == p[j]) return 0;
    int s = 1;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

/// sign(m, i, j, k, l) for the pairs a = (ij), b = (kl); m is the missing
/// index. Zero when the pairs meet.
constexpr int pfaff_sign(int a, int b, int& m) {
    auto [i, j] = kPairs[a];
    auto [k, l] = kPairs[b];
    int used = (1 << i) | (1 << j) | (1 << k) | (1 << l);
    if (i == k || i == l || j == k || j == l) return 0;
    m = 0;
    while (used & (1 << m)) ++m;
    return perm_sign(std::array<int, 5>{m, i, j, k, l});
}

template <class K>
Vec<typename K::elem> wedge2(const K& F, const Vec<typename K::elem>& u, const Vec<typename K::elem>& w) {
    Vec<typename K::elem> p(10);
    for (int a = 0; a < 10; ++a) {
        auto [i, j] = kPairs[a];
        p[a] = F.sub(F.mul(u[i], w[j]), F.mul(u[j], w[i]));
    }
    return p;
}

/// Symmetric M with x^T M y = coefficient of v^x^y.
template <class K>
Mat<typename K::elem> pfaffian_quadric(const K& F, const Vec<typename K::elem>& v) {
    auto M = zeros(F, 10, 10);
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            int m = 0;
            int s = pfaff_sign(a, b, m);
            if (s == 0) continue;
            M(a, b) = s > 0 ? v[m] : F.neg(v[m]);
        }
    return M;
}

/// r with v^x^y = sum_m v_m r_m, i.e. the 4-vector x^y in the basis dual to e_m.
template <class K>
Vec<typename K::elem> wedge_bivectors(const K& F, const Vec<typename K::elem>& x, const Vec<typename K::elem>& y) {
    Vec<typename K::elem> r(5, F.zero());
    for (int a = 0; a < 10; ++a) {
        if (F.is_zero(x[a])) continue;
        for (int b = 0; b < 10; ++b) {
            int m = 0;
            int s = pfaff_sign(a, b, m);
            if (s == 0) continue;
            auto t = F.mul(x[a], y[b]);
            r[m] = s > 0 ? F.add(r[m], t) : F.sub(r[m], t);
        }
    }
    return r;
}

/// The alternating 5x5 matrix of a bivector.
template <class K>
Mat<typename K::elem> skew_matrix(const K& F, const Vec<typename K::elem>& w) {
    auto A = zeros(F, 5, 5);
    for (int a = 0; a < 10; ++a) {
        auto [i, j] = kPairs[a];
        A(i, j) = w[a];
        A(j, i) = F.neg(w[a]);
    }
    return A;
}

template <class E>
struct BivectorSupport {
    int rank = 0;
    Mat<E> support;  // reduced echelon rows: V_4 for rank 4, V_2 for rank 2
};

template <class K>
BivectorSupport<typename K::elem> bivector_rank_support(const K& F, const Vec<typename K::elem>& w) {
    BivectorSupport<typename K::elem> out;
    auto A = skew_matrix(F, w);
    out.rank = static_cast<int>(rank(F, A));
    if (out.rank == 4) {
        // {v : v^w^w = 0} is the kernel of the single row w^w.
        auto ww = wedge_bivectors(F, w, w);
        auto row = zeros(F, 1, 5);
        row.set_row(0, ww);
        out.support = from_rows(F, rank_kernel(F, row).kernel, 5);
        out.support = row_basis(F, out.support);
    } else if (out.rank == 2) {
        out.support = row_basis(F, A);
    } else {
        out.support = zeros(F, 0, 5);
    }
    return out;
}

template <class K>
bool is_decomposable(const K& F, const Vec<typename K::elem>& w) {
    return is_zero_vec(F, wedge_bivectors(F, w, w));
}

/// Basis rows f_a ^ f_b (a < b) of wedge^2 of the row space of B (r x 5).
template <class K>
Mat<typename K::elem> wedge2_basis(const K& F, const Mat<typename K::elem>& B) {
    std::vector<Vec<typename K::elem>> rows;
    for (std::size_t a = 0; a < B.rows; ++a)
        for (std::size_t b = a + 1; b < B.rows; ++b) rows.push_back(wedge2(F, B.row(a), B.row(b)));
    return from_rows(F, rows, 10);
}

/// B Q B^T for the subspace spanned by the rows of B; rows must be independent.
template <class K>
Mat<typename K::elem> restrict_quadric(const K& F, const Mat<typename K::elem>& Q, const Mat<typename K::elem>& B) {
    if (rank(F, B) != B.rows) throw std::invalid_argument("restrict_quadric: dependent basis");
    return congruence(F, Q, B);
}

/// x^T M x = coefficient of x^x on f1^f2^f3^f4 for x in wedge^2 of a
/// 4-space, coordinates in the order 12,13,14,23,24,34.
template <class K>
Mat<typename K::elem> plucker_quadric_g24(const K& F) {
    auto M = zeros(F, 6, 6);
    // x^x = 2 (x12 x34 - x13 x24 + x14 x23)
    M(0, 5) = M(5, 0) = F.one();
    M(1, 4) = M(4, 1) = F.neg(F.one());
    M(2, 3) = M(3, 2) = F.one();
    return M;
}

/// Derivation action of an endomorphism phi (5x5, phi(e_j) = column j) on
/// bivectors: phi(v^v') = phi(v)^v' + v^phi(v').
template <class K>
Vec<typename K::elem> contract(const K& F, const Mat<typename K::elem>& phi, const Vec<typename K::elem>& w) {
    Vec<typename K::elem> out(10, F.zero());
    for (int a = 0; a < 10; ++a) {
        if (F.is_zero(w[a])) continue;
        auto [i, j] = kPairs[a];
        Vec<typename K::elem> ei(5, F.zero()), ej(5, F.zero()), pi(5), pj(5);
        ei[i] = F.one();
        ej[j] = F.one();
        for (int r = 0; r < 5; ++r) {
            pi[r] = phi(r, i);
            pj[r] = phi(r, j);
        }
        auto t = wedge2(F, pi, ej);
        auto u = wedge2(F, ei, pj);
        for (int b = 0; b < 10; ++b) out[b] = F.add(out[b], F.mul(w[a], F.add(t[b], u[b])));
    }
    return out;
}

/// The map v -> phi(v) = f(v) u for f a linear form and u a vector, as a
/// 5x5 matrix; this is how Hom(V_4, V_1) elements are represented.
template <class K>
Mat<typename K::elem> rank_one_map(const K& F, const Vec<typename K::elem>& u, const Vec<typename K::elem>& f) {
    auto M = zeros(F, 5, 5);
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 5; ++c) M(r, c) = F.mul(u[r], f[c]);
    return M;
}

/// A vector u with f(u) = 1 (f nonzero).
template <class K>
Vec<typename K::elem> dual_vector(const K& F, const Vec<typename K::elem>& f) {
    Vec<typename K::elem> u(f.size(), F.zero());
    for (std::size_t i = 0; i < f.size(); ++i)
        if (!F.is_zero(f[i])) {
            u[i] = F.inv(f[i]);
            return u;
        }
    throw std::invalid_argument("dual_vector: zero form");
}

}  // namespace fano

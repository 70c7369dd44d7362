#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fano/field.hpp"

namespace fano {

template <class E>
struct Mat {
    std::size_t rows = 0, cols = 0;
    std::vector<E> a;

    Mat() = default;
    Mat(std::size_t r, std::size_t c, const E& fill) : rows(r), cols(c), a(r * c, fill) {}

    E& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const E& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::vector<E> row(std::size_t i) const {
        return std::vector<E>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
    }
    void set_row(std::size_t i, const std::vector<E>& v) {
        if (v.size() != cols) throw std::invalid_argument("set_row: length mismatch");
        for (std::size_t j = 0; j < cols; ++j) (*this)(i, j) = v[j];
    }
    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

template <class E>
using Vec = std::vector<E>;

template <class K>
Mat<typename K::elem> zeros(const K& F, std::size_t r, std::size_t c) {
    return Mat<typename K::elem>(r, c, F.zero());
}

template <class K>
Mat<typename K::elem> identity(const K& F, std::size_t n) {
    auto M = zeros(F, n, n);
    for (std::size_t i = 0; i < n; ++i) M(i, i) = F.one();
    return M;
}

template <class K>
Mat<typename K::elem> from_rows(const K& F, const std::vector<Vec<typename K::elem>>& rows,
                                std::size_t cols) {
    auto M = zeros(F, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) M.set_row(i, rows[i]);
    return M;
}

template <class K>
Mat<typename K::elem> from_ints(const K& F, const std::vector<std::vector<long long>>& rows) {
    std::size_t c = rows.empty() ? 0 : rows[0].size();
    auto M = zeros(F, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged integer matrix");
        for (std::size_t j = 0; j < c; ++j) M(i, j) = F.from_int(rows[i][j]);
    }
    return M;
}

template <class E>
Mat<E> transpose(const Mat<E>& M) {
    Mat<E> T(M.cols, M.rows, E{});
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j) T(j, i) = M(i, j);
    return T;
}

template <class K>
Mat<typename K::elem> mul(const K& F, const Mat<typename K::elem>& A, const Mat<typename K::elem>& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mul: shape mismatch");
    auto C = zeros(F, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t k = 0; k < A.cols; ++k) {
            const auto& aik = A(i, k);
            if (F.is_zero(aik)) continue;
            for (std::size_t j = 0; j < B.cols; ++j) C(i, j) = F.add(C(i, j), F.mul(aik, B(k, j)));
        }
    return C;
}

template <class K>
Vec<typename K::elem> mul_vec(const K& F, const Mat<typename K::elem>& A, const Vec<typename K::elem>& x) {
    if (A.cols != x.size()) throw std::invalid_argument("mul_vec: shape mismatch");
    Vec<typename K::elem> y(A.rows, F.zero());
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) y[i] = F.add(y[i], F.mul(A(i, j), x[j]));
    return y;
}

template <class K>
typename K::elem dot(const K& F, const Vec<typename K::elem>& x, const Vec<typename K::elem>& y) {
    auto s = F.zero();
    for (std::size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
    return s;
}

/// x^T A y.
template <class K>
typename K::elem bilinear(const K& F, const Mat<typename K::elem>& A, const Vec<typename K::elem>& x,
                          const Vec<typename K::elem>& y) {
    return dot(F, x, mul_vec(F, A, y));
}

template <class K>
Mat<typename K::elem> add(const K& F, const Mat<typename K::elem>& A, const Mat<typename K::elem>& B) {
    if (A.rows != B.rows || A.cols != B.cols) throw std::invalid_argument("add: shape mismatch");
    auto C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = F.add(A.a[i], B.a[i]);
    return C;
}

template <class K>
Mat<typename K::elem> scale(const K& F, const typename K::elem& s, const Mat<typename K::elem>& A) {
    auto C = A;
    for (auto& x : C.a) x = F.mul(s, x);
    return C;
}

/// s A + t B.
template <class K>
Mat<typename K::elem> combo(const K& F, const typename K::elem& s, const Mat<typename K::elem>& A,
                            const typename K::elem& t, const Mat<typename K::elem>& B) {
    return add(F, scale(F, s, A), scale(F, t, B));
}

template <class K>
bool is_zero(const K& F, const Mat<typename K::elem>& A) {
    for (const auto& x : A.a)
        if (!F.is_zero(x)) return false;
    return true;
}

template <class K>
bool is_zero_vec(const K& F, const Vec<typename K::elem>& v) {
    for (const auto& x : v)
        if (!F.is_zero(x)) return false;
    return true;
}

/// B A B^T for a basis given by the rows of B.
template <class K>
Mat<typename K::elem> congruence(const K& F, const Mat<typename K::elem>& A, const Mat<typename K::elem>& B) {
    return mul(F, mul(F, B, A), transpose(B));
}

/// In-place reduced row echelon form; returns pivot columns.
template <class K>
std::vector<std::size_t> rref_inplace(const K& F, Mat<typename K::elem>& M) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t sel = r;
        while (sel < M.rows && F.is_zero(M(sel, c))) ++sel;
        if (sel == M.rows) continue;
        if (sel != r)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M(sel, j), M(r, j));
        auto inv = F.inv(M(r, c));
        for (std::size_t j = c; j < M.cols; ++j) M(r, j) = F.mul(M(r, j), inv);
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r || F.is_zero(M(i, c))) continue;
            auto f = M(i, c);
            for (std::size_t j = c; j < M.cols; ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(r, j)));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class E>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<Vec<E>> kernel;
};

/// Rank and a kernel basis (right null space, one vector per free column).
template <class K>
RankKernel<typename K::elem> rank_kernel(const K& F, Mat<typename K::elem> M) {
    auto piv = rref_inplace(F, M);
    RankKernel<typename K::elem> out;
    out.rank = piv.size();
    std::vector<char> is_piv(M.cols, 0);
    for (auto c : piv) is_piv[c] = 1;
    for (std::size_t f = 0; f < M.cols; ++f) {
        if (is_piv[f]) continue;
        Vec<typename K::elem> v(M.cols, F.zero());
        v[f] = F.one();
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F.neg(M(i, f));
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class K>
std::size_t rank(const K& F, Mat<typename K::elem> M) {
    return rref_inplace(F, M).size();
}

/// Left kernel: vectors y with y^T M = 0.
template <class K>
std::vector<Vec<typename K::elem>> left_kernel(const K& F, const Mat<typename K::elem>& M) {
    return rank_kernel(F, transpose(M)).kernel;
}

/// Row-space basis in reduced echelon form.
template <class K>
Mat<typename K::elem> row_basis(const K& F, Mat<typename K::elem> M) {
    auto piv = rref_inplace(F, M);
    Mat<typename K::elem> B(piv.size(), M.cols, F.zero());
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t j = 0; j < M.cols; ++j) B(i, j) = M(i, j);
    return B;
}

template <class K>
typename K::elem det(const K& F, Mat<typename K::elem> M) {
    if (M.rows != M.cols) throw std::invalid_argument("det: not square");
    auto d = F.one();
    const std::size_t n = M.rows;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && F.is_zero(M(sel, c))) ++sel;
        if (sel == n) return F.zero();
        if (sel != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M(sel, j), M(c, j));
            d = F.neg(d);
        }
        d = F.mul(d, M(c, c));
        auto inv = F.inv(M(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (F.is_zero(M(i, c))) continue;
            auto f = F.mul(M(i, c), inv);
            for (std::size_t j = c; j < n; ++j) M(i, j) = F.sub(M(i, j), F.mul(f, M(c, j)));
        }
    }
    return d;
}

/// One solution of A x = b, or nullopt when inconsistent.
template <class K>
std::optional<Vec<typename K::elem>> solve(const K& F, const Mat<typename K::elem>& A,
                                           const Vec<typename K::elem>& b) {
    if (A.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
    auto M = zeros(F, A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) M(i, j) = A(i, j);
        M(i, A.cols) = b[i];
    }
    auto piv = rref_inplace(F, M);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
    Vec<typename K::elem> x(A.cols, F.zero());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = M(i, A.cols);
    return x;
}

/// Coordinates of v in the row space of B (rows independent), or nullopt.
template <class K>
std::optional<Vec<typename K::elem>> coordinates_in(const K& F, const Mat<typename K::elem>& B,
                                                    const Vec<typename K::elem>& v) {
    return solve(F, transpose(B), v);
}

/// Basis (as rows) of the intersection of the row spaces of A and B.
template <class K>
Mat<typename K::elem> intersect_rows(const K& F, const Mat<typename K::elem>& A, const Mat<typename K::elem>& B) {
    if (A.cols != B.cols) throw std::invalid_argument("intersect_rows: ambient mismatch");
    // Solve alpha A = beta B, i.e. [A^T | -B^T] (alpha, beta) = 0.
    auto S = zeros(F, A.cols, A.rows + B.rows);
    for (std::size_t j = 0; j < A.cols; ++j) {
        for (std::size_t i = 0; i < A.rows; ++i) S(j, i) = A(i, j);
        for (std::size_t i = 0; i < B.rows; ++i) S(j, A.rows + i) = F.neg(B(i, j));
    }
    auto ker = rank_kernel(F, S).kernel;
    auto R = zeros(F, ker.size(), A.cols);
    for (std::size_t r = 0; r < ker.size(); ++r)
        for (std::size_t i = 0; i < A.rows; ++i) {
            if (F.is_zero(ker[r][i])) continue;
            for (std::size_t j = 0; j < A.cols; ++j) R(r, j) = F.add(R(r, j), F.mul(ker[r][i], A(i, j)));
        }
    return row_basis(F, R);
}

template <class K>
std::optional<Mat<typename K::elem>> inverse(const K& F, const Mat<typename K::elem>& A) {
    if (A.rows != A.cols) throw std::invalid_argument("inverse: not square");
    const std::size_t n = A.rows;
    auto M = zeros(F, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) M(i, j) = A(i, j);
        M(i, n + i) = F.one();
    }
    auto piv = rref_inplace(F, M);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    auto R = zeros(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R(i, j) = M(i, n + j);
    return R;
}

template <class K>
Mat<typename K::elem> stack(const K& F, const Mat<typename K::elem>& A, const Mat<typename K::elem>& B) {
    if (A.rows == 0) return B;
    if (B.rows == 0) return A;
    if (A.cols != B.cols) throw std::invalid_argument("stack: width mismatch");
    auto C = zeros(F, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + static_cast<std::ptrdiff_t>(A.a.size()));
    return C;
}

/// Extend the independent rows of B to a basis of the ambient space by
/// appending standard basis vectors; returns the full square matrix.
template <class K>
Mat<typename K::elem> complete_basis(const K& F, const Mat<typename K::elem>& B) {
    auto cur = B;
    std::size_t r = rank(F, cur);
    if (r != B.rows) throw std::invalid_argument("complete_basis: dependent rows");
    for (std::size_t j = 0; j < B.cols && cur.rows < B.cols; ++j) {
        auto e = zeros(F, 1, B.cols);
        e(0, j) = F.one();
        auto trial = stack(F, cur, e);
        if (rank(F, trial) == trial.rows) cur = trial;
    }
    return cur;
}

template <class K>
Mat<typename K::elem> random_matrix(const K& F, std::size_t r, std::size_t c, Rng& rng) {
    auto M = zeros(F, r, c);
    for (auto& x : M.a) x = F.random(rng);
    return M;
}

template <class K>
Mat<typename K::elem> random_symmetric(const K& F, std::size_t n, Rng& rng) {
    auto M = zeros(F, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) M(i, j) = M(j, i) = F.random(rng);
    return M;
}

template <class K>
Vec<typename K::elem> random_vec(const K& F, std::size_t n, Rng& rng) {
    Vec<typename K::elem> v(n);
    for (auto& x : v) x = F.random(rng);
    return v;
}

template <class K>
bool is_symmetric(const K& F, const Mat<typename K::elem>& M) {
    if (M.rows != M.cols) return false;
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = i + 1; j < M.cols; ++j)
            if (!F.eq(M(i, j), M(j, i))) return false;
    return true;
}

}  // namespace fano

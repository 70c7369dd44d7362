#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fano/matrix.hpp"
#include "fano/symbolic.hpp"

namespace fano {

// The linear map phi: Hom(I_l, O_l) -> Hom(I_Z, O_l) at a tau double line l
// inside a k = 1 instance, written as a 13 x 8 matrix. Rows are the thirteen
// tau parameters psi_1..psi_13; columns are the coefficients
// (D, E, F, G, H) of q/p13^2 -> D + E t2 + F t2^2 + G t4 + H t2 t4 and
// (A, B, C) of h/p13 -> A + B t2 + C t4.
//
// Entries use a_ij = q_{12,ij}, b_ij = q_{13,ij}, c_ij = 2 q_{14,ij},
// d = q_{12,14}, e = q_{13,14}, f = -2 q_{23,23}, g = q_{14,14} + q_{23,23}.

template <class T>
struct AppendixParams {
    T h14, h15, h24, h25, h34, h35, h45;
    T a15, a24, a25, a34, a35;
    T b15, b24, b25, b34, b35;
    T c15, c24, c25, c34, c35;
    T d, e, f, g;
};

enum class Transcription {
    printed,    // character for character
    corrected,  // with the entries the symbolic oracle disagrees with fixed
};

inline constexpr std::array<const char*, 8> kFormNames{"D", "E", "F", "G", "H", "A", "B", "C"};

/// Rows of the block-permuted matrix, as psi indices.
inline constexpr std::array<int, 13> kPermutedRows{1, 2, 4, 6, 7, 8, 9, 10, 11, 5, 12, 13, 3};
/// Columns of the block-permuted matrix, as indices into kFormNames.
inline constexpr std::array<int, 8> kPermutedCols{0, 1, 2, 5, 6, 3, 4, 7};

template <class T>
Mat<T> appendix_matrix(const AppendixParams<T>& p, Transcription tr = Transcription::corrected) {
    const T z{};
    const bool fix = tr == Transcription::corrected;
    const T d24 = p.b24 + p.g;
    std::vector<std::vector<T>> rows{
        {d24, p.a24, z, p.c24, z, p.h24, z, z},
        {z, d24, p.a24, z, p.c24, z, p.h24, z},
        {z, -p.b34, p.g - p.a34, z, -p.c34, z, -p.h34, z},
        {z, z, z, d24, p.a24, z, z, p.h24},
        {z, z, z, -p.b34, p.g - p.a34, z, z, -p.h34},
        {p.b15, p.a15, z, p.c15 + (fix ? p.b25 : p.b15), fix ? p.a25 : -p.a25, p.h15, z, p.h25},
        {z, p.b15, p.a15, -p.b35, p.c15 - p.a35, z, p.h15, -p.h35},
        {z, z, z, p.b15, p.a15, z, z, p.h15},
        {p.e, p.d, z, p.f - p.b24, -p.a24, p.h14, z, -p.h24},
        {z, p.e, p.d, p.b34, p.f + p.a34, z, p.h14, p.h34},
        {z, z, z, p.e, p.d, z, z, p.h14},
        {-p.b35, -p.b25 - p.a35, -p.a25, -p.c35, -p.c25, -p.h35, -p.h25, -p.h45},
        {-p.b34, -p.b24 - p.a34, -p.a24, -p.c34, -p.c24, -p.h34, -p.h24, z},
    };
    Mat<T> M(13, 8, z);
    for (std::size_t i = 0; i < 13; ++i)
        for (std::size_t j = 0; j < 8; ++j) M(i, j) = rows[i][j];
    return M;
}

/// The block-permuted form with d24 = b24 + g, d34 = a34 + f, k = -a34 - b24.
template <class T>
Mat<T> appendix_permuted(const AppendixParams<T>& p, Transcription tr = Transcription::corrected) {
    const T z{};
    const bool fix = tr == Transcription::corrected;
    const T d24 = p.b24 + p.g, d34 = p.a34 + p.f, k = -p.a34 - p.b24;
    std::vector<std::vector<T>> rows{
        {d24, p.a24, z, p.h24, z, p.c24, z, z},
        {z, d24, p.a24, z, p.h24, z, p.c24, z},
        {z, z, z, z, z, d24, p.a24, p.h24},
        {p.b15, p.a15, z, p.h15, z, p.c15 + (fix ? p.b25 : p.b15), fix ? p.a25 : -p.a25, p.h25},
        {z, p.b15, p.a15, z, p.h15, -p.b35, p.c15 - p.a35, -p.h35},
        {z, z, z, z, z, p.b15, p.a15, p.h15},
        {p.e, p.d, z, p.h14, z, fix ? p.f - p.b24 : d24 + k, -p.a24, -p.h24},
        {z, p.e, p.d, z, p.h14, p.b34, d34, p.h34},
        {z, z, z, z, z, p.e, p.d, p.h14},
        {z, z, z, z, z, -p.b34, d24 + k, -p.h34},
        {-p.b35, -p.b25 - p.a35, -p.a25, -p.h35, -p.h25, -p.c35, -p.c25, -p.h45},
        {-p.b34, k, -p.a24, -p.h34, -p.h24, -p.c34, -p.c24, z},
        {z, -p.b34, d24 + k, z, -p.h34, z, -p.c34, z},
    };
    Mat<T> M(13, 8, z);
    for (std::size_t i = 0; i < 13; ++i)
        for (std::size_t j = 0; j < 8; ++j) M(i, j) = rows[i][j];
    return M;
}

/// Rows and columns of M rearranged into the block-permuted layout.
template <class T>
Mat<T> permute_appendix(const Mat<T>& M) {
    Mat<T> P(13, 8, T{});
    for (std::size_t i = 0; i < 13; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            P(i, j) = M(static_cast<std::size_t>(kPermutedRows[i] - 1), static_cast<std::size_t>(kPermutedCols[j]));
    return P;
}

struct Cell {
    int row, col;
    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
};

struct AppendixOracle {
    sym::Vars vars;
    std::array<sym::Poly, 8> forms;  // D, E, F, G, H, A, B, C recomputed from the chart
    std::vector<std::string> forms_vs_printed;    // names of forms differing from the printed text
    std::vector<std::string> forms_vs_corrected;
    std::vector<Cell> matrix_vs_printed, matrix_vs_corrected;
    std::vector<Cell> permuted_vs_printed, permuted_vs_corrected;
    int generic_rank = 0;  // rank of the recomputed matrix at a random point of F_p, p = 2^31 - 1
    bool numeric_agreement = false;  // phi images agree at random rational values

    /// Exactly the documented typos and nothing else.
    bool ok() const;
};

/// Recomputes A..H by expanding the Pluecker coordinates in the chart
/// around v1^v3, dividing h/p13 and q/p13^2 by the generators
/// z4, z5, t4 - z2, t5, t4^2 of the double line, and applying the tau table.
/// The quadric is normalized: q_{14,23} = q_{12,45} = q_{13,45} = 0 and
/// q_{23,ij} = q_{14,ij} for ij outside {12, 13, 14, 23}.
AppendixOracle appendix_oracle();

/// The printed formulas for A..H over the oracle's variables.
std::array<sym::Poly, 8> appendix_forms(const sym::Vars& vars, Transcription tr);

/// The entries as polynomials over the oracle's variables.
AppendixParams<sym::Poly> appendix_symbols(const sym::Vars& vars);

/// Names of forms that differ.
std::vector<std::string> compare_forms(const std::array<sym::Poly, 8>& a, const std::array<sym::Poly, 8>& b);

/// The coefficient matrix (psi_i, form) of the forms.
Mat<sym::Poly> forms_matrix(const sym::Vars& vars, const std::array<sym::Poly, 8>& forms);

struct RankStats {
    std::uint64_t p = 0;
    long samples = 0;
    long deficient = 0;  // rank < 8
    double frequency() const { return samples ? static_cast<double>(deficient) / static_cast<double>(samples) : 0; }
};

/// Rank of the corrected matrix at uniform random entries over F_p, p < 256.
RankStats appendix_rank_stats(std::uint64_t p, long samples, std::uint64_t seed);

}  // namespace fano

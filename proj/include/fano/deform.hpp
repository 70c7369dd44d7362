#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fano/conic.hpp"

namespace fano {

// ---------------------------------------------------------------------------
// Smooth conics as maps P^1 -> P^{n-1}: coordinate p is
// coeffs(p,0) s^2 + coeffs(p,1) s t + coeffs(p,2) t^2.

struct ParametrizedConic {
    Mat<Fe> coeffs;  // n x 3, columns independent
};

/// The 5 restricted Pfaffians and Q on V (coordinates of the rows of V).
std::vector<Mat<Fe>> instance_quadrics(const PrimeField& F, const FanoInstance& inst);

/// The 5 Pfaffian quadrics on P(wedge^2 V_5).
std::vector<Mat<Fe>> grassmannian_quadrics(const PrimeField& F);

/// Rational parametrization of a smooth conic from one of its points, in
/// the coordinates of `ambient` (rows spanning a space containing the plane;
/// pass the 10 x 10 identity for Pluecker coordinates).
ParametrizedConic parametrize(const PrimeField& F, const Conic& c, const Mat<Fe>& ambient, Rng& rng);

/// (s v1 + t v2) ^ (s v3 + t v4) for a random frame, in Pluecker coordinates.
ParametrizedConic random_tau_conic_on_G(const PrimeField& F, Rng& rng);

/// Every quadric pulls back to the zero binary quartic.
bool lies_on(const PrimeField& F, const ParametrizedConic& c, const std::vector<Mat<Fe>>& quadrics);

struct TangentReport {
    int unknowns = 0;
    int raw = 0;              // solutions v with dQ(phi) v = 0 for every quadric
    int quotient_rank = 0;    // span of phi and dphi(gl_2); 4 for an embedding
    bool quotient_inside = false;
    int dimension = 0;        // raw - quotient_rank
};

/// Extrinsic tangent space to the Hilbert scheme at a smooth conic.
/// Throws std::domain_error when the quotient directions are not solutions
/// (the conic is not on the quadrics).
TangentReport conic_tangent_dim(const PrimeField& F, const ParametrizedConic& c, const std::vector<Mat<Fe>>& quadrics);

struct SplittingReport {
    std::array<int, 3> h0{};   // h^0(N(-m)) for m = 0, 1, 2
    std::vector<int> degrees;  // decreasing; empty when not determined
    int degree_sum = 0;
    std::vector<std::vector<int>> candidates;  // all types of the requested rank matching h0
};

/// h^0 of the twists N(-m), with N the kernel of
/// N_{c/P} = O(4) + O(2)^{n-3} -> sum over quadrics of O(4),
/// and the unique splitting of the given rank and total degree matching them.
/// Throws std::domain_error when the quadrics do not restrict to multiples
/// of the conic on its plane, std::runtime_error when no or several types match.
SplittingReport splitting_type(const PrimeField& F, const ParametrizedConic& c, const std::vector<Mat<Fe>>& quadrics,
                               int degree, int rank = 3);

/// h^0(N(-m)) alone.
int normal_h0(const PrimeField& F, const ParametrizedConic& c, const std::vector<Mat<Fe>>& quadrics, int m);

/// A k = 2 instance inside the k = 1 instance whose extra linear form
/// vanishes on the plane; retried until the smoothness probe passes.
FanoInstance section_through_plane(const FanoInstance& inst, const Mat<Fe>& plane, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Double lines on G: Hom(I, O_l) from two affine charts of G(2,5).
//
// Chart 1 (around v1^v2): u1 = v1 + x3 v3 + x4 v4 + x5 v5, u2 = v2 + y3 v3 + ...
// Chart 2 (around v1^v3): w1 = v1 + z2 v2 + z4 v4 + z5 v5, w3 = v3 + t2 v2 + ...
// Each chart's ideal is four linear forms and the square of the nilpotent
// coordinate; sections of O_l are a(f) + eps b(f) in the chart's free
// coordinate f (y3 or t2).

enum class DoubleLineType { sigma, rho, tau };

std::string to_string(DoubleLineType t);

struct HomSolve {
    int unknowns = 0;
    int dimension = 0;
    std::vector<std::string> generators;  // source chart generators, in table order
    std::vector<std::string> images;      // general image of each generator
};

/// Hom(I, O_l) with images chosen on chart `source` (1 or 2) and required
/// to be regular on the other chart; image degrees in f at most `bound`.
HomSolve double_line_hom(DoubleLineType t, int source, int bound);

struct DoubleLineReport {
    DoubleLineType type{};
    int dimension = 0;          // chart 2 images, degree bound 4
    int dimension_next = 0;     // degree bound 5
    int dimension_swapped = 0;  // chart 1 images, degree bound 4
    bool table_matches = false;       // the transcribed 13-parameter table spans the solutions
    bool verbatim_table_matches = false;  // the table exactly as printed
    HomSolve solve;
};

DoubleLineReport doubleline_hom_dim(DoubleLineType t);

}  // namespace fano

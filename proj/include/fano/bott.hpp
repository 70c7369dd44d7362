#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

namespace fano {

// Irreducible homogeneous bundles on G(2,5): Sigma^alpha S^dual (x) Sigma^beta Q^dual,
// with S the rank-2 tautological subbundle, Q the rank-3 quotient and
// O(1) = det S^dual = (1,1 | 0,0,0).
struct WeightBundle {
    std::array<int, 2> alpha{};
    std::array<int, 3> beta{};
    int multiplicity = 1;

    WeightBundle twist(int t) const;
    long rank() const;  // of one copy
    /// Concatenated weight shifted so its last entry is 0; equal keys mean
    /// isomorphic bundles (det S^dual (x) det Q^dual is trivial).
    std::array<int, 5> key() const;
    bool valid() const { return alpha[0] >= alpha[1] && beta[0] >= beta[1] && beta[1] >= beta[2]; }
};

std::string to_string(const WeightBundle& w);

inline constexpr int kGrassmannianDim = 6;

struct CohomologyTable {
    std::array<long, kGrassmannianDim + 1> h{};
    long chi() const;
    /// Degrees carrying cohomology.
    std::set<int> support() const;
};

/// Bott's theorem: add rho = (5,4,3,2,1) to (alpha, beta), sort; a repeated
/// entry means acyclic, otherwise the number of swaps is the only degree
/// and the Weyl dimension of the sorted weight minus rho its dimension.
/// Multiplicity scales the result.
CohomologyTable bott_cohomology(const WeightBundle& w);

CohomologyTable bott_cohomology(const std::vector<WeightBundle>& sum);

/// Dimension of the irreducible GL_n representation with highest weight lambda.
long weyl_dimension(const std::vector<int>& lambda);

/// Omega^p_G(twist) = wedge^p(S (x) Q^dual) as a sum of irreducibles.
std::vector<WeightBundle> decompose_forms(int p, int twist = 0);

/// wedge^p TG(twist) = wedge^p(S^dual (x) Q).
std::vector<WeightBundle> decompose_polyvectors(int p, int twist = 0);

/// Equal as bundles: the same irreducibles with the same multiplicities.
bool same_bundle(const std::vector<WeightBundle>& a, const std::vector<WeightBundle>& b);

// ---------------------------------------------------------------------------
// Euler characteristics on complete intersections in G.
//
// Descriptor grammar:
//   O_Y(t)  T_Y(t)  Omega^p_Y(t)  E[a1,a2|b1,b2,b3]_G(t)
//   any of these followed by |Y' for the restriction to Y' inside Y
// with Y, Y' one of
//   G, L = G cap H, X = G cap Q, Z = G cap H cap Q, W = G cap H cap H' cap Q.
// E[...] lives on G only. The twist is optional.

struct Variety {
    char name = 'G';
    std::vector<int> degrees;  // of the cutting hypersurfaces
    int dim() const { return kGrassmannianDim - static_cast<int>(degrees.size()); }
};

Variety variety(char name);  // throws on an unknown name

struct Descriptor {
    enum class Kind { structure, tangent, forms, weight } kind = Kind::structure;
    int p = 0;
    WeightBundle weight;
    char base = 'G';
    char restricted = 0;  // 0 when the bundle is not restricted
    int twist = 0;
};

/// Throws std::invalid_argument outside the grammar.
Descriptor parse_descriptor(const std::string& s);
std::string to_string(const Descriptor& d);

/// chi together with degrees that may carry cohomology (a superset of the
/// true support). When the possible set has at most one element the
/// cohomology is determined by chi.
struct ChiBound {
    long chi = 0;
    std::set<int> possible;

    bool acyclic() const { return possible.empty(); }
    /// h^q when determined; throws otherwise.
    long h(int q) const;
    bool determined() const { return possible.size() <= 1; }
};

/// Koszul complexes for restrictions to complete intersections, normal
/// sequences for tangent bundles and the conormal filtration of Omega^p_G|Y
/// for forms; Bott on G at the bottom.
ChiBound chi_chain(const Descriptor& d);
ChiBound chi_chain(const std::string& descriptor);

struct HodgeStep {
    std::string claim;
    bool holds = false;
    std::string detail;
};

struct HodgeReport {
    std::vector<HodgeStep> steps;
    long h31 = 0, h22 = 0;
    long h1_TX_minus1 = 0;          // X = G cap Q
    std::array<long, 5> chi_forms_Z{};  // chi(Omega^p_Z), p = 0..4
    bool ok() const;
};

HodgeReport hodge_check();

}  // namespace fano

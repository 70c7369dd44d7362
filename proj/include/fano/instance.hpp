#pragma once

#include <array>
#include <optional>
#include <cstdint>
#include <string>
#include <vector>

#include "fano/field.hpp"
#include "fano/matrix.hpp"
#include "fano/wedge5.hpp"

namespace fano {

/// X (k=0), Z (k=1), W (k=2) or the threefold (k=3): G(2,5) cut by Q and
/// the linear space spanned by the rows of V. Entries are integers; over a
/// prime field they are canonical residues.
struct FanoInstance {
    FieldSpec field;
    int k = 0;
    Mat<long long> V;  // (10-k) x 10
    Mat<long long> Q;  // 10 x 10 symmetric
    std::uint64_t seed = 0;

    bool operator==(const FanoInstance& o) const {
        return field == o.field && k == o.k && V == o.V && Q == o.Q && seed == o.seed;
    }
};

template <class K>
Mat<typename K::elem> lift(const K& F, const Mat<long long>& M) {
    auto R = zeros(F, M.rows, M.cols);
    for (std::size_t i = 0; i < M.a.size(); ++i) R.a[i] = F.from_int(M.a[i]);
    return R;
}

template <class K>
Vec<typename K::elem> lift(const K& F, const std::vector<long long>& v) {
    Vec<typename K::elem> r;
    for (auto x : v) r.push_back(F.from_int(x));
    return r;
}

Mat<long long> lower(const PrimeField& F, const Mat<PrimeField::elem>& M);
std::vector<long long> lower(const PrimeField& F, const Vec<PrimeField::elem>& v);

/// The prime field of an instance; throws for rational or quadratic data.
PrimeField prime_field_of(const FieldSpec& f);

/// Number of attempts random constructors make before giving up; the
/// environment variable FANO_RETRY_BUDGET overrides the default of 16.
int retry_budget();

// ---------------------------------------------------------------------------
// The six-dimensional quadric system: R[0] is Q and R[m] the Pfaffian P_{e_m},
// all restricted to an n-dimensional space. Coordinates (z, v_1..v_5).

template <class E>
struct QuadricSystem {
    std::size_t n = 0;
    int pfaffian_order = 0;  // expected vanishing order of the discriminant in z
    std::array<Mat<E>, 6> R;
};

template <class K>
Mat<typename K::elem> member(const K& F, const QuadricSystem<typename K::elem>& S, const Vec<typename K::elem>& x) {
    auto M = zeros(F, S.n, S.n);
    for (int i = 0; i < 6; ++i) {
        if (F.is_zero(x[i])) continue;
        for (std::size_t t = 0; t < M.a.size(); ++t) M.a[t] = F.add(M.a[t], F.mul(x[i], S.R[i].a[t]));
    }
    return M;
}

template <class K>
QuadricSystem<typename K::elem> quadric_system(const K& F, const FanoInstance& inst) {
    QuadricSystem<typename K::elem> S;
    auto V = lift(F, inst.V);
    S.n = V.rows;
    S.pfaffian_order = 4 - inst.k;
    S.R[0] = congruence(F, lift(F, inst.Q), V);
    for (int m = 0; m < 5; ++m) {
        Vec<typename K::elem> e(5, F.zero());
        e[m] = F.one();
        S.R[m + 1] = congruence(F, pfaffian_quadric(F, e), V);
    }
    return S;
}

/// Rank of the six restricted forms as vectors; 6 for a valid system.
template <class K>
std::size_t system_dimension(const K& F, const QuadricSystem<typename K::elem>& S) {
    auto M = zeros(F, 6, S.n * S.n);
    for (int i = 0; i < 6; ++i)
        for (std::size_t t = 0; t < S.n * S.n; ++t) M(i, t) = S.R[i].a[t];
    return rank(F, M);
}

/// Linear forms cutting V inside wedge^2 V_5 (k rows).
template <class K>
Mat<typename K::elem> linear_forms(const K& F, const Mat<typename K::elem>& V) {
    auto ker = rank_kernel(F, V).kernel;
    return row_basis(F, from_rows(F, ker, V.cols));
}

// ---------------------------------------------------------------------------

FanoInstance random_instance(int k, const FieldSpec& field, std::uint64_t seed);

/// Builds the instance without the smoothness guard (used by negative
/// controls and constructed examples).
FanoInstance make_instance(int k, const FieldSpec& field, std::uint64_t seed, const Mat<long long>& V,
                           const Mat<long long>& Q);

/// Throws std::invalid_argument describing the first violated invariant.
void validate(const FanoInstance& inst);

std::string to_json(const FanoInstance& inst);
FanoInstance instance_from_json(const std::string& text);
void save_instance(const FanoInstance& inst, const std::string& path);
FanoInstance load_instance(const std::string& path);
/// Short hex digest of the canonical JSON encoding.
std::string digest(const FanoInstance& inst);

struct ProbeReport {
    int trials = 0;
    int points = 0;      // trials that produced a point
    int no_point = 0;    // trials whose slice had no rational point
    int failures = 0;    // points with a rank-deficient Jacobian
    std::vector<std::vector<long long>> failure_points;
};

/// Random points of the variety (a line of V_5 paired with a kernel vector,
/// then a root of Q along the slice) and the Jacobian rank test there.
ProbeReport smoothness_probe(const FanoInstance& inst, int trials, std::uint64_t seed);

/// The points found by the probe's slicing, in ambient Pluecker coordinates.
std::vector<Vec<PrimeField::elem>> sample_variety_points(const FanoInstance& inst, int trials, std::uint64_t seed);

struct FanoChain {
    FanoInstance X, Z, W;  // V_8 in V_9 in wedge^2 V_5, one shared Q
};

FanoChain random_chain(const FieldSpec& field, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Planes of G(2,5) over a small field.

struct PlaneOnG {
    char type;                         // 'r' for wedge^2 V_3, 's' for V_1 ^ V_4
    Mat<PrimeField::elem> basis;       // 3 x 10
    Mat<PrimeField::elem> flag;        // V_3 (3x5) or [V_1; V_4] (1+4 rows)
};

struct PlaneSearchResult {
    std::size_t rho_planes = 0;    // planes enumerated
    std::size_t sigma_planes = 0;
    std::vector<PlaneOnG> found;   // those inside the variety
};

/// Every reduced echelon r x n matrix of rank r over F_q.
std::vector<Mat<PrimeField::elem>> grassmannian_points(const PrimeField& F, int r, int n);

/// Exhaustive search over F_p, p <= 7, for k=1 instances.
PlaneSearchResult plane_search(const FanoInstance& inst);

/// A k=1 instance over F_p containing the plane P(wedge^2 V_3); the plane is
/// returned through `plane`.
FanoInstance instance_with_rho_plane(const FieldSpec& field, std::uint64_t seed, Mat<PrimeField::elem>& plane);

/// The same for a sigma-plane V_1 ^ V_4.
FanoInstance instance_with_sigma_plane(const FieldSpec& field, std::uint64_t seed, Mat<PrimeField::elem>& plane);

/// Whether the span of the rows lies in the variety (linear forms and Q vanish).
bool plane_in_variety(const PrimeField& F, const FanoInstance& inst, const Mat<PrimeField::elem>& plane);

// ---------------------------------------------------------------------------
// Gushel data: the cone over G in P(C + wedge^2 V_5) with vertex the t-axis,
// cut by Q(t, w) = t^2 + 2 l(w) t + q(w) and the k+1 forms h_0..h_k on w.

struct GushelInstance {
    FieldSpec field;
    int k = 1;
    std::vector<long long> ell;  // 10 entries
    Mat<long long> q;            // 10 x 10 symmetric
    Mat<long long> H;            // (k+1) x 10, row 0 is h_0
    std::uint64_t seed = 0;
};

GushelInstance random_gushel(int k, const FieldSpec& field, std::uint64_t seed);

/// Basis of V_{9-k} = ker(h_0..h_k).
Mat<PrimeField::elem> gushel_base(const PrimeField& F, const GushelInstance& g);

/// The branch instance: G cut by V_{9-k} and Q' = q - l^2 (its k is g.k + 1).
FanoInstance gushel_companion(const GushelInstance& g);

/// Quadric system on the cone side, in the basis (t, V_{9-k}).
QuadricSystem<PrimeField::elem> gushel_system(const PrimeField& F, const GushelInstance& g);

/// Z*(eps): G cut by h_1 = .. = h_k = 0 and Q(h_0(w)/eps, w). The basis of
/// the linear space is V_{9-k} followed by a vector w_1 with h_0(w_1) = 1.
FanoInstance gushel_flatten(const GushelInstance& g, PrimeField::elem eps);

}  // namespace fano

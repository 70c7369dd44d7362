#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fano/instance.hpp"
#include "fano/poly.hpp"

namespace fano {

using Fe = PrimeField::elem;
using Sextic = MultiForm<PrimeField>;

// ---------------------------------------------------------------------------
// Primal side: det((zQ + P_v)|V) = z^(4-k) * Y(z, v).

struct DiscriminantReport {
    int trials = 0;
    int degenerate = 0;  // lines with det identically zero, resampled
    int expected_order = 0;
    std::vector<int> orders;
    std::vector<int> residual_degrees;

    bool ok() const {
        for (std::size_t i = 0; i < orders.size(); ++i)
            if (orders[i] != expected_order || residual_degrees[i] != 6) return false;
        return static_cast<int>(orders.size()) == trials;
    }
};

template <class K>
DiscriminantReport discriminant_profile(const K& F, const QuadricSystem<typename K::elem>& S, int trials, Rng& rng) {
    DiscriminantReport rep;
    rep.trials = trials;
    rep.expected_order = S.pfaffian_order;
    const int budget = trials * 4 + retry_budget();
    for (int attempt = 0; static_cast<int>(rep.orders.size()) < trials; ++attempt) {
        if (attempt >= budget) throw std::runtime_error("discriminant_profile: every sampled line is degenerate");
        auto v = random_vec(F, 6, rng);
        v[0] = F.zero();
        auto c = det_along_line(F, member(F, S, v), S.R[0]);
        int lo = -1, hi = -1;
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
            if (!F.is_zero(c[i])) {
                if (lo < 0) lo = i;
                hi = i;
            }
        if (lo < 0) {
            ++rep.degenerate;
            continue;
        }
        rep.orders.push_back(lo);
        rep.residual_degrees.push_back(hi - lo);
    }
    return rep;
}

struct PrimalPoint {
    Vec<Fe> x;       // (z, v_1..v_5), z != 0
    Vec<Fe> kernel;  // a kernel vector of the quadric on V
    int corank = 0;
};

/// Roots z_0 != 0 of the residual sextic along random lines {(z, v)}.
std::vector<PrimalPoint> sample_primal(const PrimeField& F, const QuadricSystem<Fe>& S, int n, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Dual side. For V_4 = ker w the quadrics of I restrict to the pencil spanned
// by Q_M and q_M on M = wedge^2 V_4 cap V, and the hyperplane of I through
// {P_v : v in V_4} meeting the pencil in lambda Q_M + mu q_M is
// h = (mu, -lambda w).

struct DualPencil {
    Vec<Fe> w;
    Mat<Fe> M;    // basis of wedge^2 V_4 cap V in Pluecker coordinates
    Mat<Fe> QM;   // Q restricted to M
    Mat<Fe> qM;   // P_u restricted to M, w(u) = 1
    BinaryForm<PrimeField> delta;  // det(lambda Q_M + mu q_M)
};

/// Precomputed lifts of an instance for repeated pencil construction.
struct DualContext {
    PrimeField F;
    int k = 0;
    Mat<Fe> V;
    Mat<Fe> Q;

    DualContext(const PrimeField& field, const FanoInstance& inst);
};

/// nullopt when dim M != 6 - k.
std::optional<DualPencil> dual_pencil(const DualContext& C, const Vec<Fe>& w);

struct DualPoint {
    Vec<Fe> h;
    Vec<Fe> w;
    Fe lambda = 0, mu = 0;
    int corank = 0;  // of lambda Q_M + mu q_M
};

Vec<Fe> dual_coordinates(const PrimeField& F, const Vec<Fe>& w, Fe lambda, Fe mu);

/// Corank of the pencil member; >= 1 exactly when the witness is valid.
int witness_corank(const DualContext& C, const DualPencil& P, Fe lambda, Fe mu);

std::vector<DualPoint> sample_dual(const DualContext& C, int n, std::uint64_t seed);

/// The corank predicate: some member of the hyperplane h is singular on
/// wedge^2 V_4 cap V for the witness V_4. Recomputed from scratch.
bool dual_witness_holds(const DualContext& C, const DualPoint& d);

// ---------------------------------------------------------------------------
// Interpolation with held-out validation.

struct Interpolated {
    Sextic form;
    int samples = 0;
    int heldout = 0;
    int heldout_failures = 0;
    int attempts = 0;
};

constexpr int kFitSamples = 600;  // 1.3 x 462 monomials
constexpr int kHeldOut = 100;

/// Fits the sextic through kFitSamples points and validates on kHeldOut more;
/// a failed fit is retried with a fresh seed.
Interpolated interpolate_primal(const PrimeField& F, const QuadricSystem<Fe>& S, std::uint64_t seed,
                                const FitOptions& opt = {});
Interpolated interpolate_dual(const DualContext& C, std::uint64_t seed, const FitOptions& opt = {});

/// Points of {f = 0} on random lines; f must be nonzero.
std::vector<Vec<Fe>> sample_hypersurface(const PrimeField& F, const Sextic& f, int n, Rng& rng);

struct DualityReport {
    int trials = 0;  // per direction
    int forward_failures = 0;
    int backward_failures = 0;
    int bidual_failures = 0;
    int singular_skipped = 0;

    bool ok() const { return forward_failures == 0 && backward_failures == 0 && bidual_failures == 0; }
};

/// Gradients of Y at its points lie on Yv and vice versa; the gradient of Yv
/// at the image returns the original point.
DualityReport duality_check(const PrimeField& F, const Sextic& Y, const Sextic& Yv, int trials, std::uint64_t seed);

/// The point (1, 0, 0, 0, 0, 0) of the dual space: the Pfaffian hyperplane.
Vec<Fe> plucker_point();

// ---------------------------------------------------------------------------
// Lagrangian model (k = 0). Basis of wedge^3 I: increasing triples of
// {0..5}, where 0 is Q and m is P_{e_m}.

struct Lagrangian {
    Mat<Fe> A;  // 10 x 20, rows span A
    Mat<Fe> J;  // 20 x 20 wedge pairing
};

/// Scalar multiplying Q_0(x, .) in the graph; fixed by agreement with the dual
/// sextic.
constexpr long long kLagrangianScale = -1;

const std::vector<std::array<int, 3>>& triples6();
Mat<Fe> wedge_pairing(const PrimeField& F);
Lagrangian lagrangian_A(const PrimeField& F, const FanoInstance& inst, long long scale = kLagrangianScale,
                        int flip_coordinate = -1);
bool is_lagrangian(const PrimeField& F, const Lagrangian& L);
/// dim(wedge^3 ker(h) cap A).
int epw_membership(const PrimeField& F, const Lagrangian& L, const Vec<Fe>& h);

// ---------------------------------------------------------------------------
// Corank strata.

struct Corank2Search {
    std::vector<DualPoint> points;
    long scans = 0;        // pencils examined
    long members = 0;      // roots examined
    long corank3 = 0;      // roots of corank >= 3
    long double_roots = 0;
};

/// Scans random V_4 for double roots of delta until n corank-2 witnesses are
/// found or max_scans pencils were examined.
Corank2Search corank2_sample(const DualContext& C, int n, std::uint64_t seed, long max_scans);

struct ContainmentReport {
    int points = 0;
    int by_sextic = 0;       // target dual sextic vanishes at h
    int by_restriction = 0;  // the same member restricted to the target fiber is singular
    int exact_corank2 = 0;   // corank of the source witness is exactly 2
    long scans = 0;
    std::vector<DualPoint> witnesses;

    bool all_contained() const { return by_sextic == points && by_restriction == points && points > 0; }
    bool none_contained() const { return by_sextic == 0 && by_restriction == 0 && points > 0; }
};

/// Corank-2 points of the source pencils tested against the target instance
/// (whose linear space must contain the source's for the containment).
ContainmentReport containment(const DualContext& source, const DualContext& target, const Sextic& target_dual,
                              int n, std::uint64_t seed, long max_scans);

/// S_W inside Y_Z^dual.
ContainmentReport containment_SW(const FanoChain& chain, const Sextic& Yz_dual, int n, std::uint64_t seed,
                                 long max_scans);
/// S_X inside the dual sextic of Z.
ContainmentReport containment_SX(const FanoChain& chain, const Sextic& Yz_dual, int n, std::uint64_t seed,
                                 long max_scans);

// ---------------------------------------------------------------------------
// Gushel degeneration.

struct GushelReport {
    bool sextics_equal = false;
    Sextic cone_sextic, branch_sextic;
    int eps_trials = 0;
    int eps_failures = 0;
    int witness_trials = 0;
    int witness_failures = 0;

    bool ok() const { return sextics_equal && eps_failures == 0 && witness_failures == 0 && witness_trials > 0; }
};

/// eps^2 det((z Q* + P_v)|V*) is a polynomial of degree <= 2 in eps; its value at
/// eps = 0, interpolated from three nonzero eps, against the cone determinant.
bool flattened_limit_matches(const PrimeField& F, const GushelInstance& g, const Vec<Fe>& x);

GushelReport gushel_compare(const GushelInstance& g, std::uint64_t seed, int trials = 10);

}  // namespace fano

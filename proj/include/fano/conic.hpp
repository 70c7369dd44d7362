#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fano/sextic.hpp"

namespace fano {

// A conic is a subscheme: a plane of wedge^2 V_5 (3 x 10 basis) and a ternary
// form in that basis, both up to scalar.
struct Conic {
    Mat<Fe> plane;
    Mat<Fe> form;
};

enum class ConicClass { tau, sigma, rho };
enum class ConicShape { smooth, line_pair, double_line };

std::string to_string(ConicClass c);
std::string to_string(ConicShape s);

struct Classification {
    ConicClass cls;
    ConicShape shape;
};

/// Throws std::invalid_argument when the conic does not lie on G.
Classification classify_conic(const PrimeField& F, const Conic& c);

/// Every Pfaffian restricted to the plane is a multiple of the form.
bool conic_on_grassmannian(const PrimeField& F, const Conic& c);

bool same_conic(const PrimeField& F, const Conic& a, const Conic& b);

struct Support {
    Mat<Fe> basis;        // V_4 (4 x 5), or V_3 (3 x 5) for rho-conics
    bool pencil = false;  // rho: every V_4 containing V_3 supports the conic
};

/// Span of the 2-planes of three points of c spanning its plane (smooth
/// conics) or of a rank-4 point of the plane (singular tau-conics).
Support supporting_V4(const PrimeField& F, const Conic& c, Rng& rng);

/// Rational points of the conic found on random lines of its plane.
std::vector<Vec<Fe>> conic_points(const PrimeField& F, const Conic& c, int n, Rng& rng);

// ---------------------------------------------------------------------------
// Conics on a k = 1 instance, carried with their supporting V_4 = ker w and
// the singular member lambda Q_M + mu q_M containing the plane.

struct ConicOnZ {
    Conic conic;
    Vec<Fe> w;
    Fe lambda = 0, mu = 0;
    Vec<Fe> vertex;             // kernel of the member, Pluecker coordinates
    int ruling_resamples = 0;   // roots skipped because the rulings were conjugate
};

/// Conic on the variety: plane inside V, Q and the Pfaffians restrict to
/// multiples of the form, and the form is nonzero.
bool conic_on_variety(const PrimeField& F, const FanoInstance& inst, const Conic& c);

ConicOnZ sample_conic(const FanoInstance& inst, std::uint64_t seed);

struct AlphaResult {
    DualPoint point;
    bool unique = false;  // the restriction map of the pencil to the plane has rank one
};

/// The unique member of the V_4 pencil containing the plane.
AlphaResult alpha(const FanoInstance& inst, const ConicOnZ& c);

/// Planes through the vertex of a rank-4 quadric A (all in one coordinate
/// space): true when they meet only in the vertex or coincide.
bool same_ruling(const PrimeField& F, const Mat<Fe>& A, const Mat<Fe>& P1, const Mat<Fe>& P2);

/// The plane of the other ruling through a canonical line of the plane.
/// Throws std::domain_error when the member has corank 2.
ConicOnZ involution_partner(const FanoInstance& inst, const ConicOnZ& c);

struct FiberView {
    DualPencil pencil;
    Mat<Fe> A;       // member on M
    Mat<Fe> plane;   // 3 x dim M
    Vec<Fe> vertex;  // in M coordinates
    int corank = 0;
};

FiberView fiber_view(const FanoInstance& inst, const ConicOnZ& c);

/// A random plane through the vertex of the member; nullopt when the sampled
/// point of the base surface has conjugate lines.
std::optional<Mat<Fe>> random_plane_in_member(const PrimeField& F, const Mat<Fe>& A, const Vec<Fe>& vertex,
                                              Rng& rng);

/// Writes the member as x3 m3 + x4 m4 with the plane {x3 = x4 = 0} and tests
/// whether m3, m4 restricted to the conic have no common zero over the
/// algebraic closure.
bool kappa_criterion(const FanoInstance& inst, const ConicOnZ& c);

/// A k = 1 instance carrying a conic whose kappa pencil has a base point.
FanoInstance instance_with_kappa_base_point(const FieldSpec& field, std::uint64_t seed, ConicOnZ& conic);

/// {plane, form, V4, member}.
std::string to_json(const PrimeField& F, const ConicOnZ& c);

// ---------------------------------------------------------------------------
// rho- and sigma-planes of G inside the hyperplane of a k = 1 instance.

struct SpecialFamilyReport {
    std::uint64_t p = 0;
    int rho_planes = 0;
    int rho_contain_kernel = 0;
    int sigma_planes = 0;
    int sigma_isotropic = 0;   // V_4 in V_1^perp
    int rho_controls = 0;      // V_3 missing the kernel
    int rho_controls_outside = 0;
    long draws = 0;

    bool ok() const {
        return rho_planes > 0 && sigma_planes > 0 && rho_contain_kernel == rho_planes &&
               sigma_isotropic == sigma_planes && rho_controls_outside == rho_controls;
    }
};

/// Rejection-samples n planes of each family inside the hyperplane; the
/// instance's field should be small (about p^3 draws per plane).
SpecialFamilyReport special_family_checks(const FanoInstance& inst, int n, std::uint64_t seed);

}  // namespace fano

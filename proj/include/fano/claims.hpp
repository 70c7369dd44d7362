#pragma once

#include <cstdint>
#include <vector>

#include "fano/instance.hpp"
#include "fano/report.hpp"

namespace fano {

// Verification claims shared by the command line tool and the acceptance
// run. Each returns one report; `trials` <= 0 selects the claim's default.
// Claims that need a small field (corank-2 strata are found by scanning for
// double roots, about one pencil in p has one) run on the instance reduced
// modulo kSmallPrime when it lives over a larger field; the report records
// the digest of the instance actually used.

inline constexpr std::uint64_t kSmallPrime = 101;

struct ClaimOptions {
    std::uint64_t seed = 1;
    int trials = 0;
};

/// Entries reduced modulo p, as an instance over F_p.
FanoInstance reduce_instance(const FanoInstance& inst, std::uint64_t p);

Report check_discriminant(const FanoInstance& inst, const ClaimOptions& o);
Report check_dual_sextic(const FanoInstance& inst, const ClaimOptions& o);
Report check_plucker_multiplicity(const FanoInstance& inst, const ClaimOptions& o);
Report check_duality(const FanoInstance& inst, const ClaimOptions& o);
Report check_lagrangian(const FanoInstance& inst, const ClaimOptions& o);
Report check_epw_corank2(const FanoInstance& inst, const ClaimOptions& o);
Report check_singular_locus(const FanoInstance& inst, const ClaimOptions& o);
Report check_corank3(const FanoInstance& inst, const ClaimOptions& o);
Report check_containment_sw(const FanoChain& chain, const ClaimOptions& o);
Report check_containment_sx(const FanoChain& chain, const ClaimOptions& o);
Report check_gushel(const GushelInstance& g, const ClaimOptions& o);
Report check_noplane(const FanoInstance& inst, const ClaimOptions& o);
Report check_plane_controls(std::uint64_t p, const ClaimOptions& o);

Report check_conic_pipeline(const FanoInstance& inst, const ClaimOptions& o);
Report check_conic_classes(const FanoInstance& inst, const ClaimOptions& o);
Report check_alpha(const FanoInstance& inst, const ClaimOptions& o);
Report check_partner(const FanoInstance& inst, const ClaimOptions& o);
Report check_kappa(const FanoInstance& inst, const ClaimOptions& o);
Report check_special_families(const FanoInstance& inst, const ClaimOptions& o);

Report check_double_lines(const ClaimOptions& o);
/// Conics on the given k = 1 instance, or on fresh random instances when
/// `inst` is null.
Report check_conic_tangent(const FanoInstance* inst, const ClaimOptions& o);
Report check_threefold_tangent(const FanoInstance* inst, const ClaimOptions& o);
Report check_splitting(const FanoInstance* inst, const ClaimOptions& o);

Report check_appendix(const ClaimOptions& o);
Report check_appendix_stats(const ClaimOptions& o);
Report check_hodge(const ClaimOptions& o);

/// Every claim applicable to the instance's k and field.
std::vector<Report> check_all(const FanoInstance& inst, const ClaimOptions& o);

}  // namespace fano

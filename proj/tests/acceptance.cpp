// One PASS/FAIL line per acceptance criterion; exit status 1 when any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fano/appendix.hpp"
#include "fano/claims.hpp"

using namespace fano;

namespace {

const FieldSpec kBig = FieldSpec::prime(kInterpolationPrime);

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Passed/trials summed over the reports, e.g. "400/400".
std::string tally(const std::vector<Report>& rs) {
    long p = 0, t = 0;
    for (const auto& r : rs) p += r.passed, t += r.trials;
    return std::to_string(p) + "/" + std::to_string(t);
}

bool all_ok(const std::vector<Report>& rs) {
    for (const auto& r : rs)
        if (!r.ok()) return false;
    return !rs.empty();
}

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failures;
    std::printf("%s %2d %-22s %s (%.1f s)\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str(), s);
    std::fflush(stdout);
}

ClaimOptions seeded(std::uint64_t seed) { return ClaimOptions{seed, 0}; }

}  // namespace

int main() {
    criterion(1, "discriminant", [] {
        std::vector<Report> rs;
        for (int k = 0; k <= 3; ++k)
            for (std::uint64_t s = 1; s <= 5; ++s) rs.push_back(check_discriminant(random_instance(k, kBig, s), seeded(s)));
        return Outcome{all_ok(rs), "orders 4-k and sextic residuals on " + tally(rs) + " lines, k = 0..3"};
    });

    const auto Z = random_instance(1, kBig, 1);
    const auto Y0 = random_instance(0, kBig, 1);
    const auto W2 = random_instance(2, kBig, 1);

    criterion(2, "dual sextic", [&] {
        auto r = check_dual_sextic(Z, seeded(1));
        const auto& m = r.metrics;
        const int held = m.value("heldout", 0);
        return Outcome{r.ok(), "k = 1: unique fit from " + std::to_string(m.value("samples", 0)) + " points, " +
                                   std::to_string(held - (r.failed > 0 && held > 0 ? r.failed : 0)) + "/" +
                                   std::to_string(held) + " held-out zeros"};
    });

    criterion(3, "projective duality", [&] {
        std::vector<Report> rs{check_duality(Y0, seeded(1)), check_duality(Z, seeded(1))};
        return Outcome{all_ok(rs), "k = 0, 1: " + tally(rs) + " transfers (forward, backward, bidual)"};
    });

    criterion(4, "plucker multiplicity", [&] {
        std::vector<Report> rs{check_plucker_multiplicity(Y0, seeded(1)), check_plucker_multiplicity(Z, seeded(1)),
                               check_plucker_multiplicity(W2, seeded(1))};
        std::string m;
        for (const auto& r : rs) m += (m.empty() ? "" : ", ") + r.witnesses[0]["multiplicity"].dump();
        return Outcome{all_ok(rs), "multiplicities for k = 0, 1, 2: " + m};
    });

    criterion(5, "lagrangian EPW", [&] {
        auto a = check_lagrangian(Y0, seeded(1));
        auto b = check_epw_corank2(Y0, seeded(1));
        return Outcome{a.ok() && b.ok(), "isotropic and " + std::to_string(a.passed - 1) + "/" +
                                             std::to_string(a.trials - 1) + " membership agreements; " +
                                             tally({b}) + " corank-2 points in S_A"};
    });

    criterion(6, "singular locus", [&] {
        auto a = check_singular_locus(Z, seeded(1));
        auto b = check_corank3(Z, seeded(1));
        return Outcome{a.ok() && b.ok(), tally({a}) + " double points; " + std::to_string(b.failed) +
                                             " corank >= 3 in " + std::to_string(b.trials) + " scans"};
    });

    criterion(7, "conic pipeline", [&] {
        auto a = check_conic_pipeline(Z, seeded(1));
        auto b = check_kappa(Z, seeded(1));
        return Outcome{a.ok() && b.ok(), tally({a}) + " conics through the pipeline; kappa " + tally({b}) +
                                             " (need " + std::to_string(b.required) + ")"};
    });

    criterion(8, "tangent dimensions", [&] {
        auto d = check_double_lines(seeded(1));
        auto c = check_conic_tangent(nullptr, seeded(1));
        auto w = check_threefold_tangent(nullptr, seeded(1));
        auto s = check_splitting(nullptr, seeded(1));
        std::string dims;
        for (const auto& x : d.witnesses) dims += (dims.empty() ? "" : "/") + x["dimension"].dump();
        return Outcome{d.ok() && c.ok() && w.ok() && s.ok(),
                       "double lines " + dims + "; conics on Z dim 5 " + tally({c}) + "; on W dim 2 " + tally({w}) +
                           "; splitting (1,1,0) " + tally({s})};
    });

    criterion(9, "appendix oracle", [&] {
        auto a = check_appendix(seeded(1));
        auto s = check_appendix_stats(seeded(1));
        // The recomputation must match the print everywhere except at the
        // documented misprints; any other difference fails the oracle.
        const auto& m = a.metrics;
        std::string freq;
        for (const char* p : {"3", "5", "7"})
            freq += std::string(freq.empty() ? "" : ", ") + "F_" + p + " " +
                    std::to_string(s.metrics[p]["frequency"].get<double>()).substr(0, 8);
        return Outcome{a.ok() && s.ok(),
                       "forms and matrix recomputed, rank " + m["generic_rank"].dump() + ", misprints: forms " +
                           m["forms_differing_from_print"].dump() + ", " +
                           std::to_string(m["matrix_cells_differing_from_print"].size()) + " matrix and " +
                           std::to_string(m["permuted_cells_differing_from_print"].size()) +
                           " permuted cells; rank drops " + freq};
    });

    criterion(10, "hodge via Bott", [&] {
        auto h = check_hodge(seeded(1));
        return Outcome{h.ok(), tally({h}) + " steps; h31 = " + h.metrics["h31"].dump() + ", h22 = " +
                                   h.metrics["h22"].dump() + ", h1(X, TX(-1)) = " + h.metrics["h1_TX_minus1"].dump()};
    });

    criterion(11, "gushel", [&] {
        auto g = check_gushel(random_gushel(1, kBig, 1), seeded(1));
        return Outcome{g.ok(), "cone and branch sextics equal: " + g.metrics["sextics_equal"].dump() +
                                   "; eps = 0 limit and witnesses " + tally({g})};
    });

    criterion(12, "containments", [&] {
        auto chain = random_chain(FieldSpec::prime(kSmallPrime), 1);
        auto a = check_containment_sw(chain, seeded(1));
        auto b = check_containment_sx(chain, seeded(1));
        // The last trial of each report is its negative control.
        return Outcome{a.ok() && b.ok(), "S_W " + std::to_string(a.metrics["points"].get<int>()) + "/10, S_X " +
                                             std::to_string(b.metrics["points"].get<int>()) +
                                             "/10 by two predicates; control hits " +
                                             a.metrics["control_hits_sextic"].dump() + "+" +
                                             a.metrics["control_hits_restriction"].dump() + ", " +
                                             b.metrics["control_hits_sextic"].dump() + "+" +
                                             b.metrics["control_hits_restriction"].dump()};
    });

    criterion(13, "no planes", [&] {
        std::vector<Report> rs, found;
        for (std::uint64_t p : {3ULL, 5ULL}) {
            for (std::uint64_t s = 1; s <= 5; ++s) {
                rs.push_back(check_noplane(random_instance(1, FieldSpec::prime(p), s), seeded(s)));
                if (!rs.back().ok()) found.push_back(rs.back());
            }
            rs.push_back(check_plane_controls(p, seeded(1)));
        }
        std::string where;
        for (const auto& r : found)
            where += " " + r.metrics["field"].get<std::string>() + ":" + r.metrics["found"].dump();
        return Outcome{all_ok(rs), tally(rs) + " searches and controls" + (where.empty() ? "" : "; planes found" + where)};
    });

    criterion(14, "special families", [&] {
        auto r = check_special_families(random_instance(1, FieldSpec::prime(7), 1), seeded(1));
        return Outcome{r.ok(), "F_7: rho " + r.metrics["rho_planes"].dump() + ", sigma " +
                                   r.metrics["sigma_planes"].dump() + ", controls " + r.metrics["controls"].dump() +
                                   "; " + tally({r}) + " hold"};
    });

    std::printf("summary: %d of 14 criteria failed\n", failures);
    return failures ? 1 : 0;
}

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fano/bott.hpp"
#include "fano/claims.hpp"
#include "fano/conic.hpp"

using namespace fano;
using json = nlohmann::json;

namespace {

struct Common {
    std::uint64_t seed = 1;
    std::string field = "p=2147483647";
    int trials = 0;
    std::string out;
    std::string format = "json";
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--seed", c.seed, "random seed");
    app->add_option("--field", c.field, "QQ or p=<prime>");
    app->add_option("--trials", c.trials, "trial count (default per claim)");
    app->add_option("--out", c.out, "write the output here instead of stdout");
    app->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "csv"}));
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << text;
}

// Reports go to --out (or stdout) in the chosen format; a CSV summary goes to
// stdout whenever the reports went to a file.
int finish(const Common& c, const std::vector<Report>& rs) {
    emit(c, c.format == "csv" ? reports_csv(rs) : reports_json(rs));
    if (!c.out.empty()) std::cout << reports_csv(rs);
    bool ok = true;
    for (const auto& r : rs) ok &= r.ok();
    return ok ? 0 : 1;
}

ClaimOptions options(const Common& c) { return ClaimOptions{c.seed, c.trials}; }

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string chain_json(const FanoChain& ch) {
    json j{{"X", json::parse(to_json(ch.X))}, {"Z", json::parse(to_json(ch.Z))}, {"W", json::parse(to_json(ch.W))}};
    return j.dump(2) + "\n";
}

FanoChain load_chain(const std::string& path) {
    auto j = json::parse(slurp(path));
    return FanoChain{instance_from_json(j.at("X").dump()), instance_from_json(j.at("Z").dump()),
                     instance_from_json(j.at("W").dump())};
}

std::string table(const ChiBound& b, const std::string& what) {
    std::ostringstream os;
    os << "bundle   " << what << "\n";
    os << "chi      " << b.chi << "\n";
    os << "degrees  ";
    if (b.possible.empty()) os << "none (acyclic)";
    for (int q : b.possible) os << q << ' ';
    os << "\n";
    if (b.determined() && !b.possible.empty()) {
        int q = *b.possible.begin();
        os << "h^" << q << "      " << b.h(q) << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree-ten Fano manifolds, their dual sextics and conics: generation and verification"};
    app.require_subcommand(1);
    Common c;
    std::string input;
    int k = 1;

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--k", k, "codimension of V in wedge^2 V_5")->check(CLI::Range(0, 3));
    add_common(gen, c);

    auto* check = app.add_subcommand("check", "verify claims on an instance");
    check->require_subcommand(1);
    std::map<std::string, CLI::App*> checks;
    for (const char* name : {"discriminant", "dual", "duality", "lagrangian", "singular-locus", "corank3", "noplane",
                             "all"}) {
        auto* s = check->add_subcommand(name);
        s->add_option("instance", input, "instance JSON")->required();
        add_common(s, c);
        checks[name] = s;
    }
    for (const char* name : {"containment-sw", "containment-sx"}) {
        auto* s = check->add_subcommand(name, "chain JSON optional; otherwise a chain over F_101 from --seed");
        s->add_option("chain", input, "chain JSON");
        add_common(s, c);
        checks[name] = s;
    }
    checks["gushel"] = check->add_subcommand("gushel", "random Gushel instance from --seed and --field");
    add_common(checks["gushel"], c);

    auto* conic = app.add_subcommand("conic", "conics on a k = 1 instance, sampled by --seed");
    conic->require_subcommand(1);
    std::map<std::string, CLI::App*> conics;
    for (const char* name : {"sample", "classify", "alpha", "partner", "kappa", "families"}) {
        auto* s = conic->add_subcommand(name);
        s->add_option("instance", input, "instance JSON")->required();
        add_common(s, c);
        conics[name] = s;
    }

    auto* tangent = app.add_subcommand("tangent", "Hilbert scheme tangent spaces");
    tangent->require_subcommand(1);
    auto* t_conic = tangent->add_subcommand("conic", "conics on the instance, or on random ones");
    t_conic->add_option("instance", input, "instance JSON");
    auto* t_double = tangent->add_subcommand("double-line", "standard double lines on G(2,5)");
    auto* t_split = tangent->add_subcommand("splitting", "normal bundles of tau-conics");
    t_split->add_option("instance", input, "instance JSON");
    auto* t_three = tangent->add_subcommand("threefold", "conics on a threefold section");
    t_three->add_option("instance", input, "instance JSON");
    for (auto* s : {t_conic, t_double, t_split, t_three}) add_common(s, c);

    auto* appendix = app.add_subcommand("appendix", "the 13 x 8 matrix of forms A..H");
    appendix->require_subcommand(1);
    auto* a_verify = appendix->add_subcommand("verify");
    auto* a_stats = appendix->add_subcommand("stats", "--trials samples per prime");
    add_common(a_verify, c);
    add_common(a_stats, c);

    auto* bott = app.add_subcommand("bott", "cohomology of homogeneous bundles on G(2,5) and its sections");
    bott->require_subcommand(1);
    std::string bundle;
    auto* b_chi = bott->add_subcommand("chi", "chi and possible degrees of a bundle");
    b_chi->add_option("--bundle", bundle, "e.g. Omega^2_Z, T_G(-2)|Z, E[1,0|0,0,-1]_L(-1)")->required();
    auto* b_hodge = bott->add_subcommand("hodge");
    add_common(b_chi, c);
    add_common(b_hodge, c);

    auto* chain = app.add_subcommand("chain", "nested instances X, Z, W");
    chain->require_subcommand(1);
    auto* chain_gen = chain->add_subcommand("gen");
    add_common(chain_gen, c);

    CLI11_PARSE(app, argc, argv);

    try {
        auto opt = options(c);
        auto field = FieldSpec::parse(c.field);
        if (gen->parsed()) {
            auto inst = random_instance(k, field, c.seed);
            if (c.out.empty())
                std::cout << to_json(inst) << "\n";
            else
                save_instance(inst, c.out);
            return 0;
        }
        if (chain_gen->parsed()) {
            emit(c, chain_json(random_chain(field, c.seed)));
            return 0;
        }
        if (check->parsed()) {
            auto chain_of = [&] {
                return input.empty() ? random_chain(FieldSpec::prime(kSmallPrime), c.seed) : load_chain(input);
            };
            if (checks["containment-sw"]->parsed()) return finish(c, {check_containment_sw(chain_of(), opt)});
            if (checks["containment-sx"]->parsed()) return finish(c, {check_containment_sx(chain_of(), opt)});
            if (checks["gushel"]->parsed()) return finish(c, {check_gushel(random_gushel(1, field, c.seed), opt)});
            auto inst = load_instance(input);
            if (checks["discriminant"]->parsed()) return finish(c, {check_discriminant(inst, opt)});
            if (checks["dual"]->parsed())
                return finish(c, {check_dual_sextic(inst, opt), check_plucker_multiplicity(inst, opt)});
            if (checks["duality"]->parsed()) return finish(c, {check_duality(inst, opt)});
            if (checks["lagrangian"]->parsed())
                return finish(c, {check_lagrangian(inst, opt), check_epw_corank2(inst, opt)});
            if (checks["singular-locus"]->parsed()) return finish(c, {check_singular_locus(inst, opt)});
            if (checks["corank3"]->parsed()) return finish(c, {check_corank3(inst, opt)});
            if (checks["noplane"]->parsed()) return finish(c, {check_noplane(inst, opt)});
            return finish(c, check_all(inst, opt));
        }
        if (conic->parsed()) {
            auto inst = load_instance(input);
            if (conics["sample"]->parsed()) {
                PrimeField F = prime_field_of(inst.field);
                json a = json::array();
                for (int t = 0; t < std::max(1, c.trials); ++t)
                    a.push_back(json::parse(to_json(F, sample_conic(inst, c.seed * 1000 + t))));
                emit(c, a.dump(2) + "\n");
                return 0;
            }
            if (conics["classify"]->parsed()) return finish(c, {check_conic_classes(inst, opt)});
            if (conics["alpha"]->parsed()) return finish(c, {check_alpha(inst, opt)});
            if (conics["partner"]->parsed()) return finish(c, {check_partner(inst, opt)});
            if (conics["kappa"]->parsed()) return finish(c, {check_kappa(inst, opt)});
            return finish(c, {check_special_families(inst, opt)});
        }
        if (tangent->parsed()) {
            std::optional<FanoInstance> inst;
            if (!input.empty()) inst = load_instance(input);
            const FanoInstance* ip = inst ? &*inst : nullptr;
            if (t_double->parsed()) return finish(c, {check_double_lines(opt)});
            if (t_conic->parsed()) return finish(c, {check_conic_tangent(ip, opt)});
            if (t_split->parsed()) return finish(c, {check_splitting(ip, opt)});
            return finish(c, {check_threefold_tangent(ip, opt)});
        }
        if (a_verify->parsed()) return finish(c, {check_appendix(opt)});
        if (a_stats->parsed()) return finish(c, {check_appendix_stats(opt)});
        if (b_chi->parsed()) {
            auto b = chi_chain(bundle);
            if (c.format == "json") {
                json j{{"bundle", bundle}, {"chi", b.chi}, {"possible_degrees", b.possible}};
                if (b.determined())
                    for (int q : b.possible) j["h"][std::to_string(q)] = b.h(q);
                emit(c, j.dump(2) + "\n");
            } else {
                emit(c, table(b, bundle));
            }
            return 0;
        }
        if (b_hodge->parsed()) {
            auto h = hodge_check();
            std::cerr << "h31 = " << h.h31 << ", h22 = " << h.h22 << ", h1(X, TX(-1)) = " << h.h1_TX_minus1 << "\n";
            return finish(c, {check_hodge(opt)});
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

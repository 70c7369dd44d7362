#include "fano/report.hpp"

#include <cstdio>

namespace fano {

nlohmann::json to_json(const Report& r) {
    return nlohmann::json{
        {"claim", r.claim},
        {"statement", r.statement},
        {"instance", r.instance},
        {"seed", r.seed},
        {"trials", r.trials},
        {"passed", r.passed},
        {"failed", r.failed},
        {"required", r.required < 0 ? r.trials : r.required},
        {"ok", r.ok()},
        {"witnesses", r.witnesses},
        {"metrics", r.metrics},
        {"wall_seconds", r.wall_seconds},
    };
}

std::string csv_header() { return "claim,instance,seed,trials,passed,failed,required,ok,wall_seconds"; }

std::string csv_row(const Report& r) {
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.3f", r.wall_seconds);
    return r.claim + "," + r.instance + "," + std::to_string(r.seed) + "," + std::to_string(r.trials) + "," +
           std::to_string(r.passed) + "," + std::to_string(r.failed) + "," +
           std::to_string(r.required < 0 ? r.trials : r.required) + "," + (r.ok() ? "PASS" : "FAIL") + "," + wall;
}

std::string reports_json(const std::vector<Report>& rs) {
    auto a = nlohmann::json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return a.dump(2) + "\n";
}

std::string reports_csv(const std::vector<Report>& rs) {
    std::string out = csv_header() + "\n";
    for (const auto& r : rs) out += csv_row(r) + "\n";
    return out;
}

}  // namespace fano

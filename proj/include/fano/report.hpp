#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace fano {

/// Outcome of one verification claim. passed + failed == trials; the claim
/// holds when at least `required` trials passed.
struct Report {
    std::string claim;      // short identifier, e.g. "discriminant-order"
    std::string statement;  // what is checked, in one line
    std::string instance;   // digest of the instance, or "-" when none
    std::uint64_t seed = 0;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    int required = -1;  // -1: every trial
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json metrics = nlohmann::json::object();
    double wall_seconds = 0;  // the only field that varies between runs

    void record(bool ok) { ++trials, ok ? ++passed : ++failed; }
    bool ok() const { return trials > 0 && passed >= (required < 0 ? trials : required); }
};

nlohmann::json to_json(const Report& r);

/// Header line for csv_row.
std::string csv_header();
std::string csv_row(const Report& r);

/// JSON array of reports, pretty-printed.
std::string reports_json(const std::vector<Report>& rs);
std::string reports_csv(const std::vector<Report>& rs);

}  // namespace fano

#pragma once

#include "critset/exec.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace critset {

/// Outcome of one named check or stream scan.
struct CheckReport {
    std::string name;
    /// The claim being reproduced, in words.
    std::string claim;
    /// "verified" for proven statements, "consistent-with" for conjectures
    /// (a finite scan never proves one).
    std::string label = "verified";
    nlohmann::json expected = nlohmann::json::object();
    nlohmann::json computed = nlohmann::json::object();
    bool pass = true;
    std::vector<std::string> violations;
    std::vector<std::string> notes;
    double seconds = 0;
};

nlohmann::json to_json(const CheckReport& r);

struct CheckOptions {
    Exec exec = Exec::parallel;
    Budget budget;
    /// Overrides the default instance parameters of a check (e.g. the k list
    /// of gk-monotonicity). Empty means defaults.
    std::vector<int> params;
};

std::vector<std::string> check_names();
/// InputError for an unknown name. BudgetExhausted propagates.
CheckReport run_check(const std::string& name, const CheckOptions& opt = {});

/// Which number of colours single-k predicates use.
enum class KPolicy { chi, chi_plus_one };
KPolicy parse_kpolicy(const std::string& s);

struct ScanOptions {
    KPolicy kpolicy = KPolicy::chi;
    Exec exec = Exec::parallel;
    Budget budget;
    /// When set, progress is saved here after every chunk and a matching
    /// checkpoint is resumed from.
    std::optional<std::filesystem::path> checkpoint;
    std::size_t chunk = 64;
};

std::vector<std::string> scan_predicates();
/// Evaluates `predicate` on every graph6 record of `in`. Blank lines are
/// ignored; malformed records are collected as errors and make the scan fail;
/// disconnected graphs are skipped with a note.
CheckReport scan_stream(std::istream& in, const std::string& predicate, const ScanOptions& opt = {});
/// Scans data/graphs/connected_n{1..max_order}.g6.
CheckReport scan_orders(int max_order, const std::string& predicate, const ScanOptions& opt = {});

/// $CRITSET_DATA if set, else the data directory configured at build time.
std::filesystem::path data_dir();

}  // namespace critset

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dilemma/exchange.hpp"
#include "dilemma/game.hpp"

namespace dilemma {

struct TrialResult {
    int trial = 0;
    std::uint64_t instance_digest = 0;
    bool pass = false;
    std::string detail;  // first failed assertion, empty on pass
};

struct SuiteReport {
    std::string suite;
    int trials = 0;
    std::uint64_t seed = 0;
    bool pass = false;
    std::vector<TrialResult> results;
};

// Suites: "lemmas", "theorem1", "theorem2", "theorem3", "section4", "all".
// Trials are independent (they fan out across threads) and the report is
// ordered by trial index, so output is deterministic per (name, trials, seed).
SuiteReport run_suite(const std::string& name, int trials, std::uint64_t seed,
                      int max_fixed = -1);  // -1 = per-instance n-2

std::vector<std::string> suite_names();

nlohmann::json suite_report_to_json(const SuiteReport& r);

// Regenerates every derived fixture from its base table and the stated
// amounts, and replays the worked counterexamples.
struct TableDiff {
    std::string key;
    bool match = false;
    std::string detail;
};

struct PaperReport {
    std::vector<TableDiff> tables;
    SectionFourReport section4;
    bool unique_but_not_strong = false;  // the three-player modified game
    bool pass = false;
};

PaperReport reproduce_paper(bool section4_only);

nlohmann::json paper_report_to_json(const PaperReport& r);

}  // namespace dilemma

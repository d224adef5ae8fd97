#pragma once

#include "pmforce/generators.hpp"
#include "pmforce/graph.hpp"
#include "pmforce/report.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace pmforce {

struct CorpusEntry {
    std::string id;
    Instance instance;
};

/// Hole-free polyhexes with 1..max_cells cells, ids "polyhex/<n>/<index>".
std::vector<CorpusEntry> polyhex_corpus(int max_cells);
/// Every named instance, ids "named/<name>".
std::vector<CorpusEntry> named_corpus();
/// Glue presets, ids "preset/<name>".
std::vector<CorpusEntry> preset_corpus();
/// H(n1..nk) for every row sequence with at most max_cells cells, ids "trunc-para/<rows>".
std::vector<CorpusEntry> truncated_parallelogram_corpus(int max_cells);

enum class Status { Pass, Fail, Skipped };

struct CheckOutcome {
    std::string instance;
    Status status = Status::Pass;
    std::string detail;
    Json counterexample; // null unless failed
};

struct SuiteOptions {
    int max_cells = 6;
    int max_tp_cells = 12;
    Limits limits;
};

struct SuiteSummary {
    std::string suite;
    int passed = 0;
    int failed = 0;
    int skipped = 0;
    std::vector<CheckOutcome> failures;

    [[nodiscard]] bool ok() const noexcept { return failed == 0; }
};

const std::vector<std::string>& suite_ids();

/// Runs one suite over its corpus, reporting each instance to `sink` as it
/// finishes. Throws UnknownSuite.
SuiteSummary run_suite(std::string_view id, const SuiteOptions& options = {},
                       const std::function<void(const CheckOutcome&)>& sink = {});

/// Brute-force independent domination number (exponential; small graphs only).
int brute_force_independent_domination(int n, std::span<const std::pair<int, int>> edges);

} // namespace pmforce

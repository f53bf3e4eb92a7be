#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "blockers/oracle.hpp"
#include "blockers/position_set.hpp"

namespace blockers {

/// Exhaustive search is on by default up to this order; larger orders
/// (up to kMaxSearchOrder) require an explicit node budget.
inline constexpr int kDefaultSearchLimit = 6;

/// Hard cap: the search kernel indexes cells in a 64-bit mask.
inline constexpr int kMaxSearchOrder = 8;

struct SearchConfig {
    int n = 0;
    /// Cardinality cap; defaults to max_cardinality(n).
    std::optional<int> max_cardinality;
    /// Emit one representative (the canonical form) per symmetry class.
    bool dedup_symmetry = true;
    /// Node-count cap for the search tree. Exceeding it stops the search
    /// and flags the outcome incomplete; required for n above order_limit.
    std::optional<std::uint64_t> budget;
    int order_limit = kDefaultSearchLimit;
    /// Worker count for root-branch parallelism. Budgeted runs always
    /// execute sequentially so node accounting stays deterministic.
    int threads = 1;
};

/// One discovered minimum blocker. Every record is re-verified through the
/// oracle before emission: is_verified_minimum is always true and
/// private_witnesses holds, for each cell, the lexicographically first
/// avoider hitting the blocker exactly once at that cell.
struct SearchResult {
    PositionSet blocker = PositionSet::empty(1);
    int cardinality = 0;
    bool is_verified_minimum = false;
    std::vector<std::pair<Cell, Permutation>> private_witnesses;
    int symmetry_class_size = 1;
};

struct SearchOutcome {
    std::vector<SearchResult> results; // by cardinality, then serialization
    bool complete = true;
    std::uint64_t nodes_expanded = 0;
};

/// Number of root branches the search tree is partitioned into (one per
/// cell of the lexicographically first avoider).
int root_branch_count(const SearchConfig& cfg);

/// Every minimum blocker of order cfg.n with cardinality <= cap; one
/// representative per symmetry class when dedup is on. Deterministic
/// emission order.
SearchOutcome enumerate_minimum_blockers(const SearchConfig& cfg);

/// Runs only the given root branches (ascending indices); used for
/// checkpointed and resumable runs. Results are sorted but not
/// deduplicated across separate calls; callers merging branch runs apply
/// finalize_results.
SearchOutcome run_search_branches(const SearchConfig& cfg,
                                  const std::vector<int>& branches);

/// Sorts, optionally symmetry-deduplicates and verifies raw blockers into
/// emission-ready results.
std::vector<SearchResult> finalize_results(const SearchConfig& cfg,
                                           std::vector<PositionSet> raw_blockers);

/// The conjectured maximal minimum-blocker cardinality r*s with
/// r + s = n + 1 and |r - s| <= 1; equals max_cardinality(n).
int conjecture_target(int n);

struct ConjectureReport {
    int n = 0;
    int max_found = 0;
    int target = 0;
    std::optional<PositionSet> witness; // attains max_found
    bool falsified = false;
    bool complete = true;
    std::uint64_t nodes_expanded = 0;
};

/// Enumerates minimum blockers with the cardinality cap target+1 and
/// reports the maximal cardinality found. falsified = (max_found > target).
ConjectureReport conjecture_probe(int n,
                                  std::optional<std::uint64_t> budget = {},
                                  int order_limit = kDefaultSearchLimit);

} // namespace blockers

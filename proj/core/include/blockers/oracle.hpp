#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "blockers/permutation.hpp"
#include "blockers/position_set.hpp"

namespace blockers {

/// Ground-truth answer of the exhaustive blocker check. The witness is a
/// 123-avoiding permutation disjoint from the candidate, present exactly
/// when the candidate is not a blocker.
struct BlockerVerdict {
    bool is_blocker = false;
    std::optional<Permutation> witness;
};

/// Lexicographically sorted list of all 123-avoiding permutations of order
/// n, memoized per process. The returned reference stays valid for the
/// lifetime of the program and may be shared across threads read-only.
const std::vector<Permutation>& avoider_list(int n, int order_limit = kDefaultOrderLimit);

/// Installs a precomputed avoider list (a disk-cache hook). The list is
/// fully validated first; an invalid list is rejected and recomputed on
/// demand instead, so a stale or corrupt cache can never change results.
/// Returns true if the list was accepted (or an identical one was already
/// memoized).
bool seed_avoider_list(int n, const std::vector<Permutation>& list);

/// Number of rows i with (i, image[i]) in B.
int intersection_count(const Permutation& p, const PositionSet& B);

/// True iff every 123-avoiding permutation of order B.n intersects B.
/// Otherwise the verdict carries the lexicographically first avoider
/// missing B.
BlockerVerdict is_blocker(const PositionSet& B, int order_limit = kDefaultOrderLimit);

/// True iff B is a blocker and removing any single cell destroys
/// blockerhood: every cell is necessary. Note the naming swap relative to
/// common usage; "minimum" here is the irredundance property.
bool is_minimum(const PositionSet& B, int order_limit = kDefaultOrderLimit);

/// True iff B is a blocker with exactly n cells, the smallest possible
/// cardinality by the Hankel-coverage lower bound.
bool is_minimal(const PositionSet& B, int order_limit = kDefaultOrderLimit);

/// All 123-avoiding permutations intersecting B exactly once, in
/// lexicographic order.
std::vector<Permutation> once_intersecting_avoiders(const PositionSet& B,
                                                    int order_limit = kDefaultOrderLimit);

/// counts[l] = number of cells of B on the cyclic-Hankel diagonal l.
std::vector<int> hankel_coverage(const PositionSet& B);

/// Per-cell private witnesses: for each cell b of B, the lexicographically
/// first avoider intersecting B exactly once, at b. Present for every cell
/// iff B is a minimum blocker (the certificate form of is_minimum); returns
/// nullopt as soon as one cell has no witness or B is not a blocker.
std::optional<std::vector<std::pair<Cell, Permutation>>>
minimum_certificates(const PositionSet& B, int order_limit = kDefaultOrderLimit);

} // namespace blockers

#pragma once

#include <optional>
#include <vector>

#include "blockers/oracle.hpp"
#include "blockers/permutation.hpp"
#include "blockers/position_set.hpp"

namespace blockers {

/// Linear rank of the full vertex set of the 123-avoiding polytope of
/// order n, as 0/1 vectors: (n-1)^2 + 1.
constexpr int ambient_rank(int n) { return (n - 1) * (n - 1) + 1; }

/// Rank of the once-intersecting avoiders of a blocker together with the
/// flag bounds. Bounds and the derived flags are present only when the
/// input is a flag-shaped blocker B_n(m,t):
///   upper_bound = (n-1)^2 + 1 - t(n-m)
///   lower_bound = (n-1)^2 + 1 - (t+2)(n-m)   for m < n
///               = (n-1)^2                    for m = n (L-shapes)
/// The m = n case is the L-shape guarantee: the flag formula's induction
/// starts at n-m = 1 and its n-m = 0 evaluation overshoots by one (a proper
/// L-shape adds an affine constraint, capping the span at (n-1)^2).
/// affine_dim = rank - 1 is reported as side information only (the rank of
/// the differences of the vertices); the bounds are stated in the linear
/// normalization.
struct FaceReport {
    int n = 0;
    std::optional<FlagSpec> spec;
    int once_count = 0;
    int rank = 0;
    int affine_dim = 0;
    std::optional<int> upper_bound;
    std::optional<int> lower_bound;
    std::optional<bool> meets_upper;
    std::optional<bool> within_bounds;
};

/// Linear rank over the rationals of the permutation matrices flattened to
/// n^2-vectors. Exact integer elimination (fraction-free with per-row
/// content reduction); no floating point anywhere.
int rank_of_matrices(const std::vector<Permutation>& perms, int n);

/// Rank of once_intersecting_avoiders(B); bound fields filled when B is
/// recognized as a flag blocker.
FaceReport face_rank(const PositionSet& B, int order_limit = kDefaultOrderLimit);
FaceReport face_rank(const FlagSpec& spec, int order_limit = kDefaultOrderLimit);

/// True iff no once-intersecting avoider of B_n(m,t) occupies a cell of the
/// forbidden corner region; vacuously true when the region is empty.
bool check_forbidden_corner(const FlagSpec& spec, int order_limit = kDefaultOrderLimit);

} // namespace blockers

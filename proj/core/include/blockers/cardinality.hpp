#pragma once

#include <vector>

#include "blockers/errors.hpp"

namespace blockers {

/// Largest cardinality of a flag-shaped blocker of order n:
/// n + (ceil(n/2) - 1)(n - ceil(n/2)).
int max_cardinality(int n);

/// True iff c has a divisor d with 1 < d < c. 0, 1 and primes are not
/// composite.
bool is_composite(int c);

/// Ground truth by direct double loop: { n + t(n-m) : 1 <= m <= n,
/// 0 <= t <= m-1 }, sorted ascending.
std::vector<int> achievable_cardinalities(int n);

/// The cardinality characterization's stated condition, with the free m-1
/// read as n-2 (the value used by its own forward argument): p is accepted
/// iff p-n = 0, or p-n <= n-2, or p-n is composite. Throws errc::range_error
/// outside n <= p <= max_cardinality(n).
bool paper_predicate(int n, int p);

/// Side-by-side comparison of the ground-truth loop and the predicate over
/// the full p-range. Discrepancies are reported, never reconciled.
struct CardinalityAudit {
    int n = 0;
    std::vector<int> achievable;          // sorted
    std::vector<int> paper_predicate_set; // sorted
    std::vector<int> discrepancies;       // symmetric difference, sorted
    int max_cardinality = 0;
};

CardinalityAudit audit(int n);

} // namespace blockers

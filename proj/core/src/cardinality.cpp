#include "blockers/cardinality.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace blockers {

int max_cardinality(int n) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    const int half = (n + 1) / 2;
    return n + (half - 1) * (n - half);
}

bool is_composite(int c) {
    if (c < 4) return false;
    for (int d = 2; d * d <= c; ++d)
        if (c % d == 0) return true;
    return false;
}

std::vector<int> achievable_cardinalities(int n) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    std::set<int> values;
    for (int m = 1; m <= n; ++m)
        for (int t = 0; t <= m - 1; ++t)
            values.insert(n + t * (n - m));
    return {values.begin(), values.end()};
}

bool paper_predicate(int n, int p) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    if (p < n || p > max_cardinality(n))
        throw_error(errc::range_error,
                    "cardinality " + std::to_string(p) + " outside " + std::to_string(n) +
                        ".." + std::to_string(max_cardinality(n)));
    const int c = p - n;
    return c == 0 || c <= n - 2 || is_composite(c);
}

CardinalityAudit audit(int n) {
    CardinalityAudit report;
    report.n = n;
    report.achievable = achievable_cardinalities(n);
    report.max_cardinality = max_cardinality(n);
    for (int p = n; p <= report.max_cardinality; ++p)
        if (paper_predicate(n, p)) report.paper_predicate_set.push_back(p);
    std::set_symmetric_difference(report.achievable.begin(), report.achievable.end(),
                                  report.paper_predicate_set.begin(),
                                  report.paper_predicate_set.end(),
                                  std::back_inserter(report.discrepancies));
    return report;
}

} // namespace blockers

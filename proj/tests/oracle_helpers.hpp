#pragma once

// Brute-force reference implementations the unit tests check the library
// against. Deliberately naive and algorithmically independent of the code
// under test: quadratic DP instead of patience sorting, next_permutation
// filtering instead of pruned backtracking, full 2^(n*n) subset scans
// instead of the transversal search.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "blockers/position_set.hpp"

namespace brute {

/// Longest strictly increasing subsequence, O(n^2) DP.
inline int lis_dp(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    std::vector<int> best(static_cast<std::size_t>(n), 1);
    int out = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (v[static_cast<std::size_t>(j)] < v[static_cast<std::size_t>(i)])
                best[static_cast<std::size_t>(i)] =
                    std::max(best[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(j)] + 1);
        out = std::max(out, best[static_cast<std::size_t>(i)]);
    }
    return out;
}

/// 123-pattern by scanning every index triple.
inline bool has_123(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (v[static_cast<std::size_t>(a)] < v[static_cast<std::size_t>(b)] &&
                    v[static_cast<std::size_t>(b)] < v[static_cast<std::size_t>(c)])
                    return true;
    return false;
}

/// All 123-avoiding one-line images of order n, by filtering all n!
/// permutations; ascending because next_permutation walks lex order.
inline std::vector<std::vector<int>> all_avoiders(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        if (!has_123(v)) out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Cell-set bitmask of an avoider, bit (row-1)*n + (col-1).
inline std::uint64_t image_mask(const std::vector<int>& image) {
    const int n = static_cast<int>(image.size());
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
        mask |= std::uint64_t{1} << (i * n + image[static_cast<std::size_t>(i)] - 1);
    return mask;
}

/// Every minimum blocker of order n (any cardinality), as cell bitmasks in
/// ascending numeric order, by scanning all 2^(n*n) subsets. Usable up to
/// n = 4 (65536 subsets).
inline std::vector<std::uint64_t> minimum_blocker_masks(int n) {
    std::vector<std::uint64_t> avoiders;
    for (const auto& image : all_avoiders(n)) avoiders.push_back(image_mask(image));
    std::vector<std::uint64_t> out;
    const std::uint64_t end = std::uint64_t{1} << (n * n);
    for (std::uint64_t set = 1; set < end; ++set) {
        bool blocks = true;
        for (std::uint64_t a : avoiders)
            if ((a & set) == 0) {
                blocks = false;
                break;
            }
        if (!blocks) continue;
        bool every_cell_needed = true;
        for (std::uint64_t rest = set; rest != 0 && every_cell_needed; rest &= rest - 1) {
            const std::uint64_t b = rest & (~rest + 1);
            bool has_private = false;
            for (std::uint64_t a : avoiders)
                if ((a & set) == b) {
                    has_private = true;
                    break;
                }
            every_cell_needed = has_private;
        }
        if (every_cell_needed) out.push_back(set);
    }
    return out;
}

inline std::uint64_t set_mask(const blockers::PositionSet& ps) {
    std::uint64_t mask = 0;
    for (blockers::Cell c : ps.cells())
        mask |= std::uint64_t{1} << ((c.row - 1) * ps.order() + (c.col - 1));
    return mask;
}

/// Uniformly random cell subset with each cell kept with probability p.
inline blockers::PositionSet random_set(std::mt19937& rng, int n, double p = 0.3) {
    std::bernoulli_distribution keep(p);
    std::vector<blockers::Cell> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (keep(rng)) cells.push_back({i, j});
    return blockers::PositionSet(n, std::move(cells));
}

} // namespace brute

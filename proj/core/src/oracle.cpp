#include "blockers/oracle.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace blockers {

namespace {

std::mutex g_avoider_mutex;
std::map<int, std::vector<Permutation>>& avoider_store() {
    static std::map<int, std::vector<Permutation>> store;
    return store;
}

bool valid_avoider_list(int n, const std::vector<Permutation>& list) {
    if (n < 1 || n > 30) return false;
    if (list.size() != catalan(n)) return false;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i].order() != n) return false;
        if (i > 0 && !(list[i - 1] < list[i])) return false;
        if (contains_123(list[i])) return false;
    }
    return true;
}

/// masks[row - 1] has bit (col - 1) set for every cell (row, col) of B.
std::vector<std::uint64_t> row_masks(const PositionSet& B) {
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(B.order()), 0);
    for (Cell c : B.cells())
        masks[static_cast<std::size_t>(c.row - 1)] |= std::uint64_t{1} << (c.col - 1);
    return masks;
}

int count_hits(const Permutation& p, const std::vector<std::uint64_t>& masks) {
    int count = 0;
    const std::vector<int>& image = p.image();
    for (std::size_t i = 0; i < image.size(); ++i)
        count += (masks[i] >> (image[i] - 1)) & 1u;
    return count;
}

void require_same_order(const Permutation& p, const PositionSet& B) {
    if (p.order() != B.order())
        throw_error(errc::order_mismatch,
                    "permutation order " + std::to_string(p.order()) +
                        " != position set order " + std::to_string(B.order()));
}

} // namespace

const std::vector<Permutation>& avoider_list(int n, int order_limit) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    if (n > order_limit)
        throw_error(errc::order_too_large,
                    "order " + std::to_string(n) + " exceeds limit " + std::to_string(order_limit));
    std::lock_guard<std::mutex> lock(g_avoider_mutex);
    auto& store = avoider_store();
    auto it = store.find(n);
    if (it == store.end())
        it = store.emplace(n, enumerate_avoiders(n, order_limit)).first;
    return it->second;
}

bool seed_avoider_list(int n, const std::vector<Permutation>& list) {
    if (!valid_avoider_list(n, list)) return false;
    std::lock_guard<std::mutex> lock(g_avoider_mutex);
    auto& store = avoider_store();
    auto it = store.find(n);
    if (it != store.end()) return it->second == list;
    store.emplace(n, list);
    return true;
}

int intersection_count(const Permutation& p, const PositionSet& B) {
    require_same_order(p, B);
    int count = 0;
    for (int i = 1; i <= p.order(); ++i)
        if (B.contains({i, p.at(i)})) ++count;
    return count;
}

BlockerVerdict is_blocker(const PositionSet& B, int order_limit) {
    const auto masks = row_masks(B);
    for (const Permutation& p : avoider_list(B.order(), order_limit))
        if (count_hits(p, masks) == 0) return {false, p};
    return {true, std::nullopt};
}

bool is_minimum(const PositionSet& B, int order_limit) {
    // B is a blocker with no removable cell iff no avoider misses B and
    // every cell is the unique hit of some avoider.
    const auto masks = row_masks(B);
    std::vector<char> witnessed(B.cells().size(), 0);
    for (const Permutation& p : avoider_list(B.order(), order_limit)) {
        const int hits = count_hits(p, masks);
        if (hits == 0) return false;
        if (hits == 1) {
            for (std::size_t k = 0; k < B.cells().size(); ++k) {
                const Cell c = B.cells()[k];
                if (p.at(c.row) == c.col) {
                    witnessed[k] = 1;
                    break;
                }
            }
        }
    }
    return std::all_of(witnessed.begin(), witnessed.end(), [](char w) { return w != 0; });
}

bool is_minimal(const PositionSet& B, int order_limit) {
    if (B.cardinality() != B.order()) return false;
    return is_blocker(B, order_limit).is_blocker;
}

std::vector<Permutation> once_intersecting_avoiders(const PositionSet& B, int order_limit) {
    const auto masks = row_masks(B);
    std::vector<Permutation> out;
    for (const Permutation& p : avoider_list(B.order(), order_limit))
        if (count_hits(p, masks) == 1) out.push_back(p);
    return out;
}

std::vector<int> hankel_coverage(const PositionSet& B) {
    const int n = B.order();
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (Cell c : B.cells())
        ++counts[static_cast<std::size_t>(hankel_label(n, c.row, c.col).value)];
    return counts;
}

std::optional<std::vector<std::pair<Cell, Permutation>>>
minimum_certificates(const PositionSet& B, int order_limit) {
    const auto masks = row_masks(B);
    std::vector<std::optional<Permutation>> witness(B.cells().size());
    for (const Permutation& p : avoider_list(B.order(), order_limit)) {
        const int hits = count_hits(p, masks);
        if (hits == 0) return std::nullopt;
        if (hits == 1) {
            for (std::size_t k = 0; k < B.cells().size(); ++k) {
                const Cell c = B.cells()[k];
                if (p.at(c.row) == c.col) {
                    if (!witness[k]) witness[k] = p;
                    break;
                }
            }
        }
    }
    std::vector<std::pair<Cell, Permutation>> out;
    out.reserve(B.cells().size());
    for (std::size_t k = 0; k < B.cells().size(); ++k) {
        if (!witness[k]) return std::nullopt;
        out.emplace_back(B.cells()[k], *witness[k]);
    }
    return out;
}

} // namespace blockers

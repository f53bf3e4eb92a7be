#include "blockers/permutation.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace blockers {

namespace {

void validate_image(const std::vector<int>& image) {
    if (image.empty())
        throw_error(errc::invalid_spec, "empty permutation (order must be at least 1)");
    const int n = static_cast<int>(image.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : image) {
        if (v < 1 || v > n)
            throw_error(errc::invalid_spec,
                        "permutation value " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw_error(errc::invalid_spec,
                        "permutation repeats value " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

} // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    validate_image(image_);
}

Permutation Permutation::identity(int n) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(image));
}

int Permutation::at(int row) const {
    if (row < 1 || row > order())
        throw_error(errc::index_out_of_range,
                    "row " + std::to_string(row) + " outside 1.." + std::to_string(order()));
    return image_[static_cast<std::size_t>(row - 1)];
}

int lis_length(const Permutation& p) {
    // Patience sorting: tails[k] = smallest tail of an increasing subsequence
    // of length k+1 seen so far.
    std::vector<int> tails;
    tails.reserve(p.image().size());
    for (int v : p.image()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

bool contains_123(const Permutation& p) {
    return lis_length(p) >= 3;
}

std::vector<Permutation> enumerate_avoiders(int n, int order_limit) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    if (n > order_limit)
        throw_error(errc::order_too_large,
                    "order " + std::to_string(n) + " exceeds limit " + std::to_string(order_limit));

    std::vector<Permutation> out;
    out.reserve(catalan(n));

    // Depth-first over prefixes, trying values in increasing order so the
    // output is lexicographically sorted. A prefix stays feasible iff it has
    // no 123-pattern and every unused value below m2 can still be placed,
    // where m2 = min over increasing pairs (a < b) of the larger element b:
    // any later value above m2 completes a triple, so all unused values
    // above m2 are unusable and the prefix dies unless max unused < m2.
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

    constexpr int kInf = 1 << 30;
    // m1[d], m2[d]: state after placing d values.
    std::vector<int> m1(static_cast<std::size_t>(n) + 1, kInf);
    std::vector<int> m2(static_cast<std::size_t>(n) + 1, kInf);

    auto max_unused = [&]() {
        for (int v = n; v >= 1; --v)
            if (!used[static_cast<std::size_t>(v)]) return v;
        return 0;
    };

    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            out.emplace_back(prefix);
            return;
        }
        const int lim = m2[static_cast<std::size_t>(depth)];
        for (int v = 1; v <= n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            if (v > lim) break; // would complete a 123-pattern
            used[static_cast<std::size_t>(v)] = 1;
            prefix.push_back(v);
            const int pm1 = m1[static_cast<std::size_t>(depth)];
            m1[static_cast<std::size_t>(depth) + 1] = std::min(pm1, v);
            m2[static_cast<std::size_t>(depth) + 1] =
                (v > pm1) ? std::min(lim, v) : lim;
            if (max_unused() < m2[static_cast<std::size_t>(depth) + 1])
                self(self, depth + 1);
            prefix.pop_back();
            used[static_cast<std::size_t>(v)] = 0;
        }
    };
    dfs(dfs, 0);
    return out;
}

std::uint64_t catalan(int n) {
    if (n < 0 || n > 30)
        throw_error(errc::range_error, "catalan argument " + std::to_string(n) + " outside 0..30");
    // C_0 = 1, C_{k+1} = C_k * 2(2k+1)/(k+2); exact at every step.
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k)
        c = c * 2 * (2 * static_cast<std::uint64_t>(k) + 1) / (static_cast<std::uint64_t>(k) + 2);
    return c;
}

HankelLabel hankel_label(int n, int row, int col) {
    if (n < 1)
        throw_error(errc::invalid_spec, "order " + std::to_string(n) + " must be positive");
    if (row < 1 || row > n || col < 1 || col > n)
        throw_error(errc::index_out_of_range,
                    "cell (" + std::to_string(row) + "," + std::to_string(col) +
                        ") outside [1," + std::to_string(n) + "]^2");
    return HankelLabel{(row + col - 2) % n};
}

} // namespace blockers

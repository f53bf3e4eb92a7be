#include "doctest.h"

#include <algorithm>
#include <random>

#include "blockers/oracle.hpp"
#include "oracle_helpers.hpp"

using namespace blockers;

namespace {

std::vector<Permutation> brute_avoiders(int n) {
    std::vector<Permutation> out;
    for (const auto& image : brute::all_avoiders(n)) out.emplace_back(image);
    return out;
}

// Independent minimality check: a blocker all of whose one-cell subsets
// fail to block.
bool removal_minimum(const PositionSet& B) {
    if (is_blocker(B).is_blocker == false) return false;
    for (Cell c : B.cells())
        if (is_blocker(B.without(c)).is_blocker) return false;
    return true;
}

} // namespace

TEST_CASE("avoider_list is memoized and matches the exhaustive reference") {
    const auto& first = avoider_list(5);
    const auto& second = avoider_list(5);
    CHECK(&first == &second);
    for (int n = 1; n <= 7; ++n) {
        const auto brute_list = brute_avoiders(n);
        const auto& list = avoider_list(n);
        REQUIRE(list.size() == brute_list.size());
        for (std::size_t k = 0; k < list.size(); ++k) CHECK(list[k] == brute_list[k]);
    }
    CHECK(avoider_list(9).size() == catalan(9));
    CHECK_THROWS_AS(avoider_list(13), Error);
    CHECK_NOTHROW(avoider_list(13, 13));
    CHECK_THROWS_AS(avoider_list(0), Error);
}

TEST_CASE("seed_avoider_list accepts only a fully valid list") {
    const auto good = brute_avoiders(4);
    CHECK(seed_avoider_list(4, good));
    CHECK(seed_avoider_list(4, good)); // identical re-seed
    auto truncated = good;
    truncated.pop_back();
    CHECK_FALSE(seed_avoider_list(4, truncated));
    auto shuffled = good;
    std::swap(shuffled[0], shuffled[1]);
    CHECK_FALSE(seed_avoider_list(4, shuffled));
    auto polluted = brute_avoiders(3);
    polluted.back() = Permutation({1, 2, 3});
    CHECK_FALSE(seed_avoider_list(3, polluted));
    const auto& recovered = avoider_list(3);
    CHECK(recovered.size() == 5);
    CHECK(std::find(recovered.begin(), recovered.end(), Permutation({1, 2, 3})) ==
          recovered.end());
}

TEST_CASE("intersection_count counts occupied cells") {
    const PositionSet L(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}, {3, 6}});
    CHECK(intersection_count(Permutation({3, 6, 5, 4, 2, 1}), L) == 2);
    CHECK(intersection_count(Permutation({4, 3, 2, 1, 6, 5}), L) == 1);
    CHECK(intersection_count(Permutation::identity(6), PositionSet::empty(6)) == 0);
    CHECK_THROWS_AS(intersection_count(Permutation::identity(5), L), Error);

    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const PositionSet B = brute::random_set(rng, n);
        std::vector<int> image(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) image[static_cast<std::size_t>(i)] = i + 1;
        std::shuffle(image.begin(), image.end(), rng);
        const Permutation p(image);
        int expected = 0;
        for (int i = 1; i <= n; ++i)
            if (B.contains({i, p.at(i)})) ++expected;
        CHECK(intersection_count(p, B) == expected);
    }
}

TEST_CASE("the antidiagonal-plus-fixed-point permutation meets B_10(8,3) twice") {
    std::vector<int> image(10);
    for (int i = 1; i <= 9; ++i) image[static_cast<std::size_t>(i - 1)] = 10 - i;
    image[9] = 10;
    const Permutation p(image);
    CHECK_FALSE(contains_123(p));
    CHECK(intersection_count(p, flag_positions({10, 8, 3})) == 2);
}

TEST_CASE("is_blocker on pinned sets") {
    CHECK(is_blocker(PositionSet(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}, {3, 6}}))
              .is_blocker);
    CHECK(is_blocker(PositionSet(6, {{1, 4}, {1, 5}, {1, 6}, {2, 2}, {2, 6}, {4, 5}}))
              .is_blocker);
    CHECK(is_blocker(PositionSet(1, {{1, 1}})).is_blocker);
    CHECK_FALSE(is_blocker(PositionSet::empty(1)).is_blocker);

    const BlockerVerdict miss = is_blocker(PositionSet::empty(2));
    CHECK_FALSE(miss.is_blocker);
    REQUIRE(miss.witness.has_value());
    CHECK(*miss.witness == Permutation({1, 2}));
    CHECK_FALSE(is_blocker(PositionSet(3, {{2, 2}})).is_blocker);
}

TEST_CASE("a non-blocker's witness is the first avoider it misses") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const PositionSet B = brute::random_set(rng, n);
        const BlockerVerdict v = is_blocker(B);
        std::optional<Permutation> expected;
        for (const Permutation& p : brute_avoiders(n)) {
            if (intersection_count(p, B) == 0) {
                expected = p;
                break;
            }
        }
        CHECK(v.is_blocker == !expected.has_value());
        CHECK(v.witness == expected);
    }
}

TEST_CASE("every flag is a minimum blocker") {
    for (int n = 1; n <= 6; ++n) {
        for (const FlagSpec& spec : all_flag_specs(n)) {
            const PositionSet B = flag_positions(spec);
            CHECK(is_blocker(B).is_blocker);
            CHECK(is_minimum(B));
        }
    }
}

TEST_CASE("a redundant cell breaks minimality") {
    std::vector<Cell> column;
    for (int i = 1; i <= 4; ++i) column.push_back({i, 1});
    const PositionSet col1(4, column);
    CHECK(is_minimum(col1));
    const PositionSet padded = col1.with({1, 2});
    CHECK(is_blocker(padded).is_blocker);
    CHECK_FALSE(is_minimum(padded));
    CHECK_FALSE(is_minimum(PositionSet::empty(3)));
}

TEST_CASE("is_minimum agrees with the removal test on random sets") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const PositionSet B = brute::random_set(rng, n, 0.35);
        CHECK(is_minimum(B) == removal_minimum(B));
    }
}

TEST_CASE("is_minimal means blocker of cardinality n") {
    for (int n = 1; n <= 6; ++n) {
        for (int s = 1; s <= n; ++s) CHECK(is_minimal(l_shape_positions(n, s, n + 1 - s)));
        for (const FlagSpec& spec : all_flag_specs(n))
            CHECK(is_minimal(flag_positions(spec)) == (spec.t * (spec.n - spec.m) == 0));
    }
    std::vector<Cell> column;
    for (int i = 1; i <= 4; ++i) column.push_back({i, 1});
    CHECK(is_minimal(PositionSet(4, column)));
    CHECK_FALSE(is_minimal(PositionSet(4, column).with({1, 2})));
    CHECK_FALSE(is_minimal(PositionSet(4, {{1, 1}, {2, 2}, {3, 3}, {4, 4}})));
}

TEST_CASE("once_intersecting_avoiders on pinned sets") {
    const PositionSet row1(3, {{1, 1}, {1, 2}, {1, 3}});
    const auto once = once_intersecting_avoiders(row1);
    CHECK(once == avoider_list(3));

    std::vector<Cell> all;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) all.push_back({i, j});
    CHECK(once_intersecting_avoiders(PositionSet(3, all)).empty());

    CHECK(once_intersecting_avoiders(flag_positions({6, 4, 2})).size() == 62);

    std::mt19937 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const PositionSet B = brute::random_set(rng, n);
        const auto got = once_intersecting_avoiders(B);
        CHECK(std::is_sorted(got.begin(), got.end()));
        std::vector<Permutation> expected;
        for (const Permutation& p : brute_avoiders(n))
            if (intersection_count(p, B) == 1) expected.push_back(p);
        CHECK(got == expected);
    }
}

TEST_CASE("hankel_coverage tallies cells by diagonal") {
    const PositionSet L(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}, {3, 6}});
    CHECK(hankel_coverage(L) == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(hankel_coverage(PositionSet::empty(4)) == std::vector<int>{0, 0, 0, 0});
    CHECK(hankel_coverage(PositionSet(2, {{1, 1}, {2, 2}})) == std::vector<int>{2, 0});

    std::mt19937 rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const PositionSet B = brute::random_set(rng, n);
        const auto counts = hankel_coverage(B);
        REQUIRE(static_cast<int>(counts.size()) == n);
        int total = 0;
        std::vector<int> expected(static_cast<std::size_t>(n), 0);
        for (Cell c : B.cells())
            ++expected[static_cast<std::size_t>(hankel_label(n, c.row, c.col).value)];
        for (int l = 0; l < n; ++l) total += counts[static_cast<std::size_t>(l)];
        CHECK(counts == expected);
        CHECK(total == B.cardinality());
    }
}

TEST_CASE("blockers cover every cyclic-Hankel diagonal") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const PositionSet B = brute::random_set(rng, n, 0.4);
        if (!is_blocker(B).is_blocker) continue;
        for (int count : hankel_coverage(B)) CHECK(count >= 1);
    }
    for (const FlagSpec& spec : all_flag_specs(6))
        for (int count : hankel_coverage(flag_positions(spec))) CHECK(count >= 1);
}

TEST_CASE("minimum_certificates carries one private witness per cell") {
    for (int n = 1; n <= 6; ++n) {
        for (const FlagSpec& spec : all_flag_specs(n)) {
            const PositionSet B = flag_positions(spec);
            const auto certs = minimum_certificates(B);
            REQUIRE(certs.has_value());
            REQUIRE(static_cast<int>(certs->size()) == B.cardinality());
            for (std::size_t k = 0; k < certs->size(); ++k) {
                const auto& [cell, witness] = (*certs)[k];
                CHECK(cell == B.cells()[k]);
                CHECK(intersection_count(witness, B) == 1);
                CHECK(witness.at(cell.row) == cell.col);
            }
        }
    }
}

TEST_CASE("minimum_certificates is absent exactly when is_minimum fails") {
    std::vector<Cell> column;
    for (int i = 1; i <= 4; ++i) column.push_back({i, 1});
    CHECK_FALSE(minimum_certificates(PositionSet(4, column).with({1, 2})).has_value());
    CHECK_FALSE(minimum_certificates(PositionSet::empty(3)).has_value());

    std::mt19937 rng(59);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const PositionSet B = brute::random_set(rng, n, 0.35);
        CHECK(minimum_certificates(B).has_value() == is_minimum(B));
    }
}

TEST_CASE("certificate witnesses are lexicographically first") {
    const PositionSet L(6, {{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 6}, {3, 6}});
    const auto certs = minimum_certificates(L);
    REQUIRE(certs.has_value());
    for (const auto& [cell, witness] : *certs) {
        for (const Permutation& p : avoider_list(6)) {
            if (intersection_count(p, L) == 1 && p.at(cell.row) == cell.col) {
                CHECK(p == witness);
                break;
            }
        }
    }
}

TEST_CASE("blocker and minimality verdicts are symmetry-invariant") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const PositionSet B = brute::random_set(rng, n, 0.35);
        const bool blocker = is_blocker(B).is_blocker;
        const bool minimum = is_minimum(B);
        const std::size_t once = once_intersecting_avoiders(B).size();
        for (Symmetry s :
             {Symmetry::transpose, Symmetry::hankel_transpose, Symmetry::rot180}) {
            const PositionSet image = apply_symmetry(B, s);
            CHECK(is_blocker(image).is_blocker == blocker);
            CHECK(is_minimum(image) == minimum);
            CHECK(once_intersecting_avoiders(image).size() == once);
        }
    }
}

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockers/errors.hpp"
#include "blockers/permutation.hpp"

namespace blockers {

/// A 1-based grid position.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// A set of cells of an n x n grid; the universal blocker representation.
/// Cells are kept unique and in row-major sorted order, which is also the
/// canonical serialization order.
class PositionSet {
public:
    PositionSet(int n, std::vector<Cell> cells);

    static PositionSet empty(int n);

    int order() const noexcept { return n_; }
    const std::vector<Cell>& cells() const noexcept { return cells_; }
    int cardinality() const noexcept { return static_cast<int>(cells_.size()); }
    bool is_empty() const noexcept { return cells_.empty(); }

    bool contains(Cell c) const;

    PositionSet with(Cell c) const;
    PositionSet without(Cell c) const;

    bool operator==(const PositionSet&) const = default;
    auto operator<=>(const PositionSet&) const = default;

private:
    int n_ = 0;
    std::vector<Cell> cells_;
};

/// |cells|.
int cardinality(const PositionSet& ps);

/// The three symmetries of the grid that preserve 123-avoidance.
enum class Symmetry {
    transpose,        // (i,j) -> (j,i)
    hankel_transpose, // (i,j) -> (n+1-j, n+1-i)
    rot180,           // (i,j) -> (n+1-i, n+1-j)
};

PositionSet apply_symmetry(const PositionSet& ps, Symmetry sym);

/// Lexicographically least serialization over the 4-element group
/// {identity, transpose, hankel_transpose, rot180}.
PositionSet canonical_form(const PositionSet& ps);

/// Number of distinct images of ps under the 4-element group (1, 2 or 4).
int symmetry_class_size(const PositionSet& ps);

/// The triple (n, m, t) defining the flag-shaped blocker B_n(m,t): pole in
/// column m, flag of height t to its left, t unoccupied rows below.
/// Admissible iff 1 <= m <= n and 0 <= t <= m-1.
struct FlagSpec {
    int n = 0;
    int m = 0;
    int t = 0;

    bool is_valid() const noexcept;
    void validate() const; // throws errc::invalid_spec

    auto operator<=>(const FlagSpec&) const = default;
};

/// All admissible (m,t) pairs for order n, in (m,t)-lexicographic order.
std::vector<FlagSpec> all_flag_specs(int n);

/// B_n(m,t) = pole {(i,m) : 1 <= i <= n-t}
///          u flag {(i,j) : 1 <= i <= n-m+1, m-t <= j <= m-1}.
/// Cardinality is exactly n + t(n-m).
PositionSet flag_positions(const FlagSpec& spec);

/// L-shaped blocker L_n(s,r) anchored at the (1,n) corner, with width s,
/// height r and r + s = n + 1. Identical to B_n(n, s-1).
PositionSet l_shape_positions(int n, int s, int r);

/// The t x (n-m) lower-right submatrix {(i,j) : n-t+1 <= i, m+1 <= j}.
/// Empty when t = 0 or m = n. No once-intersecting avoider of B_n(m,t)
/// can occupy any of these cells.
PositionSet corner_forbidden_region(const FlagSpec& spec);

/// The (m,t) pair with flag_positions equal to ps, if one exists.
std::optional<FlagSpec> recognize_flag(const PositionSet& ps);

/// Text grid format: n lines of n characters, '.' for a free cell and 'X'
/// for a blocker cell.
PositionSet parse_grid(std::string_view text);
std::string render_grid(const PositionSet& ps);

} // namespace blockers

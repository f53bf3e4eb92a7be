#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "blockers/errors.hpp"

namespace blockers {

/// Largest order accepted by the enumeration-backed operations unless the
/// caller raises the cap explicitly. Catalan(12) = 208012 avoiders.
inline constexpr int kDefaultOrderLimit = 12;

/// A permutation of {1,...,n} in one-line notation. image()[i-1] is the
/// column of the 1 in row i of the corresponding 0/1 permutation matrix
/// (rows and columns are 1-based throughout the public data model).
class Permutation {
public:
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int order() const noexcept { return static_cast<int>(image_.size()); }

    /// Column of the 1 in the given row (1-based both ways).
    int at(int row) const;

    const std::vector<int>& image() const noexcept { return image_; }

    bool operator==(const Permutation&) const = default;
    /// Lexicographic order on the one-line notation.
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> image_;
};

/// Length of the longest strictly increasing subsequence of the one-line
/// notation. A 123-pattern is exactly an increasing subsequence of length 3.
int lis_length(const Permutation& p);

/// True iff the permutation contains a 123-pattern, i.e. lis_length >= 3;
/// equivalently I_3 is a submatrix of the permutation matrix.
bool contains_123(const Permutation& p);

/// All 123-avoiding permutations of order n in lexicographic order of the
/// one-line notation. The count equals the n-th Catalan number.
///
/// Backtracks row by row and prunes any prefix that cannot extend to an
/// avoider, so the cost is linear in the output size.
std::vector<Permutation> enumerate_avoiders(int n, int order_limit = kDefaultOrderLimit);

/// n-th Catalan number; valid for 0 <= n <= 30 (fits in 64 bits).
std::uint64_t catalan(int n);

/// Index of the cyclic-Hankel diagonal through a cell: 0 corresponds to the
/// letter 'a'. The cells of a fixed label form one permutation matrix of the
/// cyclic-Hankel decomposition of J_n.
struct HankelLabel {
    int value = 0;

    auto operator<=>(const HankelLabel&) const = default;
};

/// Label of cell (row, col): (row + col - 2) mod n.
HankelLabel hankel_label(int n, int row, int col);

} // namespace blockers

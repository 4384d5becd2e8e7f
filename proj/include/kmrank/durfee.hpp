#pragma once

#include <optional>
#include <vector>

#include "kmrank/partition.hpp"

namespace kmrank {

/// Caps p_2..p_k on the largest parts of the side partitions lambda^2..lambda^k.
/// Stored 0-based: p[0] is p_2.
struct BoundProfile {
    std::vector<int> p;

    /// Cap on the side partition with 1-based index i (i >= 2).
    int cap(int i) const { return p.at(static_cast<std::size_t>(i - 2)); }
    friend bool operator==(const BoundProfile&, const BoundProfile&) = default;
};

/// k successive m-Durfee rectangles of a partition.
///
/// Rectangle i has width widths[i-1] and height widths[i-1] + m; it sits in
/// the rows directly below rectangle i-1. sides[i-1] is what lies to the right
/// of rectangle i (one entry per rectangle row, zeros dropped) and `below` is
/// everything under the k-th rectangle.
struct DurfeeDecomposition {
    int m = 0;
    std::vector<int> widths;
    std::vector<Partition> sides;
    Partition below;

    int k() const noexcept { return static_cast<int>(widths.size()); }
    int height(int i) const { return widths.at(static_cast<std::size_t>(i - 1)) + m; }

    friend bool operator==(const DurfeeDecomposition&, const DurfeeDecomposition&) = default;
};

/// Greedy top-down decomposition: each rectangle takes the largest width w
/// (at least max(0, 1-m)) such that a w x (w+m) block fits at its row offset.
/// Throws NoSuchDecomposition when m <= 0 and fewer than k rectangles of
/// positive height fit. For m > 0 it never fails.
DurfeeDecomposition decompose(const Partition& lambda, int k, int m);
std::optional<DurfeeDecomposition> try_decompose(const Partition& lambda, int k, int m);

/// Reassembles the partition. Throws InvalidDecomposition if any structural
/// invariant fails or the result would not decompose back to `d`.
Partition compose(const DurfeeDecomposition& d);

BoundProfile profile(const DurfeeDecomposition& d);

/// Number of successive (non-empty) Durfee squares.
int durfee_square_count(const Partition& lambda);

}  // namespace kmrank

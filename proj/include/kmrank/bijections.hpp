#pragma once

#include "kmrank/partition.hpp"

namespace kmrank {

/// d_r: remove the first column and add a new first row of size
/// length + r - 1. Requires dyson_rank(lambda) <= r (RankTooLarge otherwise).
Partition dyson_map(const Partition& lambda, int r);

/// Inverse of d_r on partitions with dyson_rank >= r - 2.
Partition dyson_map_inverse(const Partition& mu, int r);

/// Generalized conjugation on partitions with at least k Durfee squares.
/// Keeps every Durfee square and swaps the (k,0)-rank statistics a and b.
Partition gen_conjugate(const Partition& lambda, int k);

/// Generalized Dyson map. Takes lambda with k successive m-Durfee rectangles
/// of non-zero width and r_{k,m} <= -r to a partition of
/// |lambda| - r - k(m+1) whose (m+2)-rectangles are one column narrower.
Partition gen_dyson(const Partition& lambda, int k, int m, int r);

/// Inverse of gen_dyson(., k, m, r). Takes mu with r_{k,m+2} >= -r; throws
/// NotInImage when widening its rectangles cannot give positive m-heights.
Partition gen_dyson_inverse(const Partition& mu, int k, int m, int r);

}  // namespace kmrank

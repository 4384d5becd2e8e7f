#pragma once

// Brute-force reference computations. None of these call into the greedy
// decomposition, selection or insertion code they are used to check.

#include <cstdint>
#include <vector>

#include "kmrank/partition.hpp"
#include "kmrank/select_insert.hpp"

namespace kmrank::oracle {

/// Partitions of n with every part <= max_part, generated recursively in
/// lexicographically decreasing order.
std::vector<Partition> partitions_bounded(int n, int max_part);
std::vector<Partition> partitions(int n);

/// Widths of up to k successive m-Durfee rectangles found by testing every
/// cell of each candidate rectangle. Shorter than k when they run out.
std::vector<int> rectangle_widths(const Partition& lambda, int k, int m);

/// Number of successive Durfee squares, cell by cell.
int durfee_square_count(const Partition& lambda);

/// Column lengths by scanning cells.
Partition conjugate_by_cells(const Partition& lambda);

/// Selected parts found by walking the chain rule with a candidate part
/// spliced into each partition, without building the new sequence.
/// extra[i] < 0 means "nothing inserted" for partition i.
std::vector<int> selection_with(const PartitionSequence& s, const std::vector<int>& extra);

struct InsertionCandidate {
    std::vector<int> inserted;  // part inserted into each partition
    PartitionSequence result;
};

/// Every way to insert one (possibly empty) part into each partition so that
/// sizes grow by a, caps still hold, and the new selection picks exactly the
/// inserted parts.
std::vector<InsertionCandidate> all_insertions(int a, const PartitionSequence& s);

/// Number of partitions of n whose parts all satisfy `allowed`.
std::int64_t count_partitions_with_parts(int n, const std::vector<bool>& allowed);

}  // namespace kmrank::oracle

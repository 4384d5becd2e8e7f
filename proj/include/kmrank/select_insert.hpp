#pragma once

#include <vector>

#include "kmrank/durfee.hpp"
#include "kmrank/partition.hpp"

namespace kmrank {

/// lambda^1..lambda^k with caps f(lambda^i) <= p_i for i >= 2.
struct PartitionSequence {
    std::vector<Partition> seq;
    BoundProfile bounds;

    PartitionSequence() = default;
    /// Throws InvalidSequence if bounds has the wrong length, a cap is
    /// negative, or some f(lambda^i) exceeds its cap.
    PartitionSequence(std::vector<Partition> seq, BoundProfile bounds);

    int k() const noexcept { return static_cast<int>(seq.size()); }
    int total_size() const noexcept;

    friend bool operator==(const PartitionSequence&, const PartitionSequence&) = default;
};

/// Selected row and part per partition, 0-based by partition index.
/// rows[i] is 1-based and may point past the stored parts (a zero part).
struct SelectionTrace {
    std::vector<int> rows;
    std::vector<int> parts;
    int total = 0;

    friend bool operator==(const SelectionTrace&, const SelectionTrace&) = default;
};

/// Take the first part of lambda^k; having taken row j of lambda^i, take row
/// j + p_i - lambda^i_j of lambda^(i-1). `total` is the statistic A.
SelectionTrace select(const PartitionSequence& s);

struct Removal {
    SelectionTrace trace;
    PartitionSequence rest;
};

/// psi: the selection and the sequence with every selected part deleted.
Removal remove_selected(const PartitionSequence& s);

/// phi: the unique sequence obtained by inserting one part into each
/// partition so that the sizes grow by `a` and the new selection totals `a`.
/// Throws InsertionUnderflow if a < select(s).total.
PartitionSequence insert(int a, const PartitionSequence& s);

struct IteratedRemoval {
    std::vector<int> totals;
    PartitionSequence rest;
};

/// Applies remove_selected `times` times, recording each total.
IteratedRemoval iterate_remove(const PartitionSequence& s, int times);

/// Side partitions of a decomposition together with its bound profile.
PartitionSequence side_sequence(const DurfeeDecomposition& d);

}  // namespace kmrank

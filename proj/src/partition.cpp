#include "kmrank/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "kmrank/error.hpp"

namespace kmrank {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) fail(ErrorCode::InvalidPartition, "partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            fail(ErrorCode::InvalidPartition, "partition parts must be weakly decreasing");
    }
}

Partition Partition::from_multiset(std::vector<int> parts) {
    if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; }))
        fail(ErrorCode::InvalidPartition, "negative part");
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

int Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> out(static_cast<std::size_t>(largest()), 0);
    // Column c holds one cell for every part >= c.
    for (int part : parts_)
        for (int c = 0; c < part; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

Partition Partition::without_first_column() const {
    std::vector<int> out;
    out.reserve(parts_.size());
    for (int part : parts_)
        if (part > 1) out.push_back(part - 1);
    return Partition(std::move(out));
}

Partition Partition::with_first_column(int height) const {
    if (height < length())
        fail(ErrorCode::InvalidPartition, "new first column is shorter than the partition");
    std::vector<int> out(static_cast<std::size_t>(height), 1);
    for (std::size_t i = 0; i < parts_.size(); ++i) out[i] += parts_[i];
    return Partition(std::move(out));
}

PartitionGenerator::PartitionGenerator(int n) : n_(n) {
    if (n < 0) fail(ErrorCode::InvalidPartition, "cannot enumerate partitions of a negative integer");
}

bool PartitionGenerator::next() {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (n_ > 0) parts_.assign(1, n_);
        return true;
    }
    // Strip trailing ones, lower the last part above one, and refill greedily.
    int freed = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++freed;
    }
    if (parts_.empty()) {
        done_ = true;
        return false;
    }
    int cap = --parts_.back();
    ++freed;
    while (freed > 0) {
        int piece = std::min(cap, freed);
        parts_.push_back(piece);
        freed -= piece;
    }
    return true;
}

std::vector<Partition> enumerate(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace kmrank

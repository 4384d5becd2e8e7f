#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace kmrank {

/// An integer partition: weakly decreasing positive parts, no stored zeros.
/// Reads beyond the last part return 0 via part_at().
class Partition {
public:
    Partition() = default;

    /// Throws Error(InvalidPartition) unless `parts` is weakly decreasing and
    /// strictly positive.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts into decreasing order and drops zeros. Negative entries are rejected.
    static Partition from_multiset(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    const std::vector<int>& vec() const noexcept { return parts_; }

    bool empty() const noexcept { return parts_.empty(); }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    int smallest() const noexcept { return parts_.empty() ? 0 : parts_.back(); }
    int size() const noexcept;

    /// 1-based; 0 beyond the length.
    int part_at(int j) const noexcept {
        return (j >= 1 && j <= length()) ? parts_[static_cast<std::size_t>(j - 1)] : 0;
    }

    Partition conjugate() const;

    /// Subtract 1 from every part, dropping the resulting zeros.
    Partition without_first_column() const;
    /// Add 1 to each of the first `height` rows (rows beyond the length are
    /// created). Requires height >= length().
    Partition with_first_column(int height) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

inline int size(const Partition& p) noexcept { return p.size(); }
inline Partition conjugate(const Partition& p) { return p.conjugate(); }
inline int part_at(const Partition& p, int j) noexcept { return p.part_at(j); }

/// Walks the partitions of n in reverse-lexicographic order:
/// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1). n = 0 yields ().
class PartitionGenerator {
public:
    explicit PartitionGenerator(int n);

    /// Advances to the next partition; false once exhausted. The first call
    /// positions on (n).
    bool next();
    std::span<const int> current() const noexcept { return parts_; }
    Partition partition() const { return Partition(parts_); }

private:
    int n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> parts_;
};

template <class Fn>
void for_each_partition(int n, Fn&& fn) {
    PartitionGenerator gen(n);
    while (gen.next()) fn(gen.partition());
}

std::vector<Partition> enumerate(int n);

/// p(0..N) from Euler's pentagonal recurrence; entries up to n = 20 are
/// cross-checked against enumerate(). Throws ArithmeticOverflow rather than wrap.
std::vector<std::int64_t> p_table(int max_n);

/// q_k(0..N): partitions of n with at most k successive Durfee squares,
/// counted by enumerating and decomposing.
std::vector<std::int64_t> q_table(int k, int max_n);

}  // namespace kmrank

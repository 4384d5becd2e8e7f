#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace kmrank {

/// h(n,k,m,r) for every rank value r that occurs among partitions of n.
struct CensusTable {
    int n = 0;
    int k = 1;
    int m = 0;
    std::map<int, std::int64_t> rows;

    std::int64_t total() const;
    std::int64_t at(int r) const;
    std::int64_t at_most(int r) const;
    std::int64_t at_least(int r) const;
};

/// Exhaustive census over the partitions of n that have k successive
/// m-Durfee rectangles. For n >= 30 the partitions are split across
/// worker_count() threads.
CensusTable census(int n, int k, int m);

/// census(n, k, m) for n = 0..max_n. Sharded across KMRANK_WORKERS threads
/// (default: hardware concurrency); the result is independent of the count.
std::vector<CensusTable> census_range(int max_n, int k, int m);

/// Worker count from the KMRANK_WORKERS environment variable.
unsigned worker_count();

}  // namespace kmrank

#pragma once

#include <vector>

#include "kmrank/durfee.hpp"
#include "kmrank/partition.hpp"

namespace kmrank {

struct RankStats {
    int a = 0;
    int b = 0;
    int r = 0;
    std::vector<int> widths;

    friend bool operator==(const RankStats&, const RankStats&) = default;
};

/// Largest part minus number of parts. Throws EmptyPartition.
int dyson_rank(const Partition& lambda);

/// (k,m)-rank: a = selection total over the side partitions, b = number of
/// parts below the k-th rectangle. Propagates NoSuchDecomposition.
RankStats rank_km(const Partition& lambda, int k, int m);
RankStats rank_km(const DurfeeDecomposition& d);

/// Garvan's k-rank: a = columns of lambda^1 no taller than N_k, b = parts
/// below the k-th Durfee square.
RankStats garvan_rank(const Partition& lambda, int k);

/// Exchanges the short columns of lambda^1 (height <= N_k) with the rows
/// below the k-th Durfee square. An involution that negates garvan_rank.
Partition garvan_conjugate(const Partition& lambda, int k);

}  // namespace kmrank

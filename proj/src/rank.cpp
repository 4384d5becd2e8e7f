#include "kmrank/rank.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "kmrank/error.hpp"
#include "kmrank/select_insert.hpp"

namespace kmrank {

int dyson_rank(const Partition& lambda) {
    if (lambda.empty()) fail(ErrorCode::EmptyPartition, "the rank of the empty partition is undefined");
    return lambda.largest() - lambda.length();
}

RankStats rank_km(const DurfeeDecomposition& d) {
    const SelectionTrace trace = select(side_sequence(d));
    // Every selected row lies within its rectangle: row_i <= 1 + N_i - N_k <= N_i + m.
    const int last = d.widths.back();
    for (int i = 1; i <= d.k(); ++i) {
        const int row = trace.rows[static_cast<std::size_t>(i - 1)];
        const int w = d.widths[static_cast<std::size_t>(i - 1)];
        ensure(row <= 1 + w - last && row <= w + d.m, "selected row falls below its Durfee rectangle");
    }
    RankStats s;
    s.a = trace.total;
    s.b = d.below.length();
    s.r = s.a - s.b;
    s.widths = d.widths;
    return s;
}

RankStats rank_km(const Partition& lambda, int k, int m) {
    return rank_km(decompose(lambda, k, m));
}

RankStats garvan_rank(const Partition& lambda, int k) {
    const DurfeeDecomposition d = decompose(lambda, k, 0);
    const int last = d.widths.back();
    const Partition columns = d.sides.front().conjugate();
    RankStats s;
    s.a = static_cast<int>(std::count_if(columns.parts().begin(), columns.parts().end(),
                                         [last](int h) { return h <= last; }));
    s.b = d.below.length();
    s.r = s.a - s.b;
    s.widths = d.widths;
    return s;
}

Partition garvan_conjugate(const Partition& lambda, int k) {
    DurfeeDecomposition d = decompose(lambda, k, 0);
    const int last = d.widths.back();
    const Partition columns = d.sides.front().conjugate();

    // Columns of lambda^1 taller than N_k stay; the short ones become the rows
    // below, and the old rows below become columns of lambda^1.
    std::vector<int> kept;
    std::vector<int> short_columns;
    for (int h : columns.parts()) (h > last ? kept : short_columns).push_back(h);
    kept.insert(kept.end(), d.below.parts().begin(), d.below.parts().end());

    d.sides.front() = Partition::from_multiset(std::move(kept)).conjugate();
    d.below = Partition(std::move(short_columns));
    return compose(d);
}

}  // namespace kmrank

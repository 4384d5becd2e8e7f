#include "kmrank/bijections.hpp"

#include <string>

#include "kmrank/durfee.hpp"
#include "kmrank/error.hpp"
#include "kmrank/rank.hpp"
#include "kmrank/select_insert.hpp"

namespace kmrank {

Partition dyson_map(const Partition& lambda, int r) {
    const int rank = dyson_rank(lambda);
    if (rank > r) {
        fail(ErrorCode::RankTooLarge,
             "d_r needs rank <= r (rank " + std::to_string(rank) + ", r " + std::to_string(r) + ")");
    }
    std::vector<int> parts{lambda.length() + r - 1};
    const Partition rest = lambda.without_first_column();
    for (int p : rest.parts()) parts.push_back(p);
    return Partition::from_multiset(std::move(parts));
}

Partition dyson_map_inverse(const Partition& mu, int r) {
    // The image of d_r has rank >= r - 2 and a first row of length + r - 1 >= 0,
    // which may be absent (zero) when the image is small.
    if (!mu.empty() && dyson_rank(mu) < r - 2) {
        fail(ErrorCode::RankTooSmall, "d_r inverse needs rank >= r - 2");
    }
    const int first = mu.largest();
    const int height = first - r + 1;
    std::vector<int> rest(mu.vec().begin() + (mu.empty() ? 0 : 1), mu.vec().end());
    const Partition tail(std::move(rest));
    if (height < 1 || height < tail.length()) fail(ErrorCode::NotInImage, "partition is not in the image of d_r");
    return tail.with_first_column(height);
}

Partition gen_conjugate(const Partition& lambda, int k) {
    DurfeeDecomposition d = decompose(lambda, k, 0);
    const int last = d.widths.back();
    const PartitionSequence sides = side_sequence(d);

    IteratedRemoval removed = iterate_remove(sides, last);
    const Partition alpha_columns = d.below.conjugate();

    PartitionSequence current = std::move(removed.rest);
    for (int j = last; j >= 1; --j) {
        const int column = alpha_columns.part_at(j);
        ensure(select(current).total <= column, "generalized conjugation inserts below A");
        current = insert(column, current);
    }

    d.sides = std::move(current.seq);
    d.below = Partition::from_multiset(std::move(removed.totals)).conjugate();
    return compose(d);
}

Partition gen_dyson(const Partition& lambda, int k, int m, int r) {
    DurfeeDecomposition d = decompose(lambda, k, m);
    for (int w : d.widths) {
        if (w == 0) fail(ErrorCode::ZeroWidthRectangle, "generalized Dyson map needs non-zero widths");
    }
    const RankStats stats = rank_km(d);
    if (stats.r > -r) {
        fail(ErrorCode::RankTooLarge,
             "generalized Dyson map needs r_{k,m} <= -r (rank " + std::to_string(stats.r) + ")");
    }
    const int t = d.below.length();
    PartitionSequence grown = insert(t - r, side_sequence(d));

    DurfeeDecomposition out;
    out.m = m + 2;
    for (int w : d.widths) {
        ensure(w - 1 >= 1 - out.m, "shrunken rectangle has non-positive height");
        out.widths.push_back(w - 1);
    }
    out.sides = std::move(grown.seq);
    out.below = d.below.without_first_column();
    return compose(out);
}

Partition gen_dyson_inverse(const Partition& mu, int k, int m, int r) {
    DurfeeDecomposition d = decompose(mu, k, m + 2);
    for (int w : d.widths) {
        if (w + 1 + m < 1) {
            fail(ErrorCode::NotInImage,
                 "widening the rectangles gives an m-rectangle of non-positive height");
        }
    }
    const RankStats stats = rank_km(d);
    if (stats.r < -r) {
        fail(ErrorCode::RankTooSmall,
             "inverse map needs r_{k,m+2} >= -r (rank " + std::to_string(stats.r) + ")");
    }
    const int t = stats.a + r;
    Removal removed = remove_selected(side_sequence(d));
    ensure(removed.trace.total == t - r, "removed total differs from a_{k,m+2}");

    DurfeeDecomposition out;
    out.m = m;
    for (int w : d.widths) out.widths.push_back(w + 1);
    out.sides = std::move(removed.rest.seq);
    out.below = d.below.with_first_column(t);
    return compose(out);
}

}  // namespace kmrank

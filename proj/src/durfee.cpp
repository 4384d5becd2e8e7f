#include "kmrank/durfee.hpp"

#include <algorithm>
#include <string>

#include "kmrank/error.hpp"

namespace kmrank {

namespace {

// Rows of `lambda` numbered from 1; rows past the length read as 0.
std::vector<int> rows_slice(const Partition& lambda, int first, int count, int minus) {
    std::vector<int> out;
    for (int j = first; j < first + count; ++j) {
        int v = lambda.part_at(j) - minus;
        if (v > 0) out.push_back(v);
    }
    return out;
}

}  // namespace

std::optional<DurfeeDecomposition> try_decompose(const Partition& lambda, int k, int m) {
    if (k < 1) fail(ErrorCode::UnsupportedParameters, "k must be positive");
    DurfeeDecomposition d;
    d.m = m;
    d.widths.reserve(static_cast<std::size_t>(k));
    d.sides.reserve(static_cast<std::size_t>(k));

    const int min_width = std::max(0, 1 - m);
    int offset = 0;
    for (int i = 0; i < k; ++i) {
        // A w x (w+m) block fits at this offset iff row offset+w+m is >= w.
        auto fits = [&](int w) { return lambda.part_at(offset + w + m) >= w; };
        if (!fits(min_width)) return std::nullopt;
        int w = min_width;
        while (fits(w + 1)) ++w;
        d.widths.push_back(w);
        d.sides.emplace_back(rows_slice(lambda, offset + 1, w + m, w));
        offset += w + m;
    }
    d.below = Partition(rows_slice(lambda, offset + 1, std::max(0, lambda.length() - offset), 0));

    for (int i = 2; i <= k; ++i) {
        ensure(d.sides[static_cast<std::size_t>(i - 1)].largest() <=
                   d.widths[static_cast<std::size_t>(i - 2)] - d.widths[static_cast<std::size_t>(i - 1)],
               "side partition exceeds its bound after decomposition");
    }
    return d;
}

DurfeeDecomposition decompose(const Partition& lambda, int k, int m) {
    auto d = try_decompose(lambda, k, m);
    if (!d) {
        fail(ErrorCode::NoSuchDecomposition,
             "partition has fewer than " + std::to_string(k) + " successive " + std::to_string(m) +
                 "-Durfee rectangles");
    }
    return *std::move(d);
}

Partition compose(const DurfeeDecomposition& d) {
    auto invalid = [](const std::string& why) { fail(ErrorCode::InvalidDecomposition, why); };
    const int k = d.k();
    if (k < 1) invalid("decomposition has no rectangles");
    if (static_cast<int>(d.sides.size()) != k) invalid("one side partition per rectangle is required");

    std::vector<int> rows;
    for (int i = 0; i < k; ++i) {
        const int w = d.widths[static_cast<std::size_t>(i)];
        const int h = w + d.m;
        const Partition& side = d.sides[static_cast<std::size_t>(i)];
        if (w < 0) invalid("negative rectangle width");
        if (h < 1) invalid("rectangle of non-positive height");
        if (i > 0) {
            const int prev = d.widths[static_cast<std::size_t>(i - 1)];
            if (w > prev) invalid("rectangle widths must be weakly decreasing");
            if (side.largest() > prev - w) invalid("side partition exceeds its bound p_i");
        }
        if (side.length() > h) invalid("side partition has more parts than its rectangle has rows");
        for (int j = 1; j <= h; ++j) rows.push_back(w + side.part_at(j));
    }
    if (d.below.largest() > d.widths.back()) invalid("below partition is wider than the last rectangle");
    for (int part : d.below.parts()) rows.push_back(part);

    if (!std::is_sorted(rows.begin(), rows.end(), std::greater<>()))
        invalid("assembled rows are not weakly decreasing");
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    if (std::find(rows.begin(), rows.end(), 0) != rows.end())
        invalid("assembled rows are not weakly decreasing");

    Partition out(std::move(rows));
    auto again = try_decompose(out, k, d.m);
    if (!again || *again != d) invalid("rectangles are not maximal; decomposition does not round-trip");
    return out;
}

BoundProfile profile(const DurfeeDecomposition& d) {
    BoundProfile b;
    for (std::size_t i = 1; i < d.widths.size(); ++i) b.p.push_back(d.widths[i - 1] - d.widths[i]);
    return b;
}

int durfee_square_count(const Partition& lambda) {
    int count = 0;
    int offset = 0;
    for (;;) {
        int w = 0;
        while (lambda.part_at(offset + w + 1) >= w + 1) ++w;
        if (w == 0) return count;
        ++count;
        offset += w;
    }
}

}  // namespace kmrank

#include "kmrank/oracle.hpp"

#include <algorithm>
#include <functional>

namespace kmrank::oracle {

namespace {

void grow(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        grow(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

bool has_cell(const Partition& lambda, int row, int col) {  // 0-based
    return row < lambda.length() && col < lambda.vec()[static_cast<std::size_t>(row)];
}

bool block_fits(const Partition& lambda, int top, int width, int height) {
    for (int i = 0; i < height; ++i)
        for (int j = 0; j < width; ++j)
            if (!has_cell(lambda, top + i, j)) return false;
    return true;
}

}  // namespace

std::vector<Partition> partitions_bounded(int n, int max_part) {
    std::vector<Partition> out;
    std::vector<int> prefix;
    grow(n, max_part, prefix, out);
    return out;
}

std::vector<Partition> partitions(int n) { return partitions_bounded(n, n); }

std::vector<int> rectangle_widths(const Partition& lambda, int k, int m) {
    std::vector<int> widths;
    int top = 0;
    const int max_width = lambda.largest() + 1;
    for (int i = 0; i < k; ++i) {
        int best = -1;
        for (int w = 0; w <= max_width; ++w) {
            const int h = w + m;
            if (h < 1) continue;
            if (block_fits(lambda, top, w, h)) best = w;
        }
        if (best < 0) break;
        widths.push_back(best);
        top += best + m;
    }
    return widths;
}

int durfee_square_count(const Partition& lambda) {
    int count = 0;
    int top = 0;
    for (;;) {
        int best = 0;
        for (int s = 1; s <= lambda.largest(); ++s)
            if (block_fits(lambda, top, s, s)) best = s;
        if (best == 0) return count;
        ++count;
        top += best;
    }
}

Partition conjugate_by_cells(const Partition& lambda) {
    std::vector<int> cols;
    for (int c = 0; has_cell(lambda, 0, c); ++c) {
        int h = 0;
        while (has_cell(lambda, h, c)) ++h;
        cols.push_back(h);
    }
    return Partition(cols);
}

std::vector<int> selection_with(const PartitionSequence& s, const std::vector<int>& extra) {
    const int k = s.k();
    // Part at 1-based row j of lambda^i with extra[i] spliced in after all
    // parts that are >= it.
    auto part = [&](int i, int j) {
        const Partition& p = s.seq[static_cast<std::size_t>(i)];
        const int x = extra[static_cast<std::size_t>(i)];
        if (x < 0) return p.part_at(j);
        int pos = 0;
        while (pos < p.length() && p.vec()[static_cast<std::size_t>(pos)] >= x) ++pos;
        if (j <= pos) return p.part_at(j);
        if (j == pos + 1) return x;
        return p.part_at(j - 1);
    };
    std::vector<int> selected(static_cast<std::size_t>(k), 0);
    int row = 1;
    int prev_part = 0;
    for (int i = k - 1; i >= 0; --i) {
        if (i < k - 1) row = row + s.bounds.p[static_cast<std::size_t>(i)] - prev_part;
        prev_part = part(i, row);
        selected[static_cast<std::size_t>(i)] = prev_part;
    }
    return selected;
}

std::vector<InsertionCandidate> all_insertions(int a, const PartitionSequence& s) {
    std::vector<InsertionCandidate> found;
    const int k = s.k();
    std::vector<int> extra(static_cast<std::size_t>(k), 0);
    std::function<void(int, int)> choose = [&](int i, int left) {
        if (i == 0) {
            extra[0] = left;
            if (selection_with(s, extra) != extra) return;
            std::vector<Partition> seq;
            for (int j = 0; j < k; ++j) {
                std::vector<int> parts = s.seq[static_cast<std::size_t>(j)].vec();
                parts.push_back(extra[static_cast<std::size_t>(j)]);
                seq.push_back(Partition::from_multiset(std::move(parts)));
            }
            found.push_back({extra, PartitionSequence(std::move(seq), s.bounds)});
            return;
        }
        const int cap = s.bounds.p[static_cast<std::size_t>(i - 1)];
        for (int x = 0; x <= std::min(cap, left); ++x) {
            extra[static_cast<std::size_t>(i)] = x;
            choose(i - 1, left - x);
        }
    };
    choose(k - 1, a);
    return found;
}

std::int64_t count_partitions_with_parts(int n, const std::vector<bool>& allowed) {
    std::int64_t count = 0;
    for (const auto& p : partitions(n)) {
        bool ok = true;
        for (int part : p.parts())
            if (part >= static_cast<int>(allowed.size()) || !allowed[static_cast<std::size_t>(part)]) ok = false;
        if (ok) ++count;
    }
    return count;
}

}  // namespace kmrank::oracle

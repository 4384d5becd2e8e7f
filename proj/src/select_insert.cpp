#include "kmrank/select_insert.hpp"

#include <numeric>
#include <string>

#include "kmrank/error.hpp"

namespace kmrank {

namespace {

using Rows = std::vector<std::vector<int>>;

int row_value(const std::vector<int>& parts, int row) {
    return (row >= 1 && row <= static_cast<int>(parts.size())) ? parts[static_cast<std::size_t>(row - 1)] : 0;
}

// Selection on raw part lists so insertion can work on mutable storage.
SelectionTrace select_rows(const Rows& seq, const BoundProfile& bounds) {
    const int k = static_cast<int>(seq.size());
    SelectionTrace t;
    t.rows.assign(static_cast<std::size_t>(k), 0);
    t.parts.assign(static_cast<std::size_t>(k), 0);
    int row = 1;
    for (int i = k; i >= 1; --i) {
        const auto idx = static_cast<std::size_t>(i - 1);
        if (i < k) {
            const auto below = static_cast<std::size_t>(i);
            row = t.rows[below] + bounds.cap(i + 1) - t.parts[below];
        }
        t.rows[idx] = row;
        t.parts[idx] = row_value(seq[idx], row);
        t.total += t.parts[idx];
    }
    return t;
}

Rows raw(const PartitionSequence& s) {
    Rows out;
    out.reserve(s.seq.size());
    for (const auto& p : s.seq) out.push_back(p.vec());
    return out;
}

PartitionSequence cooked(Rows rows, const BoundProfile& bounds) {
    std::vector<Partition> seq;
    seq.reserve(rows.size());
    for (auto& r : rows) {
        while (!r.empty() && r.back() == 0) r.pop_back();
        seq.emplace_back(std::move(r));
    }
    return PartitionSequence(std::move(seq), bounds);
}

void add_one(std::vector<int>& parts, int row) {
    if (row <= static_cast<int>(parts.size())) {
        ++parts[static_cast<std::size_t>(row - 1)];
    } else {
        ensure(row == static_cast<int>(parts.size()) + 1, "insertion grew a row below a zero part");
        parts.push_back(1);
    }
}

}  // namespace

PartitionSequence::PartitionSequence(std::vector<Partition> s, BoundProfile b)
    : seq(std::move(s)), bounds(std::move(b)) {
    if (seq.empty()) fail(ErrorCode::InvalidSequence, "a partition sequence needs k >= 1 partitions");
    if (bounds.p.size() + 1 != seq.size())
        fail(ErrorCode::InvalidSequence, "bound profile must have k-1 entries");
    for (int i = 2; i <= k(); ++i) {
        if (bounds.cap(i) < 0) fail(ErrorCode::InvalidSequence, "bounds must be non-negative");
        if (seq[static_cast<std::size_t>(i - 1)].largest() > bounds.cap(i))
            fail(ErrorCode::InvalidSequence,
                 "largest part of partition " + std::to_string(i) + " exceeds its bound");
    }
}

int PartitionSequence::total_size() const noexcept {
    return std::accumulate(seq.begin(), seq.end(), 0, [](int acc, const Partition& p) { return acc + p.size(); });
}

SelectionTrace select(const PartitionSequence& s) {
    return select_rows(raw(s), s.bounds);
}

Removal remove_selected(const PartitionSequence& s) {
    Removal out;
    out.trace = select(s);
    Rows rows = raw(s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int row = out.trace.rows[i];
        // A selected zero sits past the stored parts; deleting it changes nothing.
        if (row <= static_cast<int>(rows[i].size())) rows[i].erase(rows[i].begin() + (row - 1));
    }
    out.rest = cooked(std::move(rows), s.bounds);
    return out;
}

PartitionSequence insert(int a, const PartitionSequence& s) {
    const SelectionTrace base = select(s);
    if (a < base.total) {
        fail(ErrorCode::InsertionUnderflow, "cannot insert " + std::to_string(a) + " below A = " +
                                                std::to_string(base.total));
    }
    const int k = s.k();
    Rows nu = raw(s);

    // Duplicate every selected part directly above itself; the selection then
    // lands on the duplicates and still totals A.
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (base.parts[i] > 0) nu[i].insert(nu[i].begin() + (base.rows[i] - 1), base.parts[i]);
    }

    for (int added = base.total; added < a; ++added) {
        const SelectionTrace cur = select_rows(nu, s.bounds);
        if (cur.rows[0] == 1) {
            add_one(nu[0], 1);
            continue;
        }
        bool grown = false;
        for (int i = 1; i <= k && !grown; ++i) {
            const auto idx = static_cast<std::size_t>(i - 1);
            const int row = cur.rows[idx];
            // lambda^1 has no cap, and its first row was handled above.
            const int ceiling = row == 1 ? s.bounds.cap(i) : row_value(nu[idx], row - 1);
            if (cur.parts[idx] < ceiling) {
                add_one(nu[idx], row);
                grown = true;
            }
        }
        ensure(grown, "insertion found no part to grow");
    }

    PartitionSequence out = cooked(std::move(nu), s.bounds);
    ensure(select(out).total == a, "inserted sequence does not select the inserted total");
    return out;
}

IteratedRemoval iterate_remove(const PartitionSequence& s, int times) {
    if (times < 0) fail(ErrorCode::UnsupportedParameters, "removal count must be non-negative");
    IteratedRemoval out;
    out.rest = s;
    out.totals.reserve(static_cast<std::size_t>(times));
    for (int t = 0; t < times; ++t) {
        Removal step = remove_selected(out.rest);
        out.totals.push_back(step.trace.total);
        out.rest = std::move(step.rest);
    }
    return out;
}

PartitionSequence side_sequence(const DurfeeDecomposition& d) {
    return PartitionSequence(d.sides, profile(d));
}

}  // namespace kmrank

#include "kmrank/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <map>
#include <string>
#include <thread>

#include "kmrank/durfee.hpp"
#include "kmrank/error.hpp"
#include "kmrank/partition.hpp"
#include "kmrank/rank.hpp"

namespace kmrank {

std::int64_t CensusTable::total() const {
    std::int64_t sum = 0;
    for (const auto& [r, c] : rows) sum += c;
    return sum;
}

std::int64_t CensusTable::at(int r) const {
    auto it = rows.find(r);
    return it == rows.end() ? 0 : it->second;
}

std::int64_t CensusTable::at_most(int r) const {
    std::int64_t sum = 0;
    for (auto it = rows.begin(); it != rows.end() && it->first <= r; ++it) sum += it->second;
    return sum;
}

std::int64_t CensusTable::at_least(int r) const {
    std::int64_t sum = 0;
    for (auto it = rows.lower_bound(r); it != rows.end(); ++it) sum += it->second;
    return sum;
}

namespace {

// Below this n a single partition list is too short to be worth threads.
constexpr int kShardThreshold = 30;

void check_args(int n, int k) {
    if (n < 0) fail(ErrorCode::UnsupportedParameters, "census needs n >= 0");
    if (k < 1) fail(ErrorCode::UnsupportedParameters, "census needs k >= 1");
}

// Tallies every partition of n whose position in enumeration order is
// congruent to shard mod shards.
std::map<int, std::int64_t> tally(int n, int k, int m, unsigned shard, unsigned shards) {
    std::map<int, std::int64_t> rows;
    PartitionGenerator gen(n);
    for (unsigned i = 0; gen.next(); ++i) {
        if (i % shards != shard) continue;
        if (auto d = try_decompose(gen.partition(), k, m)) ++rows[rank_km(*d).r];
    }
    return rows;
}

CensusTable census_serial(int n, int k, int m) {
    check_args(n, k);
    return CensusTable{n, k, m, tally(n, k, m, 0, 1)};
}

}  // namespace

CensusTable census(int n, int k, int m) {
    check_args(n, k);
    const unsigned workers = n < kShardThreshold ? 1 : worker_count();
    if (workers <= 1) return census_serial(n, k, m);
    std::vector<std::map<int, std::int64_t>> parts(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    parts[w] = tally(n, k, m, w, workers);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    CensusTable t{n, k, m, {}};
    for (const auto& part : parts)
        for (const auto& [r, c] : part) t.rows[r] += c;
    return t;
}

unsigned worker_count() {
    if (const char* env = std::getenv("KMRANK_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CensusTable> census_range(int max_n, int k, int m) {
    if (max_n < 0) return {};
    std::vector<CensusTable> out(static_cast<std::size_t>(max_n) + 1);
    const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(max_n) + 1);
    if (workers <= 1) {
        for (int n = 0; n <= max_n; ++n) out[static_cast<std::size_t>(n)] = census_serial(n, k, m);
        return out;
    }
    // Strided shards keep the large-n work spread out; each slot is written once.
    std::vector<std::jthread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int n = static_cast<int>(w); n <= max_n; n += static_cast<int>(workers))
                    out[static_cast<std::size_t>(n)] = census_serial(n, k, m);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    pool.clear();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace kmrank

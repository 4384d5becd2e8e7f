#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "kmrank/durfee.hpp"
#include "kmrank/error.hpp"
#include "kmrank/partition.hpp"

namespace kmrank {

namespace {

constexpr int kEnumerationCrossCheck = 20;

__extension__ typedef __int128 wide_int;

}  // namespace

std::vector<std::int64_t> p_table(int max_n) {
    if (max_n < 0) fail(ErrorCode::UnsupportedParameters, "p_table needs N >= 0");
    std::vector<std::int64_t> p(static_cast<std::size_t>(max_n) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        // Partial sums run past p(n) itself, so accumulate in 128 bits.
        wide_int acc = 0;
        for (int j = 1;; ++j) {
            const int g1 = j * (3 * j - 1) / 2;
            if (g1 > n) break;
            const int g2 = j * (3 * j + 1) / 2;
            wide_int term = p[static_cast<std::size_t>(n - g1)];
            if (g2 <= n) term += p[static_cast<std::size_t>(n - g2)];
            acc += (j % 2 == 1) ? term : -term;
        }
        if (acc > std::numeric_limits<std::int64_t>::max())
            fail(ErrorCode::ArithmeticOverflow, "p(" + std::to_string(n) + ") does not fit in 64 bits");
        p[static_cast<std::size_t>(n)] = static_cast<std::int64_t>(acc);
    }
    for (int n = 0; n <= std::min(max_n, kEnumerationCrossCheck); ++n) {
        std::int64_t count = 0;
        PartitionGenerator gen(n);
        while (gen.next()) ++count;
        if (count != p[static_cast<std::size_t>(n)])
            fail(ErrorCode::InternalInvariantViolation,
                 "pentagonal recurrence disagrees with enumeration at n=" + std::to_string(n));
    }
    return p;
}

std::vector<std::int64_t> q_table(int k, int max_n) {
    if (k < 1) fail(ErrorCode::UnsupportedParameters, "q_table needs k >= 1");
    if (max_n < 0) fail(ErrorCode::UnsupportedParameters, "q_table needs N >= 0");
    std::vector<std::int64_t> q(static_cast<std::size_t>(max_n) + 1, 0);
    for (int n = 0; n <= max_n; ++n) {
        std::int64_t count = 0;
        for_each_partition(n, [&](const Partition& lambda) {
            if (!try_decompose(lambda, k + 1, 0)) ++count;
        });
        q[static_cast<std::size_t>(n)] = count;
    }
    return q;
}

}  // namespace kmrank

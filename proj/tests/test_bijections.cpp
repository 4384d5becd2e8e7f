#include <doctest.h>

#include "kmrank/bijections.hpp"
#include "kmrank/durfee.hpp"
#include "kmrank/error.hpp"
#include "kmrank/rank.hpp"

using namespace kmrank;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalInvariantViolation;
}

}  // namespace

TEST_CASE("Dyson's map") {
    const Partition p{4, 3, 3, 2, 2, 1};
    CHECK(dyson_map(p, -2) == Partition{3, 3, 2, 2, 1, 1});
    CHECK(dyson_map(p, 1) == Partition{6, 3, 2, 2, 1, 1});
    CHECK(dyson_map(Partition{1}, 0) == Partition{});
    CHECK(dyson_map_inverse(Partition{3, 3, 2, 2, 1, 1}, -2) == p);
    CHECK(dyson_map_inverse(Partition{6, 3, 2, 2, 1, 1}, 1) == p);
    CHECK(code_of([&] { (void)dyson_map(p, -3); }) == ErrorCode::RankTooLarge);
}

TEST_CASE("generalized conjugation") {
    CHECK(gen_conjugate(Partition{9, 8, 8, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1}, 2) ==
          Partition{10, 9, 8, 7, 5, 5, 3, 2, 2, 1, 1, 1});
    CHECK(gen_conjugate(Partition{9, 8, 8, 7, 7, 6, 5, 4, 4, 3, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1}, 4) ==
          Partition{9, 9, 8, 7, 7, 6, 5, 4, 4, 3, 3, 3, 3, 2, 2, 2, 2, 1, 1});
    CHECK(gen_conjugate(Partition{1}, 1) == Partition{1});
    CHECK(code_of([] { (void)gen_conjugate(Partition{}, 1); }) == ErrorCode::NoSuchDecomposition);

    for (int n = 1; n <= 20; ++n)
        for_each_partition(n, [](const Partition& lambda) { REQUIRE(gen_conjugate(lambda, 1) == lambda.conjugate()); });
}

TEST_CASE("generalized Dyson map examples") {
    const Partition a{10, 8, 8, 6, 5, 3, 3, 2, 2, 2, 1, 1, 1};
    const Partition a_out{9, 8, 7, 7, 5, 4, 3, 2, 2, 1, 1, 1};
    CHECK(gen_dyson(a, 2, 0, 0) == a_out);
    CHECK(gen_dyson_inverse(a_out, 2, 0, 0) == a);
    const RankStats s = rank_km(a_out, 2, 2);
    CHECK(s.a == 6);
    CHECK(s.b == 3);

    const Partition b{11, 10, 9, 8, 6, 6, 5, 4, 3, 3, 3, 2, 2, 1, 1};
    const Partition b_out{10, 10, 9, 8, 7, 6, 5, 5, 4, 4, 3, 2, 2, 2, 1, 1};
    CHECK(gen_dyson(b, 3, -3, 1) == b_out);
    CHECK(b_out.size() == 79);
    CHECK(gen_dyson_inverse(b_out, 3, -3, 1) == b);

    const Partition c{8, 7, 7, 6, 6, 5, 5, 4, 4, 4, 4, 3, 3, 3, 2, 1, 1, 1, 1};
    const Partition c_out{7, 7, 6, 6, 5, 5, 4, 4, 3, 3, 3, 3, 3, 2, 2, 2, 1};
    CHECK(gen_dyson(c, 2, 2, 3) == c_out);
    CHECK(gen_dyson_inverse(c_out, 2, 2, 3) == c);
}

TEST_CASE("generalized Dyson map domain errors") {
    // Rank -1 > -r for r = 0 is fine; r = 2 needs rank <= -2.
    const Partition sample{7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1};
    CHECK(code_of([&] { (void)gen_dyson(sample, 3, 0, 2); }) == ErrorCode::RankTooLarge);
    // With m = 1 the empty partition has width-zero rectangles.
    CHECK(code_of([] { (void)gen_dyson(Partition{}, 1, 1, -1); }) == ErrorCode::ZeroWidthRectangle);
    // (1,1) has a width-0 1-rectangle, unreachable from m = -1.
    CHECK(code_of([] { (void)gen_dyson_inverse(Partition{2}, 1, -1, 0); }) == ErrorCode::NotInImage);
    CHECK(code_of([] { (void)gen_dyson_inverse(Partition{1, 1, 1, 1, 1}, 1, 0, 0); }) == ErrorCode::RankTooSmall);
}

TEST_CASE("generalized Dyson map contract, small sweep") {
    for (int n = 0; n <= 14; ++n) {
        for_each_partition(n, [n](const Partition& lambda) {
            for (int k = 1; k <= 2; ++k) {
                for (int m = -2; m <= 1; ++m) {
                    const auto d = try_decompose(lambda, k, m);
                    if (!d || d->widths.back() == 0) continue;
                    const RankStats st = rank_km(*d);
                    for (int r = -1; r <= 2; ++r) {
                        if (st.r > -r) continue;
                        const Partition mu = gen_dyson(lambda, k, m, r);
                        REQUIRE(mu.size() == n - r - k * (m + 1));
                        const RankStats out = rank_km(mu, k, m + 2);
                        REQUIRE(out.a == d->below.length() - r);
                        REQUIRE(out.b <= d->below.length());
                        for (int i = 0; i < k; ++i) REQUIRE(out.widths[static_cast<std::size_t>(i)] == d->widths[static_cast<std::size_t>(i)] - 1);
                        REQUIRE(gen_dyson_inverse(mu, k, m, r) == lambda);
                    }
                }
            }
        });
    }
}

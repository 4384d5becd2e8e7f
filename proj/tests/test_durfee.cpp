#include <doctest.h>

#include "kmrank/durfee.hpp"
#include "kmrank/error.hpp"
#include "kmrank/oracle.hpp"

using namespace kmrank;

namespace {
const Partition kStaircase{7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1};
}

TEST_CASE("successive Durfee squares") {
    const auto d = decompose(kStaircase, 3, 0);
    CHECK(d.widths == std::vector<int>{5, 3, 2});
    CHECK(d.k() == 3);
    CHECK(d.height(2) == 3);
    CHECK(d.sides[0] == Partition{2, 2, 1, 1});
    CHECK(d.sides[1] == Partition{1});
    CHECK(d.sides[2] == Partition{1});
    CHECK(d.below == Partition{1, 1, 1, 1, 1});
    CHECK(compose(d) == kStaircase);
    CHECK(profile(d).p == std::vector<int>{2, 1});
    CHECK(durfee_square_count(kStaircase) == 8);
}

TEST_CASE("m-rectangles") {
    CHECK(decompose(kStaircase, 3, 1).widths == std::vector<int>{4, 3, 1});
    const auto d = decompose(Partition{9, 8, 8, 6, 5, 4, 3, 2, 2, 2, 1, 1, 1, 1, 1}, 2, 0);
    CHECK(d.widths == std::vector<int>{5, 2});
    CHECK(d.sides[0] == Partition{4, 3, 3, 1});
    CHECK(d.sides[1] == Partition{2, 1});
    CHECK(d.below == Partition{2, 2, 2, 1, 1, 1, 1, 1});

    const auto empty = decompose(Partition{}, 3, 1);
    CHECK(empty.widths == std::vector<int>{0, 0, 0});
    CHECK(empty.below.empty());
}

TEST_CASE("missing rectangles are reported") {
    CHECK_FALSE(try_decompose(Partition{3, 1}, 3, 0).has_value());
    CHECK_FALSE(try_decompose(Partition{}, 1, 0).has_value());
    try {
        (void)decompose(Partition{3, 1}, 3, 0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoSuchDecomposition);
    }
}

TEST_CASE("compose rejects malformed decompositions") {
    auto code_of = [](const DurfeeDecomposition& d) {
        try {
            (void)compose(d);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InternalInvariantViolation;
    };
    // Widths must not increase.
    CHECK(code_of({0, {2, 3}, {Partition{}, Partition{}}, Partition{}}) == ErrorCode::InvalidDecomposition);
    // Side partition taller than its rectangle.
    CHECK(code_of({0, {1}, {Partition{1, 1}}, Partition{}}) == ErrorCode::InvalidDecomposition);
    // Below part wider than the last rectangle.
    CHECK(code_of({0, {1}, {Partition{}}, Partition{2}}) == ErrorCode::InvalidDecomposition);
    // Second side wider than N_1 - N_2 = 0.
    CHECK(code_of({0, {1, 1}, {Partition{1}, Partition{1}}, Partition{}}) == ErrorCode::InvalidDecomposition);
    // Height w + m below 1.
    CHECK(code_of({-1, {1}, {Partition{}}, Partition{}}) == ErrorCode::InvalidDecomposition);
}

TEST_CASE("round trip and agreement with the cell oracle") {
    for (int n = 0; n <= 25; ++n) {
        for (const auto& lambda : enumerate(n)) {
            REQUIRE(durfee_square_count(lambda) == oracle::durfee_square_count(lambda));
            for (int m = -1; m <= 3; ++m) {
                const auto widths = oracle::rectangle_widths(lambda, 4, m);
                std::vector<int> previous;
                for (int k = 1; k <= 4; ++k) {
                    const auto d = try_decompose(lambda, k, m);
                    REQUIRE(d.has_value() == (static_cast<int>(widths.size()) >= k));
                    if (!d) break;
                    REQUIRE(d->widths == std::vector<int>(widths.begin(), widths.begin() + k));
                    REQUIRE(std::equal(previous.begin(), previous.end(), d->widths.begin()));
                    REQUIRE(compose(*d) == lambda);
                    previous = d->widths;
                }
            }
        }
    }
}

#include <doctest.h>

#include "kmrank/error.hpp"
#include "kmrank/oracle.hpp"
#include "kmrank/select_insert.hpp"

using namespace kmrank;

namespace {

PartitionSequence seq(std::vector<Partition> parts, std::vector<int> p) {
    return PartitionSequence(std::move(parts), BoundProfile{std::move(p)});
}

}  // namespace

TEST_CASE("sequence validation") {
    CHECK_THROWS_AS(seq({Partition{1}, Partition{4}}, {3}), Error);
    CHECK_THROWS_AS(seq({Partition{1}, Partition{1}}, {}), Error);
    CHECK_THROWS_AS(seq({Partition{1}, Partition{1}}, {-1}), Error);
    CHECK(seq({Partition{9}, Partition{3}}, {3}).total_size() == 12);
}

TEST_CASE("select") {
    const auto t = select(seq({Partition{4, 3, 3, 1}, Partition{2, 1}}, {3}));
    CHECK(t.rows == std::vector<int>{2, 1});
    CHECK(t.parts == std::vector<int>{3, 2});
    CHECK(t.total == 5);

    const auto z = select(seq({Partition{}, Partition{}}, {0}));
    CHECK(z.rows == std::vector<int>{1, 1});
    CHECK(z.total == 0);

    const auto left = seq({Partition{3, 3, 2, 1}, Partition{3, 2}, Partition{2, 2}, Partition{2}}, {4, 2, 3});
    const auto tl = select(left);
    CHECK(tl.parts == std::vector<int>{1, 2, 2, 2});
    CHECK(tl.total == 7);

    const auto right = seq({Partition{4, 3, 2, 2, 1}, Partition{2, 1}, Partition{}, Partition{}, Partition{6}},
                           {2, 0, 2, 6});
    CHECK(select(right).total == 7);
}

TEST_CASE("remove_selected") {
    const auto r1 = remove_selected(seq({Partition{4, 3, 3, 1}, Partition{2, 1}}, {3}));
    CHECK(r1.trace.total == 5);
    CHECK(r1.rest == seq({Partition{4, 3, 1}, Partition{1}}, {3}));
    const auto r2 = remove_selected(r1.rest);
    CHECK(r2.trace.total == 2);
    CHECK(r2.rest == seq({Partition{4, 3}, Partition{}}, {3}));
    const auto r3 = remove_selected(seq({Partition{}, Partition{}}, {0}));
    CHECK(r3.trace.total == 0);
    CHECK(r3.rest == seq({Partition{}, Partition{}}, {0}));
}

TEST_CASE("insert") {
    CHECK(insert(3, seq({Partition{4, 3}, Partition{}}, {3})) == seq({Partition{4, 3, 2}, Partition{1}}, {3}));
    CHECK(insert(8, seq({Partition{4, 3, 2}, Partition{1}}, {3})) ==
          seq({Partition{5, 4, 3, 2}, Partition{3, 1}}, {3}));

    const auto left = seq({Partition{3, 3, 2, 1}, Partition{3, 2}, Partition{2, 2}, Partition{2}}, {4, 2, 3});
    CHECK(insert(7, left) ==
          seq({Partition{3, 3, 2, 1, 1}, Partition{3, 2, 2}, Partition{2, 2, 2}, Partition{2, 2}}, {4, 2, 3}));

    try {
        (void)insert(6, left);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InsertionUnderflow);
    }
}

TEST_CASE("iterate_remove") {
    const auto s = seq({Partition{4, 3, 3, 1}, Partition{2, 1}}, {3});
    const auto it = iterate_remove(s, 2);
    CHECK(it.totals == std::vector<int>{5, 2});
    CHECK(it.rest == seq({Partition{4, 3}, Partition{}}, {3}));
    const auto none = iterate_remove(s, 0);
    CHECK(none.totals.empty());
    CHECK(none.rest == s);
}

TEST_CASE("insertion is the unique valid insertion (small sweep)") {
    const auto small = [] {
        std::vector<Partition> out;
        for (int n = 0; n <= 5; ++n)
            for (auto& p : enumerate(n)) out.push_back(p);
        return out;
    }();
    for (int p2 = 0; p2 <= 3; ++p2) {
        for (const auto& l1 : small) {
            for (const auto& l2 : small) {
                if (l2.largest() > p2) continue;
                const auto s = seq({l1, l2}, {p2});
                const int a0 = select(s).total;
                for (int a = a0; a <= a0 + 4; ++a) {
                    const auto phi = insert(a, s);
                    const auto found = oracle::all_insertions(a, s);
                    REQUIRE(found.size() == 1);
                    REQUIRE(found.front().result == phi);
                    const auto back = remove_selected(phi);
                    REQUIRE(back.trace.total == a);
                    REQUIRE(back.rest == s);
                }
            }
        }
    }
}

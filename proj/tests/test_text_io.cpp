#include <doctest.h>

#include "kmrank/error.hpp"
#include "kmrank/text_io.hpp"

using namespace kmrank;

TEST_CASE("text form") {
    CHECK(to_text(Partition{5, 5, 4, 1}) == "5,5,4,1");
    CHECK(to_text(Partition{}) == "-");
    CHECK(parse_partition("5,5,4,1") == Partition{5, 5, 4, 1});
    CHECK(parse_partition(" 1 4 5, 5 ") == Partition{5, 5, 4, 1});
    CHECK(parse_partition("3,0,1") == Partition{3, 1});
    CHECK(parse_partition("-") == Partition{});
    for (const char* bad : {"", "x", "3,-1", "2,,1", ",2", "1.5", "2;1"}) {
        try {
            (void)parse_partition(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidPartition);
        }
    }
}

TEST_CASE("decomposition JSON round trip") {
    const auto d = decompose(Partition{7, 7, 6, 6, 5, 4, 3, 3, 3, 2, 1, 1, 1, 1, 1}, 3, 0);
    const auto j = to_json(d);
    CHECK(j["m"] == 0);
    CHECK(j["k"] == 3);
    CHECK(j["widths"] == nlohmann::json::array({5, 3, 2}));
    CHECK(j["sides"] == nlohmann::json::array({"2,2,1,1", "1", "1"}));
    CHECK(j["below"] == "1,1,1,1,1");
    CHECK(decomposition_from_json(j) == d);
    CHECK(decomposition_from_json(nlohmann::json::parse(j.dump())) == d);
}

TEST_CASE("other JSON shapes") {
    const auto r = to_json(RankStats{4, 5, -1, {5, 3, 2}});
    CHECK(r == nlohmann::json{{"a", 4}, {"b", 5}, {"r", -1}, {"widths", {5, 3, 2}}});

    const PartitionSequence s({Partition{4, 3, 3, 1}, Partition{2, 1}}, BoundProfile{{3}});
    CHECK(to_json(s) == nlohmann::json{{"seq", {"4,3,3,1", "2,1"}}, {"bounds", {3}}});
    CHECK(to_json(select(s)) == nlohmann::json{{"rows", {2, 1}}, {"parts", {3, 2}}, {"total", 5}});

    const auto c = to_json(census(4, 1, 0));
    CHECK(c["total"] == 5);
    CHECK(c["rows"]["-3"] == 1);

    const auto v = to_json(verify_identity({"rr", 2}, 10));
    CHECK(v["success"] == true);
    CHECK(v["order"] == 10);
    CHECK_FALSE(v.contains("mismatch"));
}

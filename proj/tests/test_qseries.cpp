#include <doctest.h>

#include "kmrank/error.hpp"
#include "kmrank/oracle.hpp"
#include "kmrank/partition.hpp"
#include "kmrank/qseries.hpp"

using namespace kmrank;

TEST_CASE("series arithmetic") {
    QSeries geometric(10);
    for (int n = 0; n <= 10; ++n) geometric.add_term(n, 1);
    CHECK(pochhammer(1, 10) * geometric == QSeries::one(10));
    CHECK(geometric.inverse() == pochhammer(1, 10));
    CHECK(QSeries::monomial(3, 2, 5) == QSeries({0, 0, 0, 2, 0, 0}));
    CHECK(QSeries::monomial(9, 2, 5) == QSeries(5));
    CHECK((geometric - geometric) == QSeries(10));
    CHECK((QSeries({1, 2, 3}) + QSeries({1, 1})) == QSeries({2, 3}));
    CHECK(QSeries({1, 2, 3}).shifted(1) == QSeries({0, 1, 2}));
    CHECK(QSeries({1, 2, 3}).truncated(1) == QSeries({1, 2}));

    QSeries s = QSeries::one(6);
    s.divide_by_one_minus_q_pow(2);
    CHECK(s == QSeries({1, 0, 1, 0, 1, 0, 1}));
    s.multiply_by_one_minus_q_pow(2);
    CHECK(s == QSeries::one(6));

    CHECK_THROWS_AS(QSeries({2, 1}).inverse(), Error);
    CHECK_THROWS_AS(QSeries(-1), Error);
}

TEST_CASE("overflow is reported, not wrapped") {
    QSeries big({1, 1LL << 62});
    try {
        (void)(big * big * big);
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ArithmeticOverflow);
    }
}

TEST_CASE("products and sums") {
    CHECK(pochhammer(0, 5) == QSeries::one(5));
    CHECK(pochhammer_infinite(7) == QSeries({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(pentagonal_sum(12) == pochhammer_infinite(12));
    CHECK(inv_euler(5) == QSeries({1, 1, 2, 3, 5, 7}));
    CHECK(inv_pochhammer(2, 5) == QSeries({1, 1, 2, 2, 3, 3}));

    const auto p = p_table(120);
    CHECK(inv_euler(120) == QSeries(p));

    CHECK(multisum_lhs(1, std::nullopt, 8) == QSeries::one(8));
    CHECK(multisum_lhs(2, std::nullopt, 4) == QSeries({1, 1, 1, 1, 2}));
    CHECK(theta_sum(2, 11) == QSeries({1, 0, -1, -1, 0, 0, 0, 0, 0, 1, 0, 1}));
    CHECK(rr_product(2, 2, 6) == QSeries({1, 1, 1, 1, 2, 2, 3}));
    CHECK(rr_product(2, 1, 6)[1] == 0);
    CHECK(rr_product(1, 1, 9) == QSeries::one(9));
    CHECK_THROWS_AS(rr_product(2, 3, 5), Error);
}

TEST_CASE("multisum counts partitions with few Durfee squares") {
    for (int k = 2; k <= 4; ++k) {
        const auto q = q_table(k - 1, 22);
        CHECK(multisum_lhs(k, std::nullopt, 22) == QSeries(q));
    }
}

TEST_CASE("Rogers-Ramanujan product counts restricted partitions") {
    // k = 2, a = 2: parts congruent to 1 or 4 mod 5.
    std::vector<bool> allowed(21, false);
    for (int n = 1; n <= 20; ++n) allowed[static_cast<std::size_t>(n)] = n % 5 == 1 || n % 5 == 4;
    const QSeries prod = rr_product(2, 2, 20);
    for (int n = 0; n <= 20; ++n) CHECK(prod[n] == oracle::count_partitions_with_parts(n, allowed));
}

TEST_CASE("identities") {
    CHECK(verify_identity({"pentagonal"}, 60).success);
    for (int k = 1; k <= 5; ++k) {
        CHECK(verify_identity({"schur", k}, 60).success);
        CHECK(verify_identity({"rr", k}, 60).success);
        CHECK(verify_identity({"jacobi", k}, 100).success);
    }
    for (int k = 1; k <= 4; ++k)
        for (int a = 1; a <= k; ++a) CHECK(verify_identity({"andrews", k, a}, 50).success);

    const auto [theta, product] = jacobi_specialization(1, 12);
    CHECK(theta == pochhammer_infinite(12));
    CHECK(product == pochhammer_infinite(12));

    try {
        (void)verify_identity({"nonsense"}, 10);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownIdentity);
    }
}

TEST_CASE("H closed form") {
    // Frozen from census enumeration.
    const QSeries h = h_closed_form(2, 1, 2, 15);
    CHECK(h == QSeries({0, 0, 0, 0, 0, 0, 1, 1, 2, 3, 5, 7, 11, 15, 22, 30}));
    CHECK(h == h_census_series(2, 1, -2, Tail::AtMost, 15));
    CHECK(h_census_series(1, 0, 0, Tail::AtMost, 4)[4] == 3);
    for (int k = 1; k <= 2; ++k) {
        CHECK(verify_identity({"h_closed_form", k, 1, 0, 0}, 16).success);
        for (int m = 0; m <= 2; ++m)
            for (int r = 1; r <= 3; ++r) CHECK(verify_identity({"h_closed_form", k, 1, m, r}, 16).success);
    }
    CHECK_THROWS_AS(h_closed_form(1, -1, 1, 10), Error);
    CHECK_THROWS_AS(h_closed_form(1, 1, 0, 10), Error);
    CHECK_THROWS_AS(h_census_series(1, 0, 0, Tail::AtMost, kMaxCensusOrder + 1), Error);
}

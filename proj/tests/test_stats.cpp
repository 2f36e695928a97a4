#include <doctest.h>

#include "grec/errors.hpp"
#include "grec/stats.hpp"

using namespace grec;

TEST_CASE("right-descent distribution over S3") {
    const Distribution dist = distribution(3, Statistic::right_descents);
    REQUIRE(dist.counts.size() == 3);
    CHECK(dist.counts.at(0) == 1);
    CHECK(dist.counts.at(1) == 4);
    CHECK(dist.counts.at(2) == 1);
}

TEST_CASE("distributions at n = 2") {
    for (Statistic stat : {Statistic::right_descents, Statistic::left_descents,
                           Statistic::right_ascents, Statistic::left_ascents}) {
        const Distribution dist = distribution(2, stat);
        CHECK(dist.counts.at(0) == 1);
        CHECK(dist.counts.at(1) == 1);
    }
}

TEST_CASE("left descent and left ascent histograms mirror each other") {
    for (int n = 1; n <= 7; ++n) {
        const Distribution descents = distribution(n, Statistic::left_descents);
        const Distribution ascents = distribution(n, Statistic::left_ascents);
        for (const auto& [value, count] : descents.counts)
            CHECK(ascents.counts.at(n - 1 - value) == count);
    }
}

TEST_CASE("the three statistics are genuinely different") {
    bool found = false;
    for (int n = 2; n <= 8 && !found; ++n) {
        const Distribution rd = distribution(n, Statistic::right_descents);
        const Distribution ld = distribution(n, Statistic::left_descents);
        const Distribution ra = distribution(n, Statistic::right_ascents);
        found = !(rd.counts == ld.counts) && !(rd.counts == ra.counts) &&
                !(ld.counts == ra.counts);
    }
    CHECK(found);
}

TEST_CASE("distribution size guard") {
    CHECK_THROWS_AS(distribution(11, Statistic::right_descents), size_guard_error);
}

TEST_CASE("reference polynomials") {
    CHECK(ptilde_reference(0).ptilde.evaluate(7) == 1);

    const ConjecturePolynomial p1 = ptilde_reference(1);
    CHECK(p1.ptilde.evaluate(3) == 2);
    CHECK(conjecture_value(1, 3) == 4);

    // leading coefficient of the full polynomial is 2^{d+1}/(d!(d+1)!(d+2)!)
    auto factorial = [](int m) {
        long f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    for (int d = 0; d <= 3; ++d) {
        const ConjecturePolynomial poly = ptilde_reference(d);
        CHECK(poly.ptilde.degree() == 2 * d);
        mpq_class expected(1 << (d + 1),
                           factorial(d) * factorial(d + 1) * factorial(d + 2));
        expected.canonicalize();
        CHECK(poly.ptilde.coefficients.back() == expected);
    }

    CHECK_THROWS_AS(ptilde_reference(4), std::invalid_argument);
    CHECK_THROWS_AS(ptilde_reference(-1), std::invalid_argument);
}

TEST_CASE("conjecture check matches brute force") {
    for (int d = 0; d <= 3; ++d) {
        const ConjectureReport report = check_conjecture(d, 1, 8);
        CHECK(report.all_match);
        for (const auto& row : report.rows) CHECK(row.match);
    }
}

TEST_CASE("conjecture check range guards") {
    CHECK_THROWS_AS(check_conjecture(1, 1, 11), size_guard_error);
    CHECK_THROWS_AS(check_conjecture(1, 0, 5), std::invalid_argument);
}

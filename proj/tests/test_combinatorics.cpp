#include "turankit/combinatorics.hpp"

#include <catch_amalgamated.hpp>

#include <vector>

using namespace turankit;

TEST_CASE("binomial agrees with Pascal's triangle", "[combinatorics]") {
    // Oracle: Pascal recurrence in exact integers.
    std::vector<std::vector<Integer>> pascal(61);
    for (int n = 0; n <= 60; ++n) {
        pascal[n].assign(static_cast<std::size_t>(n + 1), Integer(1));
        for (int j = 1; j < n; ++j) pascal[n][j] = pascal[n - 1][j - 1] + pascal[n - 1][j];
    }
    for (int n = 0; n <= 60; ++n)
        for (int j = 0; j <= n; ++j) REQUIRE(binomial(n, j) == pascal[n][j]);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS(binomial(-1, 0));
}

TEST_CASE("multinomial equals a product of binomials", "[combinatorics]") {
    const std::vector<long> parts{2, 2, 3};
    CHECK(multinomial(7, parts) == binomial(7, 2) * binomial(5, 2) * binomial(3, 3));
    CHECK(factorial(10) == Integer(3628800));
    const std::vector<long> bad{2, 2};
    CHECK_THROWS(multinomial(5, bad));
}

TEST_CASE("x ratio", "[combinatorics]") {
    CHECK(xRatio(3, 3, 5) == Rational(5, 6));
    CHECK(xRatio(3, 4, 5) == Rational(1, 2));
    CHECK(xRatio(3, 5, 5) == Rational(0));
    CHECK(xRatio(3, 2, 5) == Rational(1));  // C(1,2) = 0
    // k = 2: Erdos' factor 1 - (m-1)/(r-1).
    for (long r = 3; r <= 12; ++r)
        for (long m = 2; m < r; ++m) CHECK(xRatio(2, m, r) == Rational(1) - Rational(m - 1, r - 1));
    CHECK_THROWS(xRatio(1, 1, 5));
    CHECK_THROWS(xRatio(3, 6, 5));
    CHECK_THROWS(xRatio(3, 1, 5));
}

TEST_CASE("epsilon modes", "[combinatorics]") {
    CHECK(epsilonValue(3, 5, 100, EpsilonMode::PaperLiteral) == Rational(1, 96));
    CHECK(epsilonValue(3, 5, 100, EpsilonMode::Corrected) == Rational(1, 48));
    // Corrected eps dominates 1/((n-m) x_{m,r}) for every m in [k, r-1].
    for (long k = 2; k <= 5; ++k)
        for (long r = k + 1; r <= 10; ++r)
            for (long n = r + 1; n <= r + 30; ++n) {
                const Rational eps = epsilonValue(k, r, n, EpsilonMode::Corrected);
                CHECK(eps == Rational(r - 1, (n - r + 1) * (k - 1)));
                for (long m = k; m <= r - 1; ++m)
                    CHECK(eps >= Rational(1) / (Rational(n - m) * xRatio(k, m, r)));
            }
    CHECK_THROWS(epsilonValue(3, 5, 5, EpsilonMode::Corrected));
    CHECK(parseEpsilonMode("corrected") == EpsilonMode::Corrected);
    CHECK(parseEpsilonMode("paper-literal") == EpsilonMode::PaperLiteral);
    CHECK_THROWS(parseEpsilonMode("fuzzy"));
}

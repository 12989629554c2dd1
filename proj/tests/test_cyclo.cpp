#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "tau/cyclo.hpp"
#include "tau/series.hpp"

using namespace tau;

TEST_CASE("displayed polynomials") {
    CHECK(build_F(1).coeffs == std::vector<Int>{Int(-1), Int(1)});                    // Y - X
    CHECK(build_F(2).coeffs == std::vector<Int>{Int(1), Int(-3), Int(1)});            // Y^2 - 3XY + X^2
    CHECK(build_F(3).coeffs == std::vector<Int>{Int(-1), Int(6), Int(-5), Int(1)});   // Y^3 - 5XY^2 + 6X^2Y - X^3
    CHECK_THROWS_AS(build_F(0), std::invalid_argument);
}

TEST_CASE("recurrence coefficients match the generating-function expansion") {
    for (std::size_t m = 1; m <= 10; ++m) {
        CHECK(build_F(m).coeffs == testing::genfunc_expansion_coeffs(m));
    }
}

TEST_CASE("polynomials are monic in Y") {
    for (std::size_t m = 1; m <= 50; ++m) CHECK(build_F(m).coeffs[m] == 1);
}

TEST_CASE("value recurrence agrees with the coefficient route") {
    for (std::size_t m = 1; m <= 10; ++m) {
        const EvenIndexPoly poly = build_F(m);
        for (long x = -6; x <= 6; ++x) {
            for (long y = -6; y <= 6; ++y) {
                CHECK(eval_F(m, Int(x), Int(y)) == poly.evaluate(Int(x), Int(y)));
            }
        }
    }
}

TEST_CASE("evaluation specials") {
    CHECK(eval_F(3, Int(1), Int(4)) == 7);
    CHECK(eval_F(2, Int(2), Int(8)) == 20);  // homogeneity: 2^2 * F_4(1, 4)
    for (std::size_t m = 1; m <= 8; ++m) {
        CHECK(eval_F(m, Int(0), Int(5)) == int_pow(5, static_cast<unsigned long>(m)));
    }
    CHECK_THROWS_AS(eval_F(0, Int(1), Int(1)), std::invalid_argument);
}

TEST_CASE("homogeneity and sign under negation") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 1 + rng() % 12;
        const Int x(dist(rng)), y(dist(rng)), lambda(dist(rng));
        const Int direct = eval_F(m, lambda * x, lambda * y);
        CHECK(direct == int_pow(lambda, static_cast<unsigned long>(m)) * eval_F(m, x, y));
        const Int negated = eval_F(m, -x, -y);
        CHECK(negated == (m % 2 == 0 ? eval_F(m, x, y) : -eval_F(m, x, y)));
    }
}

TEST_CASE("norm identity at one-four") {
    for (uint64_t p : primes_up_to(700)) {
        if (p == 2) continue;
        CHECK(eval_F((p - 1) / 2, Int(1), Int(4)) == Int(p));
    }
}

TEST_CASE("companion form values") {
    CHECK(eval_Hhat(3, Int(1), Int(2)) == 3);
    CHECK(eval_Hhat(23, Int(1), Int(2)) == 23);
    CHECK(eval_F(11, Int(1), Int(4)) == 23);  // so F_22(1,4) is far from +-691
    CHECK(eval_Hhat(691, Int(1), Int(2)) == 691);
    CHECK(eval_Hhat(691, Int(1), Int(2)) == testing::hhat_product_rounded(691, Int(1), Int(2)));
    CHECK_THROWS_AS(eval_Hhat(9, Int(1), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(eval_Hhat(2, Int(1), Int(2)), std::invalid_argument);
}

TEST_CASE("substitution identity against the cosine product") {
    for (uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 23ull, 29ull}) {
        for (long x = -10; x <= 10; x += 5) {
            for (long y = -10; y <= 10; y += 5) {
                const Int direct = eval_F((p - 1) / 2, Int(x), Int(y));
                CHECK(direct == testing::hhat_product_rounded(p, Int(x), Int(y - 2 * x)));
            }
        }
    }
}

TEST_CASE("tau bridge through the even-index polynomials") {
    const TauOracle oracle = TauOracle::build(20);
    for (uint64_t p : oracle.primes()) {
        const Int& tp = oracle.tau_prime(p);
        uint64_t p2m = 1;
        for (std::size_t m = 1; m <= 3; ++m) {
            p2m *= p * p;
            CHECK(eval_F(m, int_pow(p, 11), tp * tp) == oracle.tau(p2m));
        }
    }
}

TEST_CASE("product formula check") {
    CHECK(product_formula_check(3, {{Int(1), Int(4)}}).passed());
    CHECK(product_formula_check(2, {{Int(0), Int(1)}}).passed());
    CHECK(product_formula_check(10, {{Int(3), Int(7)}}).passed());
    std::vector<std::pair<Int, Int>> grid;
    for (long x = -4; x <= 4; ++x) {
        for (long y = -4; y <= 4; ++y) grid.emplace_back(Int(x), Int(y));
    }
    for (std::size_t m : {1, 5, 20}) CHECK(product_formula_check(m, grid).passed());
    CHECK_THROWS_AS(product_formula_check(21, {}), std::invalid_argument);
    CHECK_THROWS_AS(product_formula_check(0, {}), std::invalid_argument);
}

TEST_CASE("small thue search finds the classified solutions") {
    const auto solutions = search_F(3, Int(7), Int(100));
    const std::vector<ThueSolution> expected = {
        {Int(-3), Int(-5), Int(7)}, {Int(-2), Int(-1), Int(-7)}, {Int(-1), Int(-4), Int(-7)},
        {Int(1), Int(4), Int(7)},   {Int(2), Int(1), Int(7)},    {Int(3), Int(5), Int(-7)},
    };
    CHECK(solutions == expected);
}

TEST_CASE("degree-22 search is empty") {
    CHECK(search_F(11, Int(691), Int(100)).empty());
}

TEST_CASE("degree-690 small search") {
    const auto solutions = search_F(345, Int(691), Int(4));
    const std::vector<ThueSolution> expected = {
        {Int(-1), Int(-4), Int(-691)},
        {Int(1), Int(4), Int(691)},
    };
    CHECK(solutions == expected);
    CHECK(eval_F(345, Int(1), Int(4)) == 691);
}

TEST_CASE("thue search precondition") {
    CHECK_THROWS_AS(search_F(3, Int(10), Int(5)), std::invalid_argument);   // 2^3 <= 10
    CHECK_THROWS_AS(search_F(9, Int(691), Int(5)), std::invalid_argument);  // 2^9 <= 691
    CHECK_THROWS_AS(search_F(3, Int(0), Int(5)), std::invalid_argument);
}

TEST_CASE("window search is complete against a wide scan") {
    // Same solutions as a scan with a far larger Y window.
    for (const Int& target : {Int(1), Int(2), Int(3)}) {
        const auto fast = search_F(2, target, Int(20));
        std::vector<ThueSolution> wide;
        for (long x = -20; x <= 20; ++x) {
            for (long y = -150; y <= 150; ++y) {
                const Int value = eval_F(2, Int(x), Int(y));
                if (value == target || value == -target) wide.push_back({Int(x), Int(y), value});
            }
        }
        CHECK(fast == wide);
    }
}

TEST_CASE("golden-ratio convergents drive the filter") {
    // For p = 5 the two angles are 2cos(2pi/5) and 2cos(4pi/5), whose
    // convergent denominators are Fibonacci numbers, and Hhat_5 = +-1 on
    // every convergent pair.
    ConvergentFilterOptions options;
    options.p = 5;
    options.target = 691;
    options.min_denominator = 1;
    options.max_denominator = 50;
    options.precision_digits = 40;
    const ConvergentFilterResult result = convergent_filter(options);
    CHECK(result.violation_count == 0);
    REQUIRE(!result.candidates.empty());
    for (const ConvergentEvaluation& eval : result.candidates) {
        CHECK(abs(eval.value_pp) == 1);
        CHECK(eval.candidate.denominator > 1);
        CHECK(eval.candidate.denominator <= 50);
        // Fibonacci denominators only.
        Int a = 1, b = 1;
        bool fib = false;
        while (b <= eval.candidate.denominator) {
            if (b == eval.candidate.denominator) fib = true;
            Int next = a + b;
            a = b;
            b = next;
        }
        CHECK(fib);
    }
}

TEST_CASE("filter candidates respect the denominator range") {
    ConvergentFilterOptions options;
    options.p = 691;
    options.target = 691;
    options.min_denominator = 4;
    options.max_denominator = 40;
    options.precision_digits = 60;
    const ConvergentFilterResult result = convergent_filter(options);
    CHECK(result.violation_count == 0);
    for (const ConvergentEvaluation& eval : result.candidates) {
        CHECK(eval.candidate.denominator > 4);
        CHECK(eval.candidate.denominator <= 40);
        CHECK(eval.candidate.k >= 1);
        CHECK(eval.candidate.k <= 345);
    }
}

TEST_CASE("filter argument validation") {
    ConvergentFilterOptions options;
    options.p = 9;
    CHECK_THROWS_AS(convergent_filter(options), std::invalid_argument);
    options.p = 691;
    options.precision_digits = 10;
    CHECK_THROWS_AS(convergent_filter(options), std::invalid_argument);
    options.precision_digits = 120;
    options.min_denominator = 10;
    options.max_denominator = 5;
    CHECK_THROWS_AS(convergent_filter(options), std::invalid_argument);
}

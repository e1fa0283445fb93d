#include "sextic/exactmath/integer.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sextic;

TEST(Integer, ParseRationalCanonicalizes)
{
    EXPECT_EQ(parse_rat("6/-4"), Rat(-3, 2));
    EXPECT_EQ(parse_rat("-149/29"), Rat(-149, 29));
    EXPECT_EQ(parse_rat("+12"), Rat(12));
    EXPECT_EQ(to_string(parse_rat("10/5")), "2");
    EXPECT_EQ(to_string(parse_rat("-2/6")), "-1/3");
}

TEST(Integer, ParseRejectsDecimalsAndJunk)
{
    EXPECT_THROW(parse_rat("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rat("q"), std::invalid_argument);
    EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rat(""), std::invalid_argument);
    EXPECT_THROW(parse_rat("-"), std::invalid_argument);
}

TEST(Integer, ExactRoot)
{
    EXPECT_EQ(*exact_root(Int(729), 6), 3);
    EXPECT_EQ(*exact_root(Int(1), 6), 1);
    EXPECT_FALSE(exact_root(Int(728), 6));
    EXPECT_FALSE(exact_root(Int(-64), 6));
    EXPECT_EQ(*exact_root(Int(-27), 3), -3);
}

TEST(Integer, FactorAndDivisorsMatchTrialDivision)
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(1, 200000);
    for (int iter = 0; iter < 200; ++iter) {
        const long n = dist(rng);
        std::vector<Int> brute;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0)
                brute.emplace_back(d);
        EXPECT_EQ(positive_divisors(Int(n)), brute) << n;
        Int prod = 1;
        for (auto& [p, e] : factor_integer(Int(n))) {
            EXPECT_NE(mpz_probab_prime_p(p.get_mpz_t(), 25), 0);
            prod *= pow_int(p, e);
        }
        EXPECT_EQ(prod, n);
    }
}

TEST(Integer, PollardRhoOnLargeSemiprime)
{
    // (10^9+7)(10^9+9): beyond the trial-division range
    const Int n = Int("1000000007") * Int("1000000009");
    auto f = factor_integer(n);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_EQ(f[0].first, Int("1000000007"));
    EXPECT_EQ(f[1].first, Int("1000000009"));
}

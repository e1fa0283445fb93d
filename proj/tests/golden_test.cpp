#include "sextic/golden.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace sextic;

namespace {

// F_m written out by hand, independent of family::sextic_form.
Int F(long m, long x, long y)
{
    const Int X(x), Y(y), M(m);
    return X * X * X * X * X * X - 2 * M * X * X * X * X * X * Y - 5 * (M + 3) * X * X * X * X * Y * Y -
           20 * X * X * X * Y * Y * Y + 5 * M * X * X * Y * Y * Y * Y + 2 * (M + 3) * X * Y * Y * Y * Y * Y +
           Y * Y * Y * Y * Y * Y;
}

} // namespace

TEST(Golden, Table2HasElevenRowsWithTwoCubicOrThreeQuadraticFactors)
{
    const auto rows = golden::load_table2();
    ASSERT_EQ(rows.size(), 11u);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.i == 1 || r.i == 2);
        EXPECT_TRUE(r.factors.size() == 2 || r.factors.size() == 3) << r.m << "," << r.n;
        int degree = 0;
        for (const auto& f : r.factors)
            degree += exactmath::parse_poly(f).degree();
        EXPECT_EQ(degree, 6);
    }
}

TEST(Golden, Table2RowsAreTheCubicPairs)
{
    std::set<std::pair<long, long>> t2, cp;
    for (const auto& r : golden::load_table2())
        t2.emplace(r.m, r.n);
    for (const auto& p : golden::load_cubic_pairs().pairs)
        cp.insert(p);
    EXPECT_EQ(t2, cp);
}

TEST(Golden, CubicPairsAreAllPairsWithinTheClasses)
{
    const auto c = golden::load_cubic_pairs();
    EXPECT_EQ(c.verified_lo, -1);
    EXPECT_EQ(c.verified_hi, 10000);
    const auto j = golden::load_json("cubic_pairs.json");
    std::set<std::pair<long, long>> from_classes;
    for (const auto& cls : j.at("classes")) {
        const auto v = cls.get<std::vector<long>>();
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t k = i + 1; k < v.size(); ++k)
                from_classes.emplace(std::min(v[i], v[k]), std::max(v[i], v[k]));
    }
    const std::set<std::pair<long, long>> listed(c.pairs.begin(), c.pairs.end());
    EXPECT_EQ(listed.size(), 11u);
    EXPECT_EQ(from_classes, listed);
}

TEST(Golden, WithinFiltersByBothCoordinates)
{
    const auto c = golden::load_cubic_pairs();
    const auto v = c.within(-1, 60);
    const std::vector<std::pair<long, long>> want{{-1, 5}, {-1, 12}, {0, 3}, {0, 54}, {3, 54}, {5, 12}};
    EXPECT_EQ(v, want);
}

TEST(Golden, SpotValuesAgreeWithDirectEvaluation)
{
    const auto vals = golden::load_spot_values();
    ASSERT_EQ(vals.size(), 24u);
    for (const auto& s : vals)
        for (long m = -12; m <= 12; ++m)
            for (long e = 1; e <= (s.scaled ? 4 : 1); ++e) {
                const Int e6 = pow_int(Int(e), 6);
                EXPECT_EQ(F(m, s.cx * e, s.cy * e), (s.m_coeff * m + s.constant) * e6)
                    << "(" << s.cx << "," << s.cy << ") m=" << m << " e=" << e;
            }
}

TEST(Golden, DataDirOverride)
{
    ::setenv("SEXTIC_DATA_DIR", "/nonexistent-sextic-data", 1);
    EXPECT_EQ(golden::data_dir(), "/nonexistent-sextic-data");
    EXPECT_THROW(golden::load_table2(), std::runtime_error);
    ::unsetenv("SEXTIC_DATA_DIR");
    EXPECT_NO_THROW(golden::load_table2());
}

#include "sextic/resolvent.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace sextic;
using namespace sextic::resolvent;
using exactmath::format_poly;
using exactmath::parse_poly;

namespace {

DecompositionType dt(std::initializer_list<int> l) { return {std::vector<int>(l)}; }

} // namespace

TEST(Params, Examples)
{
    const auto r = resolvent_params(Rat(-1), Rat(5));
    EXPECT_EQ(*r.A1, Rat(1, 6));
    EXPECT_EQ(*r.A2, -2);
    EXPECT_FALSE(resolvent_params(Rat(4), Rat(4)).A1);
    EXPECT_TRUE(resolvent_params(Rat(4), Rat(4)).A2);
    EXPECT_FALSE(resolvent_params(Rat(4), Rat(-7)).A2);
    EXPECT_EQ(*resolvent_params(Rat(-1), Rat(12)).A2, Rat(-3, 2));
}

TEST(Params, SwapActsByRootInversionOnA1)
{
    for (long a = -6; a <= 6; ++a)
        for (long b = -6; b <= 6; ++b) {
            if (a == b || a + b + 3 == 0)
                continue;
            const auto ab = resolvent_params(Rat(a), Rat(b)), ba = resolvent_params(Rat(b), Rat(a));
            EXPECT_EQ(*ba.A1, -*ab.A1 - 3);
            EXPECT_EQ(*ba.A2, *ab.A2);
        }
}

TEST(ResolventPoly, Examples)
{
    EXPECT_EQ(resolvent_poly(Rat(-1), Rat(12), 2), family::simplest_sextic_poly(Rat(-3, 2)));
    EXPECT_EQ(resolvent_poly(Rat(-1), Rat(5), 1), family::simplest_sextic_poly(Rat(1, 6)));
    try {
        resolvent_poly(Rat(3), Rat(3), 1);
        FAIL();
    } catch (const std::domain_error& e) {
        EXPECT_STREQ(e.what(), "resolvent undefined at this pair");
    }
}

TEST(DiscCheck, FixedAndRandomPairs)
{
    EXPECT_TRUE(resolvent_disc_check(Rat(1), Rat(2)));
    EXPECT_TRUE(resolvent_disc_check(Rat(-1), Rat(12)));
    EXPECT_TRUE(resolvent_disc_check(Rat(0), Rat(4)));
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> d(-40, 40);
    for (int i = 0; i < 20; ++i) {
        const Rat a = make_rat(d(rng), 1 + (d(rng) + 40) % 5), b = make_rat(d(rng), 1 + (d(rng) + 40) % 7);
        if (a == b || a + b + 3 == 0)
            continue;
        EXPECT_TRUE(resolvent_disc_check(a, b)) << a << " " << b;
    }
}

TEST(DecompositionType, Examples)
{
    EXPECT_EQ(decomposition_type(family::simplest_sextic_poly(Rat(1, 6))), dt({2, 2, 2}));
    EXPECT_EQ(decomposition_type(family::simplest_sextic_poly(Rat(7))), dt({6}));
    EXPECT_EQ(decomposition_type(family::simplest_sextic_poly(Rat(-8))), dt({3, 3}));
    EXPECT_THROW(decomposition_type(parse_poly("(X-1)^2(X^4+1)")), std::domain_error);
    EXPECT_EQ(to_string(dt({1, 1, 1, 1, 1, 1})), "1,1,1,1,1,1");
}

TEST(Table1, KeysAreUnique)
{
    std::set<std::string> keys;
    for (const auto& r : table1())
        keys.insert(std::string(family::to_string(r.g1)) + family::to_string(r.g2) + to_string(to_dt(r.dt1)) +
                    "/" + to_string(to_dt(r.dt2)));
    EXPECT_EQ(keys.size(), table1().size());
    for (const auto& r : table1())
        EXPECT_GE(family::group_order(r.g1), family::group_order(r.g2));
}

TEST(Classify, Examples)
{
    const auto r1 = classify_intersection(Rat(-1), Rat(12));
    EXPECT_EQ(r1.degree, 3);
    EXPECT_EQ(r1.compositum, "C6xC2");
    EXPECT_EQ(r1.dt1, dt({6}));
    EXPECT_EQ(r1.dt2, dt({2, 2, 2}));

    const auto r2 = classify_intersection(Rat(1), Rat(2));
    EXPECT_EQ(r2.degree, 1);
    EXPECT_EQ(r2.compositum, "C6xC6");
    EXPECT_EQ(r2.dt1, dt({6}));
    EXPECT_EQ(r2.dt2, dt({6}));

    const auto r3 = classify_intersection(Rat(0), Rat(5));
    EXPECT_EQ(r3.degree, 1);
    EXPECT_EQ(r3.compositum, "C3xC3");
    EXPECT_EQ(r3.dt1, dt({3, 3}));
    EXPECT_EQ(r3.dt2, dt({3, 3}));

    EXPECT_THROW(classify_intersection(Rat(2), Rat(2)), std::invalid_argument);
    EXPECT_THROW(classify_intersection(Rat(2), Rat(-5)), std::invalid_argument);
}

TEST(Classify, SwapIsRecorded)
{
    // C2 before C6 must be reordered
    const auto r = classify_intersection(Rat(-3, 2), Rat(1));
    EXPECT_TRUE(r.swapped);
    EXPECT_EQ(r.g1, family::GaloisTag::C6);
    EXPECT_EQ(r.g2, family::GaloisTag::C2);
}

TEST(Classify, TotalAndInvariantUnderRootInversion)
{
    // integers give C6 or C3; the rational points add C2
    std::vector<Rat> params;
    for (long v = -8; v <= 8; ++v)
        params.push_back(Rat(v));
    for (const Rat& z : {Rat(-3, 2), Rat(1, 2), Rat(2, 3), Rat(-5, 3)})
        params.push_back(z);
    params.push_back(param_from_z(Rat(-3, 2), Rat(2)));
    for (const Rat& a : params)
        for (const Rat& b : params) {
            if (a == b || a + b + 3 == 0)
                continue;
            const auto r = classify_intersection(a, b);
            const Rat bb = -b - 3;
            if (a == bb || a + bb + 3 == 0)
                continue;
            EXPECT_EQ(classify_intersection(a, bb).degree, r.degree) << a << " " << b;
        }
}

TEST(Iso, Examples)
{
    const auto t = iso_test(Rat(2), Rat(-5));
    EXPECT_TRUE(t.equal);
    EXPECT_TRUE(t.trivial_pair);
    EXPECT_FALSE(t.witness);
    EXPECT_FALSE(iso_test(Rat(-1), Rat(12)).equal);
    const Rat b = param_from_z(Rat(-1), Rat(2));
    EXPECT_EQ(b, Rat(-149, 29));
    const auto w = iso_test(Rat(-1), b);
    ASSERT_TRUE(w.equal);
    ASSERT_TRUE(w.witness);
    EXPECT_EQ(w.witness->roots.size(), 6u);
    EXPECT_NE(std::find(w.witness->roots.begin(), w.witness->roots.end(), Rat(2)), w.witness->roots.end());
    for (const auto& root : w.witness->roots)
        EXPECT_EQ(exactmath::poly_eval(resolvent_poly(Rat(-1), b, w.witness->which), root), 0);
}

TEST(Iso, ParamFromZ)
{
    EXPECT_EQ(param_from_z(Rat(7, 3), Rat(0)), Rat(7, 3));
    EXPECT_EQ(param_from_z(Rat(-1), Rat(3)), Rat(-6047, 167));
    // a root of the split resolvent is a root of f6 at that parameter
    const Rat a = param_from_z(Rat(-1), Rat(2));
    const auto r = exactmath::rational_roots(resolvent_poly(Rat(-1), a, 1));
    ASSERT_FALSE(r.empty());
    EXPECT_THROW(param_from_z(*resolvent_params(Rat(-1), a).A1, r[0]), std::domain_error);
}

TEST(Iso, SymmetricAndRoundTrip)
{
    for (long a = -2; a <= 6; ++a)
        for (long z = -5; z <= 5; ++z) {
            const Rat b = param_from_z(Rat(a), Rat(z));
            const auto r = iso_test(Rat(a), b);
            EXPECT_TRUE(r.equal) << a << " " << z;
            EXPECT_EQ(iso_test(b, Rat(a)).equal, r.equal);
            if (!r.trivial_pair) { // integer a: group C6 or C3, exactly one resolvent splits
                EXPECT_NE(r.splits[0], r.splits[1]) << a << " " << z;
            }
        }
}

TEST(Iso, BothSplitForQuadraticGroup)
{
    const Rat a(-3, 2);
    ASSERT_EQ(family::galois_group(a).tag, family::GaloisTag::C2);
    int nontrivial = 0;
    for (long z = -5; z <= 5; ++z) {
        const Rat b = param_from_z(a, Rat(z));
        const auto r = iso_test(a, b);
        EXPECT_TRUE(r.equal);
        if (!r.trivial_pair) {
            ++nontrivial;
            EXPECT_TRUE(r.splits[0] && r.splits[1]) << z;
        }
    }
    EXPECT_GT(nontrivial, 0);
}

TEST(CubicIso, Examples)
{
    EXPECT_TRUE(cubic_iso_test(Rat(-1), Rat(12)));
    EXPECT_TRUE(cubic_iso_test(Rat(0), Rat(3)));
    EXPECT_FALSE(cubic_iso_test(Rat(1), Rat(2)));
    EXPECT_TRUE(cubic_iso_test(Rat(4), Rat(4)));
    EXPECT_TRUE(cubic_iso_test(Rat(1), Rat(66)));
    EXPECT_FALSE(cubic_iso_test(Rat(0), Rat(5)));
}

TEST(Theta, AllChecksPass)
{
    const auto rep = verify_theta();
    EXPECT_GE(rep.items.size(), 7u);
    for (const auto& it : rep.items)
        EXPECT_TRUE(it.passed) << it.id << " " << it.detail;
}

TEST(Table2, ReproducesPrintedRows)
{
    std::vector<Table2Row> rows{{-1, 5, 1, {"X^2-4X-3", "X^2+3X+1/2", "X^2+2/3X-2/3"}},
                                {2, 2389, 2, {"X^2-7X-9/2", "X^2+18/7X+2/7", "X^2+4/9X-7/9"}},
                                {12, 1259, 2, {"X^2-26X-14", "X^2+28/13X+1/13", "X^2+1/7X-13/14"}}};
    const auto rep = reproduce_table2(rows);
    EXPECT_TRUE(rep.all_passed());
    rows[0].factors[0] = "X^2-4X-2";
    const auto bad = reproduce_table2(rows);
    EXPECT_FALSE(bad.items[0].passed);
    EXPECT_TRUE(bad.items[1].passed);
}

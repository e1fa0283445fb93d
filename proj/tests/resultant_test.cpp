#include "sextic/exactmath/resultant.hpp"
#include "sextic/family.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace sextic;
using namespace sextic::exactmath;

namespace {

// h(z) = (m^2+3m+9) z (z+1) (z-1) (z+2) (2z+1)
UniPoly h_poly(long m)
{
    const Rat k(m * m + 3 * m + 9);
    return parse_poly("X(X+1)(X-1)(X+2)(2X+1)") * k;
}

// Independent route: h has the rational roots 0, -1, 1, -2, -1/2, so
// Res(h, f) = lc(h)^deg f * prod f(root).
Rat resultant_by_roots(long m)
{
    const UniPoly f = family::simplest_sextic_poly(Rat(m));
    const UniPoly h = h_poly(m);
    Rat r = pow_rat(h.lead(), 6);
    for (const Rat& a : {Rat(0), Rat(-1), Rat(1), Rat(-2), Rat(-1, 2)})
        r *= poly_eval(f, a);
    return r;
}

UniPoly random_poly(std::mt19937_64& rng, int deg)
{
    std::uniform_int_distribution<long> c(-20, 20);
    std::vector<Rat> v(deg + 1);
    for (auto& x : v)
        x = Rat(c(rng), 1 + (c(rng) + 20) % 3);
    if (v.back() == 0)
        v.back() = 1;
    return UniPoly(v);
}

} // namespace

TEST(Resultant, HAgainstSexticMatchesRootProductOracle)
{
    // -3^9 (m^2+3m+9)^6 at m = 0 is -3^21
    EXPECT_EQ(resultant_by_roots(0), Rat(Int("-10460353203")));
    EXPECT_EQ(sylvester_resultant(h_poly(0), family::simplest_sextic_poly(Rat(0))), Rat(Int("-10460353203")));
    const Rat m1 = Rat(-pow_int(Int(3), 9) * pow_int(Int(13), 6));
    EXPECT_EQ(resultant_by_roots(1), m1);
    EXPECT_EQ(sylvester_resultant(h_poly(1), family::simplest_sextic_poly(Rat(1))), m1);
    EXPECT_EQ(sylvester_matrix(h_poly(1), family::simplest_sextic_poly(Rat(1))).rows(), 11u);
}

TEST(Resultant, LinearPair)
{
    const Rat a(3, 2), b(-5);
    // lc(p)^deg q * q(a)
    EXPECT_EQ(sylvester_resultant(UniPoly({-a, Rat(1)}), UniPoly({-b, Rat(1)})), a - b);
}

TEST(Resultant, AntisymmetryOnRandomInputs)
{
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 60; ++iter) {
        const int dp = 1 + iter % 5, dq = 1 + (iter / 5) % 4;
        UniPoly p = random_poly(rng, dp), q = random_poly(rng, dq);
        const Rat sign = (dp * dq) % 2 ? Rat(-1) : Rat(1);
        EXPECT_EQ(sylvester_resultant(p, q), sign * sylvester_resultant(q, p));
    }
}

TEST(Resultant, ZeroPolynomialIsUsageError)
{
    EXPECT_THROW(sylvester_resultant(UniPoly{}, parse_poly("X")), std::invalid_argument);
}

TEST(Bezout, HandCheckedLinearPair)
{
    auto b = bezout_cofactors(parse_poly("X"), parse_poly("X-1"));
    EXPECT_EQ(b.u, UniPoly::constant(-1));
    EXPECT_EQ(b.v, UniPoly::constant(1));
    EXPECT_EQ(b.resultant, -1);
}

TEST(Bezout, IdentityHoldsOnRandomPairs)
{
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 60; ++iter) {
        UniPoly p = random_poly(rng, 1 + iter % 6), q = random_poly(rng, 1 + (iter / 6) % 5);
        if (sylvester_resultant(p, q) == 0)
            continue;
        auto b = bezout_cofactors(p, q);
        EXPECT_EQ(b.u * p + b.v * q, UniPoly::constant(b.resultant));
        EXPECT_LT(b.u.degree(), q.degree());
        EXPECT_LT(b.v.degree(), p.degree());
    }
}

TEST(Bezout, CommonFactorHasNoCertificate)
{
    EXPECT_THROW(bezout_cofactors(parse_poly("X^2-1"), parse_poly("X-1")), std::domain_error);
}

TEST(Bezout, NormalizedCofactorsAtZero)
{
    auto b = bezout_cofactors(h_poly(0), family::simplest_sextic_poly(Rat(0)));
    Int g = 0;
    for (const auto& c : b.u.coeffs())
        g = gcd_int(g, c.get_num());
    for (const auto& c : b.v.coeffs())
        g = gcd_int(g, c.get_num());
    EXPECT_EQ(g, pow_int(Int(3), 6) * pow_int(Int(9), 5));
    const Rat scale(-g);
    EXPECT_EQ(b.resultant / scale, 243);
    EXPECT_EQ(b.u * Rat(1 / scale), parse_poly("84X^5-42X^4-1232X^3-1071X^2+438X+242"));
    EXPECT_EQ(b.v * Rat(1 / scale), parse_poly("9(-168X^4-336X^3+154X^2+322X+27)"));
}

TEST(Discriminant, Examples)
{
    // X^2 + bX + c -> b^2 - 4c
    EXPECT_EQ(discriminant(parse_poly("X^2+5X+3")), 13);
    EXPECT_EQ(discriminant(parse_poly("X^2+1/2X-7")), Rat(Rat(1, 4) + 28));
    EXPECT_EQ(discriminant(family::simplest_sextic_poly(Rat(1))), Rat(pow_int(Int(6), 6) * pow_int(Int(13), 5)));
    EXPECT_EQ(discriminant(family::simplest_cubic_poly(Rat(1))), 169);
    EXPECT_THROW(discriminant(UniPoly::constant(4)), std::invalid_argument);
}

TEST(Discriminant, CubicMatchesClosedForm)
{
    // disc(X^3 + aX^2 + bX + c) = a^2b^2 - 4b^3 - 4a^3c - 27c^2 + 18abc
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> d(-30, 30);
    for (int i = 0; i < 40; ++i) {
        const Rat a(d(rng)), b(d(rng)), c = make_rat(d(rng), 1 + (d(rng) + 30) % 4);
        const Rat expect = a * a * b * b - 4 * b * b * b - 4 * a * a * a * c - 27 * c * c + 18 * a * b * c;
        EXPECT_EQ(discriminant(UniPoly({c, b, a, Rat(1)})), expect);
    }
}

TEST(Discriminant, SexticFamilyOverParameterRange)
{
    for (long m = -50; m <= 50; ++m) {
        const Rat k(m * m + 3 * m + 9);
        EXPECT_EQ(discriminant(family::simplest_sextic_poly(Rat(m))), Rat(46656) * pow_rat(k, 5)) << m;
    }
}

#pragma once

// Intersection and isomorphism of simplest sextic splitting fields through
// the two resolvents R^i_{f_{a,b}} = f6_{A_i}, with
//   A1 = -(ab + 3a + 9)/(a - b),   A2 = (ab - 9)/(a + b + 3).

#include "sextic/exactmath.hpp"
#include "sextic/family.hpp"
#include "sextic/report.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic::resolvent {

using exactmath::UniPoly;
using family::GaloisTag;

struct ResolventPair {
    Rat a, b;
    std::optional<Rat> A1; // absent when a == b
    std::optional<Rat> A2; // absent when a + b + 3 == 0
};

inline ResolventPair resolvent_params(const Rat& a, const Rat& b)
{
    ResolventPair r{a, b, std::nullopt, std::nullopt};
    if (a != b)
        r.A1 = Rat(-(a * b + 3 * a + 9) / (a - b));
    if (a + b + 3 != 0)
        r.A2 = Rat((a * b - 9) / (a + b + 3));
    return r;
}

inline UniPoly resolvent_poly(const Rat& a, const Rat& b, int i)
{
    if (i != 1 && i != 2)
        throw std::invalid_argument("resolvent index must be 1 or 2");
    const auto r = resolvent_params(a, b);
    const auto& A = i == 1 ? r.A1 : r.A2;
    if (!A)
        throw std::domain_error("resolvent undefined at this pair");
    return family::simplest_sextic_poly(*A);
}

/// disc R^1 = 6^6 (a^2+3a+9)^5 (b^2+3b+9)^5 / (a-b)^10, and the same over
/// (a+b+3)^10 for R^2.
inline bool resolvent_disc_check(const Rat& a, const Rat& b)
{
    const Rat num = Rat(46656) * pow_rat(Rat(a * a + 3 * a + 9), 5) * pow_rat(Rat(b * b + 3 * b + 9), 5);
    const Rat d1 = exactmath::discriminant(resolvent_poly(a, b, 1));
    const Rat d2 = exactmath::discriminant(resolvent_poly(a, b, 2));
    return d1 == num / pow_rat(Rat(a - b), 10) && d2 == num / pow_rat(Rat(a + b + 3), 10);
}

/// Partition of the degree by irreducible factor degrees, descending.
struct DecompositionType {
    std::vector<int> parts;

    friend bool operator==(const DecompositionType&, const DecompositionType&) = default;
};

inline std::string to_string(const DecompositionType& d)
{
    std::string s;
    for (std::size_t i = 0; i < d.parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(d.parts[i]);
    return s;
}

inline DecompositionType decomposition_type(const UniPoly& p)
{
    if (p.degree() != 6)
        throw std::invalid_argument("decomposition_type: expected a sextic");
    if (exactmath::poly_gcd(p, p.derivative()).degree() > 0)
        throw std::domain_error("decomposition_type requires squarefree polynomial");
    return {exactmath::factor_over_Q(p).degrees()};
}

enum class Relation { Disjoint, QuadraticOverlap, CubicOverlap, Equal, Contains12, Contains21 };

inline const char* to_string(Relation r)
{
    switch (r) {
    case Relation::Disjoint: return "disjoint";
    case Relation::QuadraticOverlap: return "quadratic-overlap";
    case Relation::CubicOverlap: return "cubic-overlap";
    case Relation::Equal: return "equal";
    case Relation::Contains12: return "contains-1>2";
    case Relation::Contains21: return "contains-2>1";
    }
    return "?";
}

struct Table1Row {
    GaloisTag g1, g2;
    const char* compositum; // Galois group of f_a f_b
    Relation relation;
    int degree; // [L1 cap L2 : K]
    std::array<int, 6> dt1, dt2; // zero padded
};

namespace detail {
inline constexpr std::array<int, 6> k6{6};
inline constexpr std::array<int, 6> k33{3, 3};
inline constexpr std::array<int, 6> k222{2, 2, 2};
inline constexpr std::array<int, 6> k1{1, 1, 1, 1, 1, 1};
} // namespace detail

/// Intersection of the splitting fields L1, L2 of f_a, f_b with groups G1, G2
/// (#G1 >= #G2) from the decomposition types of the two resolvents.
inline const std::array<Table1Row, 21>& table1()
{
    using enum GaloisTag;
    using enum Relation;
    using namespace detail;
    static const std::array<Table1Row, 21> rows{{
        {C6, C6, "C6xC6", Disjoint, 1, k6, k6},
        {C6, C6, "C6xC3", QuadraticOverlap, 2, k33, k33},
        {C6, C6, "C6xC2", CubicOverlap, 3, k6, k222},
        {C6, C6, "C6xC2", CubicOverlap, 3, k222, k6},
        {C6, C6, "C6", Equal, 6, k33, k1},
        {C6, C6, "C6", Equal, 6, k1, k33},
        {C6, C3, "C6xC3", Disjoint, 1, k6, k6},
        {C6, C3, "C6", Contains12, 3, k6, k222},
        {C6, C3, "C6", Contains12, 3, k222, k6},
        {C6, C2, "C6xC2", Disjoint, 1, k6, k6},
        {C6, C2, "C6", Contains12, 2, k33, k33},
        {C6, Trivial, "C6", Contains12, 1, k6, k6},
        {C3, C3, "C3xC3", Disjoint, 1, k33, k33},
        {C3, C3, "C3", Equal, 3, k33, k1},
        {C3, C3, "C3", Equal, 3, k1, k33},
        {C3, C2, "C6", Disjoint, 1, k6, k6},
        {C3, Trivial, "C3", Contains12, 1, k33, k33},
        {C2, C2, "C2xC2", Disjoint, 1, k222, k222},
        {C2, C2, "C2", Equal, 2, k1, k1},
        {C2, Trivial, "C2", Contains12, 1, k222, k222},
        {Trivial, Trivial, "1", Equal, 1, k1, k1},
    }};
    return rows;
}

inline DecompositionType to_dt(const std::array<int, 6>& a)
{
    DecompositionType d;
    for (int v : a)
        if (v)
            d.parts.push_back(v);
    return d;
}

struct IntersectionResult {
    int degree = 0;
    Relation relation = Relation::Disjoint; // relative to the caller's (a, b) order
    std::string compositum;
    GaloisTag g1 = GaloisTag::C6, g2 = GaloisTag::C6; // after ordering
    DecompositionType dt1, dt2;
    bool swapped = false; // a and b were exchanged so that #G1 >= #G2
    std::size_t row = 0;  // 0-based row of table1()
};

/// Looks up the unique row; throws logic_error when none matches.
inline std::size_t table1_lookup(GaloisTag g1, GaloisTag g2, const DecompositionType& dt1,
                                 const DecompositionType& dt2)
{
    const auto& rows = table1();
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (r.g1 == g1 && r.g2 == g2 && to_dt(r.dt1) == dt1 && to_dt(r.dt2) == dt2) {
            if (hit)
                throw std::logic_error("intersection table: ambiguous row");
            hit = i;
        }
    }
    if (!hit)
        throw std::logic_error(std::string("intersection table: no row for G1=") + family::to_string(g1) +
                               " G2=" + family::to_string(g2) + " DT=" + to_string(dt1) + "/" + to_string(dt2));
    return *hit;
}

/// Classifier with precomputed Galois groups (lets scans cache them).
inline IntersectionResult classify_intersection(const Rat& a, const Rat& b, GaloisTag ga, GaloisTag gb)
{
    if (a == b || a + b + 3 == 0)
        throw std::invalid_argument("classify_intersection requires (a-b)(a+b+3) != 0");
    IntersectionResult res;
    Rat x = a, y = b;
    if (family::group_order(ga) < family::group_order(gb)) {
        std::swap(x, y);
        std::swap(ga, gb);
        res.swapped = true;
    }
    res.g1 = ga;
    res.g2 = gb;
    res.dt1 = decomposition_type(resolvent_poly(x, y, 1));
    res.dt2 = decomposition_type(resolvent_poly(x, y, 2));
    res.row = table1_lookup(ga, gb, res.dt1, res.dt2);
    const auto& row = table1()[res.row];
    res.degree = row.degree;
    res.relation = (res.swapped && row.relation == Relation::Contains12) ? Relation::Contains21 : row.relation;
    res.compositum = row.compositum;
    return res;
}

inline IntersectionResult classify_intersection(const Rat& a, const Rat& b)
{
    if (a == b || a + b + 3 == 0)
        throw std::invalid_argument("classify_intersection requires (a-b)(a+b+3) != 0");
    return classify_intersection(a, b, family::galois_group(a).tag, family::galois_group(b).tag);
}

struct IsoWitness {
    int which = 0;           // index of the resolvent that splits
    std::vector<Rat> roots;  // its six rational roots
};

struct IsoResult {
    bool equal = false;
    bool trivial_pair = false;          // a == b or a + b + 3 == 0
    std::array<bool, 2> splits{};       // resolvent i+1 splits into linear factors
    std::optional<IsoWitness> witness;  // first splitting resolvent

    explicit operator bool() const { return equal; }
};

/// Spl f6_a == Spl f6_b iff a resolvent has six rational roots.
inline IsoResult iso_test(const Rat& a, const Rat& b)
{
    IsoResult r;
    if (a == b || a + b + 3 == 0) {
        r.equal = r.trivial_pair = true;
        return r;
    }
    for (int i = 1; i <= 2; ++i) {
        auto roots = exactmath::rational_roots(resolvent_poly(a, b, i));
        r.splits[i - 1] = roots.size() == 6;
        if (r.splits[i - 1] && !r.witness)
            r.witness = IsoWitness{i, std::move(roots)};
    }
    r.equal = r.witness.has_value();
    return r;
}

/// B = a + (a^2+3a+9) z(z+1)(z-1)(z+2)(2z+1) / f6_a(z)
inline Rat param_from_z(const Rat& a, const Rat& z)
{
    const Rat fz = exactmath::poly_eval(family::simplest_sextic_poly(a), z);
    if (fz == 0)
        throw std::domain_error("z is a root - undefined");
    return a + (a * a + 3 * a + 9) * z * (z + 1) * (z - 1) * (z + 2) * (2 * z + 1) / fz;
}

/// Degree of the cubic subfield of Spl f6 for a group tag.
inline int cubic_subfield_degree(GaloisTag g)
{
    return (g == GaloisTag::C6 || g == GaloisTag::C3) ? 3 : 1;
}

/// The cubic subfields of the two splitting fields coincide. Both fields are
/// cyclic, so each has at most one cubic subfield, and they agree exactly when
/// 3 divides the intersection degree (or both are trivial).
inline bool cubic_coincide(const IntersectionResult& r)
{
    const int c1 = cubic_subfield_degree(r.g1), c2 = cubic_subfield_degree(r.g2);
    return c1 == c2 && (c1 == 1 || r.degree % 3 == 0);
}

inline bool cubic_iso_test(const Rat& a, const Rat& b)
{
    if (a == b || a + b + 3 == 0)
        return true;
    return cubic_coincide(classify_intersection(a, b));
}

namespace detail {

/// Projective pair (num : den) and 2x2 Moebius matrices acting on it.
struct Proj {
    Rat num, den;
};
using Mat2 = std::array<Rat, 4>; // [[0, 1], [2, 3]]

inline Proj act(const Mat2& m, const Proj& p)
{
    return {m[0] * p.num + m[1] * p.den, m[2] * p.num + m[3] * p.den};
}

inline Mat2 mul(const Mat2& x, const Mat2& y)
{
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
            x[2] * y[1] + x[3] * y[3]};
}

/// z -> (z-1)/(z+2) raised to k
inline Mat2 mu_power(int k)
{
    Mat2 r{1, 0, 0, 1};
    const Mat2 m{1, -1, 1, 2};
    for (int i = 0; i < ((k % 6) + 6) % 6; ++i)
        r = mul(m, r);
    return r;
}

// Theta1 = -(zw + z + 1)/(z - w), Theta2 = (zw - 1)/(z + w + 1), homogenized
inline Proj theta(int which, const Proj& z, const Proj& w)
{
    if (which == 1)
        return {-(z.num * w.num + z.num * w.den + z.den * w.den), z.num * w.den - w.num * z.den};
    return {z.num * w.num - z.den * w.den, z.num * w.den + w.num * z.den + z.den * w.den};
}

inline Rat cross(const Proj& p, const Proj& q) { return p.num * q.den - q.num * p.den; }

} // namespace detail

/// Invariance and orbit structure of Theta1, Theta2 under
/// U = <sigma> x <tau>, sigma: z -> (z-1)/(z+2), tau: w -> (w-1)/(w+2).
/// Every check is a projective identity p ~ q, i.e. the polynomial identity
/// p.num q.den - q.num p.den == 0 of degree <= 2 in each of z, w.
inline CheckReport verify_theta()
{
    using namespace detail;
    using exactmath::identity_check_grid;
    using Pt = std::span<const Rat>;
    CheckReport report;
    const std::vector<std::string> names{"z", "w"};
    const std::array<unsigned, 2> bounds{2, 2};

    // Theta_i(sigma^k z, tau^j w) ~ mu^e (Theta_i(z, w))
    auto moved_equals = [&](int which, int k, int j, int e) {
        return identity_check_grid(
            [=](Pt v) -> std::optional<Rat> {
                const Proj z{v[0], 1}, w{v[1], 1};
                const Proj lhs = theta(which, act(mu_power(k), z), act(mu_power(j), w));
                const Proj rhs = act(mu_power(e), theta(which, z, w));
                return cross(lhs, rhs);
            },
            [](Pt) -> std::optional<Rat> { return Rat(0); }, bounds);
    };
    auto record = [&](const std::string& id, const std::string& desc, const exactmath::IdentityCheck& r) {
        report.add(id, desc, r.holds,
                   r.holds ? "" : "witness " + exactmath::format_point(r.witness, names));
    };

    // The printed orbit list is the mu-orbit of t.
    {
        auto r = identity_check_grid(
            [](Pt v) -> std::optional<Rat> {
                const Rat& t = v[0];
                // t, (t-1)/(t+2), -1/(t+1), -(t+2)/(2t+1), -(t+1)/t, -(2t+1)/(t-1)
                const std::array<Proj, 6> list{Proj{t, 1},         Proj{t - 1, t + 2}, Proj{-1, t + 1},
                                               Proj{-(t + 2), 2 * t + 1}, Proj{-(t + 1), t}, Proj{-(2 * t + 1), t - 1}};
                Rat acc = 0;
                for (int e = 0; e < 6; ++e) {
                    const Rat c = cross(act(mu_power(e), Proj{t, 1}), list[e]);
                    acc += c * c;
                }
                return acc;
            },
            [](Pt) -> std::optional<Rat> { return Rat(0); }, {4});
        report.add("orbit-list", "mu^e(t) for e = 0..5 is the printed orbit list", r.holds,
                   r.holds ? "" : "witness t=" + sextic::to_string(r.witness[0]));
    }

    record("theta1-fixed", "Theta1 fixed by sigma*tau", moved_equals(1, 1, 1, 0));
    record("theta2-fixed", "Theta2 fixed by sigma*tau^5", moved_equals(2, 1, 5, 0));
    record("theta1-sigma", "Theta1(sigma z, w) = (Theta1 - 1)/(Theta1 + 2)", moved_equals(1, 1, 0, 1));
    record("theta2-sigma-tau", "Theta2(sigma z, tau w) = -1/(Theta2 + 1)", moved_equals(2, 1, 1, 2));

    for (int which = 1; which <= 2; ++which) {
        // All 36 elements of U move Theta_i along the mu-orbit; exponent k - j
        // for Theta1 and k + j for Theta2.
        bool all = true;
        std::string detail;
        for (int k = 0; k < 6 && all; ++k)
            for (int j = 0; j < 6 && all; ++j) {
                const int e = which == 1 ? k - j : k + j;
                auto r = moved_equals(which, k, j, e);
                if (!r.holds) {
                    all = false;
                    detail = "sigma^" + std::to_string(k) + " tau^" + std::to_string(j) + " witness " +
                             exactmath::format_point(r.witness, names);
                }
            }
        // The six orbit members are pairwise distinct, so the stabilizer is
        // exactly the order-6 diagonal subgroup and Theta_i is U-primitive.
        for (int e1 = 0; e1 < 6 && all; ++e1)
            for (int e2 = e1 + 1; e2 < 6 && all; ++e2) {
                auto r = identity_check_grid(
                    [=](Pt v) -> std::optional<Rat> {
                        const Proj t = theta(which, Proj{v[0], 1}, Proj{v[1], 1});
                        return cross(act(mu_power(e1), t), act(mu_power(e2), t));
                    },
                    [](Pt) -> std::optional<Rat> { return Rat(0); }, std::span<const unsigned>(bounds));
                if (r.holds) {
                    all = false;
                    detail = "orbit members " + std::to_string(e1) + " and " + std::to_string(e2) + " coincide";
                }
            }
        const std::string t = "Theta" + std::to_string(which);
        report.add(t + "-orbit", "U-orbit of " + t + " is its six-element mu-orbit", all, detail);
    }
    return report;
}

/// One printed row: resolvent index i of the pair (m, n) splits into the
/// listed factors.
struct Table2Row {
    long m = 0, n = 0;
    int i = 0;
    std::vector<std::string> factors;
};

/// Factors resolvent i for every row and compares canonical factor strings
/// (as a sorted multiset) with the printed list; the other resolvent must be
/// irreducible.
inline CheckReport reproduce_table2(const std::vector<Table2Row>& rows)
{
    CheckReport report;
    for (const auto& row : rows) {
        const std::string id = "(" + std::to_string(row.m) + "," + std::to_string(row.n) + "," +
                               std::to_string(row.i) + ")";
        std::vector<std::string> want, got;
        for (const auto& f : row.factors)
            want.push_back(exactmath::format_poly(exactmath::parse_poly(f)));
        const auto fac = exactmath::factor_over_Q(resolvent_poly(Rat(row.m), Rat(row.n), row.i));
        for (const auto& f : fac.factors)
            for (unsigned k = 0; k < f.multiplicity; ++k)
                got.push_back(exactmath::format_poly(f.poly));
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        const bool match = fac.unit == 1 && want == got;
        const int j = 3 - row.i;
        const auto other = decomposition_type(resolvent_poly(Rat(row.m), Rat(row.n), j));
        const bool irreducible = other.parts == std::vector<int>{6};
        std::string detail;
        if (!match) {
            detail = "got";
            for (const auto& g : got)
                detail += " (" + g + ")";
        }
        if (!irreducible)
            detail += (detail.empty() ? "" : "; ") + std::string("resolvent ") + std::to_string(j) +
                      " has type " + to_string(other);
        report.add(id, "resolvent " + std::to_string(row.i) + " factors as printed, resolvent " +
                           std::to_string(j) + " irreducible",
                   match && irreducible, detail);
    }
    return report;
}

} // namespace sextic::resolvent

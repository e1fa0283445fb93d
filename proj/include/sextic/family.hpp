#pragma once

// The simplest sextic family: the binary form
//   F_m(X,Y) = X^6 - 2m X^5Y - 5(m+3) X^4Y^2 - 20 X^3Y^3 + 5m X^2Y^4 + 2(m+3) XY^5 + Y^6,
// its dehomogenization f6_s(X) = F_s(X,1), Shanks' simplest cubic
// f3_s(X) = X^3 - sX^2 - (s+3)X - 1, the order-6 action
// sigma: (x, y) -> (x + y, -x), and the identities tying them together.

#include "sextic/exactmath.hpp"
#include "sextic/report.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sextic::family {

using exactmath::UniPoly;

/// Binary sextic form at a parameter. coeffs[i] multiplies X^(6-i) Y^i.
struct SexticForm {
    Rat param;
    std::array<Rat, 7> coeffs;
};

inline SexticForm sextic_form(const Rat& m)
{
    return {m, {Rat(1), Rat(-2 * m), Rat(-5 * (m + 3)), Rat(-20), Rat(5 * m), Rat(2 * (m + 3)), Rat(1)}};
}

/// F(x, y) for rational x, y.
inline Rat form_value(const SexticForm& F, const Rat& x, const Rat& y)
{
    // Horner in x with y-powers: sum c_i x^(6-i) y^i
    Rat acc = 0;
    Rat ypow = 1;
    std::array<Rat, 7> ypows;
    for (int i = 0; i < 7; ++i) {
        ypows[i] = ypow;
        ypow *= y;
    }
    for (int i = 0; i < 7; ++i)
        acc = acc * x + F.coeffs[i] * ypows[i];
    return acc;
}

struct LatticePoint {
    Int x, y;

    friend bool operator==(const LatticePoint& a, const LatticePoint& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const LatticePoint& a, const LatticePoint& b)
    {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    }
};

inline std::string to_string(const LatticePoint& p)
{
    return "(" + sextic::to_string(p.x) + "," + sextic::to_string(p.y) + ")";
}

inline Rat eval_form(const Rat& m, const LatticePoint& p)
{
    return form_value(sextic_form(m), Rat(p.x), Rat(p.y));
}

/// f6_s(X) = F_s(X, 1)
inline UniPoly simplest_sextic_poly(const Rat& s)
{
    const auto F = sextic_form(s);
    std::vector<Rat> c(7);
    for (int i = 0; i < 7; ++i)
        c[6 - i] = F.coeffs[i];
    return UniPoly(std::move(c));
}

inline UniPoly simplest_cubic_poly(const Rat& s)
{
    return UniPoly({Rat(-1), Rat(-(s + 3)), Rat(-s), Rat(1)});
}

inline LatticePoint sigma(const LatticePoint& p) { return {p.x + p.y, -p.x}; }

/// The sigma-orbit of a point: distinct points in iteration order starting at
/// the point itself, plus the lexicographically smallest as representative.
struct OrbitClass {
    std::vector<LatticePoint> points;
    LatticePoint representative;
};

inline OrbitClass c6_orbit(const LatticePoint& p)
{
    OrbitClass o;
    LatticePoint q = p;
    for (int k = 0; k < 6; ++k) {
        if (std::find(o.points.begin(), o.points.end(), q) == o.points.end())
            o.points.push_back(q);
        q = sigma(q);
    }
    o.representative = *std::min_element(o.points.begin(), o.points.end());
    return o;
}

/// x y (x+y) (x-y) (x+2y) (2x+y)
inline Int trivial_product(const LatticePoint& p)
{
    return p.x * p.y * (p.x + p.y) * (p.x - p.y) * (p.x + 2 * p.y) * (2 * p.x + p.y);
}

inline bool is_trivial(const LatticePoint& p) { return trivial_product(p) == 0; }

/// Trivial solutions of F_m(x, y) = lambda: the six points of value e^6 or
/// the six of value -27 e^6, ordered lexicographically; empty when lambda has
/// neither shape. The sextic part is extracted by exact integer root, and the
/// form values do not depend on m.
inline std::vector<LatticePoint> trivial_solutions(const Rat& /*m*/, const Int& lambda)
{
    if (lambda == 0)
        throw std::invalid_argument("trivial_solutions: lambda must be nonzero");
    std::vector<LatticePoint> pts;
    if (lambda > 0) {
        if (auto e = exact_root(lambda, 6)) {
            const Int& v = *e;
            pts = {{0, v}, {0, Int(-v)}, {v, 0}, {Int(-v), 0}, {v, Int(-v)}, {Int(-v), v}};
        }
    } else if (divides(Int(27), lambda)) {
        if (auto e = exact_root(Int(-lambda / 27), 6)) {
            const Int& v = *e;
            pts = {{v, v},           {Int(-v), Int(-v)},    {Int(2 * v), Int(-v)},
                   {Int(-2 * v), v}, {v, Int(-2 * v)},      {Int(-v), Int(2 * v)}};
        }
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

enum class GaloisTag { C6, C3, C2, Trivial };

inline const char* to_string(GaloisTag t)
{
    switch (t) {
    case GaloisTag::C6: return "C6";
    case GaloisTag::C3: return "C3";
    case GaloisTag::C2: return "C2";
    case GaloisTag::Trivial: return "1";
    }
    return "?";
}

inline int group_order(GaloisTag t)
{
    switch (t) {
    case GaloisTag::C6: return 6;
    case GaloisTag::C3: return 3;
    case GaloisTag::C2: return 2;
    case GaloisTag::Trivial: return 1;
    }
    return 0;
}

inline GaloisTag tag_for_order(int order)
{
    switch (order) {
    case 6: return GaloisTag::C6;
    case 3: return GaloisTag::C3;
    case 2: return GaloisTag::C2;
    case 1: return GaloisTag::Trivial;
    }
    throw std::logic_error("no cyclic subgroup of C6 of order " + std::to_string(order));
}

struct GaloisClass {
    GaloisTag tag;
    std::optional<std::pair<Rat, Rat>> cubic_factor_params; // larger parameter first
    exactmath::Factorization factorization;
};

/// Galois group of f6_s over Q, read off the factorization: every
/// specialization has cyclic group inside C6 acting regularly on the roots,
/// so the group is C_l with l the lcm of the irreducible factor degrees.
inline GaloisClass galois_group(const Rat& s)
{
    GaloisClass g;
    g.factorization = exactmath::factor_over_Q(simplest_sextic_poly(s));
    int l = 1;
    for (int d : g.factorization.degrees())
        l = std::lcm(l, d);
    g.tag = tag_for_order(l);
    const auto& fs = g.factorization.factors;
    if (fs.size() == 2 && fs[0].poly.degree() == 3 && fs[1].poly.degree() == 3) {
        std::vector<Rat> params;
        for (const auto& f : fs) {
            const Rat t = -f.poly.coeff(2);
            if (f.poly == simplest_cubic_poly(t))
                params.push_back(t);
        }
        if (params.size() == 2) {
            std::sort(params.rbegin(), params.rend());
            g.cubic_factor_params = std::make_pair(params[0], params[1]);
        }
    }
    return g;
}

/// Gras's sextic g_t(X); g_{4s+6} = f6_s.
inline UniPoly gras_poly(const Rat& t)
{
    return UniPoly({Rat(1), Rat((t + 6) / 2), Rat(Rat(5, 4) * (t - 6)), Rat(-20), Rat(Rat(-5, 4) * (t + 6)),
                    Rat(-(t - 6) / 2), Rat(1)});
}

/// s(z) = (z^6 - 15z^4 - 20z^3 + 6z + 1) / (z (2z^4 + 5z^3 - 5z - 2))
inline UniPoly s_of_z_numerator() { return UniPoly::from_ints({1, 6, 0, -20, -15, 0, 1}); }
inline UniPoly s_of_z_denominator() { return UniPoly::from_ints({0, -2, -5, 0, 5, 2}); }

struct FamilyCheckOptions {
    /// Test hook: replace the -27 in identity (b) by this factor.
    long item_b_factor = -27;
};

/// Identity suite (a)-(i) for the family, each decided by grid evaluation.
inline CheckReport verify_family_identities(const FamilyCheckOptions& opt = {})
{
    using exactmath::identity_check_grid;
    using exactmath::poly_eval;
    using Pt = std::span<const Rat>;
    CheckReport report;
    auto record = [&](const std::string& id, const std::string& desc, const exactmath::IdentityCheck& r,
                      std::vector<std::string> names) {
        std::string detail;
        if (!r.holds)
            detail = "witness " + exactmath::format_point(r.witness, names) + ": lhs=" +
                     sextic::to_string(r.lhs_value) + " rhs=" + sextic::to_string(r.rhs_value);
        report.add(id, desc, r.holds, detail);
    };

    // (a) sigma-invariance
    record("a", "F_m(x+y,-x) = F_m(x,y)",
           identity_check_grid(
               [](Pt v) -> std::optional<Rat> { return form_value(sextic_form(v[0]), v[1] + v[2], -v[1]); },
               [](Pt v) -> std::optional<Rat> { return form_value(sextic_form(v[0]), v[1], v[2]); }, {1, 6, 6}),
           {"m", "x", "y"});

    // (b)
    const Rat factor_b(opt.item_b_factor);
    record("b", "F_m(2x+y,-x+y) = -27 F_m(x,y)",
           identity_check_grid(
               [](Pt v) -> std::optional<Rat> {
                   return form_value(sextic_form(v[0]), 2 * v[1] + v[2], -v[1] + v[2]);
               },
               [factor_b](Pt v) -> std::optional<Rat> {
                   return factor_b * form_value(sextic_form(v[0]), v[1], v[2]);
               },
               {1, 6, 6}),
           {"m", "x", "y"});

    // (c)
    record("c", "f6_s = (f3_s)^2 - (s^2+3s+9) X^2 (X+1)^2",
           identity_check_grid(
               [](Pt v) -> std::optional<Rat> { return poly_eval(simplest_sextic_poly(v[0]), v[1]); },
               [](Pt v) -> std::optional<Rat> {
                   const Rat& s = v[0];
                   const Rat& X = v[1];
                   Rat c = poly_eval(simplest_cubic_poly(s), X);
                   return c * c - (s * s + 3 * s + 9) * X * X * (X + 1) * (X + 1);
               },
               {2, 6}),
           {"s", "X"});

    // (d) discriminant is a degree-10 polynomial in s: 11 values decide it.
    record("d", "disc f6_s = 6^6 (s^2+3s+9)^5",
           identity_check_grid(
               [](Pt v) -> std::optional<Rat> { return exactmath::discriminant(simplest_sextic_poly(v[0])); },
               [](Pt v) -> std::optional<Rat> {
                   const Rat k = v[0] * v[0] + 3 * v[0] + 9;
                   return Rat(46656) * pow_rat(k, 5);
               },
               {10}),
           {"s"});

    const UniPoly sn = s_of_z_numerator(), sd = s_of_z_denominator();
    auto s_at = [sn, sd](const Rat& z) -> std::optional<Rat> {
        Rat d = poly_eval(sd, z);
        if (d == 0)
            return std::nullopt;
        return poly_eval(sn, z) / d;
    };
    auto zero = [](Pt) -> std::optional<Rat> { return Rat(0); };

    // (e) z is a root of f6_{s(z)}
    record("e", "f6_{s(z)}(z) = 0",
           identity_check_grid(
               [s_at, sd](Pt v) -> std::optional<Rat> {
                   auto s = s_at(v[0]);
                   if (!s)
                       return std::nullopt;
                   return poly_eval(sd, v[0]) * poly_eval(simplest_sextic_poly(*s), v[0]);
               },
               zero, {11}),
           {"z"});

    // (f) z2 - s = (z^2+z+1)^3 / (z(z+1)(z-1)(z+2)(2z+1)), and (z2 - s)^2 = s^2+3s+9
    auto z2_at = [](const Rat& z) -> std::optional<Rat> {
        Rat d = z * (z + 1);
        if (d == 0)
            return std::nullopt;
        return (z * z * z - 3 * z - 1) / d;
    };
    record("f1", "(z2 - s(z)) z(z+1)(z-1)(z+2)(2z+1) = (z^2+z+1)^3",
           identity_check_grid(
               [s_at, z2_at, sd](Pt v) -> std::optional<Rat> {
                   auto s = s_at(v[0]);
                   auto z2 = z2_at(v[0]);
                   if (!s || !z2)
                       return std::nullopt;
                   return (*z2 - *s) * poly_eval(sd, v[0]);
               },
               [](Pt v) -> std::optional<Rat> {
                   Rat t = v[0] * v[0] + v[0] + 1;
                   return t * t * t;
               },
               {6}),
           {"z"});
    record("f2", "(z2 - s(z))^2 = s(z)^2 + 3 s(z) + 9",
           identity_check_grid(
               [s_at, z2_at, sd](Pt v) -> std::optional<Rat> {
                   auto s = s_at(v[0]);
                   auto z2 = z2_at(v[0]);
                   if (!s || !z2)
                       return std::nullopt;
                   Rat d = poly_eval(sd, v[0]);
                   return (*z2 - *s) * (*z2 - *s) * d * d;
               },
               [s_at, sd](Pt v) -> std::optional<Rat> {
                   auto s = s_at(v[0]);
                   if (!s)
                       return std::nullopt;
                   Rat d = poly_eval(sd, v[0]);
                   return (*s * *s + 3 * *s + 9) * d * d;
               },
               {12}),
           {"z"});

    // (g) z3 = -z(z+2)/((z+1)(z-1)) is a root of f3_{s(z)}
    record("g", "f3_{s(z)}(z3(z)) = 0",
           identity_check_grid(
               [s_at, sd](Pt v) -> std::optional<Rat> {
                   const Rat& z = v[0];
                   auto s = s_at(z);
                   Rat e = (z + 1) * (z - 1);
                   if (!s || e == 0)
                       return std::nullopt;
                   Rat z3 = -z * (z + 2) / e;
                   return poly_eval(simplest_cubic_poly(*s), z3) * poly_eval(sd, z) * e * e * e;
               },
               zero, {12}),
           {"z"});

    // (h)
    record("h", "g_{4s+6}(X) = f6_s(X)",
           identity_check_grid(
               [](Pt v) -> std::optional<Rat> { return poly_eval(gras_poly(4 * v[0] + 6), v[1]); },
               [](Pt v) -> std::optional<Rat> { return poly_eval(simplest_sextic_poly(v[0]), v[1]); }, {1, 6}),
           {"s", "X"});

    // (i) z -> (z-1)/(z+2) has order 6 projectively: M^6 = -27 I
    {
        exactmath::RatMatrix M(2, 2);
        M.at(0, 0) = 1;
        M.at(0, 1) = -1;
        M.at(1, 0) = 1;
        M.at(1, 1) = 2;
        exactmath::RatMatrix P = exactmath::RatMatrix::identity(2);
        bool proper_power = true;
        for (int k = 1; k <= 6; ++k) {
            P = P * M;
            const bool scalar = P.at(0, 1) == 0 && P.at(1, 0) == 0 && P.at(0, 0) == P.at(1, 1);
            if (k < 6 && scalar)
                proper_power = false;
        }
        exactmath::RatMatrix expected = exactmath::RatMatrix::identity(2);
        expected.at(0, 0) = -27;
        expected.at(1, 1) = -27;
        const bool ok = proper_power && P == expected;
        report.add("i", "[[1,-1],[1,2]]^6 = -27 I, no smaller power scalar", ok,
                   ok ? "" : "M^6 = [[" + sextic::to_string(P.at(0, 0)) + "," + sextic::to_string(P.at(0, 1)) +
                                 "],[" + sextic::to_string(P.at(1, 0)) + "," + sextic::to_string(P.at(1, 1)) + "]]");
    }
    return report;
}

/// One spot value: F_m(cx*e, cy*e) = (m_coeff*m + constant) * e^6 where
/// `scaled` selects whether e is a free variable (else e = 1).
struct SpotValue {
    long cx = 0, cy = 0;
    long m_coeff = 0;
    long constant = 0;
    bool scaled = false;
};

/// Checks each spot value as a grid identity in m (degree 1) and, when
/// scaled, in e (degree 6).
inline CheckReport verify_spot_values(const std::vector<SpotValue>& values)
{
    using Pt = std::span<const Rat>;
    CheckReport report;
    for (const auto& sv : values) {
        const std::string id = "F_m(" + std::to_string(sv.cx) + (sv.scaled ? "e," : ",") + std::to_string(sv.cy) +
                               (sv.scaled ? "e)" : ")");
        std::string rhs = (sv.m_coeff ? std::to_string(sv.m_coeff) + "m" : std::string()) +
                          (sv.m_coeff && sv.constant >= 0 ? "+" : "") + std::to_string(sv.constant);
        if (sv.scaled)
            rhs = "(" + rhs + ")e^6";
        auto lhs = [sv](Pt v) -> std::optional<Rat> {
            const Rat e = sv.scaled ? v[1] : Rat(1);
            return form_value(sextic_form(v[0]), Rat(sv.cx) * e, Rat(sv.cy) * e);
        };
        auto rhsf = [sv](Pt v) -> std::optional<Rat> {
            const Rat e = sv.scaled ? v[1] : Rat(1);
            return (Rat(sv.m_coeff) * v[0] + Rat(sv.constant)) * pow_rat(e, 6);
        };
        std::vector<unsigned> bounds = sv.scaled ? std::vector<unsigned>{1, 6} : std::vector<unsigned>{1};
        auto r = exactmath::identity_check_grid(lhs, rhsf, bounds);
        std::vector<std::string> names{"m", "e"};
        report.add(id, id + " = " + rhs, r.holds,
                   r.holds ? "" : "witness " + exactmath::format_point(r.witness, names));
    }
    return report;
}

} // namespace sextic::family

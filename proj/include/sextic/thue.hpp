#pragma once

// Thue equations F_m(x, y) = lambda for divisors lambda of 27(m^2+3m+9):
// exhaustive box search, the N(m; x, y) correspondence with field
// coincidences, and the Bezout certificate
//   h(z) p(z) + f6_m(z) q(z) = 27(m^2+3m+9),
//   h(z) = (m^2+3m+9) z (z+1) (z-1) (z+2) (2z+1).

#include "sextic/exactmath.hpp"
#include "sextic/family.hpp"
#include "sextic/report.hpp"
#include "sextic/resolvent.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace sextic::thue {

using exactmath::UniPoly;
using family::LatticePoint;

inline Int k_of(const Int& m) { return m * m + 3 * m + 9; }

struct DivisorSet {
    Int m;
    Int modulus;               // 27(m^2+3m+9)
    std::vector<Int> divisors; // ascending, both signs

    /// Report order: ascending |lambda|, positive before negative.
    std::vector<Int> iteration_order() const
    {
        std::vector<Int> v;
        for (const auto& d : divisors)
            if (d > 0)
                v.push_back(d);
        std::sort(v.begin(), v.end());
        std::vector<Int> out;
        for (const auto& d : v) {
            out.push_back(d);
            out.push_back(Int(-d));
        }
        return out;
    }
};

inline DivisorSet divisors_27(const Int& m)
{
    DivisorSet s{m, Int(27 * k_of(m)), {}};
    for (const auto& d : positive_divisors(s.modulus)) {
        s.divisors.push_back(d);
        s.divisors.push_back(Int(-d));
    }
    std::sort(s.divisors.begin(), s.divisors.end());
    return s;
}

struct SolutionRecord {
    LatticePoint point;
    Int lambda;
    bool trivial = false;
    LatticePoint orbit_id; // lexicographically smallest point of the orbit

    friend bool operator==(const SolutionRecord& a, const SolutionRecord& b)
    {
        return a.point == b.point && a.lambda == b.lambda;
    }
};

inline SolutionRecord make_record(const LatticePoint& p, const Int& lambda)
{
    return {p, lambda, family::is_trivial(p), family::c6_orbit(p).representative};
}

namespace detail {

/// F_m over a box with machine integers when |F| provably fits in __int128,
/// GMP otherwise. Visits each point of the half box {y > 0} u {y = 0, x > 0}.
template <class Visit>
void sweep_half_box(const Int& m, long bound, Visit&& visit)
{
    const auto form = family::sextic_form(Rat(m));
    // sum |c_i| <= 14|m| + 43; B^6 * that must stay below 2^126
    const Int weight = 14 * abs(m) + 43;
    const bool fast = weight * pow_int(Int(bound), 6) < Int("10000000000000000000000000000000000000");
    if (fast) {
        __int128 c[7];
        for (int i = 0; i < 7; ++i)
            c[i] = static_cast<__int128>(to_int64(form.coeffs[i].get_num()));
        for (long y = 0; y <= bound; ++y)
            for (long x = (y == 0 ? 1 : -bound); x <= bound; ++x) {
                __int128 acc = 0;
                const __int128 X = x, Y = y;
                __int128 ypow = 1;
                // Horner in x with y powers
                __int128 yp[7];
                for (int i = 0; i < 7; ++i) {
                    yp[i] = ypow;
                    ypow *= Y;
                }
                for (int i = 0; i < 7; ++i)
                    acc = acc * X + c[i] * yp[i];
                visit(x, y, acc);
            }
    } else {
        for (long y = 0; y <= bound; ++y)
            for (long x = (y == 0 ? 1 : -bound); x <= bound; ++x)
                visit(x, y, family::eval_form(Rat(m), {Int(x), Int(y)}).get_num());
    }
}

inline Int to_int(__int128 v)
{
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Int hi(static_cast<unsigned long>(u >> 64)), lo(static_cast<unsigned long>(u & ~0ull));
    Int r = hi * Int("18446744073709551616") + lo;
    return neg ? Int(-r) : r;
}
inline const Int& to_int(const Int& v) { return v; }

inline void add_with_negation(std::vector<SolutionRecord>& out, long x, long y, const Int& lambda)
{
    out.push_back(make_record({Int(x), Int(y)}, lambda));
    out.push_back(make_record({Int(-x), Int(-y)}, lambda));
}

inline void sort_records(std::vector<SolutionRecord>& v)
{
    std::sort(v.begin(), v.end(), [](const SolutionRecord& a, const SolutionRecord& b) { return a.point < b.point; });
}

} // namespace detail

/// All (x, y) with |x|, |y| <= B and F_m(x, y) = lambda, sorted by point.
inline std::vector<SolutionRecord> solve_thue(const Int& m, const Int& lambda, long bound)
{
    if (lambda == 0)
        throw std::invalid_argument("solve_thue: lambda must be nonzero");
    if (bound < 1)
        throw std::invalid_argument("solve_thue: bound must be >= 1");
    std::vector<SolutionRecord> out;
    detail::sweep_half_box(m, bound, [&](long x, long y, const auto& value) {
        if (detail::to_int(value) == lambda)
            detail::add_with_negation(out, x, y, lambda);
    });
    detail::sort_records(out);
    return out;
}

struct LambdaResult {
    Int lambda;
    std::vector<SolutionRecord> solutions;
    std::vector<LatticePoint> expected; // trivial solutions inside the box
    bool matches_trivial = true;
};

struct SearchReport {
    Int m;
    long bound = 0;
    Int modulus;
    std::vector<LambdaResult> per_lambda; // in DivisorSet::iteration_order
    std::vector<SolutionRecord> counterexamples; // nontrivial solutions
    double seconds = 0;

    /// Only trivial solutions, and exactly the expected ones.
    bool ok() const
    {
        return counterexamples.empty() &&
               std::all_of(per_lambda.begin(), per_lambda.end(), [](const LambdaResult& l) { return l.matches_trivial; });
    }
};

/// One sweep of the box, bucketing points whose value divides 27(m^2+3m+9).
inline SearchReport solve_all_divisors(const Int& m, long bound)
{
    if (bound < 1)
        throw std::invalid_argument("solve_all_divisors: bound must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    const DivisorSet ds = divisors_27(m);
    SearchReport rep;
    rep.m = m;
    rep.bound = bound;
    rep.modulus = ds.modulus;

    std::map<Int, std::vector<SolutionRecord>> hits;
    const bool small_modulus = fits_int64(ds.modulus);
    const std::int64_t mod64 = small_modulus ? to_int64(ds.modulus) : 0;
    detail::sweep_half_box(m, bound, [&](long x, long y, const auto& value) {
        using V = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<V, __int128>) {
            if (small_modulus) {
                if (value == 0 || value > mod64 || value < -mod64 || mod64 % static_cast<std::int64_t>(value) != 0)
                    return;
                detail::add_with_negation(hits[Int(static_cast<long>(value))], x, y,
                                          Int(static_cast<long>(value)));
                return;
            }
        }
        const Int v = detail::to_int(value);
        if (v != 0 && divides(v, ds.modulus))
            detail::add_with_negation(hits[v], x, y, v);
    });

    for (const auto& lambda : ds.iteration_order()) {
        LambdaResult lr;
        lr.lambda = lambda;
        if (auto it = hits.find(lambda); it != hits.end())
            lr.solutions = std::move(it->second);
        detail::sort_records(lr.solutions);
        for (const auto& p : family::trivial_solutions(Rat(m), lambda))
            if (abs(p.x) <= bound && abs(p.y) <= bound)
                lr.expected.push_back(p);
        std::vector<LatticePoint> got;
        for (const auto& s : lr.solutions) {
            got.push_back(s.point);
            if (!s.trivial)
                rep.counterexamples.push_back(s);
        }
        lr.matches_trivial = got == lr.expected;
        rep.per_lambda.push_back(std::move(lr));
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

/// solve_all_divisors over m in [lo, hi] on `jobs` threads; reports in m order.
inline std::vector<SearchReport> solve_range(long lo, long hi, long bound, unsigned jobs = 1)
{
    if (hi < lo)
        throw std::invalid_argument("solve_range: empty range");
    std::vector<SearchReport> out(static_cast<std::size_t>(hi - lo + 1));
    std::atomic<long> next{lo};
    std::exception_ptr failure;
    std::mutex mu;
    auto worker = [&] {
        for (long m; (m = next.fetch_add(1)) <= hi;) {
            try {
                out[static_cast<std::size_t>(m - lo)] = solve_all_divisors(Int(m), bound);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };
    const unsigned n = std::max(1u, jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < n; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

struct NValue {
    Rat N;
    bool integral = false;
    bool admissible = false; // integral and not in {m, -m-3}
};

/// N = m + (m^2+3m+9) x y (x+y) (x-y) (x+2y) (2x+y) / F_m(x, y)
inline NValue n_from_solution(const Int& m, const LatticePoint& p)
{
    const Rat F = family::eval_form(Rat(m), p);
    if (F == 0)
        throw std::domain_error("n_from_solution: F_m(x,y) = 0, N undefined");
    NValue r;
    r.N = Rat(m) + Rat(k_of(m) * family::trivial_product(p)) / F;
    r.integral = is_integer(r.N);
    r.admissible = r.integral && r.N != Rat(m) && r.N != Rat(-m - 3);
    return r;
}

/// h(z) = (m^2+3m+9) z (z+1) (z-1) (z+2) (2z+1)
inline UniPoly h_poly(const Int& m)
{
    return exactmath::parse_poly("X(X+1)(X-1)(X+2)(2X+1)") * Rat(k_of(m));
}

/// p(z), q(z) as printed, at a given m.
inline UniPoly printed_p(const Int& m)
{
    const Rat M(m);
    return UniPoly({Rat(27 * M + 242), Rat(2 * (161 * M + 219)), Rat(7 * (22 * M - 153)), Rat(-112 * (3 * M + 11)),
                    Rat(-42 * (4 * M + 1)), Rat(84)});
}

inline UniPoly printed_q(const Int& m)
{
    return UniPoly::from_ints({27, 322, 154, -336, -168}) * Rat(k_of(m));
}

struct BezoutCertificate {
    Int m;
    UniPoly p, q; // h p + f6_m q = constant
    Int constant;
    Int cofactor_gcd;         // content of the raw Sylvester cofactors
    bool routes_agree = false;
    bool identity_holds = false;
};

/// Builds (p, q) from the printed formulas and from the Sylvester cofactors
/// divided by minus their content; throws logic_error if the two disagree.
inline BezoutCertificate bezout_routes(const Int& m)
{
    BezoutCertificate c;
    c.m = m;
    c.constant = 27 * k_of(m);
    const UniPoly h = h_poly(m), f = family::simplest_sextic_poly(Rat(m));
    c.p = printed_p(m);
    c.q = printed_q(m);

    const auto raw = exactmath::bezout_cofactors(h, f);
    Int g = 0;
    for (const auto* poly : {&raw.u, &raw.v})
        for (const auto& coef : poly->coeffs()) {
            if (coef.get_den() != 1)
                throw std::logic_error("bezout_certificate: non-integral Sylvester cofactor");
            g = gcd_int(g, coef.get_num());
        }
    c.cofactor_gcd = g;
    const Rat scale(-g);
    const UniPoly p2 = raw.u * Rat(1 / scale), q2 = raw.v * Rat(1 / scale);
    c.routes_agree = p2 == c.p && q2 == c.q && raw.resultant / scale == Rat(c.constant);
    c.identity_holds = h * c.p + f * c.q == UniPoly::constant(Rat(c.constant));
    return c;
}

inline BezoutCertificate bezout_certificate(const Int& m)
{
    auto c = bezout_routes(m);
    if (!c.routes_agree)
        throw std::logic_error("bezout_certificate: printed and Sylvester routes disagree at m=" + to_string(m));
    if (!c.identity_holds)
        throw std::logic_error("bezout_certificate: identity fails at m=" + to_string(m));
    return c;
}

/// Res(h, f6_m) = -3^9 (m^2+3m+9)^6
inline bool resultant_check(const Int& m)
{
    const Rat r = exactmath::sylvester_resultant(h_poly(m), family::simplest_sextic_poly(Rat(m)));
    return r == Rat(-pow_int(Int(3), 9) * pow_int(k_of(m), 6));
}

/// H P + F_m Q = c (m^2+3m+9) y^11 with H = y^6 h(x/y), P = y^5 p(x/y),
/// Q = y^5 q(x/y), by grid evaluation in (x, y); c = 27 unless mutated. Also
/// checks H = (m^2+3m+9) xy(x+y)(x-y)(x+2y)(2x+y).
inline bool hpq_homogeneous_check(const Int& m, long constant_factor = 27)
{
    using Pt = std::span<const Rat>;
    const UniPoly h = h_poly(m), p = printed_p(m), q = printed_q(m);
    const Rat k(k_of(m));
    auto homog = [](const UniPoly& poly, int degree, const Rat& x, const Rat& y) {
        Rat acc = 0;
        for (int i = 0; i <= poly.degree(); ++i)
            acc += poly.coeff(i) * pow_rat(x, i) * pow_rat(y, degree - i);
        return acc;
    };
    const auto F = family::sextic_form(Rat(m));
    const bool main = exactmath::identity_check_grid(
                          [&](Pt v) -> std::optional<Rat> {
                              return homog(h, 6, v[0], v[1]) * homog(p, 5, v[0], v[1]) +
                                     family::form_value(F, v[0], v[1]) * homog(q, 5, v[0], v[1]);
                          },
                          [&](Pt v) -> std::optional<Rat> {
                              return Rat(constant_factor) * k * pow_rat(v[1], 11);
                          },
                          {11, 11})
                          .holds;
    const bool numerator = exactmath::identity_check_grid(
                               [&](Pt v) -> std::optional<Rat> { return homog(h, 6, v[0], v[1]); },
                               [&](Pt v) -> std::optional<Rat> {
                                   const Rat &x = v[0], &y = v[1];
                                   return k * x * y * (x + y) * (x - y) * (x + 2 * y) * (2 * x + y);
                               },
                               {6, 6})
                               .holds;
    return main && numerator;
}

/// Both congruences by exhaustive residues: x = y (mod 3) forces
/// 27 | xy(x+y)(x-y)(x+2y)(2x+y); x != y (mod 3) forces F_m(x,y) = 1 (mod 3).
inline CheckReport mod3_lemma_check()
{
    CheckReport rep;
    bool first = true;
    std::string d1;
    for (long x = 0; x < 27 && first; ++x)
        for (long y = 0; y < 27 && first; ++y) {
            if ((x - y) % 3 != 0)
                continue;
            const Int prod = family::trivial_product({Int(x), Int(y)});
            if (!divides(Int(27), prod)) {
                first = false;
                d1 = "(x,y)=(" + std::to_string(x) + "," + std::to_string(y) + ")";
            }
        }
    rep.add("mod27-product", "x = y (mod 3) implies 27 | xy(x+y)(x-y)(x+2y)(2x+y)", first, d1);

    bool second = true;
    std::string d2;
    for (long m = 0; m < 3; ++m)
        for (long x = 0; x < 3; ++x)
            for (long y = 0; y < 3; ++y) {
                if (x == y)
                    continue;
                const Int v = family::eval_form(Rat(m), {Int(x), Int(y)}).get_num();
                Int r = v % 3;
                if (r < 0)
                    r += 3;
                if (r != 1 && second) {
                    second = false;
                    d2 = "(x,y,m)=(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(m) + ")";
                }
            }
    rep.add("mod3-form", "x != y (mod 3) implies F_m(x,y) = 1 (mod 3)", second, d2);
    return rep;
}

enum class Verdict { Trivial, RefutedNonDivisor, WouldBeCoincidence };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::Trivial: return "trivial";
    case Verdict::RefutedNonDivisor: return "refuted: non-divisor value";
    case Verdict::WouldBeCoincidence: return "would-be coincidence";
    }
    return "?";
}

struct Correspondence {
    Verdict verdict = Verdict::Trivial;
    Int value;               // F_m(x, y)
    std::optional<Rat> N;    // set when the value divides 27(m^2+3m+9)
    bool fields_equal = false;
};

/// A nontrivial primitive solution with F_m(x,y) | 27(m^2+3m+9) would give an
/// integer N != m, -m-3 with the same sextic field as m.
inline Correspondence correspondence_check(const Int& m, const LatticePoint& p)
{
    if (gcd_int(p.x, p.y) != 1)
        throw std::invalid_argument("correspondence_check: point must be primitive");
    Correspondence c;
    c.value = family::eval_form(Rat(m), p).get_num();
    if (c.value == 0)
        throw std::domain_error("correspondence_check: F_m(x,y) = 0");
    if (family::is_trivial(p)) {
        c.verdict = Verdict::Trivial;
        return c;
    }
    if (!divides(c.value, Int(27 * k_of(m)))) {
        c.verdict = Verdict::RefutedNonDivisor;
        return c;
    }
    const auto n = n_from_solution(m, p);
    if (!n.integral)
        throw std::logic_error("correspondence_check: N not integral for a divisor value");
    c.N = n.N;
    c.fields_equal = resolvent::iso_test(Rat(m), n.N).equal;
    c.verdict = Verdict::WouldBeCoincidence;
    return c;
}

} // namespace sextic::thue

#pragma once

// Factorization over Q for degrees 1..12: squarefree decomposition (Yun),
// then Zassenhaus on each squarefree part: reduce modulo the smallest good
// prime, distinct/equal-degree split, Hensel lift past twice the coefficient
// bound 2^n * |f|_2 * |lc f|, exhaustive recombination over factor subsets.

#include "sextic/exactmath/modp.hpp"
#include "sextic/exactmath/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sextic::exactmath {

inline constexpr int kMaxFactorDegree = 12;

struct Factor {
    UniPoly poly; // monic, irreducible over Q
    unsigned multiplicity = 1;
};

struct Factorization {
    Rat unit;
    std::vector<Factor> factors;

    UniPoly expand() const
    {
        UniPoly r = UniPoly::constant(unit);
        for (const auto& f : factors)
            r *= pow(f.poly, f.multiplicity);
        return r;
    }

    /// Degrees of the irreducible factors with multiplicity, descending.
    std::vector<int> degrees() const
    {
        std::vector<int> d;
        for (const auto& f : factors)
            for (unsigned k = 0; k < f.multiplicity; ++k)
                d.push_back(f.poly.degree());
        std::sort(d.rbegin(), d.rend());
        return d;
    }
};

/// Ordering used for Factorization::factors: degree first, then coefficients
/// from X^(deg-1) down to the constant term.
inline bool factor_order(const UniPoly& a, const UniPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        const Rat& x = a.coeffs()[i];
        const Rat& y = b.coeffs()[i];
        if (x != y)
            return x < y;
    }
    return false;
}

namespace detail {

inline Int eval_int(const std::vector<Int>& c, const Int& x)
{
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

// Homogenized value sum c_i num^i den^(n-i); zero iff num/den is a root.
inline Int eval_homogeneous(const std::vector<Int>& c, const Int& num, const Int& den)
{
    Int acc = 0, dpow = 1;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * num + *it * dpow;
        dpow *= den;
    }
    return acc;
}

// Exact division of integer polynomials; false if the quotient is not integral.
inline bool divide_exact(const std::vector<Int>& a, const std::vector<Int>& b, std::vector<Int>& q)
{
    const int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
    if (da < db)
        return false;
    std::vector<Int> r = a;
    q.assign(static_cast<std::size_t>(da - db + 1), Int(0));
    for (int i = da; i >= db; --i) {
        if (r[i] == 0)
            continue;
        if (!divides(b.back(), r[i]))
            return false;
        Int f = r[i] / b.back();
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= f * b[j];
    }
    for (int i = 0; i < db; ++i)
        if (r[i] != 0)
            return false;
    return true;
}

} // namespace detail

/// All rational roots with multiplicity, ascending. Candidates are s/t with
/// s | a_0 and t | a_n after clearing denominators; (t - s) | f(1) and
/// (t + s) | f(-1) prune before each exact test.
inline std::vector<Rat> rational_roots(const UniPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("rational_roots of the zero polynomial");
    std::vector<Int> c = clear_denominators(p).primitive.coeffs;
    std::vector<Rat> roots;
    while (c.size() > 1 && c.front() == 0) {
        roots.emplace_back(0);
        c.erase(c.begin());
    }
    if (c.size() <= 1)
        return roots;

    const auto nums = positive_divisors(c.front());
    const auto dens = positive_divisors(c.back());
    // Cauchy bound on root magnitude: 1 + max |a_i / a_n|
    Rat bound = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        bound = std::max(bound, Rat(abs(c[i]), abs(c.back())));
    bound += 1;

    for (const auto& t : dens) {
        for (const auto& s0 : nums) {
            if (gcd_int(s0, t) != 1 || Rat(s0, t) > bound)
                continue;
            for (int sign : {1, -1}) {
                const Int s = sign * s0;
                for (;;) {
                    if (c.size() <= 1)
                        break;
                    const Int f1 = detail::eval_int(c, Int(1));
                    const Int fm1 = detail::eval_int(c, Int(-1));
                    if (!divides(Int(t - s), f1) || !divides(Int(t + s), fm1))
                        break;
                    if (detail::eval_homogeneous(c, s, t) != 0)
                        break;
                    roots.push_back(make_rat(s, t));
                    std::vector<Int> q;
                    if (!detail::divide_exact(c, std::vector<Int>{Int(-s), t}, q))
                        throw std::logic_error("rational_roots: non-integral deflation");
                    c = std::move(q);
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// Yun's squarefree decomposition: p = lc * prod a_i^i with monic, pairwise
/// coprime, squarefree a_i. Entries with a_i == 1 are dropped.
inline std::vector<Factor> squarefree_decomposition(const UniPoly& p)
{
    if (p.degree() < 1)
        return {};
    std::vector<Factor> out;
    UniPoly f = p.monic();
    UniPoly d = f.derivative();
    UniPoly a = poly_gcd(f, d);
    UniPoly b = divmod(f, a).quotient;
    UniPoly c = divmod(d, a).quotient;
    UniPoly e = c - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        UniPoly g = e.is_zero() ? b : poly_gcd(b, e);
        if (g.degree() > 0)
            out.push_back({g.monic(), i});
        b = divmod(b, g).quotient;
        c = divmod(e, g).quotient;
        e = c - b.derivative();
        ++i;
    }
    return out;
}

namespace detail {

using IntCoeffs = std::vector<Int>;

inline Int mod_sym(const Int& v, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m)
        r -= m;
    return r;
}

inline Int mod_pos(const Int& v, const Int& m)
{
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline void trim(IntCoeffs& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

inline IntCoeffs mul_mod(const IntCoeffs& a, const IntCoeffs& b, const Int& m)
{
    if (a.empty() || b.empty())
        return {};
    IntCoeffs r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    for (auto& v : r)
        v = mod_pos(v, m);
    trim(r);
    return r;
}

inline IntCoeffs sub_mod(const IntCoeffs& a, const IntCoeffs& b, const Int& m)
{
    IntCoeffs r(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = mod_pos((i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0)), m);
    trim(r);
    return r;
}

inline IntCoeffs from_modp(const modp::ModPoly& a)
{
    IntCoeffs r;
    for (int i = 0; i <= a.deg; ++i)
        r.emplace_back(static_cast<unsigned long>(a.c[i]));
    return r;
}

inline modp::ModPoly to_modp(const modp::Field& F, const IntCoeffs& a) { return F.from_ints(a); }

// Lifts f == g*h (mod p), g and h monic and coprime mod p, f monic mod
// p^k, to f == G*H (mod p^k) one power of p at a time.
inline std::pair<IntCoeffs, IntCoeffs> hensel_pair(const modp::Field& F, const IntCoeffs& f,
                                                   IntCoeffs g, IntCoeffs h, unsigned k)
{
    modp::ModPoly s, t;
    const modp::ModPoly gm = to_modp(F, g), hm = to_modp(F, h);
    const modp::ModPoly one = F.xgcd(gm, hm, s, t);
    if (one.deg != 0)
        throw std::logic_error("hensel_pair: factors not coprime mod p");
    const Int p(static_cast<unsigned long>(F.p()));
    Int pj = p;
    for (unsigned j = 1; j < k; ++j) {
        const Int pj1 = pj * p;
        // e = (f - g h) / p^j  (mod p)
        IntCoeffs gh = mul_mod(g, h, pj1);
        IntCoeffs diff = sub_mod(f, gh, pj1);
        for (auto& v : diff) {
            if (!divides(pj, v))
                throw std::logic_error("hensel_pair: lifting invariant broken");
            v /= pj;
        }
        const modp::ModPoly e = to_modp(F, diff);
        // a*h + b*g == e (mod p), deg a < deg g
        const modp::ModPoly a = F.rem(F.mul(t, e), gm);
        const modp::ModPoly b = F.quo(F.sub(e, F.mul(a, hm)), gm);
        const IntCoeffs ai = from_modp(a), bi = from_modp(b);
        for (std::size_t i = 0; i < ai.size(); ++i)
            g[i] += pj * ai[i];
        if (h.size() < bi.size())
            h.resize(bi.size(), Int(0));
        for (std::size_t i = 0; i < bi.size(); ++i)
            h[i] += pj * bi[i];
        pj = pj1;
    }
    return {g, h};
}

// Lifts a monic f (mod p^k) with monic coprime factors mod p.
inline void hensel_multi(const modp::Field& F, const IntCoeffs& f, const std::vector<modp::ModPoly>& factors,
                         unsigned k, const Int& pk, std::vector<IntCoeffs>& out)
{
    if (factors.size() == 1) {
        out.push_back(f);
        return;
    }
    const std::size_t half = factors.size() / 2;
    modp::ModPoly g = F.constant(1), h = F.constant(1);
    for (std::size_t i = 0; i < half; ++i)
        g = F.mul(g, factors[i]);
    for (std::size_t i = half; i < factors.size(); ++i)
        h = F.mul(h, factors[i]);
    auto [G, H] = hensel_pair(F, f, from_modp(g), from_modp(h), k);
    for (auto& v : G)
        v = mod_pos(v, pk);
    for (auto& v : H)
        v = mod_pos(v, pk);
    hensel_multi(F, G, {factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(half)}, k, pk, out);
    hensel_multi(F, H, {factors.begin() + static_cast<std::ptrdiff_t>(half), factors.end()}, k, pk, out);
}

inline IntCoeffs primitive_coeffs(IntCoeffs a)
{
    IntPoly ip{std::move(a)};
    return primitive(std::move(ip)).coeffs;
}

} // namespace detail

/// Irreducible factors over Z of a primitive squarefree integer polynomial
/// with positive leading coefficient. Each returned factor is primitive with
/// positive leading coefficient.
inline std::vector<IntPoly> zassenhaus(const IntPoly& f)
{
    using namespace detail;
    const int n = f.degree();
    if (n < 1)
        throw std::invalid_argument("zassenhaus: degree must be positive");
    if (n == 1)
        return {f};
    if (n > modp::kCapacity / 2 - 1)
        throw std::invalid_argument("zassenhaus: degree too large");

    // Smallest prime >= 3 not dividing lc with squarefree image.
    std::uint64_t p = 3;
    modp::ModPoly fbar;
    for (;; p = modp::next_prime(p + 1)) {
        if (divides(Int(static_cast<unsigned long>(p)), f.lead()))
            continue;
        modp::Field F(p);
        fbar = F.from_ints(f.coeffs);
        if (F.is_squarefree(fbar))
            break;
    }
    const modp::Field F(p);
    std::vector<modp::ModPoly> local = modp::factor_squarefree(F, F.monic(fbar));
    if (local.size() == 1)
        return {f};

    // Coefficient bound for lc * (any factor made to have leading coeff lc).
    Int norm2 = 0;
    for (const auto& c : f.coeffs)
        norm2 += c * c;
    Int norm = sqrt(norm2) + 1;
    const Int bound = pow_int(Int(2), static_cast<unsigned long>(n)) * norm * abs(f.lead());
    const Int P(static_cast<unsigned long>(p));
    unsigned k = 1;
    Int pk = P;
    while (pk <= 2 * bound) {
        pk *= P;
        ++k;
    }

    // Monic image of f modulo p^k.
    Int lc_inv;
    mpz_invert(lc_inv.get_mpz_t(), f.lead().get_mpz_t(), pk.get_mpz_t());
    IntCoeffs fmonic = f.coeffs;
    for (auto& c : fmonic)
        c = mod_pos(c * lc_inv, pk);

    std::vector<IntCoeffs> lifted;
    hensel_multi(F, fmonic, local, k, pk, lifted);

    // Recombination over subsets of increasing size.
    std::vector<IntPoly> found;
    IntCoeffs rest = f.coeffs;
    std::vector<IntCoeffs> pool = std::move(lifted);
    std::size_t size = 1;
    while (2 * size <= pool.size()) {
        bool progressed = false;
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            const Int lc = rest.back();
            IntCoeffs g{lc};
            for (std::size_t i : pick)
                g = mul_mod(g, pool[i], pk);
            for (auto& v : g)
                v = mod_sym(v, pk);
            trim(g);
            IntCoeffs cand = primitive_coeffs(g);
            IntCoeffs q;
            if (divide_exact(rest, cand, q)) {
                found.push_back(IntPoly{cand});
                rest = std::move(q);
                std::vector<IntCoeffs> remaining;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        remaining.push_back(pool[i]);
                pool = std::move(remaining);
                progressed = true;
                break;
            }
            // next combination of `size` indices out of pool.size()
            std::size_t i = size;
            while (i > 0 && pick[i - 1] == pool.size() - size + (i - 1))
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        if (!progressed)
            ++size;
    }
    if (rest.size() > 1) {
        IntCoeffs last = primitive_coeffs(rest);
        found.push_back(IntPoly{last});
    }
    return found;
}

/// Complete factorization over Q into monic irreducibles times a unit.
/// Degrees outside [1, 12] are rejected.
inline Factorization factor_over_Q(const UniPoly& p)
{
    const int n = p.degree();
    if (n < 1 || n > kMaxFactorDegree)
        throw std::invalid_argument("factor_over_Q: unsupported degree " + std::to_string(n));
    Factorization out;
    out.unit = p.lead();
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        const IntPoly prim = clear_denominators(part).primitive;
        for (const auto& irr : zassenhaus(prim))
            out.factors.push_back({to_unipoly(irr).monic(), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factor& a, const Factor& b) { return factor_order(a.poly, b.poly); });
    return out;
}

} // namespace sextic::exactmath

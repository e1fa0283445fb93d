#pragma once

// Polynomials over F_p for word-sized odd primes p < 2^32, stored in fixed
// capacity so the scan prefilter and the factorizer never allocate in their
// inner loops. Degrees up to kCapacity - 1 are representable, which covers
// products of two reduced polynomials modulo a degree <= 12 modulus.

#include "sextic/exactmath/integer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace sextic::exactmath::modp {

inline constexpr int kCapacity = 32;

struct ModPoly {
    std::array<std::uint64_t, kCapacity> c{};
    int deg = -1; // -1 for the zero polynomial

    bool is_zero() const { return deg < 0; }
    std::uint64_t lead() const { return c[deg]; }
    void trim()
    {
        while (deg >= 0 && c[deg] == 0)
            --deg;
    }
    friend bool operator==(const ModPoly& a, const ModPoly& b)
    {
        return a.deg == b.deg && std::equal(a.c.begin(), a.c.begin() + (a.deg + 1), b.c.begin());
    }
};

class Field {
public:
    explicit Field(std::uint64_t p) : p_(p)
    {
        if (p < 3 || p >= (1ull << 32))
            throw std::invalid_argument("modp::Field: prime out of supported range");
    }

    std::uint64_t p() const { return p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }
    std::uint64_t neg(std::uint64_t a) const { return a ? p_ - a : 0; }
    std::uint64_t pow(std::uint64_t b, std::uint64_t e) const
    {
        std::uint64_t r = 1;
        b %= p_;
        while (e) {
            if (e & 1)
                r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const
    {
        if (a % p_ == 0)
            throw std::domain_error("modp: inverse of zero");
        return pow(a, p_ - 2);
    }
    std::uint64_t reduce(const Int& v) const
    {
        return mpz_fdiv_ui(v.get_mpz_t(), p_);
    }
    std::uint64_t reduce(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
    }

    ModPoly from_ints(const std::vector<Int>& coeffs) const
    {
        if (coeffs.size() > static_cast<std::size_t>(kCapacity))
            throw std::length_error("modp: degree exceeds capacity");
        ModPoly r;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            r.c[i] = reduce(coeffs[i]);
        r.deg = static_cast<int>(coeffs.size()) - 1;
        r.trim();
        return r;
    }

    ModPoly x() const
    {
        ModPoly r;
        r.c[1] = 1;
        r.deg = 1;
        return r;
    }

    ModPoly constant(std::uint64_t v) const
    {
        ModPoly r;
        r.c[0] = v % p_;
        r.deg = r.c[0] ? 0 : -1;
        return r;
    }

    ModPoly add(const ModPoly& a, const ModPoly& b) const
    {
        ModPoly r;
        r.deg = std::max(a.deg, b.deg);
        for (int i = 0; i <= r.deg; ++i)
            r.c[i] = add(i <= a.deg ? a.c[i] : 0, i <= b.deg ? b.c[i] : 0);
        r.trim();
        return r;
    }

    ModPoly sub(const ModPoly& a, const ModPoly& b) const
    {
        ModPoly r;
        r.deg = std::max(a.deg, b.deg);
        for (int i = 0; i <= r.deg; ++i)
            r.c[i] = sub(i <= a.deg ? a.c[i] : 0, i <= b.deg ? b.c[i] : 0);
        r.trim();
        return r;
    }

    ModPoly scale(const ModPoly& a, std::uint64_t s) const
    {
        ModPoly r = a;
        for (int i = 0; i <= r.deg; ++i)
            r.c[i] = mul(r.c[i], s);
        r.trim();
        return r;
    }

    ModPoly mul(const ModPoly& a, const ModPoly& b) const
    {
        ModPoly r;
        if (a.is_zero() || b.is_zero())
            return r;
        if (a.deg + b.deg >= kCapacity)
            throw std::length_error("modp: product exceeds capacity");
        r.deg = a.deg + b.deg;
        for (int i = 0; i <= a.deg; ++i) {
            if (!a.c[i])
                continue;
            for (int j = 0; j <= b.deg; ++j)
                r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p_;
        }
        r.trim();
        return r;
    }

    ModPoly monic(const ModPoly& a) const
    {
        if (a.is_zero())
            return a;
        return scale(a, inv(a.lead()));
    }

    /// a = q*b + r; b nonzero.
    void divrem(const ModPoly& a, const ModPoly& b, ModPoly& q, ModPoly& r) const
    {
        if (b.is_zero())
            throw std::domain_error("modp: division by zero polynomial");
        r = a;
        q = ModPoly{};
        if (a.deg < b.deg)
            return;
        const std::uint64_t li = inv(b.lead());
        q.deg = a.deg - b.deg;
        for (int i = a.deg; i >= b.deg; --i) {
            const std::uint64_t f = mul(r.c[i], li);
            q.c[i - b.deg] = f;
            if (!f)
                continue;
            for (int j = 0; j <= b.deg; ++j)
                r.c[i - b.deg + j] = sub(r.c[i - b.deg + j], mul(f, b.c[j]));
        }
        r.deg = b.deg - 1;
        r.trim();
        q.trim();
    }

    ModPoly rem(const ModPoly& a, const ModPoly& b) const
    {
        ModPoly q, r;
        divrem(a, b, q, r);
        return r;
    }

    ModPoly quo(const ModPoly& a, const ModPoly& b) const
    {
        ModPoly q, r;
        divrem(a, b, q, r);
        return q;
    }

    ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m) const { return rem(mul(a, b), m); }

    /// Monic gcd.
    ModPoly gcd(ModPoly a, ModPoly b) const
    {
        while (!b.is_zero()) {
            ModPoly r = rem(a, b);
            a = b;
            b = r;
        }
        return monic(a);
    }

    /// s*a + t*b = gcd(a, b) (monic); returns the gcd.
    ModPoly xgcd(const ModPoly& a, const ModPoly& b, ModPoly& s, ModPoly& t) const
    {
        ModPoly r0 = a, r1 = b, s0 = constant(1), s1, t0, t1 = constant(1);
        while (!r1.is_zero()) {
            ModPoly q, r;
            divrem(r0, r1, q, r);
            ModPoly s2 = sub(s0, mul(q, s1));
            ModPoly t2 = sub(t0, mul(q, t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        const std::uint64_t li = inv(r0.lead());
        s = scale(s0, li);
        t = scale(t0, li);
        return scale(r0, li);
    }

    ModPoly derivative(const ModPoly& a) const
    {
        ModPoly r;
        if (a.deg <= 0)
            return r;
        r.deg = a.deg - 1;
        for (int i = 1; i <= a.deg; ++i)
            r.c[i - 1] = mul(a.c[i], static_cast<std::uint64_t>(i) % p_);
        r.trim();
        return r;
    }

    /// b^e mod m
    ModPoly powmod(ModPoly b, std::uint64_t e, const ModPoly& m) const
    {
        ModPoly r = constant(1);
        b = rem(b, m);
        while (e) {
            if (e & 1)
                r = mulmod(r, b, m);
            e >>= 1;
            if (e)
                b = mulmod(b, b, m);
        }
        return rem(r, m);
    }

    ModPoly powmod(ModPoly b, const Int& e, const ModPoly& m) const
    {
        ModPoly r = constant(1);
        b = rem(b, m);
        const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            r = mulmod(r, r, m);
            if (mpz_tstbit(e.get_mpz_t(), i))
                r = mulmod(r, b, m);
        }
        return rem(r, m);
    }

    bool is_squarefree(const ModPoly& f) const
    {
        if (f.deg <= 0)
            return true;
        ModPoly d = derivative(f);
        if (d.is_zero())
            return false;
        return gcd(f, d).deg == 0;
    }

private:
    std::uint64_t p_;
};

/// Distinct-degree split of a monic squarefree f: pairs (product of all
/// irreducible factors of degree d, d), ascending d.
struct DegreeBlock {
    ModPoly poly;
    int degree;
};

inline std::vector<DegreeBlock> distinct_degree(const Field& F, ModPoly f)
{
    std::vector<DegreeBlock> out;
    const ModPoly x = F.x();
    ModPoly h = x;
    for (int d = 1; 2 * d <= f.deg; ++d) {
        h = F.powmod(h, F.p(), f);
        ModPoly g = F.gcd(f, F.sub(h, x));
        if (g.deg > 0) {
            out.push_back({g, d});
            f = F.quo(f, g);
            h = F.rem(h, f);
        }
    }
    if (f.deg > 0)
        out.push_back({F.monic(f), f.deg});
    return out;
}

/// Factor degrees of a monic squarefree polynomial, ascending, without
/// splitting the equal-degree blocks.
inline std::vector<int> degree_pattern(const Field& F, const ModPoly& f)
{
    std::vector<int> degs;
    for (const auto& b : distinct_degree(F, f))
        for (int k = 0; k < b.poly.deg / b.degree; ++k)
            degs.push_back(b.degree);
    return degs;
}

/// Cantor-Zassenhaus equal-degree split (p odd).
inline void equal_degree(const Field& F, const ModPoly& g, int d, std::mt19937_64& rng,
                         std::vector<ModPoly>& out)
{
    if (g.deg == d) {
        out.push_back(F.monic(g));
        return;
    }
    const Int exponent = (pow_int(Int(static_cast<unsigned long>(F.p())), static_cast<unsigned long>(d)) - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> coeff(0, F.p() - 1);
    for (;;) {
        ModPoly a;
        a.deg = g.deg - 1;
        for (int i = 0; i <= a.deg; ++i)
            a.c[i] = coeff(rng);
        a.trim();
        if (a.deg < 1)
            continue;
        ModPoly b = F.powmod(a, exponent, g);
        ModPoly h = F.gcd(g, F.sub(b, F.constant(1)));
        if (h.deg > 0 && h.deg < g.deg) {
            equal_degree(F, h, d, rng, out);
            equal_degree(F, F.quo(g, h), d, rng, out);
            return;
        }
    }
}

/// Complete factorization of a monic squarefree polynomial into monic
/// irreducibles. The RNG seed is fixed so runs are reproducible.
inline std::vector<ModPoly> factor_squarefree(const Field& F, const ModPoly& f, std::uint64_t seed = 0x5eed)
{
    std::mt19937_64 rng(seed);
    std::vector<ModPoly> out;
    for (const auto& b : distinct_degree(F, f))
        equal_degree(F, b.poly, b.degree, rng, out);
    return out;
}

inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

inline std::uint64_t next_prime(std::uint64_t n)
{
    while (!is_prime_u64(n))
        ++n;
    return n;
}

} // namespace sextic::exactmath::modp

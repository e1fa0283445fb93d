#pragma once

// Exact integers and rationals. Int and Rat are GMP values; this header adds
// the parsing, formatting and integer number theory the rest of the library
// needs (exact roots, trial-division / Pollard-rho factoring, divisors).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sextic {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v)
{
    if (v.get_den() == 1)
        return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

/// Parses an integer literal with optional sign; rejects anything else.
inline Int parse_int(std::string_view text)
{
    std::string s(text);
    auto digits = s;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+'))
        digits.erase(0, 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not an integer: '" + s + "'");
    if (s[0] == '+')
        s.erase(0, 1);
    return Int(s, 10);
}

/// Parses "p/q" or an integer literal. Decimals are rejected on purpose:
/// every value entering the library is exact.
inline Rat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return make_rat(num, den);
}

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline std::int64_t to_int64(const Int& v)
{
    if (!v.fits_slong_p())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.get_str());
    return v.get_si();
}

inline Int abs_int(const Int& v) { return abs(v); }

inline Int gcd_int(const Int& a, const Int& b)
{
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm_int(const Int& a, const Int& b)
{
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow_int(const Int& base, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e)
{
    return make_rat(pow_int(base.get_num(), e), pow_int(base.get_den(), e));
}

/// Exact k-th root of n (sign allowed for odd k), or nullopt.
inline std::optional<Int> exact_root(const Int& n, unsigned long k)
{
    if (k == 0)
        throw std::invalid_argument("exact_root: k must be positive");
    if (n < 0 && k % 2 == 0)
        return std::nullopt;
    Int r;
    if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), k) == 0)
        return std::nullopt;
    return r;
}

inline bool divides(const Int& d, const Int& n)
{
    if (d == 0)
        return n == 0;
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

namespace detail {

// Brent's variant of Pollard rho on a composite n; returns a nontrivial factor.
inline Int pollard_rho(const Int& n)
{
    if (mpz_even_p(n.get_mpz_t()))
        return Int(2);
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto step = [&](const Int& v) {
            Int t = v * v + c;
            return Int(t % n);
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = step(y);
                    q = (q * abs(Int(x - y))) % n;
                }
                g = gcd_int(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd_int(abs(Int(x - ys)), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

inline void factor_into(Int n, std::vector<Int>& primes)
{
    if (n == 1)
        return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        primes.push_back(n);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, primes);
    factor_into(Int(n / d), primes);
}

} // namespace detail

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, primes
/// ascending. Trial division to 10^5, then Pollard rho on the cofactor.
inline std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n)
{
    if (n == 0)
        throw std::invalid_argument("factor_integer: zero has no factorization");
    Int rest = abs(n);
    std::vector<Int> primes;
    for (unsigned long p = 2; p <= 100000; p += (p == 2 ? 1 : 2)) {
        if (Int(p) * p > rest)
            break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            primes.emplace_back(p);
            rest /= p;
        }
    }
    if (rest > 1) {
        if (Int(100000) * 100000 >= rest)
            primes.push_back(rest);
        else
            detail::factor_into(rest, primes);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<Int, unsigned>> out;
    for (auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1u);
    }
    return out;
}

/// All positive divisors of |n|, ascending.
inline std::vector<Int> positive_divisors(const Int& n)
{
    std::vector<Int> divs{Int(1)};
    for (auto& [p, e] : factor_integer(n)) {
        const auto count = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < count; ++i)
                divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

} // namespace sextic

#pragma once

// Test-only oracles, deliberately independent of the library code paths
// they check.

#include "sextic/exactmath/integer.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace sextic::test {

// Naive polynomial remainder mod p on plain int64 vectors (ascending).
inline std::vector<std::int64_t> rem_mod(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b,
                                         std::int64_t p)
{
    auto norm = [p](std::int64_t v) { return ((v % p) + p) % p; };
    std::int64_t inv = 1;
    for (std::int64_t t = 1; t < p; ++t)
        if (norm(b.back() * t) == 1)
            inv = t;
    for (int i = static_cast<int>(a.size()) - 1; i >= static_cast<int>(b.size()) - 1; --i) {
        const std::int64_t f = norm(a[i] * inv);
        for (std::size_t j = 0; j < b.size(); ++j)
            a[i - (b.size() - 1) + j] = norm(a[i - (b.size() - 1) + j] - f * b[j]);
    }
    a.resize(b.size() - 1);
    return a;
}

// True iff f (integer coefficients, ascending, p not dividing the leading
// coefficient) is irreducible mod p, by trying every monic divisor candidate
// of degree <= deg/2. Irreducible mod p implies irreducible over Q.
inline bool irreducible_mod_p_bruteforce(const std::vector<long>& f, std::int64_t p)
{
    const int n = static_cast<int>(f.size()) - 1;
    if (f.back() % p == 0)
        return false;
    std::vector<std::int64_t> fm(f.begin(), f.end());
    for (auto& v : fm)
        v = ((v % p) + p) % p;
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<std::int64_t> g(d + 1, 0);
        g[d] = 1;
        std::int64_t total = 1;
        for (int i = 0; i < d; ++i)
            total *= p;
        for (std::int64_t code = 0; code < total; ++code) {
            std::int64_t c = code;
            for (int i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            auto r = rem_mod(fm, g, p);
            bool zero = true;
            for (auto v : r)
                zero = zero && v == 0;
            if (zero)
                return false;
        }
    }
    return true;
}

// Random integer polynomial of the given degree, coefficients in [-50, 50],
// certified irreducible over Q by irreducibility modulo 3, 5 or 7.
inline std::vector<long> random_irreducible(int degree, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> coeff(-50, 50);
    for (;;) {
        std::vector<long> f(degree + 1);
        for (auto& c : f)
            c = coeff(rng);
        if (f.back() == 0)
            continue;
        if (degree == 1)
            return f;
        if (f[0] == 0)
            continue;
        for (std::int64_t p : {3, 5, 7})
            if (degree <= 8 || p <= 5)
                if (irreducible_mod_p_bruteforce(f, p))
                    return f;
    }
}

} // namespace sextic::test

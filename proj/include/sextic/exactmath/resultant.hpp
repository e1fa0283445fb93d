#pragma once

// Sylvester resultants, Bezout cofactors and discriminants over Q.

#include "sextic/exactmath/matrix.hpp"
#include "sextic/exactmath/poly.hpp"

#include <stdexcept>

namespace sextic::exactmath {

/// (deg p + deg q)-square Sylvester matrix. Rows 0..deg q-1 hold the shifted
/// coefficients of p, the remaining deg p rows those of q; column j is the
/// coefficient of X^(N-1-j).
inline RatMatrix sylvester_matrix(const UniPoly& p, const UniPoly& q)
{
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("sylvester_matrix: zero polynomial");
    const auto m = static_cast<std::size_t>(p.degree());
    const auto n = static_cast<std::size_t>(q.degree());
    const std::size_t size = m + n;
    RatMatrix s(size, size);
    for (std::size_t row = 0; row < n; ++row)
        for (std::size_t i = 0; i <= m; ++i)
            s.at(row, row + (m - i)) = p.coeffs()[i];
    for (std::size_t row = 0; row < m; ++row)
        for (std::size_t i = 0; i <= n; ++i)
            s.at(n + row, row + (n - i)) = q.coeffs()[i];
    return s;
}

inline Rat sylvester_resultant(const UniPoly& p, const UniPoly& q)
{
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("sylvester_resultant: zero polynomial");
    return determinant(sylvester_matrix(p, q));
}

struct BezoutCofactors {
    UniPoly u; // deg u < deg q
    UniPoly v; // deg v < deg p
    Rat resultant;
};

/// u*p + v*q = Res(p, q), from the transposed Sylvester system. This is the
/// same (u, v) that cofactor expansion of the Sylvester matrix along a
/// symbolic last column produces.
inline BezoutCofactors bezout_cofactors(const UniPoly& p, const UniPoly& q)
{
    RatMatrix s = sylvester_matrix(p, q);
    const Rat res = determinant(s);
    if (res == 0)
        throw std::domain_error("common factor - no Bezout certificate");
    const auto m = static_cast<std::size_t>(p.degree());
    const auto n = static_cast<std::size_t>(q.degree());
    const std::size_t size = m + n;
    std::vector<Rat> rhs(size);
    rhs[size - 1] = res;
    auto x = solve(s.transposed(), std::move(rhs));
    if (!x)
        throw std::logic_error("bezout_cofactors: singular system with nonzero resultant");
    // x = (u_{n-1}, ..., u_0, v_{m-1}, ..., v_0)
    std::vector<Rat> u(n), v(m);
    for (std::size_t i = 0; i < n; ++i)
        u[n - 1 - i] = (*x)[i];
    for (std::size_t i = 0; i < m; ++i)
        v[m - 1 - i] = (*x)[n + i];
    return {UniPoly(std::move(u)), UniPoly(std::move(v)), res};
}

/// (-1)^(n(n-1)/2) Res(p, p') / lc(p)
inline Rat discriminant(const UniPoly& p)
{
    const int n = p.degree();
    if (n < 1)
        throw std::invalid_argument("discriminant of a constant polynomial");
    if (n == 1)
        return 1;
    Rat r = sylvester_resultant(p, p.derivative()) / p.lead();
    return ((n * (n - 1) / 2) % 2) ? Rat(-r) : r;
}

} // namespace sextic::exactmath

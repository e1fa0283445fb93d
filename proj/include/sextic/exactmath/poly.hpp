#pragma once

#include "sextic/exactmath/integer.hpp"

#include <cctype>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sextic::exactmath {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of X^i; the highest stored coefficient is nonzero, and the zero
/// polynomial stores nothing (degree -1).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }
    UniPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }

    static UniPoly constant(const Rat& v) { return UniPoly(std::vector<Rat>{v}); }
    static UniPoly x() { return UniPoly({Rat(0), Rat(1)}); }
    /// c * X^k
    static UniPoly monomial(const Rat& c, std::size_t k)
    {
        std::vector<Rat> v(k + 1);
        v[k] = c;
        return UniPoly(std::move(v));
    }
    static UniPoly from_ints(std::initializer_list<long> coeffs)
    {
        std::vector<Rat> v;
        for (long c : coeffs)
            v.emplace_back(c);
        return UniPoly(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    const Rat& lead() const
    {
        if (c_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    UniPoly monic() const
    {
        if (is_zero())
            return *this;
        UniPoly r = *this;
        const Rat l = lead();
        for (auto& v : r.c_)
            v /= l;
        return r;
    }

    UniPoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            d[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return UniPoly(std::move(d));
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i)
            c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const Rat& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_)
            v *= s;
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator-(UniPoly a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }
    friend UniPoly operator*(UniPoly a, const Rat& s) { return a *= s; }
    friend UniPoly operator*(const Rat& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

private:
    // Rat(num, den) does not reduce, so inputs are canonicalized once here.
    void normalize()
    {
        for (auto& v : c_)
            v.canonicalize();
        trim();
    }

    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline UniPoly pow(const UniPoly& p, unsigned e)
{
    UniPoly r = UniPoly::constant(1), b = p;
    while (e) {
        if (e & 1u)
            r *= b;
        e >>= 1u;
        if (e)
            b *= b;
    }
    return r;
}

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

inline DivMod divmod(const UniPoly& a, const UniPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rat> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db)
        return {UniPoly{}, a};
    std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db + 1));
    const Rat& lb = b.lead();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i] == 0)
            continue;
        Rat f = r[i] / lb;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] -= f * b.coeffs()[j];
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

/// Horner evaluation.
inline Rat poly_eval(const UniPoly& p, const Rat& x)
{
    Rat acc = 0;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

/// Monic gcd over Q. gcd(p, 0) is p made monic; both zero is a usage error.
inline UniPoly poly_gcd(UniPoly a, UniPoly b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("poly_gcd: both arguments are zero");
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).remainder;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

/// p(q(X))
inline UniPoly compose(const UniPoly& p, const UniPoly& q)
{
    UniPoly acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * q + UniPoly::constant(*it);
    return acc;
}

/// Polynomial with integer coefficients, coeffs[i] the coefficient of X^i.
struct IntPoly {
    std::vector<Int> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    const Int& lead() const { return coeffs.back(); }
};

/// gcd of the coefficients, signed like the leading coefficient, so that
/// content(p) * primitive(p) == p and primitive(p) has positive lead.
inline Int content(const IntPoly& p)
{
    Int g = 0;
    for (const auto& c : p.coeffs)
        g = gcd_int(g, c);
    if (!p.coeffs.empty() && p.coeffs.back() < 0)
        g = -g;
    return g;
}

inline IntPoly primitive(IntPoly p)
{
    Int g = content(p);
    if (g != 0)
        for (auto& c : p.coeffs)
            c /= g;
    return p;
}

struct ClearedPoly {
    Rat scale;       // p == scale * primitive
    IntPoly primitive;
};

/// Writes a nonzero rational polynomial as a rational scale times a primitive
/// integer polynomial with positive leading coefficient.
inline ClearedPoly clear_denominators(const UniPoly& p)
{
    if (p.is_zero())
        throw std::invalid_argument("clear_denominators of the zero polynomial");
    Int den_lcm = 1;
    for (const auto& c : p.coeffs())
        den_lcm = lcm_int(den_lcm, c.get_den());
    IntPoly ip;
    ip.coeffs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        ip.coeffs.push_back(c.get_num() * (den_lcm / c.get_den()));
    Int g = content(ip);
    return {make_rat(g, den_lcm), primitive(std::move(ip))};
}

inline UniPoly to_unipoly(std::span<const Int> coeffs)
{
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (const auto& c : coeffs)
        v.emplace_back(c);
    return UniPoly(std::move(v));
}

inline UniPoly to_unipoly(const IntPoly& p) { return to_unipoly(std::span<const Int>(p.coeffs)); }

/// Canonical text form, e.g. "X^2 + 2/3*X - 2/3". Descending powers, unit
/// coefficients omitted, single spaces around binary signs.
inline std::string format_poly(const UniPoly& p, std::string_view var = "X")
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rat& c = p.coeffs()[i];
        if (c == 0)
            continue;
        Rat mag = abs(c);
        if (first) {
            if (c < 0)
                os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << to_string(mag);
            continue;
        }
        if (mag != 1)
            os << to_string(mag) << '*';
        os << var;
        if (i > 1)
            os << '^' << i;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << format_poly(p); }

namespace detail {

// expr   := term (('+'|'-') term)*
// term   := signed (('*'|'/')? signed)*      juxtaposition multiplies
// signed := '-' signed | '+' signed | power
// power  := primary ('^' integer)?
// primary:= integer | var | '(' expr ')'
class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    UniPoly parse()
    {
        UniPoly r = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                    ": " + what + " in '" + std::string(s_) + "'");
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    static bool is_var(char c) { return c == 'X' || c == 'x' || c == 'z' || c == 'Z'; }

    UniPoly expr()
    {
        UniPoly acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }
    UniPoly term()
    {
        UniPoly acc = signed_factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= signed_factor();
            } else if (c == '/') {
                ++pos_;
                UniPoly d = signed_factor();
                if (d.degree() != 0)
                    fail("division by a non-constant");
                acc *= Rat(1) / d.lead();
            } else if (c == '(' || is_var(c) || std::isdigit(static_cast<unsigned char>(c))) {
                acc *= signed_factor();
            } else {
                return acc;
            }
        }
    }
    UniPoly signed_factor()
    {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -signed_factor();
        }
        if (c == '+') {
            ++pos_;
            return signed_factor();
        }
        return power();
    }
    UniPoly power()
    {
        UniPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            auto e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 64)
                fail("exponent too large");
            return pow(base, static_cast<unsigned>(e));
        }
        return base;
    }
    UniPoly primary()
    {
        char c = peek();
        if (c == '(') {
            ++pos_;
            UniPoly r = expr();
            if (peek() != ')')
                fail("expected ')'");
            ++pos_;
            return r;
        }
        if (is_var(c)) {
            ++pos_;
            return UniPoly::x();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            return UniPoly::constant(Rat(Int(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        fail("expected a term");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace detail

/// Parses a univariate polynomial in X, e.g. "(X^2-4X-3)(X^2+3X+1/2)".
inline UniPoly parse_poly(std::string_view text) { return detail::PolyParser(text).parse(); }

} // namespace sextic::exactmath

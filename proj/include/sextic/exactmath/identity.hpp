#pragma once

// Deterministic polynomial identity testing. A polynomial of degree <= d_i
// in variable i that vanishes on a tensor grid of d_i + 1 distinct values per
// variable is the zero polynomial, so exact evaluation on such a grid decides
// lhs == rhs.

#include "sextic/exactmath/integer.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sextic::exactmath {

/// Evaluates an expression at a point; nullopt marks a point where a cleared
/// denominator vanishes (the grid is shifted past it).
using Evaluator = std::function<std::optional<Rat>(std::span<const Rat>)>;

struct IdentityCheck {
    bool holds = false;
    std::vector<Rat> witness; // first point where lhs != rhs
    Rat lhs_value, rhs_value;
    unsigned offset = 0;      // grid shift that was used
    std::size_t points = 0;   // evaluations performed

    explicit operator bool() const { return holds; }
};

/// Checks lhs == rhs as polynomials in `degree_bounds.size()` variables.
/// Variable i is sampled at {t + i*(D+1), ..., t + i*(D+1) + d_i} where D is
/// the largest bound and t the shift; the per-variable stagger keeps the grids
/// off diagonals like z == w. Shifts run over t = 0 .. 10*D.
inline IdentityCheck identity_check_grid(const Evaluator& lhs, const Evaluator& rhs,
                                         std::span<const unsigned> degree_bounds)
{
    const std::size_t nvars = degree_bounds.size();
    const unsigned dmax = nvars ? *std::max_element(degree_bounds.begin(), degree_bounds.end()) : 0;
    const unsigned max_shift = 10 * std::max(dmax, 1u);
    std::size_t evaluations = 0;

    for (unsigned shift = 0; shift <= max_shift; ++shift) {
        std::vector<unsigned> idx(nvars, 0);
        std::vector<Rat> point(nvars);
        bool valid = true;
        for (;;) {
            for (std::size_t i = 0; i < nvars; ++i)
                point[i] = Rat(static_cast<long>(shift + i * (dmax + 1) + idx[i]));
            auto l = lhs(point);
            auto r = rhs(point);
            ++evaluations;
            if (!l || !r) {
                valid = false;
                break;
            }
            if (*l != *r) {
                IdentityCheck res;
                res.holds = false;
                res.witness = point;
                res.lhs_value = *l;
                res.rhs_value = *r;
                res.offset = shift;
                res.points = evaluations;
                return res;
            }
            std::size_t v = 0;
            while (v < nvars && ++idx[v] > degree_bounds[v]) {
                idx[v] = 0;
                ++v;
            }
            if (v == nvars)
                break;
        }
        if (valid) {
            IdentityCheck res;
            res.holds = true;
            res.offset = shift;
            res.points = evaluations;
            return res;
        }
    }
    throw std::runtime_error("identity_check_grid: no valid evaluation grid within the shift limit");
}

inline IdentityCheck identity_check_grid(const Evaluator& lhs, const Evaluator& rhs,
                                         std::initializer_list<unsigned> degree_bounds)
{
    std::vector<unsigned> b(degree_bounds);
    return identity_check_grid(lhs, rhs, std::span<const unsigned>(b));
}

inline std::string format_point(std::span<const Rat> point, std::span<const std::string> names = {})
{
    std::string s = "(";
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (i)
            s += ", ";
        if (i < names.size())
            s += names[i] + "=";
        s += to_string(point[i]);
    }
    return s + ")";
}

} // namespace sextic::exactmath

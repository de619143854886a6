#pragma once

#include <optional>
#include <vector>

#include "gfkit/mpoly.hpp"
#include "gfkit/rat.hpp"
#include "gfkit/ratfun.hpp"

namespace gfkit {

// A conjectured closed form fitted to initial series coefficients. Every
// supplied coefficient participates: the linear solve uses the minimum
// window ("used") and the remainder must confirm the candidate
// ("validated", always >= 3).
struct GuessResult {
    enum class Kind { rational, algebraic };
    Kind kind;
    RatFun fun;      // kind == rational
    MPoly equation;  // kind == algebraic: P(t, a) with t^i a^j support
    int used = 0;
    int validated = 0;
};

// Smallest-degree rational function num/den with deg num <= max_num_deg and
// deg den <= max_den_deg whose expansion reproduces all of coeffs; nullopt
// when none exists. Needs len(coeffs) >= max_num_deg + max_den_deg + 4 so
// at least 3 coefficients lie beyond the largest window.
std::optional<GuessResult> guess_rational(const std::vector<Rat>& coeffs,
                                          int max_num_deg, int max_den_deg);

// Primitive integer bivariate polynomial P of bidegree <= (d, e), sign
// normalized, with P(t, A(t)) = 0 for the series A given by coeffs; nullopt
// when no such P exists. Needs len(coeffs) >= (d+1)(e+1) + 2.
std::optional<GuessResult> guess_algebraic(const std::vector<Rat>& coeffs,
                                           int d, int e);

}  // namespace gfkit

#pragma once

#include "gfkit/tseries.hpp"
#include "gfkit/upoly.hpp"

namespace gfkit {

// Rational function num/den in t (coefficients may involve other variables).
// When both parts have rational coefficients the representation is canonical:
// gcd removed, den scaled to a primitive integer polynomial whose lowest
// nonzero coefficient is positive.
struct RatFun {
    UPolyT num, den;

    RatFun() : den(UPolyT::constant(Rat(1))) {}
    RatFun(UPolyT n, UPolyT d);

    bool equals(const RatFun& o) const; // cross multiplication, exact
    bool is_polynomial() const;         // den divides num exactly
    std::string str() const;
};

RatFun ratfun_parse(const std::string& num_expr, const std::string& den_expr);

// Power-series expansion to order n via the denominator recurrence.
// Requires den(t=0) to be a nonzero rational.
TSeries ratfun_expand(const RatFun& f, int n);

// Rational function of t and one extra Laurent variable; num and den are
// polynomials in t whose coefficients may carry positive and negative powers
// of the second variable. Used by the slice and diagonal extractors.
struct BiRatFun {
    MPoly num, den;
    int svar; // id of the Laurent variable

    BiRatFun(MPoly n, MPoly d, int laurent_var);
    std::string str() const;
};

} // namespace gfkit

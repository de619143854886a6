#pragma once

#include "gfkit/mpoly.hpp"

#include <vector>

namespace gfkit {

// Dense polynomial in t whose coefficients are polynomials in the remaining
// variables (each coefficient is free of t). Index = power of t.
class UPolyT {
public:
    UPolyT() = default;
    explicit UPolyT(std::vector<MPoly> coeffs);
    static UPolyT from_mpoly(const MPoly& p); // requires min_exponent(t) >= 0
    static UPolyT constant(const Rat& c);

    MPoly to_mpoly() const;
    int degree() const { return (int)c_.size() - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const MPoly& coeff(int i) const;
    const std::vector<MPoly>& coeffs() const { return c_; }

    UPolyT operator+(const UPolyT& o) const;
    UPolyT operator-(const UPolyT& o) const;
    UPolyT operator*(const UPolyT& o) const;
    UPolyT operator*(const Rat& k) const;
    bool operator==(const UPolyT& o) const { return c_ == o.c_; }

    UPolyT derivative() const;
    MPoly eval(const Rat& t0) const;

    // true when every coefficient is a rational constant
    bool rational_coeffs() const;
    std::vector<Rat> to_rational() const;

    std::string str() const { return to_mpoly().str(); }

private:
    void trim();
    std::vector<MPoly> c_;
};

// Dense univariate polynomial over Q, index = power. Utility layer for gcd,
// squarefree decomposition and real-root work; zero = empty vector.
using UPolyQ = std::vector<Rat>;

UPolyQ upq_trim(UPolyQ p);
int upq_degree(const UPolyQ& p); // -1 for zero
Rat upq_eval(const UPolyQ& p, const Rat& x);
UPolyQ upq_derivative(const UPolyQ& p);
UPolyQ upq_add(const UPolyQ& a, const UPolyQ& b);
UPolyQ upq_sub(const UPolyQ& a, const UPolyQ& b);
UPolyQ upq_mul(const UPolyQ& a, const UPolyQ& b);
UPolyQ upq_scale(const UPolyQ& a, const Rat& k);
// remainder of a by b (b nonzero)
UPolyQ upq_rem(const UPolyQ& a, const UPolyQ& b);
// exact quotient, throws domain_error when division is inexact
UPolyQ upq_div_exact(const UPolyQ& a, const UPolyQ& b);
// monic gcd (1 for coprime, 0 only when both inputs are 0)
UPolyQ upq_gcd(UPolyQ a, UPolyQ b);
UPolyQ upq_monic(UPolyQ p);

// Yun squarefree decomposition: p = lc * prod out[i]^(i+1) with the out[i]
// monic, squarefree and pairwise coprime (out[i] = 1 entries included).
std::vector<UPolyQ> upq_squarefree(const UPolyQ& p);

UPolyT upolyt_from_rational(const UPolyQ& p);

} // namespace gfkit

#pragma once

#include "gfkit/mpoly.hpp"

#include <vector>

namespace gfkit {

// Power series in t truncated at a fixed order (coefficients 0..order are
// known, order inclusive). Coefficients are polynomials in the non-t
// variables. Binary operations truncate to the smaller reliable order: for
// products and compositions the known valuation of one factor extends what
// the other contributes, matching how far the exact result is determined.
class TSeries {
public:
    TSeries() : order_(-1) {}
    explicit TSeries(int order) : c_(order + 1), order_(order) {}

    static TSeries zero(int order) { return TSeries(order); }
    static TSeries one(int order);
    static TSeries t(int order);
    static TSeries constant(const Rat& c, int order);
    // splits a polynomial by powers of t, dropping terms beyond order
    static TSeries from_mpoly(const MPoly& p, int order);
    static TSeries from_rational(const std::vector<Rat>& coeffs); // order = size-1

    int order() const { return order_; }
    const MPoly& coeff(int i) const;
    Rat coeff_rat(int i) const { return coeff(i).as_constant(); }
    void set_coeff(int i, MPoly c);
    const std::vector<MPoly>& coeffs() const { return c_; }
    std::vector<Rat> rational_coeffs() const;

    // index of the first nonzero known coefficient; order+1 when all known
    // coefficients vanish
    int valuation() const;
    bool is_zero() const { return valuation() > order_; }
    bool all_rational() const;

    TSeries truncate(int order) const; // order <= this->order
    TSeries operator+(const TSeries& o) const;
    TSeries operator-(const TSeries& o) const;
    TSeries operator-() const;
    TSeries operator*(const TSeries& o) const;
    TSeries operator*(const Rat& k) const;
    TSeries operator*(const MPoly& k) const; // k free of t

    // multiplicative inverse; requires coeff(0) a nonzero rational
    TSeries invert() const;
    // square root with sqrt(coeff 0) rational; requires coeff(0) = c^2
    TSeries sqrt() const;
    // d/dt, order drops by one
    TSeries derive() const;
    // this(o(t)); requires o(0) = 0
    TSeries compose(const TSeries& o) const;
    TSeries pow(int n) const; // n >= 0

    // multiply by t^k (k >= 0): coefficients shift up, order grows by k
    TSeries shift_up(int k) const;
    // divide by t^k; requires valuation >= k, order drops by k
    TSeries shift_down(int k) const;

    bool matches(const TSeries& o, int upto) const;
    bool operator==(const TSeries& o) const;
    bool operator!=(const TSeries& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::vector<MPoly> c_;
    int order_;
};

} // namespace gfkit

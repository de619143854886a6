#pragma once

#include <complex>
#include <vector>

#include "gfkit/rat.hpp"
#include "gfkit/upoly.hpp"

namespace gfkit {

// Exact-sign real root isolation over Q.
//
// An enclosure [lo, hi] certifies exactly one real root of the polynomial in
// that interval (lo == hi means the root is the rational point itself).
struct RootEnclosure {
    Rat lo, hi;
    int multiplicity = 1;

    Rat mid() const { return (lo + hi) / 2; }
    Rat width() const { return hi - lo; }
    double approx() const { return rat_to_double(mid()); }
};

// Sturm chain of p (p, p', then negated remainders until zero).
std::vector<UPolyQ> sturm_chain(const UPolyQ& p);

// Number of distinct real roots of the chain's polynomial in (a, b].
int sturm_count(const std::vector<UPolyQ>& chain, const Rat& a, const Rat& b);

// All real roots of p with multiplicities, sorted ascending, each enclosure
// refined by exact-sign bisection to width <= max_width.
std::vector<RootEnclosure> isolate_real_roots(const UPolyQ& p,
                                              const Rat& max_width);

// The subset of isolate_real_roots with lo > 0.
std::vector<RootEnclosure> positive_real_roots(const UPolyQ& p,
                                               const Rat& max_width);

// Floating-point root finding (Aberth-Ehrlich on each squarefree factor,
// Newton-polished in long double).
struct ComplexRoot {
    std::complex<double> z;
    int multiplicity = 1;
};

std::vector<ComplexRoot> complex_roots(const UPolyQ& p);

// Number of roots whose modulus is within rel_sep (relatively) of the
// smallest modulus in the list, counted with multiplicity.
int dominant_count(const std::vector<ComplexRoot>& roots, double rel_sep);

// Largest |p(z)| residual over the given roots, for sanity checks.
double max_residual(const UPolyQ& p, const std::vector<ComplexRoot>& roots);

}  // namespace gfkit

#pragma once

#include <complex>
#include <vector>

#include "gfkit/numeric.hpp"
#include "gfkit/ratfun.hpp"

namespace gfkit {

// Rational function of the arithmetic-progression subsequence a_{np+r},
// reconstructed by exact Pade fitting from expanded coefficients and
// validated against further ones.
RatFun section(const RatFun& f, int r, int p);

// Poles of one section of a series, found numerically.
struct SectionPoles {
    int p = 1;
    int r = 0;
    bool polynomial = false;  // section has no singularity at all
    int dominant = 0;         // poles of minimal modulus, with multiplicity
    std::vector<std::complex<double>> poles;
};

// Per-section dominant-singularity counts for every p <= p_max, r < p.
// Advisory evidence in the spirit of the positive-coefficient pole
// criteria: a count > 1 anywhere is a red flag, not a proof.
struct SoittolaReport {
    int p_max = 1;
    double precision = 1e-6;
    std::vector<SectionPoles> sections;
};

SoittolaReport soittola_check(const RatFun& f, int p_max,
                              double precision = 1e-6);

// Growth data of [t^n] f for a series with a unique dominant pole:
// a_n ~ kappa * rho^{-n} * n^d.
struct AsymptoticEstimate {
    RootEnclosure rho;    // certified enclosure of the dominant root of den
    UPolyQ factor;        // squarefree factor of den vanishing at rho
    int multiplicity = 1; // order of the pole
    int d = 0;            // multiplicity - 1
    double kappa_lo = 0, kappa_hi = 0;

    double kappa() const { return (kappa_lo + kappa_hi) / 2; }
    double rho_approx() const { return rho.approx(); }
};

AsymptoticEstimate rational_asymptotics(const RatFun& f);

}  // namespace gfkit

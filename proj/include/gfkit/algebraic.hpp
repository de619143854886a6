#pragma once

#include <vector>

#include "gfkit/mpoly.hpp"
#include "gfkit/numeric.hpp"
#include "gfkit/ratfun.hpp"
#include "gfkit/tseries.hpp"
#include "gfkit/upoly.hpp"

namespace gfkit {

// Power-series solution of P(t, a(t)) = 0 grown from a simple rational root
// of P(0, a) by Newton iteration.
struct BranchSolution {
    Rat constant_term;
    TSeries series;
    int residual_order;  // largest m with P(t, series) = O(t^(m+1))
};

struct SeriesRootReport {
    std::vector<BranchSolution> branches;  // sorted by constant term
    std::vector<Rat> ramified;       // rational roots of P(0,.) of multiplicity > 1
    std::vector<int> unlifted_degrees;  // squarefree-factor degrees of the
                                        // rational-root-free part of P(0,.)
    int infinite_branches;           // deg_a P - deg P(0,.)
};

// The variable of p other than t; throws unless there is exactly one and all
// exponents are non-negative.
int branch_variable(const MPoly& p);

// All power-series branches of P(t,a) = 0 with rational constant term,
// lifted to order n. P must be squarefree in its branch variable.
SeriesRootReport series_roots(const MPoly& p, int n);

// Largest m <= order(a) with P(t, a(t)) = 0 mod t^(m+1); -1 when already the
// constant term of the residual is nonzero.
int verify_algebraic(const TSeries& a, const MPoly& p);

// [t^n] Psi(U) for the unique power series U with U = t*Phi(U); phi and psi
// are the Taylor expansions of Phi and Psi around 0.
Rat lagrange_coeff(const TSeries& phi, const TSeries& psi, int n);

// Singularity data fitted from exact coefficients: radius rho certified as a
// root enclosure, subexponential exponent d estimated by least squares with
// an interval, and the fitted constant of a_n ~ kappa_tilde * rho^-n * n^d.
struct GrowthEstimate {
    RootEnclosure rho;
    double d = 0.0;
    double d_lo = 0.0, d_hi = 0.0;
    double kappa_tilde = 0.0;
    int points = 0;  // coefficients used in the fit
};

// Fits the branch of p starting at branch.constant_term, recomputed to
// n_fit coefficients. Candidates for rho are the positive real roots of the
// discriminant of p and of its leading coefficient; the candidate matching
// the observed growth is chosen. Requires non-negative coefficients.
GrowthEstimate algebraic_asymptotics(const MPoly& p, const BranchSolution& branch,
                                     int n_fit);

enum class SliceMode { slice, diagonal };

// slice: coefficient of s^k in the t-expansion of f, to order n, where s is
// f.svar. diagonal: f is a rational function of two variables x(t*s), y(t/s);
// the substitution is applied, the s^0 slice taken to order 2n, odd orders
// checked to vanish, and t^2 mapped to t (k is ignored).
TSeries laurent_slice(const BiRatFun& f, int k, int n, SliceMode mode);

}  // namespace gfkit

#pragma once

#include "gfkit/mpoly.hpp"
#include "gfkit/tseries.hpp"

namespace gfkit {

// Fixed-point equation G(u) = R(t, u, G(u), G(1), DD) where DD stands for
// the divided difference (u*G(u) - G(1))/(u - 1). The right side is a
// polynomial whose placeholders are the interned variables "G(u)", "G1" and
// "DD". Every monomial containing a placeholder must carry a factor t, so
// the iteration determines one further t-coefficient per pass and the
// constant term is forced by the equation itself.
struct CatalyticEquation {
    MPoly rhs;
    int uvar, gvar, g1var, ddvar;

    explicit CatalyticEquation(MPoly r);
    void validate() const;
};

struct CatalyticSolution {
    TSeries g;       // coefficients are polynomials in u
    TSeries g_at_1;  // specialization u = 1
};

CatalyticSolution solve_catalytic(const CatalyticEquation& eq, int n);

}  // namespace gfkit

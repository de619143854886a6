#pragma once

#include <string>
#include <vector>

#include "gfkit/automaton.hpp"
#include "gfkit/digraph.hpp"
#include "gfkit/mpoly.hpp"
#include "gfkit/polysys.hpp"

namespace gfkit {

// Five-vertex walk digraph with loop weights marking two distinguished
// vertices by x and y; start vertex 1, targets {2, 3}.
WeightedDigraph loop_walk_digraph();

// Deterministic automaton whose words of length n encode column-convex
// polyominoes of perimeter-ish size n (length GF t(1-t)^3 / (1-5t+7t^2-4t^3)).
Nfa ccpoly_automaton();

// Names of the polynomial-system / equation fixtures available by name
// through fixture_equation().
std::vector<std::string> equation_fixture_names();

// A named algebraic equation P(t, a) = 0 as a polynomial in t and the
// variable "a" (used by roots/verify/asymptotics commands and tests).
MPoly fixture_equation(const std::string& name);

// Right side of the planar-map catalytic equation
// G(u) = 1 + t u^2 G(u)^2 + t u (u G(u) - G(1)) / (u - 1),
// whose u = 1 specialization is the planar_maps branch.
MPoly planar_map_catalytic();

// Names of the grammar fixtures available through fixture_grammar().
std::vector<std::string> grammar_fixture_names();

// dyck: non-empty balanced words, S -> ab | abS | aSb | aSbS.
// meander: non-empty {a,b}-walks (a = +1, b = -1) that never go below 0,
// split by the last visit to height 0, with the excursion symbol's
// alternatives inlined so no unit rule remains.
Cfg fixture_grammar(const std::string& name);

}  // namespace gfkit

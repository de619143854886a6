#pragma once

#include <string>
#include <vector>

#include "gfkit/automaton.hpp"
#include "gfkit/digraph.hpp"
#include "gfkit/mpoly.hpp"
#include "gfkit/polysys.hpp"
#include "gfkit/posets.hpp"
#include "gfkit/rat.hpp"

namespace gfkit {

// File readers for the text formats of the command-line tool. Every reader
// throws parse_error with a "path:line:column" (or at least "path:line")
// prefix when the input is malformed.

// Header line "order N", then exactly N+1 lines each holding one
// coefficient, written as an integer or "p/q".
std::vector<Rat> read_series_file(const std::string& path);

// The same format as text, for writing series out.
std::string format_series(const std::vector<Rat>& coeffs);

// Whole file is a single polynomial expression (used for equations and for
// catalytic specifications with the G(u) / G1 / DD placeholders).
MPoly read_poly_file(const std::string& path);

// JSON object {"vertices": p, "edges": [{"from", "to", "weight"}]}
// where weight is an expression string or a plain integer.
WeightedDigraph read_digraph_file(const std::string& path);

// JSON object {"vertices": n, "alphabet": [...], "transitions":
// [{"from", "letter", "to"}], "initial": i, "finals": [...]}.
Nfa read_automaton_file(const std::string& path);

// First line: element count k. Then one covering pair "i j" per line.
NaturalPoset read_poset_file(const std::string& path);

// First line: dimension m. Then one inequality per line as m integers.
HalfspaceSystem read_halfspace_file(const std::string& path);

// One fixed-point equation per line, "A = t + t*A*B".
PolySystem read_system_file(const std::string& path);

// Directive lines "start S" and "letters a b ...", plus productions
// "S -> a S b | a b" whose |-separated alternatives are token words.
Cfg read_grammar_file(const std::string& path);

}  // namespace gfkit

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gfkit/mpoly.hpp"
#include "gfkit/tseries.hpp"

namespace gfkit {

// System of fixed-point equations A_i = P_i(t, A_1..A_k) over named unknowns.
// Proper means: every P_i has zero constant term and no bare linear monomial
// x_j (a lone unknown with no t factor). Systems whose bare-linear
// dependencies form an acyclic graph are accepted by the solver as
// well-founded even though they are not strictly proper.
struct PolySystem {
    std::vector<int> unknowns;  // variable ids of A_1..A_k
    std::vector<MPoly> rhs;

    int size() const { return (int)unknowns.size(); }
    bool is_positive() const;       // all coefficients >= 0
    bool is_proper() const;         // strict: no bare linear monomials
    bool is_well_founded() const;   // bare-linear dependency graph acyclic
    bool is_quadratic() const;      // monomial support within {t, x_l*x_m}
    bool is_leading_t() const;      // every monomial carries a factor t
    void validate() const;          // structural checks (variables, constants)
    std::string str() const;
};

// Unique tuple of constant-term-zero series solving the system mod t^{n+1},
// by fixed-point iteration from zero with a residual check.
std::vector<TSeries> canonical_solution(const PolySystem& s, int n);

enum class NormalizeMode { quadratic, leading_t };

// Equivalent proper system in more unknowns; the first component of the
// canonical solution is preserved. quadratic: monomial support {t, x_l*x_m};
// leading_t: every right-hand side is t times a polynomial (quadratizes
// first when needed).
PolySystem normalize_system(const PolySystem& s, NormalizeMode mode);

// Context-free grammar with nonempty rule words; proper means no unit rule
// S_i -> S_j. The first listed symbol is the axiom.
struct Cfg {
    std::vector<std::string> symbols;
    std::vector<std::string> alphabet;
    // rule: symbol index, word of tokens (each a symbol or a letter)
    std::vector<std::pair<int, std::vector<std::string>>> rules;

    void validate() const;
    bool is_proper() const;
    int symbol_index(const std::string& name) const;  // -1 when absent
    int letter_index(const std::string& name) const;
};

// One equation per symbol: each rule word becomes the monomial
// t^{#letters} * prod A_j^{#occurrences of S_j}.
PolySystem grammar_to_system(const Cfg& g);

// Number of distinct words of each length 0..n_max generated from the axiom
// (set-based fixpoint; guard n_max <= 14).
TSeries brute_language_count(const Cfg& g, int n_max);

}  // namespace gfkit

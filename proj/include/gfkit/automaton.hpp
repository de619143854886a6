#pragma once

#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gfkit/digraph.hpp"
#include "gfkit/ratfun.hpp"

namespace gfkit {

// Finite automaton over a named alphabet, states 1..num_states. Transitions
// may repeat (multiplicity) and several targets per (state, letter) make the
// machine nondeterministic; determinism is computed, never assumed.
struct Nfa {
    int num_states = 0;
    std::vector<std::string> alphabet;
    std::vector<std::tuple<int, std::string, int>> transitions;
    int initial = 1;
    std::set<int> finals;

    bool is_deterministic() const;
    void validate() const;
};

// Subset construction restricted to reachable subsets. States of the result
// are numbered in discovery order from the initial subset.
Nfa determinize(const Nfa& a);

// Length generating function of the accepted language: walks on the digraph
// whose edge weights count letters, from the initial state to the finals.
// Determinizes first when needed so each word is counted once.
RatFun automaton_gf(const Nfa& a);

// The letter-counting digraph of a (taken as-is, no determinization).
WeightedDigraph automaton_digraph(const Nfa& a);

// Number of distinct accepted words of each length 0..upto, by subset DP.
std::vector<Int> brute_word_counts(const Nfa& a, int upto);

}  // namespace gfkit

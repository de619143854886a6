#include "gfkit/automaton.hpp"

#include <algorithm>
#include <map>

namespace gfkit {

void Nfa::validate() const {
    if (num_states < 1) throw domain_error("automaton needs at least one state");
    auto ok = [&](int s) { return s >= 1 && s <= num_states; };
    if (!ok(initial)) throw domain_error("initial state out of range");
    for (int f : finals)
        if (!ok(f)) throw domain_error("final state out of range");
    std::set<std::string> letters(alphabet.begin(), alphabet.end());
    if (letters.size() != alphabet.size())
        throw domain_error("duplicate letter in alphabet");
    for (auto& [from, letter, to] : transitions) {
        if (!ok(from) || !ok(to))
            throw domain_error("transition endpoint out of range");
        if (!letters.count(letter))
            throw domain_error("transition letter '" + letter +
                               "' not in alphabet");
    }
}

bool Nfa::is_deterministic() const {
    std::set<std::pair<int, std::string>> seen;
    for (auto& [from, letter, to] : transitions)
        if (!seen.emplace(from, letter).second) return false;
    return true;
}

namespace {

using SubsetMap = std::map<std::pair<int, std::string>, std::set<int>>;

SubsetMap transition_map(const Nfa& a) {
    SubsetMap m;
    for (auto& [from, letter, to] : a.transitions)
        m[{from, letter}].insert(to);
    return m;
}

}  // namespace

Nfa determinize(const Nfa& a) {
    a.validate();
    SubsetMap delta = transition_map(a);

    std::map<std::set<int>, int> id;
    std::vector<std::set<int>> order;
    auto intern = [&](const std::set<int>& s) {
        auto [it, inserted] = id.emplace(s, (int)id.size() + 1);
        if (inserted) order.push_back(s);
        return it->second;
    };

    Nfa out;
    out.alphabet = a.alphabet;
    out.initial = intern({a.initial});
    for (size_t k = 0; k < order.size(); ++k) {
        std::set<int> cur = order[k];
        for (const auto& letter : a.alphabet) {
            std::set<int> next;
            for (int s : cur) {
                auto it = delta.find({s, letter});
                if (it != delta.end())
                    next.insert(it->second.begin(), it->second.end());
            }
            if (next.empty()) continue;
            int to = intern(next);
            out.transitions.emplace_back((int)k + 1, letter, to);
        }
    }
    out.num_states = (int)order.size();
    for (size_t k = 0; k < order.size(); ++k)
        for (int f : a.finals)
            if (order[k].count(f)) {
                out.finals.insert((int)k + 1);
                break;
            }
    return out;
}

WeightedDigraph automaton_digraph(const Nfa& a) {
    a.validate();
    WeightedDigraph g(a.num_states);
    for (auto& [from, letter, to] : a.transitions)
        g.add_edge(from, to, MPoly(1));
    return g;
}

RatFun automaton_gf(const Nfa& a) {
    a.validate();
    Nfa d = a.is_deterministic() ? a : determinize(a);
    if (d.finals.empty())
        return RatFun(UPolyT::constant(Rat(0)), UPolyT::constant(Rat(1)));
    return transfer_gf(automaton_digraph(d), d.initial, d.finals);
}

std::vector<Int> brute_word_counts(const Nfa& a, int upto) {
    a.validate();
    if (a.num_states > 60)
        throw domain_error("subset DP limited to 60 states");
    SubsetMap delta = transition_map(a);

    auto accepts = [&](unsigned long long mask) {
        for (int f : a.finals)
            if (mask & (1ull << (f - 1))) return true;
        return false;
    };

    std::map<unsigned long long, Int> cur;
    cur[1ull << (a.initial - 1)] = 1;
    std::vector<Int> out;
    for (int n = 0; n <= upto; ++n) {
        Int total(0);
        for (auto& [mask, count] : cur)
            if (accepts(mask)) total += count;
        out.push_back(total);
        std::map<unsigned long long, Int> next;
        for (auto& [mask, count] : cur) {
            for (const auto& letter : a.alphabet) {
                unsigned long long to = 0;
                for (int s = 1; s <= a.num_states; ++s) {
                    if (!(mask & (1ull << (s - 1)))) continue;
                    auto it = delta.find({s, letter});
                    if (it == delta.end()) continue;
                    for (int q : it->second) to |= 1ull << (q - 1);
                }
                if (to) next[to] += count;
            }
        }
        cur = std::move(next);
    }
    return out;
}

}  // namespace gfkit

#include "gfkit/fixtures.hpp"

#include "gfkit/parse.hpp"

namespace gfkit {

WeightedDigraph loop_walk_digraph() {
    WeightedDigraph g(5);
    MPoly one(1);
    MPoly x = MPoly::variable(var_id("x"));
    MPoly y = MPoly::variable(var_id("y"));
    g.add_edge(1, 2, one);
    g.add_edge(2, 2, one);
    g.add_edge(4, 4, one);
    g.add_edge(5, 5, one);
    g.add_edge(3, 3, x);
    g.add_edge(3, 2, one);
    g.add_edge(4, 2, one);
    g.add_edge(2, 3, one);
    g.add_edge(2, 4, one);
    g.add_edge(3, 4, one);
    g.add_edge(5, 4, one);
    g.add_edge(2, 5, one);
    g.add_edge(3, 5, y);
    return g;
}

Nfa ccpoly_automaton() {
    Nfa a;
    a.num_states = 5;
    a.alphabet = {"a", "b", "c", "abar", "bbar", "cbar"};
    a.initial = 1;
    a.finals = {2, 3};
    a.transitions = {
        {1, "c", 2},
        {2, "a", 2},    {3, "a", 2},    {4, "c", 2},
        {2, "c", 3},    {3, "b", 3},    {3, "c", 3},
        {2, "abar", 4}, {3, "abar", 4}, {4, "a", 4},   {5, "b", 4},
        {2, "cbar", 5}, {3, "bbar", 5}, {3, "cbar", 5}, {5, "bbar", 5},
    };
    return a;
}

std::vector<std::string> equation_fixture_names() {
    return {"hard_quartic", "vtree", "planar_maps", "triangulations",
            "two_stack_quartic"};
}

MPoly fixture_equation(const std::string& name) {
    if (name == "hard_quartic")
        return parse_poly(
            "23328*t^6*a^4"
            " + 27*t^4*(91 - 2088*t)*a^3"
            " + t^2*(86 - 3951*t + 46710*t^2 + 3456*t^3)*a^2"
            " + (1 - 69*t + 1598*t^2 - 11743*t^3 - 14544*t^4)*a"
            " - 1 + 66*t - 1495*t^2 + 11485*t^3 + 128*t^4");
    if (name == "vtree")
        return parse_poly("a - 5*a^2 + 9*a^3 - 6*a^4 - t");
    if (name == "planar_maps")
        return parse_poly("-1 + 16*t + (1 - 18*t)*a + 27*t^2*a^2");
    if (name == "triangulations")
        return parse_poly(
            "1 - 27*t + (-1 + 36*t)*a - 8*t*a^2 - 16*t^2*a^3");
    if (name == "two_stack_quartic")
        return parse_poly(
            "-1 + 16*t + (1 - 20*t)*a + (3*t + 8*t^2)*a^2 + 3*t^2*a^3"
            " + t^3*a^4");
    throw domain_error("unknown equation fixture: " + name);
}

MPoly planar_map_catalytic() {
    return parse_poly("1 + t*u^2*G(u)^2 + t*u*DD");
}

std::vector<std::string> grammar_fixture_names() { return {"dyck", "meander"}; }

Cfg fixture_grammar(const std::string& name) {
    if (name == "dyck") {
        Cfg g;
        g.symbols = {"S"};
        g.alphabet = {"a", "b"};
        g.rules = {{0, {"a", "b"}},
                   {0, {"a", "b", "S"}},
                   {0, {"a", "S", "b"}},
                   {0, {"a", "S", "b", "S"}}};
        return g;
    }
    if (name == "meander") {
        Cfg g;
        g.symbols = {"M", "M0"};
        g.alphabet = {"a", "b"};
        g.rules = {{0, {"a"}},
                   {0, {"a", "M"}},
                   {0, {"M0", "a"}},
                   {0, {"M0", "a", "M"}},
                   {0, {"a", "b"}},
                   {0, {"a", "b", "M0"}},
                   {0, {"a", "M0", "b"}},
                   {0, {"a", "M0", "b", "M0"}},
                   {1, {"a", "b"}},
                   {1, {"a", "b", "M0"}},
                   {1, {"a", "M0", "b"}},
                   {1, {"a", "M0", "b", "M0"}}};
        return g;
    }
    throw domain_error("unknown grammar fixture: " + name);
}

}  // namespace gfkit

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "gfkit/automaton.hpp"
#include "gfkit/io.hpp"
#include "gfkit/polysys.hpp"
#include "gfkit/posets.hpp"

using namespace gfkit;

namespace {

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content) : path(name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

bool mentions(const std::exception& e, const std::string& needle) {
    return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("series files round-trip and reject malformed input") {
    std::vector<Rat> coeffs{Rat(1), Rat(-2), Rat(1, 3), Rat(0)};
    TempFile f("io_series_ok.txt", format_series(coeffs));
    CHECK(read_series_file(f.path) == coeffs);

    TempFile bad_header("io_series_h.txt", "degree 2\n1\n2\n3\n");
    CHECK_THROWS_WITH_AS(read_series_file(bad_header.path),
                         doctest::Contains("io_series_h.txt:1:1"), parse_error);

    TempFile short_body("io_series_s.txt", "order 3\n1\n2\n");
    CHECK_THROWS_AS(read_series_file(short_body.path), parse_error);

    TempFile bad_coeff("io_series_c.txt", "order 1\n1\ntwo\n");
    try {
        read_series_file(bad_coeff.path);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(mentions(e, "io_series_c.txt:3:1"));
    }

    CHECK_THROWS_AS(read_series_file("io_series_missing.txt"), parse_error);
}

TEST_CASE("polynomial files parse whole expressions with positions") {
    TempFile f("io_poly_ok.txt", "1 - (3+x)*t + (1+3*x)*t^2\n");
    MPoly p = read_poly_file(f.path);
    CHECK(p.coeff_of(VAR_T, 2) ==
          MPoly(Rat(1)) + MPoly::variable(var_id("x")) * Rat(3));

    TempFile bad("io_poly_bad.txt", "1 +\n* t\n");
    try {
        read_poly_file(bad.path);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(mentions(e, "io_poly_bad.txt"));
        CHECK(mentions(e, "2:1"));
    }
}

TEST_CASE("digraph and automaton files load into the walk engines") {
    TempFile g("io_digraph.json", R"({
        "vertices": 2,
        "edges": [
            {"from": 1, "to": 1, "weight": "t"},
            {"from": 1, "to": 2, "weight": 1},
            {"from": 2, "to": 2, "weight": "t^2"}
        ]
    })");
    WeightedDigraph d = read_digraph_file(g.path);
    CHECK(d.num_vertices() == 2);
    CHECK(d.edges().size() == 3);
    CHECK(*d.edge(1, 1) == MPoly::variable(VAR_T));

    TempFile a("io_automaton.json", R"({
        "vertices": 2,
        "alphabet": ["a"],
        "transitions": [
            {"from": 1, "letter": "a", "to": 2},
            {"from": 2, "letter": "a", "to": 2}
        ],
        "initial": 1,
        "finals": [2]
    })");
    Nfa nfa = read_automaton_file(a.path);
    CHECK(nfa.is_deterministic());
    CHECK(automaton_gf(nfa).equals(ratfun_parse("t", "1 - t")));

    TempFile broken("io_digraph_bad.json", "{\n  \"vertices\": 2,\n  }\n");
    try {
        read_digraph_file(broken.path);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(mentions(e, "io_digraph_bad.json:3"));
    }

    TempFile missing("io_digraph_m.json", R"({"vertices": 2})");
    CHECK_THROWS_WITH_AS(read_digraph_file(missing.path),
                         doctest::Contains("missing field \"edges\""),
                         parse_error);
}

TEST_CASE("poset and halfspace files") {
    TempFile p("io_poset.txt", "3\n1 3\n2 3\n");
    NaturalPoset poset = read_poset_file(p.path);
    CHECK(poset.size() == 3);
    CHECK(poset.less(1, 3));
    CHECK(poset.less(2, 3));
    CHECK(!poset.less(1, 2));

    TempFile bad("io_poset_bad.txt", "3\n1 3 2\n");
    CHECK_THROWS_WITH_AS(read_poset_file(bad.path),
                         doctest::Contains("io_poset_bad.txt:2:1"), parse_error);

    TempFile h("io_halfspace.txt", "2\n1 -1\n0 1\n");
    HalfspaceSystem hs = read_halfspace_file(h.path);
    CHECK(hs.m == 2);
    CHECK(hs.rows.size() == 2);
    CHECK(hs.rows[0][1] == -1);

    TempFile hbad("io_halfspace_bad.txt", "2\n1\n");
    CHECK_THROWS_AS(read_halfspace_file(hbad.path), parse_error);
}

TEST_CASE("system and grammar files build solvable structures") {
    TempFile s("io_system.txt", "A = t + t*A*B\nB = t + t*B^2\n");
    PolySystem sys = read_system_file(s.path);
    CHECK(sys.size() == 2);
    auto sol = canonical_solution(sys, 6);
    CHECK(sol[0].coeff_rat(1) == Rat(1));

    TempFile dup("io_system_dup.txt", "A = t\nA = t^2\n");
    CHECK_THROWS_WITH_AS(read_system_file(dup.path),
                         doctest::Contains("duplicate unknown"), parse_error);

    TempFile g("io_grammar.txt",
               "start S\nletters a b\nS -> a b | a S b | a b S\n");
    Cfg cfg = read_grammar_file(g.path);
    CHECK(cfg.symbols == std::vector<std::string>{"S"});
    CHECK(cfg.alphabet == std::vector<std::string>{"a", "b"});
    CHECK(cfg.rules.size() == 3);
    TSeries words = brute_language_count(cfg, 8);
    PolySystem gsys = grammar_to_system(cfg);
    auto gsol = canonical_solution(gsys, 8);
    CHECK(gsol[0].rational_coeffs() == words.rational_coeffs());

    TempFile nostart("io_grammar_ns.txt", "letters a\nS -> a\n");
    CHECK_THROWS_WITH_AS(read_grammar_file(nostart.path),
                         doctest::Contains("missing \"start SYMBOL\""),
                         parse_error);

    TempFile empty_alt("io_grammar_ea.txt", "start S\nletters a\nS -> a |\n");
    CHECK_THROWS_WITH_AS(read_grammar_file(empty_alt.path),
                         doctest::Contains("empty alternative"), parse_error);
}

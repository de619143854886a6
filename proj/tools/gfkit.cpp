#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gfkit/algebraic.hpp"
#include "gfkit/automaton.hpp"
#include "gfkit/catalytic.hpp"
#include "gfkit/corpus.hpp"
#include "gfkit/digraph.hpp"
#include "gfkit/fixtures.hpp"
#include "gfkit/guess.hpp"
#include "gfkit/io.hpp"
#include "gfkit/linalg.hpp"
#include "gfkit/numeric.hpp"
#include "gfkit/parse.hpp"
#include "gfkit/polysys.hpp"
#include "gfkit/posets.hpp"
#include "gfkit/ratfun.hpp"
#include "gfkit/rational_ops.hpp"

using namespace gfkit;
using ojson = nlohmann::ordered_json;

namespace {

// Accumulates the text and structured renderings of one command so both
// stay field-for-field aligned; --format picks which one is printed and
// --out writes a copy of the printed document.
struct Output {
    std::string format = "text";
    std::string out_path;
    std::string text;
    ojson doc = ojson::object();

    void line(const std::string& s) { text += s + "\n"; }

    int emit() const {
        std::string payload = format == "structured" ? doc.dump(2) + "\n" : text;
        std::cout << payload;
        if (!out_path.empty()) {
            std::ofstream f(out_path);
            if (!f) throw parse_error(out_path + ": cannot write file");
            f << payload;
        }
        return 0;
    }
};

bool file_exists(const std::string& p) {
    std::ifstream f(p);
    return f.good();
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> series_strings(const TSeries& s, int upto = -1) {
    if (upto < 0) upto = s.order();
    std::vector<std::string> v;
    for (int i = 0; i <= upto; ++i) {
        const MPoly& c = s.coeff(i);
        v.push_back(c.is_constant() ? c.constant_value().get_str() : c.str());
    }
    return v;
}

std::vector<std::string> rat_strings(const std::vector<Rat>& v) {
    std::vector<std::string> out;
    for (const Rat& r : v) out.push_back(r.get_str());
    return out;
}

std::vector<std::string> int_strings(const std::vector<Int>& v) {
    std::vector<std::string> out;
    for (const Int& r : v) out.push_back(r.get_str());
    return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += v[i];
    }
    return s;
}

[[noreturn]] void usage_fail(const std::string& msg) {
    throw std::invalid_argument(msg);
}

void check_exclusive(const std::string& file, const std::string& fixture) {
    if (!file.empty() && !fixture.empty())
        usage_fail("give either --file or --fixture, not both");
}

WeightedDigraph input_digraph(const std::string& file, const std::string& fixture,
                              std::string* used_fixture) {
    check_exclusive(file, fixture);
    auto by_name = [&](const std::string& n) -> WeightedDigraph {
        if (n == "loop_walk") {
            *used_fixture = n;
            return loop_walk_digraph();
        }
        usage_fail("unknown digraph fixture: " + n + " (available: loop_walk)");
    };
    if (!fixture.empty()) return by_name(fixture);
    if (file.empty()) usage_fail("a digraph is required: --file PATH or --fixture loop_walk");
    if (!file_exists(file) && file == "loop_walk") return by_name(file);
    return read_digraph_file(file);
}

Nfa input_automaton(const std::string& file, const std::string& fixture) {
    check_exclusive(file, fixture);
    auto by_name = [](const std::string& n) -> Nfa {
        if (n == "ccpoly") return ccpoly_automaton();
        usage_fail("unknown automaton fixture: " + n + " (available: ccpoly)");
    };
    if (!fixture.empty()) return by_name(fixture);
    if (file.empty()) usage_fail("an automaton is required: --file PATH or --fixture ccpoly");
    if (!file_exists(file) && file == "ccpoly") return by_name(file);
    return read_automaton_file(file);
}

MPoly input_equation(const std::string& file, const std::string& fixture) {
    check_exclusive(file, fixture);
    auto names = equation_fixture_names();
    auto known = [&](const std::string& n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };
    auto by_name = [&](const std::string& n) -> MPoly {
        if (known(n)) return fixture_equation(n);
        usage_fail("unknown equation fixture: " + n +
                   " (available: " + join(names, ", ") + ")");
    };
    if (!fixture.empty()) return by_name(fixture);
    if (file.empty()) usage_fail("an equation is required: --file PATH or --fixture NAME");
    if (!file_exists(file) && known(file)) return by_name(file);
    return read_poly_file(file);
}

Cfg input_grammar(const std::string& file, const std::string& fixture) {
    check_exclusive(file, fixture);
    auto names = grammar_fixture_names();
    auto known = [&](const std::string& n) {
        return std::find(names.begin(), names.end(), n) != names.end();
    };
    auto by_name = [&](const std::string& n) -> Cfg {
        if (known(n)) return fixture_grammar(n);
        usage_fail("unknown grammar fixture: " + n +
                   " (available: " + join(names, ", ") + ")");
    };
    if (!fixture.empty()) return by_name(fixture);
    if (file.empty()) usage_fail("a grammar is required: --file PATH or --fixture NAME");
    if (!file_exists(file) && known(file)) return by_name(file);
    return read_grammar_file(file);
}

MPoly input_catalytic(const std::string& file, const std::string& fixture) {
    check_exclusive(file, fixture);
    auto by_name = [](const std::string& n) -> MPoly {
        if (n == "planar_map") return planar_map_catalytic();
        usage_fail("unknown catalytic fixture: " + n + " (available: planar_map)");
    };
    if (!fixture.empty()) return by_name(fixture);
    if (file.empty())
        usage_fail("a catalytic equation is required: --file PATH or --fixture planar_map");
    if (!file_exists(file) && file == "planar_map") return by_name(file);
    return read_poly_file(file);
}

// matrix file: first line is the size n, then n rows of n expressions
// separated by ';'
PolyMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    std::vector<std::pair<int, std::string>> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        lines.emplace_back(no, raw);
    }
    if (lines.empty()) throw parse_error(path + ":1:1: missing matrix size");
    long n = 0;
    try {
        size_t used = 0;
        n = std::stol(lines[0].second, &used);
        if (used != lines[0].second.find_last_not_of(" \t\r") + 1 || n < 1)
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw parse_error(path + ":" + std::to_string(lines[0].first) +
                          ":1: expected the matrix size");
    }
    if ((long)lines.size() != n + 1)
        throw parse_error(path + ": expected " + std::to_string(n) +
                          " rows after the size line");
    PolyMatrix m;
    for (long r = 1; r <= n; ++r) {
        std::vector<MPoly> row;
        std::stringstream ss(lines[r].second);
        std::string cell;
        while (std::getline(ss, cell, ';')) {
            try {
                row.push_back(parse_poly(cell));
            } catch (const parse_error& e) {
                throw parse_error(path + ":" + std::to_string(lines[r].first) +
                                  ": " + e.what());
            }
        }
        if ((long)row.size() != n)
            throw parse_error(path + ":" + std::to_string(lines[r].first) +
                              ":1: expected " + std::to_string(n) + " entries");
        m.push_back(std::move(row));
    }
    return m;
}

void put_series(Output& out, const std::string& key, const std::vector<std::string>& v,
                bool bare) {
    if (bare)
        out.line(join(v, ","));
    else
        out.line(key + ": " + join(v, ","));
    out.doc[key] = v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact rational and algebraic generating functions"};
    app.require_subcommand(1);
    Output out;
    std::function<int()> run;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", out.format, "output format: text or structured")
            ->check(CLI::IsMember({"text", "structured"}));
        sub->add_option("--out", out.out_path,
                        "also write the printed document to this file");
    };

    // walks ---------------------------------------------------------------
    std::string w_file, w_fixture, w_method = "transfer";
    int w_from = 1, w_coeffs = -1, w_brute = -1;
    std::vector<int> w_to;
    auto* walks = app.add_subcommand("walks", "generating function of walks in a weighted digraph");
    walks->add_option("--file", w_file, "digraph file (JSON)");
    walks->add_option("--fixture", w_fixture, "built-in digraph: loop_walk");
    walks->add_option("--from", w_from, "start vertex (default 1)");
    walks->add_option("--to", w_to, "target vertices (default: last vertex; loop_walk: 2 3)");
    walks->add_option("--method", w_method, "transfer, viennot or both")
        ->check(CLI::IsMember({"transfer", "viennot", "both"}));
    walks->add_option("--coeffs", w_coeffs, "print the first N series coefficients");
    walks->add_option("--brute", w_brute, "print the first N walk counts from the length DP");
    add_common(walks);
    walks->callback([&] {
        run = [&]() -> int {
            std::string used;
            WeightedDigraph g = input_digraph(w_file, w_fixture, &used);
            std::set<int> targets(w_to.begin(), w_to.end());
            if (targets.empty()) {
                if (used == "loop_walk")
                    targets = {2, 3};
                else
                    targets = {g.num_vertices()};
            }
            bool have_counts = w_coeffs >= 0 || w_brute >= 0;
            RatFun f;
            if (w_method == "both") {
                RatFun ft = transfer_gf(g, w_from, targets);
                RatFun fv = viennot_gf(g, w_from, targets);
                out.line("transfer: " + ft.str());
                out.line("viennot: " + fv.str());
                bool ok = ft.equals(fv);
                out.line(std::string("agree: ") + (ok ? "yes" : "no"));
                out.doc["transfer"] = ft.str();
                out.doc["viennot"] = fv.str();
                out.doc["agree"] = ok;
                f = ft;
            } else {
                f = w_method == "viennot" ? viennot_gf(g, w_from, targets)
                                          : transfer_gf(g, w_from, targets);
                if (!have_counts) {
                    out.line("gf: " + f.str());
                    out.doc["gf"] = f.str();
                }
            }
            bool bare = have_counts && w_method != "both" &&
                        !(w_coeffs >= 0 && w_brute >= 0);
            if (w_coeffs >= 0) {
                if (w_coeffs < 1) usage_fail("--coeffs must be >= 1");
                put_series(out, "coefficients",
                           series_strings(ratfun_expand(f, w_coeffs - 1)), bare);
            }
            if (w_brute >= 0) {
                if (w_brute < 1) usage_fail("--brute must be >= 1");
                auto counts = brute_walk_counts(g, w_from, targets, w_brute - 1);
                put_series(out, "walk_counts", rat_strings(counts), bare);
                if (w_coeffs >= 0) {
                    int upto = std::min(w_coeffs, w_brute) - 1;
                    bool ok = true;
                    TSeries s = ratfun_expand(f, upto);
                    for (int i = 0; i <= upto; ++i)
                        ok = ok && s.coeff_rat(i) == counts[i];
                    out.line(std::string("agree: ") + (ok ? "yes" : "no"));
                    out.doc["agree"] = ok;
                }
            }
            return out.emit();
        };
    });

    // automaton -----------------------------------------------------------
    std::string a_file, a_fixture;
    int a_coeffs = -1, a_words = -1;
    bool a_det = false;
    auto* aut = app.add_subcommand("automaton", "length generating function of a regular language");
    aut->add_option("--file", a_file, "automaton file (JSON)");
    aut->add_option("--fixture", a_fixture, "built-in automaton: ccpoly");
    aut->add_flag("--determinize", a_det, "report the subset construction");
    aut->add_option("--coeffs", a_coeffs, "print the first N series coefficients");
    aut->add_option("--words", a_words, "print the first N brute-force word counts");
    add_common(aut);
    aut->callback([&] {
        run = [&]() -> int {
            Nfa a = input_automaton(a_file, a_fixture);
            RatFun f = automaton_gf(a);
            bool have_counts = a_coeffs >= 0 || a_words >= 0;
            if (!have_counts) {
                out.line("states: " + std::to_string(a.num_states));
                out.line(std::string("deterministic: ") +
                         (a.is_deterministic() ? "yes" : "no"));
                out.doc["states"] = a.num_states;
                out.doc["deterministic"] = a.is_deterministic();
                if (a_det) {
                    Nfa d = determinize(a);
                    out.line("determinized_states: " + std::to_string(d.num_states));
                    out.doc["determinized_states"] = d.num_states;
                }
                out.line("gf: " + f.str());
                out.doc["gf"] = f.str();
            }
            bool bare = !(a_coeffs >= 0 && a_words >= 0);
            if (a_coeffs >= 0) {
                if (a_coeffs < 1) usage_fail("--coeffs must be >= 1");
                put_series(out, "coefficients",
                           series_strings(ratfun_expand(f, a_coeffs - 1)), bare);
            }
            if (a_words >= 0) {
                if (a_words < 1) usage_fail("--words must be >= 1");
                auto counts = brute_word_counts(a, a_words - 1);
                put_series(out, "word_counts", int_strings(counts), bare);
                if (a_coeffs >= 0) {
                    int upto = std::min(a_coeffs, a_words) - 1;
                    TSeries s = ratfun_expand(f, upto);
                    bool ok = true;
                    for (int i = 0; i <= upto; ++i)
                        ok = ok && s.coeff_rat(i) == Rat(counts[i]);
                    out.line(std::string("agree: ") + (ok ? "yes" : "no"));
                    out.doc["agree"] = ok;
                }
            }
            return out.emit();
        };
    });

    // grammar ---------------------------------------------------------------
    std::string g_file, g_fixture;
    int g_order = 10, g_words = -1;
    auto* gram = app.add_subcommand("grammar", "algebraic system induced by a context-free grammar");
    gram->add_option("--file", g_file, "grammar file");
    gram->add_option("--fixture", g_fixture, "built-in grammar: dyck, meander");
    gram->add_option("--order", g_order, "series order (default 10)");
    gram->add_option("--words", g_words, "cross-check against the first N brute word counts");
    add_common(gram);
    gram->callback([&] {
        run = [&]() -> int {
            Cfg g = input_grammar(g_file, g_fixture);
            PolySystem sys = grammar_to_system(g);
            auto sol = canonical_solution(sys, g_order);
            out.line("symbols: " + join(g.symbols, " "));
            out.line("letters: " + join(g.alphabet, " "));
            out.doc["symbols"] = g.symbols;
            out.doc["letters"] = g.alphabet;
            out.line("system:");
            std::vector<std::string> sys_lines;
            std::istringstream ss(sys.str());
            for (std::string l; std::getline(ss, l);) {
                out.line("  " + l);
                sys_lines.push_back(l);
            }
            out.doc["system"] = sys_lines;
            auto series = series_strings(sol[0]);
            out.line("series: " + join(series, ","));
            out.doc["series"] = series;
            if (g_words >= 0) {
                if (g_words < 1) usage_fail("--words must be >= 1");
                TSeries brute = brute_language_count(g, g_words - 1);
                auto counts = series_strings(brute);
                out.line("words: " + join(counts, ","));
                out.doc["words"] = counts;
                int upto = std::min(g_order, g_words - 1);
                bool ok = true;
                for (int i = 0; i <= upto; ++i)
                    ok = ok && sol[0].coeff_rat(i) == brute.coeff_rat(i);
                out.line(std::string("agree: ") + (ok ? "yes" : "no"));
                out.doc["agree"] = ok;
            }
            return out.emit();
        };
    });

    // system ----------------------------------------------------------------
    std::string s_file, s_norm;
    int s_order = 10;
    auto* syscmd = app.add_subcommand("system", "canonical solution of a polynomial fixed-point system");
    syscmd->add_option("--file", s_file, "system file, one equation per line")->required();
    syscmd->add_option("--order", s_order, "series order (default 10)");
    syscmd->add_option("--normalize", s_norm, "also print the normalized system")
        ->check(CLI::IsMember({"quadratic", "leading_t"}));
    add_common(syscmd);
    syscmd->callback([&] {
        run = [&]() -> int {
            PolySystem sys = read_system_file(s_file);
            auto sol = canonical_solution(sys, s_order);
            out.line("system:");
            std::vector<std::string> sys_lines;
            std::istringstream ss(sys.str());
            for (std::string l; std::getline(ss, l);) {
                out.line("  " + l);
                sys_lines.push_back(l);
            }
            out.doc["system"] = sys_lines;
            out.line(std::string("proper: ") + (sys.is_proper() ? "yes" : "no"));
            out.doc["proper"] = sys.is_proper();
            ojson series = ojson::object();
            for (int i = 0; i < sys.size(); ++i) {
                auto v = series_strings(sol[i]);
                out.line("series " + var_name(sys.unknowns[i]) + ": " + join(v, ","));
                series[var_name(sys.unknowns[i])] = v;
            }
            out.doc["series"] = series;
            if (!s_norm.empty()) {
                PolySystem ns = normalize_system(
                    sys, s_norm == "quadratic" ? NormalizeMode::quadratic
                                               : NormalizeMode::leading_t);
                out.line("normalized:");
                std::vector<std::string> nlines;
                std::istringstream ns_ss(ns.str());
                for (std::string l; std::getline(ns_ss, l);) {
                    out.line("  " + l);
                    nlines.push_back(l);
                }
                out.doc["normalized"] = nlines;
                auto nsol = canonical_solution(ns, s_order);
                bool ok = nsol[0] == sol[0];
                out.line(std::string("agree: ") + (ok ? "yes" : "no"));
                out.doc["agree"] = ok;
            }
            return out.emit();
        };
    });

    // catalytic ---------------------------------------------------------------
    std::string c_file, c_fixture;
    int c_order = 10;
    auto* cat = app.add_subcommand("catalytic", "solve a catalytic functional equation by iteration");
    cat->add_option("--file", c_file, "equation file with G(u), G1 and DD placeholders");
    cat->add_option("--fixture", c_fixture, "built-in equation: planar_map");
    cat->add_option("--order", c_order, "series order (default 10)");
    add_common(cat);
    cat->callback([&] {
        run = [&]() -> int {
            CatalyticEquation eq(input_catalytic(c_file, c_fixture));
            CatalyticSolution sol = solve_catalytic(eq, c_order);
            auto at1 = series_strings(sol.g_at_1);
            out.line("g_at_1: " + join(at1, ","));
            out.doc["g_at_1"] = at1;
            auto full = series_strings(sol.g);
            out.line("g: " + join(full, " ; "));
            out.doc["g"] = full;
            return out.emit();
        };
    });

    // roots ---------------------------------------------------------------
    std::string r_file, r_fixture;
    int r_order = 10;
    auto* roots = app.add_subcommand("roots", "power-series branches of P(t, a) = 0");
    roots->add_option("--file", r_file, "equation file");
    roots->add_option("--fixture", r_fixture, "built-in equation name");
    roots->add_option("--order", r_order, "series order (default 10)");
    add_common(roots);
    roots->callback([&] {
        run = [&]() -> int {
            MPoly p = input_equation(r_file, r_fixture);
            SeriesRootReport rep = series_roots(p, r_order);
            out.line("branches: " + std::to_string(rep.branches.size()));
            ojson branches = ojson::array();
            for (size_t i = 0; i < rep.branches.size(); ++i) {
                const BranchSolution& b = rep.branches[i];
                out.line("branch " + std::to_string(i) + ": constant " +
                         b.constant_term.get_str() + ", residual order " +
                         std::to_string(b.residual_order));
                auto v = rat_strings(b.series.rational_coeffs());
                out.line("series " + std::to_string(i) + ": " + join(v, ","));
                branches.push_back({{"constant", b.constant_term.get_str()},
                                    {"residual_order", b.residual_order},
                                    {"series", v}});
            }
            out.doc["branches"] = branches;
            auto ram = rat_strings(rep.ramified);
            out.line("ramified: " + (ram.empty() ? "none" : join(ram, ",")));
            out.doc["ramified"] = ram;
            std::vector<std::string> unl;
            for (int d : rep.unlifted_degrees) unl.push_back(std::to_string(d));
            out.line("unlifted_degrees: " + (unl.empty() ? "none" : join(unl, ",")));
            out.doc["unlifted_degrees"] = rep.unlifted_degrees;
            out.line("infinite_branches: " + std::to_string(rep.infinite_branches));
            out.doc["infinite_branches"] = rep.infinite_branches;
            return out.emit();
        };
    });

    // verify ----------------------------------------------------------------
    std::string v_file, v_fixture, v_series;
    auto* verify = app.add_subcommand("verify", "order to which a series satisfies an equation");
    verify->add_option("--file", v_file, "equation file");
    verify->add_option("--fixture", v_fixture, "built-in equation name");
    verify->add_option("--series", v_series, "series file to test")->required();
    add_common(verify);
    verify->callback([&] {
        run = [&]() -> int {
            MPoly p = input_equation(v_file, v_fixture);
            auto coeffs = read_series_file(v_series);
            TSeries s = TSeries::from_rational(coeffs);
            int m = verify_algebraic(s, p);
            out.line("order: " + std::to_string(s.order()));
            out.line("matched_order: " + std::to_string(m));
            out.doc["order"] = s.order();
            out.doc["matched_order"] = m;
            return out.emit();
        };
    });

    // guess ---------------------------------------------------------------
    auto* guess = app.add_subcommand("guess", "fit a rational function or algebraic equation to coefficients");
    guess->require_subcommand(1);
    std::string gr_coeffs, ga_coeffs;
    std::vector<int> gr_deg, ga_deg;
    auto* gr = guess->add_subcommand("rational", "Pade-style fit p(t)/q(t)");
    gr->add_option("--coeffs", gr_coeffs, "series file with the data")->required();
    gr->add_option("--max-deg", gr_deg, "numerator and denominator degree bounds")
        ->expected(2)
        ->required();
    add_common(gr);
    gr->callback([&] {
        run = [&]() -> int {
            auto data = read_series_file(gr_coeffs);
            auto res = guess_rational(data, gr_deg[0], gr_deg[1]);
            if (!res) {
                out.line("no rational function with numerator degree <= " +
                         std::to_string(gr_deg[0]) + " and denominator degree <= " +
                         std::to_string(gr_deg[1]));
                out.doc["found"] = false;
                return out.emit();
            }
            out.line("gf: " + res->fun.str());
            out.line("used: " + std::to_string(res->used));
            out.line("validated: " + std::to_string(res->validated));
            out.doc["found"] = true;
            out.doc["gf"] = res->fun.str();
            out.doc["used"] = res->used;
            out.doc["validated"] = res->validated;
            return out.emit();
        };
    });
    auto* ga = guess->add_subcommand("algebraic", "fit P(t, a) = 0 of bidegree (d, e)");
    ga->add_option("--coeffs", ga_coeffs, "series file with the data")->required();
    ga->add_option("--max-deg", ga_deg, "t-degree and a-degree of the candidate")
        ->expected(2)
        ->required();
    add_common(ga);
    ga->callback([&] {
        run = [&]() -> int {
            auto data = read_series_file(ga_coeffs);
            auto res = guess_algebraic(data, ga_deg[0], ga_deg[1]);
            if (!res) {
                out.line("no equation of bidegree (" + std::to_string(ga_deg[0]) +
                         ", " + std::to_string(ga_deg[1]) + ")");
                out.doc["found"] = false;
                return out.emit();
            }
            out.line("equation: " + res->equation.str() + " = 0");
            out.line("used: " + std::to_string(res->used));
            out.line("validated: " + std::to_string(res->validated));
            out.doc["found"] = true;
            out.doc["equation"] = res->equation.str();
            out.doc["used"] = res->used;
            out.doc["validated"] = res->validated;
            return out.emit();
        };
    });

    // asymptotics -----------------------------------------------------------
    std::string as_num, as_den, as_file, as_fixture;
    int as_branch = 0, as_nfit = 200;
    auto* asym = app.add_subcommand("asymptotics", "dominant singularity and growth of the coefficients");
    asym->add_option("--num", as_num, "numerator (rational input)");
    asym->add_option("--den", as_den, "denominator (rational input)");
    asym->add_option("--file", as_file, "equation file (algebraic input)");
    asym->add_option("--fixture", as_fixture, "built-in equation name");
    asym->add_option("--branch", as_branch, "branch index for algebraic input (default 0)");
    asym->add_option("--nfit", as_nfit, "coefficients used for the exponent fit (default 200)");
    add_common(asym);
    asym->callback([&] {
        run = [&]() -> int {
            bool rational = !as_num.empty() || !as_den.empty();
            bool algebraic = !as_file.empty() || !as_fixture.empty();
            if (rational == algebraic)
                usage_fail("give --num/--den for a rational function or "
                           "--file/--fixture for an equation");
            if (rational) {
                if (as_num.empty() || as_den.empty())
                    usage_fail("both --num and --den are required");
                AsymptoticEstimate est = rational_asymptotics(ratfun_parse(as_num, as_den));
                out.line("rho: [" + est.rho.lo.get_str() + ", " + est.rho.hi.get_str() + "]");
                out.line("rho_approx: " + fmt_double(est.rho_approx()));
                out.line("multiplicity: " + std::to_string(est.multiplicity));
                out.line("exponent: " + std::to_string(est.d));
                out.line("kappa: [" + fmt_double(est.kappa_lo) + ", " +
                         fmt_double(est.kappa_hi) + "]");
                out.doc["rho"] = {est.rho.lo.get_str(), est.rho.hi.get_str()};
                out.doc["rho_approx"] = fmt_double(est.rho_approx());
                out.doc["multiplicity"] = est.multiplicity;
                out.doc["exponent"] = est.d;
                out.doc["kappa"] = {fmt_double(est.kappa_lo), fmt_double(est.kappa_hi)};
                return out.emit();
            }
            MPoly p = input_equation(as_file, as_fixture);
            SeriesRootReport rep = series_roots(p, 8);
            if (as_branch < 0 || as_branch >= (int)rep.branches.size())
                usage_fail("--branch out of range: the equation has " +
                           std::to_string(rep.branches.size()) + " branches");
            GrowthEstimate est = algebraic_asymptotics(p, rep.branches[as_branch], as_nfit);
            out.line("rho: [" + est.rho.lo.get_str() + ", " + est.rho.hi.get_str() + "]");
            out.line("rho_approx: " + fmt_double(est.rho.approx()));
            out.line("exponent: " + fmt_double(est.d));
            out.line("exponent_window: [" + fmt_double(est.d_lo) + ", " +
                     fmt_double(est.d_hi) + "]");
            out.line("kappa: " + fmt_double(est.kappa_tilde));
            out.line("points: " + std::to_string(est.points));
            out.doc["rho"] = {est.rho.lo.get_str(), est.rho.hi.get_str()};
            out.doc["rho_approx"] = fmt_double(est.rho.approx());
            out.doc["exponent"] = fmt_double(est.d);
            out.doc["exponent_window"] = {fmt_double(est.d_lo), fmt_double(est.d_hi)};
            out.doc["kappa"] = fmt_double(est.kappa_tilde);
            out.doc["points"] = est.points;
            return out.emit();
        };
    });

    // slice / diagonal ------------------------------------------------------
    std::string sl_num, sl_den, sl_svar = "s";
    int sl_k = 0, sl_order = 10;
    auto* slice = app.add_subcommand("slice", "coefficient of s^k in a bivariate rational series");
    slice->add_option("--num", sl_num, "numerator expression")->required();
    slice->add_option("--den", sl_den, "denominator expression")->required();
    slice->add_option("--svar", sl_svar, "name of the sliced variable (default s)");
    slice->add_option("--k", sl_k, "exponent to extract (default 0)");
    slice->add_option("--order", sl_order, "series order (default 10)");
    add_common(slice);
    slice->callback([&] {
        run = [&]() -> int {
            BiRatFun f(parse_poly(sl_num), parse_poly(sl_den), var_id(sl_svar));
            TSeries s = laurent_slice(f, sl_k, sl_order, SliceMode::slice);
            put_series(out, "series", series_strings(s), true);
            return out.emit();
        };
    });
    std::string dg_num, dg_den, dg_svar = "s";
    int dg_order = 10;
    auto* diag = app.add_subcommand("diagonal", "diagonal of a rational function in two variables");
    diag->add_option("--num", dg_num, "numerator expression")->required();
    diag->add_option("--den", dg_den, "denominator expression")->required();
    diag->add_option("--svar", dg_svar, "fresh variable for the substitution (default s)");
    diag->add_option("--order", dg_order, "series order (default 10)");
    add_common(diag);
    diag->callback([&] {
        run = [&]() -> int {
            BiRatFun f(parse_poly(dg_num), parse_poly(dg_den), var_id(dg_svar));
            TSeries s = laurent_slice(f, 0, dg_order, SliceMode::diagonal);
            put_series(out, "series", series_strings(s), true);
            return out.emit();
        };
    });

    // expand ----------------------------------------------------------------
    std::string e_num, e_den, e_write;
    int e_order = 10;
    auto* expand = app.add_subcommand("expand", "Taylor coefficients of a rational function");
    expand->add_option("--num", e_num, "numerator expression")->required();
    expand->add_option("--den", e_den, "denominator expression")->required();
    expand->add_option("--order", e_order, "series order (default 10)");
    expand->add_option("--write", e_write, "also write the expansion as a series file");
    add_common(expand);
    expand->callback([&] {
        run = [&]() -> int {
            RatFun f = ratfun_parse(e_num, e_den);
            TSeries s = ratfun_expand(f, e_order);
            put_series(out, "coefficients", series_strings(s), true);
            if (!e_write.empty()) {
                std::ofstream fo(e_write);
                if (!fo) throw parse_error(e_write + ": cannot write file");
                fo << format_series(s.rational_coeffs());
            }
            return out.emit();
        };
    });

    // section ---------------------------------------------------------------
    std::string sec_num, sec_den;
    int sec_r = 0, sec_p = 1;
    auto* sec = app.add_subcommand("section", "rational function of the subsequence a_{np+r}");
    sec->add_option("--num", sec_num, "numerator expression")->required();
    sec->add_option("--den", sec_den, "denominator expression")->required();
    sec->add_option("--p", sec_p, "progression step (default 1)");
    sec->add_option("--r", sec_r, "progression offset (default 0)");
    add_common(sec);
    sec->callback([&] {
        run = [&]() -> int {
            RatFun g = section(ratfun_parse(sec_num, sec_den), sec_r, sec_p);
            out.line("gf: " + g.str());
            out.doc["gf"] = g.str();
            return out.emit();
        };
    });

    // soittola --------------------------------------------------------------
    std::string so_num, so_den;
    int so_pmax = 3;
    double so_precision = 1e-6;
    auto* soi = app.add_subcommand("soittola", "dominant-pole counts of all arithmetic-progression sections");
    soi->add_option("--num", so_num, "numerator expression")->required();
    soi->add_option("--den", so_den, "denominator expression")->required();
    soi->add_option("--pmax", so_pmax, "largest progression step (default 3)");
    soi->add_option("--precision", so_precision, "relative pole separation (default 1e-6)");
    add_common(soi);
    soi->callback([&] {
        run = [&]() -> int {
            SoittolaReport rep =
                soittola_check(ratfun_parse(so_num, so_den), so_pmax, so_precision);
            out.line("pmax: " + std::to_string(rep.p_max));
            out.doc["pmax"] = rep.p_max;
            ojson sections = ojson::array();
            int worst = 0;
            for (const SectionPoles& s : rep.sections) {
                std::string head = "p=" + std::to_string(s.p) + " r=" + std::to_string(s.r);
                if (s.polynomial) {
                    out.line(head + ": polynomial");
                } else {
                    out.line(head + ": dominant=" + std::to_string(s.dominant));
                    worst = std::max(worst, s.dominant);
                }
                std::vector<std::string> poles;
                for (const auto& z : s.poles)
                    poles.push_back(fmt_double(z.real()) + (z.imag() < 0 ? "" : "+") +
                                    fmt_double(z.imag()) + "i");
                sections.push_back({{"p", s.p},
                                    {"r", s.r},
                                    {"polynomial", s.polynomial},
                                    {"dominant", s.dominant},
                                    {"poles", poles}});
            }
            out.doc["sections"] = sections;
            out.line("max_dominant: " + std::to_string(worst));
            out.doc["max_dominant"] = worst;
            return out.emit();
        };
    });

    // poset -----------------------------------------------------------------
    std::string po_file;
    bool po_ext = false;
    int po_brute = -1;
    auto* poset = app.add_subcommand("poset", "order-preserving labelings of a naturally ordered poset");
    poset->add_option("--file", po_file, "poset file: element count then covering pairs")->required();
    poset->add_flag("--extensions", po_ext, "also list the linear extensions");
    poset->add_option("--brute", po_brute, "cross-check the series against exhaustive counts up to weight N");
    add_common(poset);
    poset->callback([&] {
        run = [&]() -> int {
            NaturalPoset p = read_poset_file(po_file);
            auto exts = linear_extensions(p);
            RatFun f = p_partition_gf(p);
            out.line("elements: " + std::to_string(p.size()));
            out.line("extensions: " + std::to_string(exts.size()));
            out.doc["elements"] = p.size();
            out.doc["extensions"] = exts.size();
            if (po_ext) {
                ojson list = ojson::array();
                for (const auto& e : exts) {
                    std::vector<std::string> word;
                    for (int v : e) word.push_back(std::to_string(v));
                    out.line("extension: " + join(word, " "));
                    list.push_back(e);
                }
                out.doc["extension_list"] = list;
            }
            out.line("gf: " + f.str());
            out.doc["gf"] = f.str();
            if (po_brute >= 0) {
                TSeries brute = brute_p_partitions(p, po_brute);
                auto counts = series_strings(brute);
                out.line("brute: " + join(counts, ","));
                out.doc["brute"] = counts;
                TSeries s = ratfun_expand(f, po_brute);
                bool ok = s == brute;
                out.line(std::string("agree: ") + (ok ? "yes" : "no"));
                out.doc["agree"] = ok;
            }
            return out.emit();
        };
    });

    // cone ------------------------------------------------------------------
    std::string cn_file;
    int cn_order = 10;
    auto* cone = app.add_subcommand("cone", "lattice points of a half-space intersection by weight");
    cone->add_option("--file", cn_file, "halfspace file: dimension then inequality rows")->required();
    cone->add_option("--order", cn_order, "largest weight (default 10)");
    add_common(cone);
    cone->callback([&] {
        run = [&]() -> int {
            HalfspaceSystem h = read_halfspace_file(cn_file);
            TSeries s = cone_points_bruteforce(h, cn_order);
            put_series(out, "counts", series_strings(s), true);
            return out.emit();
        };
    });

    // det ---------------------------------------------------------------------
    std::string dt_file;
    auto* det = app.add_subcommand("det", "exact determinant of a polynomial matrix");
    det->add_option("--file", dt_file, "matrix file: size n, then n rows of ';'-separated entries")
        ->required();
    add_common(det);
    det->callback([&] {
        run = [&]() -> int {
            MPoly d = det_bareiss(read_matrix_file(dt_file));
            out.line("det: " + d.str());
            out.doc["det"] = d.str();
            return out.emit();
        };
    });

    // resultant -----------------------------------------------------------------
    std::string rs_p, rs_q, rs_var = "a";
    bool rs_disc = false;
    auto* res = app.add_subcommand("resultant", "resultant or discriminant in one variable");
    res->add_option("--p", rs_p, "first polynomial")->required();
    res->add_option("--q", rs_q, "second polynomial");
    res->add_option("--var", rs_var, "elimination variable (default a)");
    res->add_flag("--discriminant", rs_disc, "discriminant of --p instead of a resultant");
    add_common(res);
    res->callback([&] {
        run = [&]() -> int {
            int v = var_id(rs_var);
            if (rs_disc) {
                if (!rs_q.empty()) usage_fail("--discriminant takes only --p");
                MPoly d = discriminant(coeffs_in_var(parse_poly(rs_p), v));
                out.line("discriminant: " + d.str());
                out.doc["discriminant"] = d.str();
                return out.emit();
            }
            if (rs_q.empty()) usage_fail("--q is required unless --discriminant is given");
            MPoly r = resultant(coeffs_in_var(parse_poly(rs_p), v),
                                coeffs_in_var(parse_poly(rs_q), v));
            out.line("resultant: " + r.str());
            out.doc["resultant"] = r.str();
            return out.emit();
        };
    });

    // lagrange ------------------------------------------------------------------
    std::string lg_phi, lg_psi = "t";
    int lg_n = 0;
    auto* lag = app.add_subcommand("lagrange", "[t^n] Psi(U) for U = t*Phi(U), by Lagrange inversion");
    lag->add_option("--phi", lg_phi, "polynomial Phi, written in t")->required();
    lag->add_option("--psi", lg_psi, "polynomial Psi, written in t (default t)");
    lag->add_option("--n", lg_n, "coefficient index")->required();
    add_common(lag);
    lag->callback([&] {
        run = [&]() -> int {
            TSeries phi = TSeries::from_mpoly(parse_poly(lg_phi), std::max(lg_n, 0));
            TSeries psi = TSeries::from_mpoly(parse_poly(lg_psi), std::max(lg_n, 0));
            Rat c = lagrange_coeff(phi, psi, lg_n);
            out.line("coefficient: " + c.get_str());
            out.doc["coefficient"] = c.get_str();
            return out.emit();
        };
    });

    // series ----------------------------------------------------------------
    std::string se_file;
    int se_coeffs = -1;
    auto* ser = app.add_subcommand("series", "read a series file and print its coefficients");
    ser->add_option("--file", se_file, "series file")->required();
    ser->add_option("--coeffs", se_coeffs, "print only the first N coefficients");
    add_common(ser);
    ser->callback([&] {
        run = [&]() -> int {
            auto coeffs = read_series_file(se_file);
            if (se_coeffs >= 0) {
                if (se_coeffs < 1) usage_fail("--coeffs must be >= 1");
                coeffs.resize(std::min<size_t>(coeffs.size(), se_coeffs));
            }
            out.doc["order"] = (long)coeffs.size() - 1;
            put_series(out, "coefficients", rat_strings(coeffs), true);
            return out.emit();
        };
    });

    // corpus ----------------------------------------------------------------
    auto* corpus = app.add_subcommand("corpus", "reproduction suites against enumeration oracles");
    corpus->require_subcommand(1);
    auto* clist = corpus->add_subcommand("list", "names of all suites");
    add_common(clist);
    clist->callback([&] {
        run = [&]() -> int {
            auto names = list_suites();
            for (const auto& n : names) out.line(n);
            out.doc["suites"] = names;
            return out.emit();
        };
    });
    std::vector<std::string> cr_names;
    std::string cr_scale;
    bool cr_timing = false;
    auto* crun = corpus->add_subcommand("run", "run suites (all when no names are given)");
    crun->add_option("names", cr_names, "suite names");
    crun->add_option("--scale", cr_scale, "small or normal (default normal, or GFKIT_SCALE)")
        ->check(CLI::IsMember({"small", "normal"}));
    crun->add_flag("--timing", cr_timing, "include wall-clock timings in the report");
    add_common(crun);
    crun->callback([&] {
        run = [&]() -> int {
            std::string scale_name = cr_scale;
            if (scale_name.empty()) {
                const char* env = std::getenv("GFKIT_SCALE");
                scale_name = env ? env : "normal";
                if (scale_name != "small" && scale_name != "normal")
                    usage_fail("GFKIT_SCALE must be small or normal, got '" +
                               scale_name + "'");
            }
            Scale scale = scale_name == "small" ? Scale::small : Scale::normal;
            auto all = list_suites();
            std::vector<std::string> names = cr_names;
            if (names.empty()) {
                names = all;
            } else {
                for (const auto& n : names)
                    if (std::find(all.begin(), all.end(), n) == all.end())
                        usage_fail("unknown suite: " + n);
                std::sort(names.begin(), names.end());
                names.erase(std::unique(names.begin(), names.end()), names.end());
            }
            int total_checks = 0, total_failed = 0;
            ojson suites = ojson::array();
            out.doc["scale"] = scale_name;
            for (const auto& name : names) {
                SuiteReport rep = run_suite(name, scale);
                int failed = 0;
                for (const auto& c : rep.checks) failed += c.pass ? 0 : 1;
                total_checks += (int)rep.checks.size();
                total_failed += failed;
                std::string head = "suite " + name + ": " +
                                   std::to_string(rep.checks.size()) + " checks, " +
                                   std::to_string(failed) + " failed";
                if (cr_timing) {
                    char buf[32];
                    std::snprintf(buf, sizeof buf, "%.2f", rep.seconds);
                    head += std::string(", ") + buf + "s";
                }
                out.line(head);
                ojson checks = ojson::array();
                for (const auto& c : rep.checks) {
                    out.line(std::string("  ") + (c.pass ? "PASS " : "FAIL ") +
                             c.description);
                    if (!c.pass) {
                        out.line("    expected: " + c.expected);
                        out.line("    computed: " + c.computed);
                    }
                    checks.push_back({{"description", c.description},
                                      {"expected", c.expected},
                                      {"computed", c.computed},
                                      {"pass", c.pass}});
                }
                ojson entry = {{"suite", rep.suite},
                               {"checks", checks},
                               {"failed", failed}};
                if (cr_timing) entry["seconds"] = rep.seconds;
                suites.push_back(entry);
            }
            out.line("total: " + std::to_string(names.size()) + " suites, " +
                     std::to_string(total_checks) + " checks, " +
                     std::to_string(total_failed) + " failed");
            out.doc["suites"] = suites;
            out.doc["total_checks"] = total_checks;
            out.doc["total_failed"] = total_failed;
            out.emit();
            return total_failed == 0 ? 0 : 3;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    }

    try {
        return run ? run() : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
}

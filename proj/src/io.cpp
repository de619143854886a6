#include "gfkit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "gfkit/parse.hpp"

namespace gfkit {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

[[noreturn]] void fail_at(const std::string& path, int line, int col,
                          const std::string& msg) {
    throw parse_error(path + ":" + std::to_string(line) + ":" +
                      std::to_string(col) + ": " + msg);
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

// non-blank lines with their 1-based positions
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        std::string t = trim(line);
        if (!t.empty()) out.emplace_back(no, t);
    }
    return out;
}

MPoly parse_poly_at(const std::string& path, int line, const std::string& expr) {
    try {
        return parse_poly(expr);
    } catch (const parse_error& e) {
        throw parse_error(path + ":" + std::to_string(line) + ": " + e.what());
    }
}

long parse_long(const std::string& path, int line, int col,
                const std::string& tok, const char* what) {
    try {
        size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail_at(path, line, col, std::string("expected ") + what + ", got '" +
                                     tok + "'");
    }
}

Rat parse_rat_at(const std::string& path, int line, const std::string& tok) {
    try {
        return rat_parse(tok);
    } catch (const parse_error& e) {
        throw parse_error(path + ":" + std::to_string(line) + ":1: " + e.what());
    }
}

std::pair<int, int> offset_position(const std::string& text, size_t byte) {
    int line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

json parse_json(const std::string& path, const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = offset_position(text, byte);
        fail_at(path, line, col, "invalid JSON");
    }
}

const json& field(const std::string& path, const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw parse_error(path + ": missing field \"" + name + "\"");
    return j.at(name);
}

int int_field(const std::string& path, const json& j, const char* name) {
    const json& f = field(path, j, name);
    if (!f.is_number_integer())
        throw parse_error(path + ": field \"" + name + "\" must be an integer");
    return f.get<int>();
}

MPoly weight_poly(const std::string& path, size_t index, const json& w) {
    if (w.is_number_integer()) return MPoly(Rat((long)w.get<long>()));
    if (w.is_string()) {
        try {
            return parse_poly(w.get<std::string>());
        } catch (const parse_error& e) {
            throw parse_error(path + ": edge " + std::to_string(index) + ": " +
                              e.what());
        }
    }
    throw parse_error(path + ": edge " + std::to_string(index) +
                      ": weight must be a string or an integer");
}

bool is_name(const std::string& s) {
    if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_'))
        return false;
    for (char c : s)
        if (!(std::isalnum((unsigned char)c) || c == '_')) return false;
    return true;
}

}  // namespace

std::vector<Rat> read_series_file(const std::string& path) {
    auto lines = content_lines(slurp(path));
    if (lines.empty()) fail_at(path, 1, 1, "missing \"order N\" header");
    auto head = split_ws(lines[0].second);
    if (head.size() != 2 || head[0] != "order")
        fail_at(path, lines[0].first, 1, "expected header \"order N\"");
    long n = parse_long(path, lines[0].first, 1, head[1], "a non-negative order");
    if (n < 0) fail_at(path, lines[0].first, 1, "order must be >= 0");
    if ((long)lines.size() != n + 2)
        fail_at(path, lines.back().first, 1,
                "expected exactly " + std::to_string(n + 1) +
                    " coefficient lines after the header");
    std::vector<Rat> coeffs;
    for (long i = 1; i <= n + 1; ++i) {
        auto toks = split_ws(lines[i].second);
        if (toks.size() != 1)
            fail_at(path, lines[i].first, 1, "expected one coefficient");
        coeffs.push_back(parse_rat_at(path, lines[i].first, toks[0]));
    }
    return coeffs;
}

std::string format_series(const std::vector<Rat>& coeffs) {
    std::string out = "order " + std::to_string((long)coeffs.size() - 1) + "\n";
    for (const Rat& c : coeffs) out += c.get_str() + "\n";
    return out;
}

MPoly read_poly_file(const std::string& path) {
    try {
        return parse_poly(slurp(path));
    } catch (const parse_error& e) {
        std::string what = e.what();
        if (what.rfind(path, 0) == 0) throw;
        throw parse_error(path + ": " + what);
    }
}

WeightedDigraph read_digraph_file(const std::string& path) {
    const std::string text = slurp(path);
    json j = parse_json(path, text);
    int p = int_field(path, j, "vertices");
    if (p < 1) throw parse_error(path + ": \"vertices\" must be >= 1");
    WeightedDigraph g(p);
    const json& edges = field(path, j, "edges");
    if (!edges.is_array())
        throw parse_error(path + ": field \"edges\" must be an array");
    for (size_t i = 0; i < edges.size(); ++i) {
        const json& e = edges[i];
        try {
            g.add_edge(int_field(path, e, "from"), int_field(path, e, "to"),
                       weight_poly(path, i, field(path, e, "weight")));
        } catch (const parse_error&) {
            throw;
        } catch (const std::exception& ex) {
            throw parse_error(path + ": edge " + std::to_string(i) + ": " +
                              ex.what());
        }
    }
    return g;
}

Nfa read_automaton_file(const std::string& path) {
    const std::string text = slurp(path);
    json j = parse_json(path, text);
    Nfa a;
    a.num_states = int_field(path, j, "vertices");
    const json& alpha = field(path, j, "alphabet");
    if (!alpha.is_array())
        throw parse_error(path + ": field \"alphabet\" must be an array");
    for (const json& l : alpha) {
        if (!l.is_string())
            throw parse_error(path + ": alphabet letters must be strings");
        a.alphabet.push_back(l.get<std::string>());
    }
    const json& trans = field(path, j, "transitions");
    if (!trans.is_array())
        throw parse_error(path + ": field \"transitions\" must be an array");
    for (size_t i = 0; i < trans.size(); ++i) {
        const json& t = trans[i];
        const json& letter = field(path, t, "letter");
        if (!letter.is_string())
            throw parse_error(path + ": transition " + std::to_string(i) +
                              ": \"letter\" must be a string");
        a.transitions.emplace_back(int_field(path, t, "from"),
                                   letter.get<std::string>(),
                                   int_field(path, t, "to"));
    }
    a.initial = int_field(path, j, "initial");
    const json& fin = field(path, j, "finals");
    if (!fin.is_array())
        throw parse_error(path + ": field \"finals\" must be an array");
    for (const json& f : fin) {
        if (!f.is_number_integer())
            throw parse_error(path + ": finals must be integers");
        a.finals.insert(f.get<int>());
    }
    try {
        a.validate();
    } catch (const std::exception& ex) {
        throw parse_error(path + ": " + ex.what());
    }
    return a;
}

NaturalPoset read_poset_file(const std::string& path) {
    auto lines = content_lines(slurp(path));
    if (lines.empty()) fail_at(path, 1, 1, "missing element count");
    auto head = split_ws(lines[0].second);
    if (head.size() != 1)
        fail_at(path, lines[0].first, 1, "expected the element count alone");
    long k = parse_long(path, lines[0].first, 1, head[0], "an element count");
    std::vector<std::pair<int, int>> covers;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto toks = split_ws(lines[i].second);
        if (toks.size() != 2)
            fail_at(path, lines[i].first, 1, "expected a covering pair \"i j\"");
        covers.emplace_back(
            (int)parse_long(path, lines[i].first, 1, toks[0], "an element"),
            (int)parse_long(path, lines[i].first, 2, toks[1], "an element"));
    }
    try {
        return NaturalPoset((int)k, covers);
    } catch (const std::exception& ex) {
        throw parse_error(path + ": " + ex.what());
    }
}

HalfspaceSystem read_halfspace_file(const std::string& path) {
    auto lines = content_lines(slurp(path));
    if (lines.empty()) fail_at(path, 1, 1, "missing dimension");
    auto head = split_ws(lines[0].second);
    if (head.size() != 1)
        fail_at(path, lines[0].first, 1, "expected the dimension alone");
    long m = parse_long(path, lines[0].first, 1, head[0], "a dimension");
    if (m < 1) fail_at(path, lines[0].first, 1, "dimension must be >= 1");
    HalfspaceSystem h;
    h.m = (int)m;
    for (size_t i = 1; i < lines.size(); ++i) {
        auto toks = split_ws(lines[i].second);
        if ((long)toks.size() != m)
            fail_at(path, lines[i].first, 1,
                    "expected " + std::to_string(m) + " coefficients");
        std::vector<Int> row;
        for (size_t c = 0; c < toks.size(); ++c) {
            Rat v = parse_rat_at(path, lines[i].first, toks[c]);
            if (!rat_is_int(v))
                fail_at(path, lines[i].first, (int)c + 1,
                        "coefficients must be integers");
            row.push_back(Int(v.get_num()));
        }
        h.rows.push_back(std::move(row));
    }
    return h;
}

PolySystem read_system_file(const std::string& path) {
    auto lines = content_lines(slurp(path));
    if (lines.empty()) fail_at(path, 1, 1, "no equations");
    PolySystem s;
    for (const auto& [no, line] : lines) {
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail_at(path, no, 1, "expected an equation \"NAME = expression\"");
        std::string lhs = trim(line.substr(0, eq));
        if (!is_name(lhs) || lhs == "t")
            fail_at(path, no, 1, "left side must be an unknown name, not 't'");
        int id = var_id(lhs);
        for (int seen : s.unknowns)
            if (seen == id) fail_at(path, no, 1, "duplicate unknown '" + lhs + "'");
        s.unknowns.push_back(id);
        s.rhs.push_back(parse_poly_at(path, no, line.substr(eq + 1)));
    }
    try {
        s.validate();
    } catch (const std::exception& ex) {
        throw parse_error(path + ": " + ex.what());
    }
    return s;
}

Cfg read_grammar_file(const std::string& path) {
    auto lines = content_lines(slurp(path));
    std::string start;
    bool have_start = false;
    std::vector<std::string> letters;
    std::vector<std::pair<std::string, std::vector<std::string>>> raw_rules;
    std::vector<std::string> lhs_order;

    for (const auto& [no, line] : lines) {
        auto toks = split_ws(line);
        if (toks[0] == "start") {
            if (toks.size() != 2)
                fail_at(path, no, 1, "expected \"start SYMBOL\"");
            if (have_start) fail_at(path, no, 1, "duplicate start line");
            start = toks[1];
            have_start = true;
            continue;
        }
        if (toks[0] == "letters") {
            if (toks.size() < 2)
                fail_at(path, no, 1, "expected \"letters a b ...\"");
            letters.insert(letters.end(), toks.begin() + 1, toks.end());
            continue;
        }
        size_t arrow = line.find("->");
        if (arrow == std::string::npos)
            fail_at(path, no, 1,
                    "expected \"start\", \"letters\" or \"SYMBOL -> word | word\"");
        std::string lhs = trim(line.substr(0, arrow));
        if (!is_name(lhs))
            fail_at(path, no, 1, "left side must be a symbol name");
        bool known = false;
        for (const auto& s : lhs_order) known = known || s == lhs;
        if (!known) lhs_order.push_back(lhs);

        std::string rest = line.substr(arrow + 2);
        size_t from = 0;
        while (true) {
            size_t bar = rest.find('|', from);
            std::string piece = bar == std::string::npos
                                    ? rest.substr(from)
                                    : rest.substr(from, bar - from);
            auto word = split_ws(piece);
            if (word.empty())
                fail_at(path, no, 1, "empty alternative in production");
            raw_rules.emplace_back(lhs, std::move(word));
            if (bar == std::string::npos) break;
            from = bar + 1;
        }
    }
    if (!have_start)
        fail_at(path, lines.empty() ? 1 : lines.back().first, 1,
                "missing \"start SYMBOL\" line");

    Cfg g;
    g.symbols.push_back(start);
    for (const auto& s : lhs_order)
        if (s != start) g.symbols.push_back(s);
    g.alphabet = letters;
    for (auto& [lhs, word] : raw_rules)
        g.rules.emplace_back(g.symbol_index(lhs), std::move(word));
    try {
        g.validate();
    } catch (const std::exception& ex) {
        throw parse_error(path + ": " + ex.what());
    }
    return g;
}

}  // namespace gfkit

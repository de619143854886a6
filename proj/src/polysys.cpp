#include "gfkit/polysys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace gfkit {

namespace {

// bare linear monomial: single unknown, exponent 1, no t, nothing else
int bare_linear_target(const Monomial& m, const std::vector<int>& unknowns) {
    if (m.exponent(VAR_T) != 0) return -1;
    int found = -1;
    for (size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        if (m.e[v] != 1) return -1;
        if (found != -1) return -1;
        found = (int)v;
    }
    if (found == -1) return -1;
    for (size_t j = 0; j < unknowns.size(); ++j)
        if (unknowns[j] == found) return (int)j;
    return -1;
}

}  // namespace

void PolySystem::validate() const {
    if (unknowns.empty() || unknowns.size() != rhs.size())
        throw domain_error("system needs one equation per unknown");
    std::set<int> pool(unknowns.begin(), unknowns.end());
    if (pool.size() != unknowns.size())
        throw domain_error("duplicate unknown in system");
    if (pool.count(VAR_T))
        throw domain_error("t cannot be an unknown");
    for (const MPoly& p : rhs) {
        if (p.constant_value() != 0)
            throw domain_error("system equation has a constant term");
        for (auto& [m, c] : p.terms()) {
            (void)c;
            for (size_t v = 0; v < m.e.size(); ++v) {
                if (m.e[v] == 0) continue;
                if (m.e[v] < 0)
                    throw domain_error("negative exponent in system equation");
                if ((int)v != VAR_T && !pool.count((int)v))
                    throw domain_error("equation uses foreign variable " +
                                       var_name((int)v));
            }
        }
    }
}

bool PolySystem::is_positive() const {
    for (const MPoly& p : rhs)
        for (auto& [m, c] : p.terms()) {
            (void)m;
            if (c < 0) return false;
        }
    return true;
}

bool PolySystem::is_proper() const {
    for (const MPoly& p : rhs) {
        if (p.constant_value() != 0) return false;
        for (auto& [m, c] : p.terms()) {
            (void)c;
            if (bare_linear_target(m, unknowns) != -1) return false;
        }
    }
    return true;
}

bool PolySystem::is_well_founded() const {
    int k = size();
    // edge i -> j when x_j appears as a bare linear monomial in P_i
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i) {
        if (rhs[i].constant_value() != 0) return false;
        for (auto& [m, c] : rhs[i].terms()) {
            (void)c;
            int j = bare_linear_target(m, unknowns);
            if (j >= 0) adj[i].push_back(j);
        }
    }
    // cycle detection
    std::vector<int> state(k, 0);
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < k; ++s) {
        if (state[s] != 0) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < adj[v].size()) {
                int w = adj[v][idx++];
                if (state[w] == 1) return false;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return true;
}

bool PolySystem::is_quadratic() const {
    for (const MPoly& p : rhs)
        for (auto& [m, c] : p.terms()) {
            (void)c;
            int et = m.exponent(VAR_T);
            int deg = m.total_degree();
            if (et == 1 && deg == 1) continue;           // t
            if (et == 0 && deg == 2) continue;           // x_l * x_m
            return false;
        }
    return true;
}

bool PolySystem::is_leading_t() const {
    for (const MPoly& p : rhs)
        for (auto& [m, c] : p.terms()) {
            (void)c;
            if (m.exponent(VAR_T) < 1) return false;
        }
    return true;
}

std::string PolySystem::str() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i)
        os << var_name(unknowns[i]) << " = " << rhs[i].str() << "\n";
    return os.str();
}

namespace {

TSeries eval_at_series(const MPoly& p, const std::vector<int>& unknowns,
                       const std::vector<TSeries>& vals, int order) {
    std::map<int, int> slot;
    for (size_t j = 0; j < unknowns.size(); ++j) slot[unknowns[j]] = (int)j;
    std::map<std::pair<int, int>, TSeries> powers;
    auto power = [&](int j, int e) -> const TSeries& {
        auto key = std::make_pair(j, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, vals[(size_t)j].pow(e).truncate(
                                         std::min(order, vals[(size_t)j].order()))).first;
        return it->second;
    };

    TSeries acc = TSeries::zero(order);
    for (auto& [m, c] : p.terms()) {
        int et = m.exponent(VAR_T);
        if (et > order) continue;
        TSeries term = TSeries::constant(c, order - et);
        for (size_t v = 0; v < m.e.size(); ++v) {
            if ((int)v == VAR_T || m.e[v] == 0) continue;
            term = term * power(slot.at((int)v), m.e[v]);
        }
        acc = acc + term.shift_up(et).truncate(order);
    }
    return acc;
}

}  // namespace

std::vector<TSeries> canonical_solution(const PolySystem& s, int n) {
    s.validate();
    if (!s.is_well_founded())
        throw domain_error("system is not proper (bare linear dependencies "
                           "contain a cycle or a constant term appears)");
    if (n < 0) throw domain_error("negative truncation order");

    int k = s.size();
    std::vector<TSeries> cur(k, TSeries::zero(n));
    int cap = (n + 2) * (k + 2);
    for (int pass = 0; pass < cap; ++pass) {
        std::vector<TSeries> next(k, TSeries::zero(n));
        bool changed = false;
        for (int i = 0; i < k; ++i) {
            next[i] = eval_at_series(s.rhs[i], s.unknowns, cur, n);
            if (!(next[i] == cur[i])) changed = true;
        }
        cur = std::move(next);
        if (!changed) break;
    }
    // residual must vanish identically at this truncation order
    for (int i = 0; i < k; ++i) {
        TSeries r = eval_at_series(s.rhs[i], s.unknowns, cur, n);
        if (!(r == cur[i]))
            throw domain_error("fixed-point iteration failed to converge");
    }
    return cur;
}

namespace {

int fresh_var(const std::string& hint) {
    std::string name = hint;
    int counter = 0;
    while (var_exists(name)) name = hint + "_" + std::to_string(counter++);
    return var_id(name);
}

// factor list of a monomial: VAR_T repeated, then unknown slots repeated
std::vector<int> factor_list(const Monomial& m) {
    std::vector<int> f;
    for (size_t v = 0; v < m.e.size(); ++v)
        for (int i = 0; i < m.e[v]; ++i) f.push_back((int)v);
    return f;
}

struct Quadratizer {
    std::vector<int> unknowns;
    std::vector<MPoly> rhs;
    std::map<std::pair<int, int>, int> products;  // (var, var) -> aux var
    int tvar = -1;

    int ensure_t() {
        if (tvar < 0) {
            tvar = fresh_var("Xt");
            unknowns.push_back(tvar);
            rhs.push_back(MPoly::variable(VAR_T));
        }
        return tvar;
    }

    // variable representing the product of the factors (all unknown vars)
    int combine(const std::vector<int>& f, size_t lo, size_t hi) {
        if (hi - lo == 1) return f[lo];
        size_t mid = lo + (hi - lo) / 2;
        int a = combine(f, lo, mid);
        int b = combine(f, mid, hi);
        auto key = std::minmax(a, b);
        auto it = products.find(key);
        if (it != products.end()) return it->second;
        int v = fresh_var("Y" + std::to_string(products.size()));
        products.emplace(key, v);
        unknowns.push_back(v);
        rhs.push_back(MPoly::variable(key.first) * MPoly::variable(key.second));
        return v;
    }
};

}  // namespace

PolySystem normalize_system(const PolySystem& s, NormalizeMode mode) {
    s.validate();
    if (!s.is_proper())
        throw domain_error("normalization needs a strictly proper system");

    PolySystem quad = s;
    if (!s.is_quadratic()) {
        Quadratizer qz;
        qz.unknowns = s.unknowns;
        qz.rhs.resize(s.rhs.size());
        for (size_t i = 0; i < s.rhs.size(); ++i) {
            MPoly out;
            for (auto& [m, c] : s.rhs[i].terms()) {
                std::vector<int> f = factor_list(m);
                if (f.size() == 1 && f[0] == VAR_T) {
                    out.add_term(m, c);
                    continue;
                }
                // replace t factors by the t-unknown, then fold to a product
                // of exactly two unknowns
                for (int& v : f)
                    if (v == VAR_T) v = qz.ensure_t();
                size_t mid = f.size() / 2;
                int a = qz.combine(f, 0, mid);
                int b = qz.combine(f, mid, f.size());
                out += MPoly::variable(a) * MPoly::variable(b) * c;
            }
            qz.rhs[i] = out;
        }
        quad.unknowns = qz.unknowns;
        quad.rhs = qz.rhs;
    }
    if (mode == NormalizeMode::quadratic) return quad;

    // leading_t: A_i = c_i t + sum n^i_{lm} x_l x_m becomes A_1 = t R_1 and
    // U_{lm} = t R_l R_m with R_i = c_i + sum n^i_{lm} U_{lm}
    if (quad.is_leading_t()) return quad;

    int k = quad.size();
    MPoly t = MPoly::variable(VAR_T);
    std::vector<Rat> cc(k, Rat(0));
    std::vector<std::map<std::pair<int, int>, Rat>> prods(k);
    std::set<std::pair<int, int>> pairs;
    for (int i = 0; i < k; ++i) {
        for (auto& [m, c] : quad.rhs[i].terms()) {
            if (m.exponent(VAR_T) == 1) {
                cc[i] = c;
                continue;
            }
            std::vector<int> f = factor_list(m);
            std::vector<int> slots;
            for (int v : f)
                for (int j = 0; j < k; ++j)
                    if (quad.unknowns[j] == v) slots.push_back(j);
            auto key = std::minmax(slots[0], slots[1]);
            prods[i][key] += c;
            pairs.insert(key);
        }
    }

    PolySystem out;
    int a1 = quad.unknowns[0];
    out.unknowns.push_back(a1);
    std::map<std::pair<int, int>, int> uvar;
    for (auto& pr : pairs) {
        uvar[pr] = fresh_var("U" + std::to_string(pr.first) + "_" +
                             std::to_string(pr.second));
        out.unknowns.push_back(uvar[pr]);
    }
    auto r_of = [&](int i) {
        MPoly r(cc[i]);
        for (auto& [pr, c] : prods[i])
            r += MPoly::variable(uvar.at(pr)) * c;
        return r;
    };
    out.rhs.push_back(t * r_of(0));
    for (auto& pr : pairs)
        out.rhs.push_back(t * r_of(pr.first) * r_of(pr.second));
    return out;
}

void Cfg::validate() const {
    if (symbols.empty()) throw domain_error("grammar needs a symbol");
    std::set<std::string> names(symbols.begin(), symbols.end());
    std::set<std::string> letters(alphabet.begin(), alphabet.end());
    if (names.size() != symbols.size())
        throw domain_error("duplicate grammar symbol");
    if (letters.size() != alphabet.size())
        throw domain_error("duplicate alphabet letter");
    for (auto& n : names)
        if (letters.count(n))
            throw domain_error("name '" + n + "' is both symbol and letter");
    for (auto& [sym, word] : rules) {
        if (sym < 0 || sym >= (int)symbols.size())
            throw domain_error("rule symbol index out of range");
        if (word.empty()) throw domain_error("empty rule word");
        for (auto& tok : word)
            if (!names.count(tok) && !letters.count(tok))
                throw domain_error("unknown token '" + tok + "' in rule");
    }
}

int Cfg::symbol_index(const std::string& name) const {
    for (size_t i = 0; i < symbols.size(); ++i)
        if (symbols[i] == name) return (int)i;
    return -1;
}

int Cfg::letter_index(const std::string& name) const {
    for (size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == name) return (int)i;
    return -1;
}

bool Cfg::is_proper() const {
    for (auto& [sym, word] : rules) {
        (void)sym;
        if (word.size() == 1 && symbol_index(word[0]) >= 0) return false;
    }
    return true;
}

PolySystem grammar_to_system(const Cfg& g) {
    g.validate();
    if (!g.is_proper())
        throw domain_error("grammar has a unit rule S_i -> S_j");

    PolySystem s;
    for (auto& name : g.symbols) {
        if (var_exists(name) && var_id(name) == VAR_T)
            throw domain_error("grammar symbol cannot be named t");
        s.unknowns.push_back(var_id(name));
    }
    s.rhs.resize(g.symbols.size());
    MPoly t = MPoly::variable(VAR_T);
    for (auto& [sym, word] : g.rules) {
        MPoly mono(1);
        int letters = 0;
        for (auto& tok : word) {
            int j = g.symbol_index(tok);
            if (j >= 0)
                mono *= MPoly::variable(s.unknowns[(size_t)j]);
            else
                ++letters;
        }
        s.rhs[(size_t)sym] += mono * t.pow(letters);
    }
    return s;
}

TSeries brute_language_count(const Cfg& g, int n_max) {
    g.validate();
    if (n_max < 0 || n_max > 14)
        throw domain_error("word enumeration limited to length 14");
    if (g.alphabet.size() > 26)
        throw domain_error("word enumeration limited to 26 letters");

    // words encoded over letter indices as chars
    using WordSet = std::set<std::string>;
    int k = (int)g.symbols.size();
    std::vector<WordSet> lang(k);

    auto expand_rule = [&](const std::vector<std::string>& word,
                           WordSet& into) {
        // cartesian product over tokens with length pruning
        std::vector<std::string> acc{""};
        for (auto& tok : word) {
            std::vector<std::string> next;
            int li = g.letter_index(tok);
            if (li >= 0) {
                for (auto& pre : acc) {
                    if ((int)pre.size() + 1 > n_max) continue;
                    next.push_back(pre + (char)('a' + li));
                }
            } else {
                int si = g.symbol_index(tok);
                for (auto& pre : acc)
                    for (auto& w : lang[(size_t)si]) {
                        if ((int)(pre.size() + w.size()) > n_max) continue;
                        next.push_back(pre + w);
                    }
            }
            acc = std::move(next);
            if (acc.empty()) break;
        }
        for (auto& w : acc) into.insert(w);
    };

    bool grew = true;
    while (grew) {
        grew = false;
        for (auto& [sym, word] : g.rules) {
            WordSet add;
            expand_rule(word, add);
            size_t before = lang[(size_t)sym].size();
            lang[(size_t)sym].insert(add.begin(), add.end());
            if (lang[(size_t)sym].size() != before) grew = true;
        }
    }

    std::vector<Rat> counts(n_max + 1, Rat(0));
    for (auto& w : lang[0]) counts[w.size()] += 1;
    return TSeries::from_rational(counts);
}

}  // namespace gfkit

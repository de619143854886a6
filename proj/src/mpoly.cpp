#include "gfkit/mpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace gfkit {

namespace {

struct VarTable {
    std::vector<std::string> names;
    std::unordered_map<std::string, int> ids;
    std::mutex mu;

    VarTable() {
        for (const char* n : {"t", "x", "y", "u", "v", "s"}) {
            ids.emplace(n, (int)names.size());
            names.emplace_back(n);
        }
    }
};

VarTable& table() {
    static VarTable tab;
    return tab;
}

} // namespace

int var_id(const std::string& name) {
    auto& tab = table();
    std::lock_guard<std::mutex> lock(tab.mu);
    auto it = tab.ids.find(name);
    if (it != tab.ids.end()) return it->second;
    int id = (int)tab.names.size();
    tab.names.push_back(name);
    tab.ids.emplace(name, id);
    return id;
}

bool var_exists(const std::string& name) {
    auto& tab = table();
    std::lock_guard<std::mutex> lock(tab.mu);
    return tab.ids.count(name) != 0;
}

std::string var_name(int id) {
    auto& tab = table();
    std::lock_guard<std::mutex> lock(tab.mu);
    return tab.names.at(id);
}

void Monomial::set(int var, int exp) {
    if (var >= (int)e.size()) {
        if (exp == 0) return;
        e.resize(var + 1, 0);
    }
    e[var] = exp;
    trim();
}

void Monomial::trim() {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    size_t n = std::max(a.e.size(), b.e.size());
    for (size_t i = 0; i < n; ++i) {
        int ea = i < a.e.size() ? a.e[i] : 0;
        int eb = i < b.e.size() ? b.e[i] : 0;
        if (ea != eb) return ea < eb;
    }
    return false;
}

MPoly::MPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly::MPoly(long c) : MPoly(Rat(c)) {}

MPoly MPoly::variable(int var, int exp) {
    MPoly p;
    if (exp == 0) return MPoly(Rat(1));
    Monomial m;
    m.set(var, exp);
    p.terms_.emplace(std::move(m), Rat(1));
    return p;
}

MPoly MPoly::term(const Monomial& m, const Rat& c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first.e.empty();
}

Rat MPoly::constant_value() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rat(0) : it->second;
}

Rat MPoly::as_constant() const {
    if (!is_constant())
        throw domain_error("polynomial is not constant: " + str());
    return constant_value();
}

bool MPoly::contains_var(int var) const {
    for (auto& [m, c] : terms_)
        if (m.exponent(var) != 0) return true;
    return false;
}

int MPoly::degree(int var) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.exponent(var));
    return d;
}

int MPoly::min_exponent(int var) const {
    bool seen = false;
    int d = 0;
    for (auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (!seen || e < d) d = e;
        seen = true;
    }
    return d;
}

int MPoly::total_degree() const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.total_degree());
    return d;
}

Rat MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

MPoly MPoly::coeff_of(int var, int power) const {
    MPoly out;
    for (auto& [m, c] : terms_) {
        if (m.exponent(var) != power) continue;
        Monomial r = m;
        r.set(var, 0);
        out.add_term(r, c);
    }
    return out;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out;
    for (auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out = *this;
    out += o;
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out = *this;
    out -= o;
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.e.resize(std::max(a.e.size(), b.e.size()), 0);
    for (size_t i = 0; i < r.e.size(); ++i) {
        int ea = i < a.e.size() ? a.e[i] : 0;
        int eb = i < b.e.size() ? b.e[i] : 0;
        r.e[i] = ea + eb;
    }
    r.trim();
    return r;
}

} // namespace

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_)
            out.add_term(mono_mul(ma, mb), ca * cb);
    return out;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly out;
    if (c == 0) return out;
    for (auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

MPoly MPoly::pow(int n) const {
    if (n < 0) {
        if (terms_.size() != 1)
            throw domain_error("negative power of a non-monomial");
        auto& [m, c] = *terms_.begin();
        if (c != 1 && c != -1)
            throw domain_error("negative power with non-unit coefficient");
        Monomial r;
        r.e = m.e;
        for (int& k : r.e) k *= n;
        r.trim();
        Rat cc = (c == -1 && (n % 2 != 0)) ? Rat(-1) : Rat(1);
        return MPoly::term(r, cc);
    }
    MPoly out(Rat(1));
    MPoly base = *this;
    while (n > 0) {
        if (n & 1) out = out * base;
        base = base * base;
        n >>= 1;
    }
    return out;
}

MPoly MPoly::derivative(int var) const {
    MPoly out;
    for (auto& [m, c] : terms_) {
        int e = m.exponent(var);
        if (e == 0) continue;
        Monomial r = m;
        r.set(var, e - 1);
        out.add_term(r, c * Rat(e));
    }
    return out;
}

MPoly MPoly::subst(int var, const MPoly& value) const {
    MPoly out;
    std::map<int, MPoly> powers; // cache value^e for e >= 0
    for (auto& [m, c] : terms_) {
        int e = m.exponent(var);
        Monomial r = m;
        r.set(var, 0);
        if (e == 0) {
            out.add_term(r, c);
            continue;
        }
        if (e < 0 && value.num_terms() != 1)
            throw domain_error("cannot substitute a sum into a negative power of " +
                               var_name(var));
        auto it = powers.find(e);
        if (it == powers.end())
            it = powers.emplace(e, value.pow(e)).first;
        out += MPoly::term(r, c) * it->second;
    }
    return out;
}

MPoly MPoly::subst(int var, const Rat& value) const {
    if (value == 0 && min_exponent(var) < 0)
        throw domain_error("substituting 0 into a negative power of " + var_name(var));
    return subst(var, MPoly(value));
}

// Exact multivariate division. Laurent inputs are first shifted by a monomial
// so all exponents are non-negative; the quotient gets the compensating shift.
MPoly MPoly::exact_div(const MPoly& d) const {
    if (d.is_zero()) throw domain_error("division by zero polynomial");
    if (is_zero()) return MPoly();
    if (d.is_constant()) {
        Rat inv = 1 / d.as_constant();
        return *this * inv;
    }

    size_t nv = 0;
    for (auto& [m, c] : terms_) nv = std::max(nv, m.e.size());
    for (auto& [m, c] : d.terms_) nv = std::max(nv, m.e.size());

    Monomial shift_p, shift_d;
    shift_p.e.assign(nv, 0);
    shift_d.e.assign(nv, 0);
    for (size_t v = 0; v < nv; ++v) {
        shift_p.e[v] = -std::min(0, min_exponent((int)v));
        shift_d.e[v] = -std::min(0, d.min_exponent((int)v));
    }

    MPoly p2, d2;
    for (auto& [m, c] : terms_) p2.terms_.emplace(mono_mul(m, shift_p), c);
    for (auto& [m, c] : d.terms_) d2.terms_.emplace(mono_mul(m, shift_d), c);

    MPoly q;
    const auto& dl = *d2.terms_.rbegin(); // grlex leading term of divisor
    MPoly r = p2;
    while (!r.is_zero()) {
        const auto& rl = *r.terms_.rbegin();
        Monomial qm;
        qm.e.assign(std::max(rl.first.e.size(), dl.first.e.size()), 0);
        bool divides = true;
        for (size_t v = 0; v < qm.e.size(); ++v) {
            int er = v < rl.first.e.size() ? rl.first.e[v] : 0;
            int ed = v < dl.first.e.size() ? dl.first.e[v] : 0;
            qm.e[v] = er - ed;
            if (qm.e[v] < 0) divides = false;
        }
        if (!divides)
            throw domain_error("inexact polynomial division");
        qm.trim();
        MPoly qt = MPoly::term(qm, rl.second / dl.second);
        q += qt;
        r -= qt * d2;
    }

    Monomial unshift;
    unshift.e.assign(nv, 0);
    for (size_t v = 0; v < nv; ++v)
        unshift.e[v] = shift_p.e[v] * -1 + shift_d.e[v];
    // q * x^{shift_d - shift_p}
    MPoly out;
    for (auto& [m, c] : q.terms_) out.terms_.emplace(mono_mul(m, unshift), c);
    return out;
}

std::string monomial_str(const Monomial& m) {
    std::ostringstream os;
    bool first = true;
    for (size_t v = 0; v < m.e.size(); ++v) {
        if (m.e[v] == 0) continue;
        if (!first) os << "*";
        os << var_name((int)v);
        if (m.e[v] != 1) os << "^" << m.e[v];
        first = false;
    }
    return os.str();
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string ms = monomial_str(m);
        if (ms.empty()) {
            os << rat_str(a);
        } else {
            if (a != 1) os << rat_str(a) << "*";
            os << ms;
        }
        first = false;
    }
    return os.str();
}

} // namespace gfkit

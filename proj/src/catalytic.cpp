#include "gfkit/catalytic.hpp"

#include <map>

namespace gfkit {

CatalyticEquation::CatalyticEquation(MPoly r)
    : rhs(std::move(r)),
      uvar(var_id("u")),
      gvar(var_id("G(u)")),
      g1var(var_id("G1")),
      ddvar(var_id("DD")) {
    validate();
}

void CatalyticEquation::validate() const {
    for (auto& [m, c] : rhs.terms()) {
        (void)c;
        bool has_unknown = false;
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (m.e[v] < 0)
                throw domain_error("negative exponent in catalytic equation");
            if ((int)v == gvar || (int)v == g1var || (int)v == ddvar)
                has_unknown = true;
            else if ((int)v != VAR_T && (int)v != uvar)
                throw domain_error("catalytic equation uses foreign variable " +
                                   var_name((int)v));
        }
        if (has_unknown && m.exponent(VAR_T) < 1)
            throw domain_error(
                "equation does not contract: a G, G1 or DD monomial lacks a "
                "factor t");
    }
}

namespace {

TSeries specialize_u(const TSeries& g, int uvar) {
    TSeries out(g.order());
    for (int i = 0; i <= g.order(); ++i)
        out.set_coeff(i, g.coeff(i).subst(uvar, Rat(1)));
    return out;
}

TSeries divided_difference(const TSeries& g, const TSeries& g1, int uvar) {
    MPoly u = MPoly::variable(uvar);
    MPoly um1 = u - MPoly(Rat(1));
    TSeries out(g.order());
    for (int i = 0; i <= g.order(); ++i) {
        MPoly numer = u * g.coeff(i) - g1.coeff(i);
        out.set_coeff(i, numer.is_zero() ? MPoly() : numer.exact_div(um1));
    }
    return out;
}

TSeries eval_rhs(const CatalyticEquation& eq, const TSeries& g, int n) {
    TSeries g1 = specialize_u(g, eq.uvar);
    TSeries dd = divided_difference(g, g1, eq.uvar);
    std::map<std::pair<int, int>, TSeries> powers;
    auto power = [&](const TSeries& base, int tag, int e) -> const TSeries& {
        auto key = std::make_pair(tag, e);
        auto it = powers.find(key);
        if (it == powers.end())
            it = powers.emplace(key, base.pow(e).truncate(n)).first;
        return it->second;
    };

    TSeries acc = TSeries::zero(n);
    for (auto& [m, c] : eq.rhs.terms()) {
        int et = m.exponent(VAR_T);
        if (et > n) continue;
        MPoly coef = MPoly::variable(eq.uvar, m.exponent(eq.uvar)) * c;
        TSeries term = TSeries::constant(Rat(1), n - et) * coef;
        if (int e = m.exponent(eq.gvar); e > 0)
            term = (term * power(g, 0, e)).truncate(n - et);
        if (int e = m.exponent(eq.g1var); e > 0)
            term = (term * power(g1, 1, e)).truncate(n - et);
        if (int e = m.exponent(eq.ddvar); e > 0)
            term = (term * power(dd, 2, e)).truncate(n - et);
        acc = acc + term.shift_up(et).truncate(n);
    }
    return acc;
}

}  // namespace

CatalyticSolution solve_catalytic(const CatalyticEquation& eq, int n) {
    eq.validate();
    if (n < 0) throw domain_error("negative truncation order");

    TSeries g = TSeries::zero(n);
    for (int pass = 0; pass < n + 2; ++pass) {
        TSeries next = eval_rhs(eq, g, n);
        bool done = next == g;
        g = std::move(next);
        if (done) break;
    }
    if (!(eval_rhs(eq, g, n) == g))
        throw domain_error("catalytic iteration failed to converge");
    return {g, specialize_u(g, eq.uvar)};
}

}  // namespace gfkit

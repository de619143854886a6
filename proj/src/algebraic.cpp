#include "gfkit/algebraic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "gfkit/linalg.hpp"

namespace gfkit {

int branch_variable(const MPoly& p) {
    int found = -1;
    for (auto& [m, c] : p.terms()) {
        (void)c;
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (m.e[v] < 0)
                throw domain_error("negative exponent in equation");
            if ((int)v == VAR_T) continue;
            if (found == -1)
                found = (int)v;
            else if (found != (int)v)
                throw domain_error(
                    "equation must involve t and exactly one series variable");
        }
    }
    if (found == -1)
        throw domain_error("equation has no series variable");
    return found;
}

namespace {

UPolyQ to_upolyq(const MPoly& c) {
    UPolyQ out((size_t)c.degree(VAR_T) + 1, Rat(0));
    for (auto& [m, coef] : c.terms()) {
        for (size_t v = 1; v < m.e.size(); ++v)
            if (m.e[v] != 0)
                throw domain_error("coefficient involves " + var_name((int)v));
        out[(size_t)m.exponent(VAR_T)] = coef;
    }
    return upq_trim(out);
}

// coefficient lists in t of P and of dP/da, P = sum_j C[j](t) a^j
struct BranchEq {
    std::vector<UPolyQ> c, dc;

    explicit BranchEq(const std::vector<MPoly>& pos) {
        for (auto& q : pos) c.push_back(to_upolyq(q));
        for (size_t j = 1; j < c.size(); ++j)
            dc.push_back(upq_scale(c[j], Rat((long)j)));
    }

    UPolyQ at_zero() const {
        UPolyQ p0;
        for (auto& cj : c) p0.push_back(cj.empty() ? Rat(0) : cj[0]);
        return upq_trim(p0);
    }
};

TSeries ts_head(const UPolyQ& c, int w) {
    std::vector<Rat> head(c.begin(),
                          c.begin() + std::min(c.size(), (size_t)w + 1));
    head.resize((size_t)w + 1, Rat(0));
    return TSeries::from_rational(head);
}

TSeries horner(const std::vector<UPolyQ>& c, const TSeries& a) {
    int w = a.order();
    if (c.empty()) return TSeries::zero(w);
    TSeries r = ts_head(c.back(), w);
    for (size_t j = c.size() - 1; j-- > 0;)
        r = (r * a).truncate(w) + ts_head(c[j], w);
    return r;
}

// Newton iteration with doubling working order; a0 must be a simple root of
// P(0, a).
TSeries lift_branch(const BranchEq& eq, const Rat& a0, int n) {
    TSeries a = TSeries::constant(a0, 0);
    int cur = 0;
    while (cur < n) {
        int nxt = std::min(2 * cur + 1, n);
        std::vector<Rat> pad = a.rational_coeffs();
        pad.resize((size_t)nxt + 1, Rat(0));
        a = TSeries::from_rational(pad);
        TSeries num = horner(eq.c, a);
        TSeries den = horner(eq.dc, a);
        a = (a - num * den.invert()).truncate(nxt);
        cur = nxt;
    }
    return a;
}

// divisors of |v|, needing v to fit a machine word
std::vector<Int> divisors(const Int& v) {
    Int a = abs(v);
    if (!a.fits_ulong_p() || a.get_ui() > 1000000000000UL)
        throw domain_error("constant too large for rational root search");
    unsigned long x = a.get_ui();
    std::vector<Int> out;
    for (unsigned long d = 1; d * d <= x; ++d) {
        if (x % d != 0) continue;
        out.push_back(Int(d));
        out.push_back(Int(x / d));
    }
    return out;
}

// exact division of p by (x - r); p(r) must be 0
UPolyQ divide_out_root(const UPolyQ& p, const Rat& r) {
    UPolyQ q((size_t)upq_degree(p), Rat(0));
    Rat carry(0);
    for (size_t j = p.size(); j-- > 1;) {
        carry = p[j] + carry * r;
        q[j - 1] = carry;
    }
    return upq_trim(q);
}

// rational roots with multiplicities, ascending
std::vector<std::pair<Rat, int>> rational_roots(UPolyQ p) {
    std::vector<std::pair<Rat, int>> out;
    p = upq_trim(p);
    if (upq_degree(p) < 1) return out;

    int zero_mult = 0;
    while (!p.empty() && p[0] == 0) {
        ++zero_mult;
        p.erase(p.begin());
    }
    if (zero_mult > 0) out.push_back({Rat(0), zero_mult});
    if (upq_degree(p) < 1) return out;

    Int den_l(1);
    for (auto& r : p) {
        Int d;
        mpz_lcm(d.get_mpz_t(), den_l.get_mpz_t(), r.get_den_mpz_t());
        den_l = d;
    }
    std::vector<Int> ic;
    for (auto& r : p) {
        Rat s = r * Rat(den_l);
        ic.push_back(Int(s.get_num()));
    }
    Int content(0);
    for (auto& v : ic) {
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        content = g;
    }

    std::set<Rat> candidates;
    for (auto& num : divisors(ic.front() / content))
        for (auto& den : divisors(ic.back() / content)) {
            Rat c(num, den);
            c.canonicalize();
            candidates.insert(c);
            candidates.insert(-c);
        }
    for (auto& r : candidates) {
        if (upq_eval(p, r) != 0) continue;
        int mult = 0;
        UPolyQ q = p;
        while (upq_degree(q) >= 1 && upq_eval(q, r) == 0) {
            q = divide_out_root(q, r);
            ++mult;
        }
        out.push_back({r, mult});
    }
    std::sort(out.begin(), out.end(),
              [](auto& a, auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace

SeriesRootReport series_roots(const MPoly& p, int n) {
    if (p.is_zero()) throw domain_error("zero equation");
    if (n < 0) throw domain_error("negative order");
    int avar = branch_variable(p);
    std::vector<MPoly> pos = coeffs_in_var(p, avar);
    MPoly disc = discriminant(pos);
    if (disc.is_zero())
        throw domain_error("equation is not squarefree in " + var_name(avar));

    BranchEq eq(pos);
    UPolyQ p0 = eq.at_zero();
    if (upq_degree(p0) < 0)
        throw domain_error("every coefficient of the equation vanishes at t = 0");

    SeriesRootReport rep;
    rep.infinite_branches = (int)pos.size() - 1 - upq_degree(p0);

    UPolyQ rest = p0;
    for (auto& [root, mult] : rational_roots(p0)) {
        for (int i = 0; i < mult; ++i) rest = divide_out_root(rest, root);
        if (mult > 1) {
            rep.ramified.push_back(root);
            continue;
        }
        BranchSolution b;
        b.constant_term = root;
        b.series = lift_branch(eq, root, n);
        b.residual_order = verify_algebraic(b.series, p);
        rep.branches.push_back(std::move(b));
    }
    if (upq_degree(rest) >= 1) {
        auto factors = upq_squarefree(rest);
        for (size_t i = 0; i < factors.size(); ++i)
            for (size_t rep_count = 0; rep_count <= i; ++rep_count)
                if (upq_degree(factors[i]) >= 1)
                    rep.unlifted_degrees.push_back(upq_degree(factors[i]));
    }
    return rep;
}

int verify_algebraic(const TSeries& a, const MPoly& p) {
    if (a.order() < 0) throw domain_error("empty series");
    int avar = branch_variable(p);
    std::vector<MPoly> pos = coeffs_in_var(p, avar);
    int w = a.order();
    TSeries r = TSeries::from_mpoly(pos.back(), w);
    for (size_t j = pos.size() - 1; j-- > 0;)
        r = (r * a).truncate(w) + TSeries::from_mpoly(pos[j], w);
    for (int i = 0; i <= w; ++i)
        if (!r.coeff(i).is_zero()) return i - 1;
    return w;
}

Rat lagrange_coeff(const TSeries& phi, const TSeries& psi, int n) {
    if (n < 1) throw domain_error("coefficient index must be at least 1");
    if (phi.order() < n - 1 || psi.order() < n)
        throw domain_error("series order too small for the requested coefficient");
    if (phi.coeff_rat(0) == 0)
        throw domain_error("phi must not vanish at 0");
    TSeries w = psi.derive().truncate(n - 1) * phi.truncate(n - 1).pow(n);
    return w.coeff_rat(n - 1) / Rat(n);
}

namespace {

double log_abs_rat(const Rat& r) {
    long en, ed;
    double mn = mpz_get_d_2exp(&en, r.get_num_mpz_t());
    double md = mpz_get_d_2exp(&ed, r.get_den_mpz_t());
    return std::log(std::fabs(mn)) - std::log(std::fabs(md)) +
           (double)(en - ed) * std::log(2.0);
}

struct LineFit {
    double slope, intercept, slope_se;
};

LineFit least_squares(const std::vector<double>& x,
                      const std::vector<double>& y) {
    size_t m = x.size();
    double sx = 0, sy = 0;
    for (size_t i = 0; i < m; ++i) {
        sx += x[i];
        sy += y[i];
    }
    double mx = sx / (double)m, my = sy / (double)m;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < m; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    double ss = 0;
    for (size_t i = 0; i < m; ++i) {
        double r = y[i] - (f.intercept + f.slope * x[i]);
        ss += r * r;
    }
    f.slope_se = m > 2 ? std::sqrt(ss / (double)(m - 2) / sxx) : 0.0;
    return f;
}

Rat tiny_width() {
    Int d;
    mpz_ui_pow_ui(d.get_mpz_t(), 10, 24);
    Rat w(Int(1), d);
    w.canonicalize();
    return w;
}

}  // namespace

GrowthEstimate algebraic_asymptotics(const MPoly& p, const BranchSolution& branch,
                                     int n_fit) {
    if (n_fit < 24)
        throw domain_error("growth fit needs at least 24 coefficients");
    int avar = branch_variable(p);
    std::vector<MPoly> pos = coeffs_in_var(p, avar);
    BranchEq eq(pos);
    TSeries a = lift_branch(eq, branch.constant_term, n_fit);
    std::vector<Rat> coef = a.rational_coeffs();
    for (auto& r : coef)
        if (r < 0)
            throw domain_error(
                "branch has negative coefficients; no positive singularity "
                "argument applies");

    std::vector<RootEnclosure> cands;
    UPolyQ disc = to_upolyq(discriminant(pos));
    for (auto& e : positive_real_roots(disc, tiny_width())) cands.push_back(e);
    for (auto& e : positive_real_roots(to_upolyq(pos.back()), tiny_width()))
        cands.push_back(e);
    std::sort(cands.begin(), cands.end(),
              [](auto& l, auto& r) { return l.lo + l.hi < r.lo + r.hi; });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](auto& l, auto& r) { return r.lo <= l.hi; }),
                cands.end());
    if (cands.empty())
        throw domain_error("no positive real singularity candidate");

    // exponential growth from the tail of log |a_n|
    std::vector<double> xs, ys;
    for (int i = n_fit / 2; i <= n_fit; ++i) {
        if (coef[(size_t)i] == 0) continue;
        xs.push_back((double)i);
        ys.push_back(log_abs_rat(coef[(size_t)i]));
    }
    if (xs.size() < 8)
        throw domain_error("too few nonzero coefficients for a growth fit");
    double growth = least_squares(xs, ys).slope;  // ~ log(1/rho)

    size_t best = 0;
    double best_gap = 1e300;
    for (size_t i = 0; i < cands.size(); ++i) {
        double gap = std::fabs(std::log(cands[i].approx()) + growth);
        if (gap < best_gap) {
            best_gap = gap;
            best = i;
        }
    }
    if (best_gap > 0.25)
        throw domain_error("coefficient growth matches no singularity candidate");

    GrowthEstimate est;
    est.rho = cands[best];
    double log_rho = std::log(est.rho.approx());
    std::vector<double> lx, ly;
    for (size_t i = 0; i < xs.size(); ++i) {
        lx.push_back(std::log(xs[i]));
        ly.push_back(ys[i] + xs[i] * log_rho);
    }
    LineFit fit = least_squares(lx, ly);
    est.d = fit.slope;
    est.d_lo = fit.slope - 3 * fit.slope_se;
    est.d_hi = fit.slope + 3 * fit.slope_se;
    est.kappa_tilde = std::exp(fit.intercept);
    est.points = (int)lx.size();
    return est;
}

namespace {

// t-expansion of num/den with coefficients Laurent in svar; all variables of
// num and den must be t or svar and the denominator's t-constant part must
// be a single monomial.
TSeries slice_expand(MPoly num, MPoly den, int svar, int k, int n) {
    for (const MPoly* part : {&num, &den})
        for (auto& [m, c] : part->terms()) {
            (void)c;
            for (size_t v = 0; v < m.e.size(); ++v)
                if (m.e[v] != 0 && (int)v != VAR_T && (int)v != svar)
                    throw domain_error("slice input involves " +
                                       var_name((int)v));
            if (m.exponent(VAR_T) < 0)
                throw domain_error("negative power of t in slice input");
        }

    MPoly d0;
    for (auto& [m, c] : den.terms())
        if (m.exponent(VAR_T) == 0) d0.add_term(m, c);
    if (d0.num_terms() != 1)
        throw domain_error(
            "denominator must start from a single Laurent monomial at t^0");
    auto& [m0, c0] = *d0.terms().begin();
    Monomial minv = m0;
    for (auto& ex : minv.e) ex = -ex;
    minv.trim();
    MPoly scale = MPoly::term(minv, 1 / c0);
    num = num * scale;
    den = den * scale;

    TSeries expansion =
        (TSeries::from_mpoly(num, n) * TSeries::from_mpoly(den, n).invert())
            .truncate(n);
    std::vector<Rat> out;
    for (int i = 0; i <= n; ++i) {
        MPoly ci = expansion.coeff(i).coeff_of(svar, k);
        if (!ci.is_constant())
            throw domain_error("slice coefficient is not a constant");
        out.push_back(ci.as_constant());
    }
    return TSeries::from_rational(out);
}

}  // namespace

TSeries laurent_slice(const BiRatFun& f, int k, int n, SliceMode mode) {
    if (n < 0) throw domain_error("negative order");
    if (mode == SliceMode::slice)
        return slice_expand(f.num, f.den, f.svar, k, n);

    std::set<int> vars;
    for (const MPoly* part : {&f.num, &f.den})
        for (auto& [m, c] : part->terms()) {
            (void)c;
            for (size_t v = 0; v < m.e.size(); ++v) {
                if (m.e[v] == 0) continue;
                if ((int)v == VAR_T || (int)v == f.svar)
                    throw domain_error(
                        "diagonal input must use two free variables");
                vars.insert((int)v);
            }
        }
    if (vars.size() != 2)
        throw domain_error("diagonal input must use exactly two variables");
    int xv = *vars.begin(), yv = *std::next(vars.begin());
    MPoly up = MPoly::variable(VAR_T) * MPoly::variable(f.svar);
    MPoly down = MPoly::variable(VAR_T) * MPoly::variable(f.svar, -1);
    MPoly num = f.num.subst(xv, up).subst(yv, down);
    MPoly den = f.den.subst(xv, up).subst(yv, down);

    TSeries sl = slice_expand(num, den, f.svar, 0, 2 * n);
    std::vector<Rat> out;
    for (int i = 0; i <= 2 * n; ++i) {
        if (i % 2 == 1) {
            if (sl.coeff_rat(i) != 0)
                throw domain_error("diagonal has a nonzero odd coefficient");
            continue;
        }
        out.push_back(sl.coeff_rat(i));
    }
    return TSeries::from_rational(out);
}

}  // namespace gfkit

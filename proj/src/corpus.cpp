#include "gfkit/corpus.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "gfkit/algebraic.hpp"
#include "gfkit/automaton.hpp"
#include "gfkit/catalytic.hpp"
#include "gfkit/fixtures.hpp"
#include "gfkit/oracles.hpp"
#include "gfkit/parse.hpp"
#include "gfkit/polysys.hpp"
#include "gfkit/ratfun.hpp"
#include "gfkit/tseries.hpp"

namespace gfkit {

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return !checks.empty();
}

namespace {

void add_check(SuiteReport& r, std::string desc, std::string expected,
               std::string computed) {
    bool pass = expected == computed;
    r.checks.push_back(
        {std::move(desc), std::move(expected), std::move(computed), pass});
}

std::string join_ints(const std::vector<Int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s;
}

std::string join_rats(const std::vector<Rat>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].get_str();
    }
    return s;
}

std::string join_polys(const std::vector<MPoly>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ; ";
        s += v[i].str();
    }
    return s;
}

std::string series_heads(const TSeries& s, int upto) {
    std::vector<MPoly> v(s.coeffs().begin(), s.coeffs().begin() + upto + 1);
    return join_polys(v);
}

std::vector<Rat> head(const std::vector<Rat>& v, int upto) {
    return std::vector<Rat>(v.begin(), v.begin() + upto + 1);
}

Int binom(long n, long k) {
    Int r;
    if (k < 0 || k > n) return Int(0);
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

Int int_pow(long base, int e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), (unsigned long)base, (unsigned long)e);
    return r;
}

// exact rational that must be a whole number; renders fractions verbatim so
// a wrong closed form shows up as a failed comparison
std::string whole(const Rat& r) { return r.get_str(); }

void suite_cc_polyominoes(SuiteReport& r, Scale sc) {
    int n = sc == Scale::small ? 7 : 10;
    TSeries s = ratfun_expand(automaton_gf(ccpoly_automaton()), n);
    std::string engine = join_rats(s.rational_coeffs());
    add_check(r, "automaton series equals column DP counts, cells <= " +
                     std::to_string(n),
              join_ints(cc_polyomino_counts(n)), engine);

    static const char* ref[] = {"0",   "1",    "2",    "6",    "19",  "61",
                                "196", "629",  "2017", "6466", "20727"};
    std::string pinned;
    for (int i = 0; i <= n; ++i) {
        if (i) pinned += ", ";
        pinned += ref[i];
    }
    add_check(r, "automaton series equals the reference list", pinned, engine);

    auto rep = series_roots(fixture_equation("hard_quartic"), n);
    add_check(r, "quartic equation admits exactly one power series branch",
              "1", std::to_string(rep.branches.size()));
}

void suite_directed_animals(SuiteReport& r, Scale sc) {
    int ord = sc == Scale::small ? 24 : 49;
    int nb = sc == Scale::small ? 6 : 8;

    PolySystem sys{{var_id("H"), var_id("P")},
                   {parse_poly("t + t*H + t*H^2"), parse_poly("H + H*P")}};
    auto sol = canonical_solution(sys, ord);
    TSeries lhs = (sol[1] * (TSeries::one(ord) - sol[0]).invert()).truncate(ord);
    TSeries rhs = ratfun_expand(ratfun_parse("t", "1 - 3*t"), ord);
    add_check(r, "pyramids divided by 1 - half-pyramids equal t/(1-3t) through t^" +
                     std::to_string(ord),
              join_rats(rhs.rational_coeffs()), join_rats(lhs.rational_coeffs()));

    std::vector<Int> powers{Int(0)};
    Int p(1);
    for (int i = 1; i <= nb; ++i) {
        powers.push_back(p);
        p *= 3;
    }
    add_check(r, "compact-source animal counts are powers of three, n <= " +
                     std::to_string(nb),
              join_ints(powers), join_ints(compact_source_animal_counts(nb)));

    add_check(r, "single-source animal counts equal the pyramid series",
              join_ints(directed_animal_counts(1, nb)),
              join_rats(head(sol[1].rational_coeffs(), nb)));
}

void suite_dyck_area(SuiteReport& r, Scale sc) {
    int n = sc == Scale::small ? 6 : 9;
    std::vector<Int> powers;
    Int p(1);
    for (int i = 0; i <= n; ++i) {
        powers.push_back(p);
        p *= 4;
    }
    add_check(r, "area below all Dyck paths of length 2n sums to 4^n, n <= " +
                     std::to_string(n),
              join_ints(powers), join_ints(dyck_area_sums(n)));
}

void suite_embedded_trees(SuiteReport& r, Scale sc) {
    int n = sc == Scale::small ? 8 : 11;
    int jm = sc == Scale::small ? 2 : 4;
    int u = var_id("u");

    auto oracle = embedded_tree_histograms(jm, n, u);

    TSeries one = TSeries::one(n);
    TSeries T = one;
    for (int it = 0; it < n + 2; ++it)
        T = (one + (T * T).truncate(n - 1).shift_up(1)).truncate(n);

    TSeries Z = TSeries::zero(n);
    for (int it = 0; it < n + 2; ++it) {
        TSeries zz = (Z * Z).truncate(n);
        TSeries a = one + zz;
        a = (a * a).truncate(n);
        TSeries quot = (a * (one - Z + zz).invert()).truncate(n - 1);
        Z = quot.shift_up(1);
    }

    std::vector<TSeries> zp(jm + 7, one);
    for (int k = 1; k < (int)zp.size(); ++k) zp[k] = (zp[k - 1] * Z).truncate(n);

    MPoly um1 = MPoly::variable(u) - MPoly(Rat(1));
    TSeries denfix = ((one + Z) * (one + Z)).truncate(n);
    denfix = (denfix * (one + Z + zp[2])).truncate(n);
    TSeries om = one - Z;
    denfix = (denfix * ((om * om).truncate(n) * om).truncate(n)).truncate(n);

    TSeries mu = TSeries::zero(n);
    for (int it = 0; it < n + 2; ++it) {
        TSeries f1 = one + (mu * Z).truncate(n);
        f1 = (f1 * f1).truncate(n);
        TSeries f2 = one + (mu * zp[2]).truncate(n);
        TSeries f3 = one + (mu * zp[6]).truncate(n);
        TSeries den =
            (denfix *
             (one - ((mu * mu).truncate(n) * zp[5]).truncate(n))).truncate(n);
        TSeries num = ((Z * f1).truncate(n) * f2).truncate(n);
        num = (num * f3).truncate(n) * um1;
        mu = (num * den.invert()).truncate(n);
    }

    for (int j = 0; j <= jm; ++j) {
        TSeries sj = (T * (one + (mu * zp[j]).truncate(n))).truncate(n);
        sj = (sj * (one + (mu * zp[j + 5]).truncate(n))).truncate(n);
        TSeries dd = ((one + (mu * zp[j + 2]).truncate(n)) *
                      (one + (mu * zp[j + 3]).truncate(n))).truncate(n);
        sj = (sj * dd.invert()).truncate(n);
        add_check(r, "abscissa generating function matches the exhaustive tree "
                     "histogram, j = " + std::to_string(j),
                  series_heads(oracle[j], n), series_heads(sj, n));
    }
}

void suite_hypergeometric(SuiteReport& r, Scale sc) {
    int nm = sc == Scale::small ? 10 : 20;
    struct Triple {
        std::vector<int> a, b;
    };
    for (const Triple& tr :
         {Triple{{6, 1}, {3, 2, 2}}, Triple{{10, 1}, {5, 4, 2}},
          Triple{{20, 1}, {10, 7, 4}}}) {
        std::string label = "(";
        for (size_t i = 0; i < tr.a.size(); ++i)
            label += (i ? "," : "") + std::to_string(tr.a[i]);
        label += " | ";
        for (size_t i = 0; i < tr.b.size(); ++i)
            label += (i ? "," : "") + std::to_string(tr.b[i]);
        label += ")";

        int sa = 0, sb = 0;
        for (int x : tr.a) sa += x;
        for (int x : tr.b) sb += x;
        add_check(r, "factorial ratio " + label + ": numerator and denominator weights balance",
                  std::to_string(sa), std::to_string(sb));

        std::string want = "all values integral through n = " + std::to_string(nm);
        std::string got = want;
        for (int n = 0; n <= nm; ++n) {
            Rat f = hypergeometric_term(tr.a, tr.b, n);
            if (f.get_den() != 1) {
                got = "non-integer value " + f.get_str() + " at n = " +
                      std::to_string(n);
                break;
            }
        }
        add_check(r, "factorial ratio " + label + ": integrality", want, got);
    }
}

void suite_interval_parts(SuiteReport& r, Scale sc) {
    int ord = sc == Scale::small ? 80 : 200;
    int kmax = sc == Scale::small ? 5 : 7;
    for (int k = 1; k <= kmax; ++k) {
        int hi = (k % 2 == 1) ? 2 * k - 1 : 2 * k + 1;
        MPoly prod(Rat(1));
        for (int i = k; i <= hi; ++i)
            prod = prod * (MPoly(Rat(1)) - MPoly::variable(VAR_T, i));
        TSeries inv = TSeries::from_mpoly(prod, ord).invert();
        TSeries t = TSeries::t(ord);
        TSeries s = t + ((TSeries::one(ord) - t) * inv).truncate(ord);

        std::string want = "no negative coefficient through order " +
                           std::to_string(ord);
        std::string got = want;
        std::vector<Rat> c = s.rational_coeffs();
        for (int i = 0; i <= ord; ++i)
            if (c[i] < 0) {
                got = "negative coefficient " + c[i].get_str() + " at order " +
                      std::to_string(i);
                break;
            }
        add_check(r, "partition counts with parts in {" + std::to_string(k) +
                         ",...," + std::to_string(hi) + "} stay nonnegative",
                  want, got);
    }
}

void suite_kreweras(SuiteReport& r, Scale sc) {
    int len = sc == Scale::small ? 12 : 18;
    int lord = sc == Scale::small ? 6 : 10;
    int qn = sc == Scale::small ? 4 : 7;
    int u = var_id("u"), v = var_id("v");

    for (int i = 0; i <= 3; ++i) {
        auto axis = kreweras_axis_counts(i, len);
        std::vector<Int> got;
        std::vector<std::string> want;
        for (int n = 0; 3 * n + 2 * i <= len; ++n) {
            got.push_back(axis[3 * n + 2 * i]);
            Rat cf = Rat(int_pow(4, n)) * Rat(2 * i + 1) * Rat(binom(2 * i, i)) *
                     Rat(binom(3 * n + 2 * i, n));
            cf /= Rat((n + i + 1) * (2 * n + 2 * i + 1));
            want.push_back(whole(cf));
        }
        std::string wjoin;
        for (size_t m = 0; m < want.size(); ++m)
            wjoin += (m ? ", " : "") + want[m];
        add_check(r, "walks ending on the horizontal axis match the closed form, "
                     "i = " + std::to_string(i),
                  wjoin, join_ints(got));
    }

    int work = lord + 2;
    PolySystem wsys{{var_id("W")}, {parse_poly("2*t + t*W^3")}};
    TSeries W = canonical_solution(wsys, work)[0];
    TSeries one = TSeries::one(work), t = TSeries::t(work);
    TSeries G =
        (TSeries::constant(Rat(2), work) + ((W * W).truncate(work) * W).truncate(work))
            .invert();
    TSeries w2 = (W * W).truncate(work);
    MPoly U = MPoly::variable(u), V = MPoly::variable(v);
    MPoly Ubar = MPoly::variable(u, -1), Vbar = MPoly::variable(v, -1);

    TSeries squ = (one - w2 * U).sqrt();
    TSeries sqv = (one - w2 * V).sqrt();
    TSeries Nn = ((G - t * Ubar) * squ).truncate(work) +
                 ((G - t * Vbar) * sqv).truncate(work);
    TSeries K = TSeries::from_mpoly(
        parse_poly("u*v - t*u - t*v - t*u^2*v^2"), work);
    TSeries num = (Nn * (U * V)) - K;
    TSeries inner = one - t * (Ubar + Vbar + U * V);
    TSeries L = (num.shift_down(1) * inner.invert()).truncate(lord) *
                (MPoly::variable(u, -2) * MPoly::variable(v, -2));

    auto oracle = kreweras_walk_polys(lord, u, v);
    std::vector<MPoly> got(L.coeffs().begin(), L.coeffs().begin() + lord + 1);
    add_check(r, "closed form for walks by end point matches the DP through t^" +
                     std::to_string(lord),
              join_polys(oracle), join_polys(got));

    auto loops = quarter_plane_loop_counts(qn);
    std::vector<std::string> want;
    for (int n = 0; n <= qn; ++n) {
        Rat cf = Rat(binom(2 * n + 2, n + 1));
        cf *= cf;
        cf /= Rat((2 * n + 1) * (2 * n + 4));
        want.push_back(whole(cf));
    }
    std::string wjoin;
    for (size_t m = 0; m < want.size(); ++m) wjoin += (m ? ", " : "") + want[m];
    add_check(r, "square-lattice quarter-plane loops match the closed form, n <= " +
                     std::to_string(qn),
              wjoin, join_ints(loops));
}

void suite_lecture_hall(SuiteReport& r, Scale sc) {
    int kmax = sc == Scale::small ? 3 : 5;
    int w = sc == Scale::small ? 15 : 25;
    for (int k = 1; k <= kmax; ++k) {
        MPoly prod(Rat(1));
        for (int i = 1; i <= k; ++i)
            prod = prod * (MPoly(Rat(1)) - MPoly::variable(VAR_T, 2 * i - 1));
        TSeries s = TSeries::from_mpoly(prod, w).invert();
        add_check(r, "lecture hall partitions match the odd-part product, k = " +
                         std::to_string(k),
                  join_ints(lecture_hall_counts(k, w)),
                  join_rats(s.rational_coeffs()));
    }
}

void suite_planar_maps(SuiteReport& r, Scale sc) {
    int n1 = sc == Scale::small ? 15 : 30;
    int n2 = sc == Scale::small ? 8 : 15;

    auto rep = series_roots(fixture_equation("planar_maps"), n1);
    add_check(r, "map equation admits exactly one power series branch", "1",
              std::to_string(rep.branches.size()));
    if (rep.branches.empty()) return;
    const TSeries& Gb = rep.branches[0].series;

    std::vector<std::string> closed;
    for (int n = 0; n <= n1; ++n) {
        Rat g = Rat(2) * Rat(int_pow(3, n)) * Rat(binom(2 * n, n));
        g /= Rat((n + 1) * (n + 2));
        closed.push_back(whole(g));
    }
    std::string cjoin;
    for (size_t m = 0; m < closed.size(); ++m)
        cjoin += (m ? ", " : "") + closed[m];
    add_check(r, "map equation branch matches the closed counting formula, n <= " +
                     std::to_string(n1),
              cjoin, join_rats(Gb.rational_coeffs()));

    auto cs = solve_catalytic(CatalyticEquation(planar_map_catalytic()), n2);
    std::string chead;
    for (int m = 0; m <= n2; ++m) chead += (m ? ", " : "") + closed[m];
    add_check(r, "root-face recursion specialized at u = 1, n <= " +
                     std::to_string(n2),
              chead, join_rats(cs.g_at_1.rational_coeffs()));

    PolySystem bs{{var_id("B")}, {parse_poly("3*t + 6*t*B + 3*t*B^2")}};
    TSeries B = canonical_solution(bs, n1)[0];
    TSeries ob = TSeries::one(n1) + B;
    TSeries cube = ((ob * ob).truncate(n1) * ob).truncate(n1 - 1);
    TSeries G2 = ob - cube.shift_up(1);
    add_check(r, "balanced budding trees reproduce the map series, n <= " +
                     std::to_string(n1),
              join_rats(Gb.rational_coeffs()), join_rats(G2.rational_coeffs()));
}

void suite_slit_plane(SuiteReport& r, Scale sc) {
    int idn = sc == Scale::small ? 4 : 7;
    int sord = sc == Scale::small ? 6 : 10;
    int u = var_id("u"), v = var_id("v");
    int dp_len = std::max(2 * idn + 1, sord);
    auto polys = slit_walk_polys(dp_len, u, v);

    auto catalan = [](long n) {
        Int c = binom(2 * n, n);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), (unsigned long)(n + 1));
        return c;
    };
    auto endpoint = [&](int n, int i, int j) {
        return polys[n].coeff_of(u, i).coeff_of(v, j).as_constant();
    };

    std::vector<Int> want1, got1, want2, got2, want3, got3;
    for (int n = 0; n <= idn; ++n) {
        want1.push_back(catalan(2 * n + 1));
        got1.push_back(Int(endpoint(2 * n + 1, 1, 0).get_num()));
        want2.push_back(int_pow(4, n) * catalan(n));
        got2.push_back(Int(endpoint(2 * n + 1, 0, 1).get_num()));
    }
    for (int n = 1; n <= idn; ++n) {
        Int c = catalan(2 * n);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), 2);
        want3.push_back(c);
        got3.push_back(Int(endpoint(2 * n, -1, 1).get_num()));
    }
    add_check(r, "walks to (1,0) of odd length count odd Catalan numbers",
              join_ints(want1), join_ints(got1));
    add_check(r, "walks to (0,1) of odd length count 4^n Catalan(n)",
              join_ints(want2), join_ints(got2));
    add_check(r, "walks to (-1,1) of even length count half of Catalan(2n)",
              join_ints(want3), join_ints(got3));

    int work = sord + 2;
    TSeries one = TSeries::one(work), t = TSeries::t(work);
    MPoly U = MPoly::variable(u), V = MPoly::variable(v);
    MPoly Ubar = MPoly::variable(u, -1), Vbar = MPoly::variable(v, -1);
    TSeries sq1 = (one - t * Rat(4)).sqrt();
    TSeries sq2 = (one + t * Rat(4)).sqrt();
    TSeries A = (one - t * (MPoly(Rat(1)) + Ubar) * Rat(2) + sq1) * Rat(1, 2);
    TSeries Bb = (one + t * (MPoly(Rat(1)) - Ubar) * Rat(2) + sq2) * Rat(1, 2);
    TSeries den = one - t * (U + Ubar + V + Vbar);
    TSeries S =
        ((A.sqrt() * Bb.sqrt()).truncate(work) * den.invert()).truncate(sord);

    std::vector<MPoly> oracle(polys.begin(), polys.begin() + sord + 1);
    std::vector<MPoly> got(S.coeffs().begin(), S.coeffs().begin() + sord + 1);
    add_check(r, "closed form for walks by end point matches the DP through t^" +
                     std::to_string(sord),
              join_polys(oracle), join_polys(got));
}

void suite_triangulations(SuiteReport& r, Scale sc) {
    int n = sc == Scale::small ? 12 : 25;

    auto rep1 = series_roots(fixture_equation("triangulations"), n);
    std::string w1;
    for (int m = 0; m <= n; ++m) {
        Rat tn = Rat(int_pow(2, m)) * Rat(binom(3 * m, m));
        tn /= Rat((m + 1) * (2 * m + 1));
        w1 += (m ? ", " : "") + whole(tn);
    }
    add_check(r, "cubic-face map numbers match the closed formula, n <= " +
                     std::to_string(n),
              w1, rep1.branches.size() == 1
                      ? join_rats(rep1.branches[0].series.rational_coeffs())
                      : "branch count " + std::to_string(rep1.branches.size()));

    auto rep2 = series_roots(fixture_equation("two_stack_quartic"), n);
    std::string w2;
    for (int m = 0; m <= n; ++m) {
        Rat mn = Rat(2) * Rat(binom(4 * m + 1, m));
        mn /= Rat((m + 1) * (3 * m + 2));
        w2 += (m ? ", " : "") + whole(mn);
    }
    add_check(r, "simple-triangulation numbers match the closed formula, n <= " +
                     std::to_string(n),
              w2, rep2.branches.size() == 1
                      ? join_rats(rep2.branches[0].series.rational_coeffs())
                      : "branch count " + std::to_string(rep2.branches.size()));
}

using SuiteFn = void (*)(SuiteReport&, Scale);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg = {
        {"cc_polyominoes", suite_cc_polyominoes},
        {"directed_animals", suite_directed_animals},
        {"dyck_area", suite_dyck_area},
        {"embedded_trees", suite_embedded_trees},
        {"hypergeometric", suite_hypergeometric},
        {"interval_parts", suite_interval_parts},
        {"kreweras", suite_kreweras},
        {"lecture_hall", suite_lecture_hall},
        {"planar_maps", suite_planar_maps},
        {"slit_plane", suite_slit_plane},
        {"triangulations", suite_triangulations},
    };
    return reg;
}

} // namespace

std::vector<std::string> list_suites() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

SuiteReport run_suite(const std::string& name, Scale scale) {
    for (const auto& [n, fn] : registry()) {
        if (n != name) continue;
        SuiteReport rep;
        rep.suite = name;
        auto start = std::chrono::steady_clock::now();
        try {
            fn(rep, scale);
        } catch (const std::exception& e) {
            rep.checks.push_back(
                {"suite executes without errors", "no exception", e.what(), false});
        }
        rep.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return rep;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace gfkit

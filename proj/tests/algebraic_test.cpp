#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <vector>

#include "gfkit/algebraic.hpp"
#include "gfkit/fixtures.hpp"
#include "gfkit/parse.hpp"
#include "gfkit/polysys.hpp"

using namespace gfkit;

namespace {

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rat catalan(int n) {
    return Rat(binom(2 * (unsigned long)n, (unsigned long)n)) / Rat(n + 1);
}

// closed forms for the branch coefficients of three fixture equations
Rat planar_map_count(int n) {
    Rat p3(1);
    for (int i = 0; i < n; ++i) p3 *= 3;
    return 2 * p3 * Rat(binom(2 * (unsigned long)n, (unsigned long)n)) /
           Rat((n + 1) * (n + 2));
}

Rat triangulation_count(int n) {
    Rat p2(1);
    for (int i = 0; i < n; ++i) p2 *= 2;
    return p2 * Rat(binom(3 * (unsigned long)n, (unsigned long)n)) /
           Rat((n + 1) * (2 * n + 1));
}

Rat two_stack_count(int n) {
    return 2 * Rat(binom(4 * (unsigned long)n + 1, (unsigned long)n)) /
           Rat((n + 1) * (3 * n + 2));
}

// +-1 walk endpoint counts: number of length-n walks from 0 ending at k
std::vector<Int> walks_ending_at(int n_max, int k) {
    std::map<int, Int> at{{0, Int(1)}};
    std::vector<Int> out;
    auto grab = [&]() {
        auto it = at.find(k);
        out.push_back(it == at.end() ? Int(0) : it->second);
    };
    grab();
    for (int len = 1; len <= n_max; ++len) {
        std::map<int, Int> next;
        for (auto& [pos, cnt] : at) {
            next[pos + 1] += cnt;
            next[pos - 1] += cnt;
        }
        at = std::move(next);
        grab();
    }
    return out;
}

}  // namespace

TEST_CASE("series roots of the named equations") {
    SUBCASE("planar maps") {
        auto rep = series_roots(fixture_equation("planar_maps"), 20);
        REQUIRE(rep.branches.size() == 1);
        CHECK(rep.branches[0].constant_term == 1);
        CHECK(rep.infinite_branches == 1);
        CHECK(rep.ramified.empty());
        CHECK(rep.unlifted_degrees.empty());
        CHECK(rep.branches[0].residual_order == 20);
        for (int n = 0; n <= 20; ++n)
            CHECK(rep.branches[0].series.coeff_rat(n) == planar_map_count(n));
    }
    SUBCASE("tree equation has two branches") {
        auto rep = series_roots(parse_poly("a - t - a^2"), 20);
        REQUIRE(rep.branches.size() == 2);
        CHECK(rep.branches[0].constant_term == 0);
        CHECK(rep.branches[1].constant_term == 1);
        CHECK(rep.infinite_branches == 0);
        for (int n = 1; n <= 20; ++n)
            CHECK(rep.branches[0].series.coeff_rat(n) == catalan(n - 1));
        CHECK(rep.branches[0].residual_order == 20);
        CHECK(rep.branches[1].residual_order == 20);
        CHECK(rep.branches[1].series.coeff_rat(1) == -1);
    }
    SUBCASE("hard particles on the complete graph layout") {
        auto rep = series_roots(fixture_equation("hard_quartic"), 30);
        REQUIRE(rep.branches.size() == 1);
        CHECK(rep.branches[0].constant_term == 1);
        CHECK(rep.infinite_branches == 3);
        CHECK(rep.branches[0].residual_order == 30);
    }
    SUBCASE("vertex-weighted trees keep an irrational pair unexpanded") {
        auto rep = series_roots(fixture_equation("vtree"), 25);
        REQUIRE(rep.branches.size() == 2);
        CHECK(rep.branches[0].constant_term == 0);
        CHECK(rep.branches[1].constant_term == Rat(1, 2));
        CHECK(rep.infinite_branches == 0);
        CHECK(rep.ramified.empty());
        REQUIRE(rep.unlifted_degrees.size() == 1);
        CHECK(rep.unlifted_degrees[0] == 2);
        CHECK(rep.branches[0].residual_order == 25);
    }
    SUBCASE("triangulations") {
        auto rep = series_roots(fixture_equation("triangulations"), 15);
        REQUIRE(rep.branches.size() == 1);
        CHECK(rep.branches[0].constant_term == 1);
        CHECK(rep.infinite_branches == 2);
        for (int n = 0; n <= 15; ++n)
            CHECK(rep.branches[0].series.coeff_rat(n) ==
                  triangulation_count(n));
    }
    SUBCASE("two-stack-sortable permutations") {
        auto rep = series_roots(fixture_equation("two_stack_quartic"), 15);
        REQUIRE(rep.branches.size() == 1);
        CHECK(rep.branches[0].constant_term == 1);
        CHECK(rep.infinite_branches == 3);
        for (int n = 0; n <= 15; ++n)
            CHECK(rep.branches[0].series.coeff_rat(n) == two_stack_count(n));
    }
    SUBCASE("ramified origin is reported, not expanded") {
        auto rep = series_roots(parse_poly("a^2 - t"), 10);
        CHECK(rep.branches.empty());
        REQUIRE(rep.ramified.size() == 1);
        CHECK(rep.ramified[0] == 0);
        CHECK(rep.unlifted_degrees.empty());
        CHECK(rep.infinite_branches == 0);
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(series_roots(parse_poly("a^2 - 2*t*a + t^2"), 5),
                        domain_error);
        CHECK_THROWS_AS(series_roots(parse_poly("t*a - t"), 5), domain_error);
        CHECK_THROWS_AS(series_roots(parse_poly("a*y - t"), 5), domain_error);
        CHECK_THROWS_AS(series_roots(parse_poly("t^2 - t"), 5), domain_error);
        CHECK_THROWS_AS(series_roots(MPoly(), 5), domain_error);
    }
    SUBCASE("order zero") {
        auto rep = series_roots(parse_poly("a - t - a^2"), 0);
        REQUIRE(rep.branches.size() == 2);
        CHECK(rep.branches[0].series.order() == 0);
        CHECK(rep.branches[0].series.coeff_rat(0) == 0);
    }
}

TEST_CASE("residual order of a claimed solution") {
    SUBCASE("independently iterated tree series satisfies its equation") {
        PolySystem s;
        s.unknowns = {var_id("Vfix")};
        s.rhs = {parse_poly("t + 5*Vfix^2 - 9*Vfix^3 + 6*Vfix^4")};
        TSeries v = canonical_solution(s, 25)[0];
        CHECK(verify_algebraic(v, fixture_equation("vtree")) == 25);
    }
    SUBCASE("shifted Catalan satisfies the tree equation") {
        std::vector<Rat> c{Rat(0)};
        for (int n = 1; n <= 18; ++n) c.push_back(catalan(n - 1));
        CHECK(verify_algebraic(TSeries::from_rational(c),
                               parse_poly("a - t - a^2")) == 18);
    }
    SUBCASE("wrong series fail early") {
        std::vector<Rat> ones(12, Rat(1));
        CHECK(verify_algebraic(TSeries::from_rational(ones),
                               parse_poly("a - t - a^2")) == 0);
        std::vector<Rat> fives(12, Rat(5));
        CHECK(verify_algebraic(TSeries::from_rational(fives),
                               parse_poly("a - t - a^2")) == -1);
    }
    SUBCASE("truncated correctness is reported exactly") {
        std::vector<Rat> c{Rat(0)};
        for (int n = 1; n <= 12; ++n) c.push_back(catalan(n - 1));
        c[9] += 7;
        CHECK(verify_algebraic(TSeries::from_rational(c),
                               parse_poly("a - t - a^2")) == 8);
    }
}

TEST_CASE("coefficient extraction through inversion") {
    TSeries phi = TSeries::from_rational({Rat(1), Rat(2), Rat(1)});
    TSeries id = TSeries::t(6);
    SUBCASE("squared binomial") {
        std::vector<Rat> pad = {Rat(1), Rat(2), Rat(1), Rat(0), Rat(0)};
        TSeries p = TSeries::from_rational(pad);
        CHECK(lagrange_coeff(p, id, 3) == 5);
        CHECK(lagrange_coeff(p, id, 1) == 1);
    }
    SUBCASE("geometric kernel gives shifted Catalan") {
        std::vector<Rat> ones(8, Rat(1));
        TSeries geo = TSeries::from_rational(ones);
        CHECK(lagrange_coeff(geo, TSeries::t(8), 4) == 5);
        for (int n = 1; n <= 7; ++n)
            CHECK(lagrange_coeff(geo, TSeries::t(8), n) == catalan(n - 1));
    }
    SUBCASE("agrees with direct fixed-point iteration") {
        std::mt19937 rng(777);
        std::uniform_int_distribution<int> cd(-3, 3), c0(1, 3), degd(1, 4),
            nd(1, 10);
        for (int trial = 0; trial < 20; ++trial) {
            int deg = degd(rng);
            std::vector<Rat> pc{Rat(c0(rng))};
            for (int j = 1; j <= deg; ++j) pc.push_back(Rat(cd(rng)));
            pc.resize(12, Rat(0));
            TSeries phi_t = TSeries::from_rational(pc);
            TSeries u = TSeries::zero(10);
            for (int pass = 0; pass < 12; ++pass)
                u = phi_t.truncate(9).compose(u.truncate(9)).shift_up(1);
            int n = nd(rng);
            CHECK(lagrange_coeff(phi_t, TSeries::t(11), n) == u.coeff_rat(n));
        }
    }
    SUBCASE("rejections") {
        CHECK_THROWS_AS(lagrange_coeff(phi, id, 0), domain_error);
        CHECK_THROWS_AS(lagrange_coeff(phi, id, 9), domain_error);
        TSeries zero_start = TSeries::t(6);
        CHECK_THROWS_AS(lagrange_coeff(zero_start, id, 2), domain_error);
    }
}

TEST_CASE("growth estimates from exact coefficients") {
    SUBCASE("shifted Catalan radius is exactly 1/4") {
        auto rep = series_roots(parse_poly("a - t - a^2"), 4);
        auto est = algebraic_asymptotics(parse_poly("a - t - a^2"),
                                         rep.branches[0], 300);
        CHECK(est.rho.lo <= Rat(1, 4));
        CHECK(Rat(1, 4) <= est.rho.hi);
        CHECK(est.d > -1.7);
        CHECK(est.d < -1.3);
        CHECK(est.kappa_tilde > 0.0);
        CHECK(est.points >= 100);
    }
    SUBCASE("tree equation singularity near 0.065") {
        auto rep = series_roots(fixture_equation("vtree"), 4);
        auto est = algebraic_asymptotics(fixture_equation("vtree"),
                                         rep.branches[0], 500);
        CHECK(est.rho.approx() > 0.064);
        CHECK(est.rho.approx() < 0.066);
        CHECK(est.d > -1.65);
        CHECK(est.d < -1.35);
    }
    SUBCASE("rational degenerate case") {
        MPoly p = parse_poly("(1 - 2*t)*a - 1");
        auto rep = series_roots(p, 4);
        REQUIRE(rep.branches.size() == 1);
        auto est = algebraic_asymptotics(p, rep.branches[0], 200);
        CHECK(est.rho.lo <= Rat(1, 2));
        CHECK(Rat(1, 2) <= est.rho.hi);
        CHECK(est.d > -0.05);
        CHECK(est.d < 0.05);
    }
    SUBCASE("negative coefficients are rejected") {
        auto rep = series_roots(parse_poly("a - t - a^2"), 4);
        CHECK_THROWS_AS(algebraic_asymptotics(parse_poly("a - t - a^2"),
                                              rep.branches[1], 100),
                        domain_error);
    }
    SUBCASE("no candidate singularity") {
        auto rep = series_roots(parse_poly("a - t"), 4);
        CHECK_THROWS_AS(
            algebraic_asymptotics(parse_poly("a - t"), rep.branches[0], 100),
            domain_error);
    }
}

TEST_CASE("Laurent slices and diagonals") {
    int s = var_id("s");
    SUBCASE("diagonal of the complete bivariate geometric series") {
        BiRatFun f(MPoly(Rat(1)), parse_poly("1 - x - y"), s);
        TSeries d = laurent_slice(f, 0, 12, SliceMode::diagonal);
        for (int n = 0; n <= 12; ++n)
            CHECK(d.coeff_rat(n) ==
                  Rat(binom(2 * (unsigned long)n, (unsigned long)n)));
    }
    SUBCASE("diagonal of a product of geometric series") {
        BiRatFun f(MPoly(Rat(1)), parse_poly("(1 - x)*(1 - y)"), s);
        TSeries d = laurent_slice(f, 0, 10, SliceMode::diagonal);
        for (int n = 0; n <= 10; ++n) CHECK(d.coeff_rat(n) == 1);
    }
    SUBCASE("central slice of the two-step walk kernel") {
        BiRatFun f(MPoly(Rat(1)), parse_poly("1 - t*(s + s^-1)"), s);
        TSeries sl = laurent_slice(f, 0, 16, SliceMode::slice);
        auto oracle = walks_ending_at(16, 0);
        for (int n = 0; n <= 16; ++n)
            CHECK(sl.coeff_rat(n) == Rat(oracle[(size_t)n]));
    }
    SUBCASE("off-center slice counts walks ending one step up") {
        BiRatFun f(MPoly(Rat(1)), parse_poly("1 - t*(s + s^-1)"), s);
        TSeries sl = laurent_slice(f, 1, 15, SliceMode::slice);
        auto oracle = walks_ending_at(15, 1);
        for (int n = 0; n <= 15; ++n)
            CHECK(sl.coeff_rat(n) == Rat(oracle[(size_t)n]));
    }
    SUBCASE("slice of a plain rational series") {
        BiRatFun f(MPoly(Rat(1)), parse_poly("1 - 2*t"), s);
        TSeries sl = laurent_slice(f, 0, 10, SliceMode::slice);
        Rat pw(1);
        for (int n = 0; n <= 10; ++n) {
            CHECK(sl.coeff_rat(n) == pw);
            pw *= 2;
        }
    }
    SUBCASE("rejections") {
        BiRatFun bad_t(MPoly(Rat(1)), parse_poly("1 - x - t"), s);
        CHECK_THROWS_AS(laurent_slice(bad_t, 0, 5, SliceMode::diagonal),
                        domain_error);
        BiRatFun three(MPoly(Rat(1)), parse_poly("1 - x - y - u"), s);
        CHECK_THROWS_AS(laurent_slice(three, 0, 5, SliceMode::diagonal),
                        domain_error);
        BiRatFun nonmono(MPoly(Rat(1)), parse_poly("1 - s - t"), s);
        CHECK_THROWS_AS(laurent_slice(nonmono, 0, 5, SliceMode::slice),
                        domain_error);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "gfkit/algebraic.hpp"
#include "gfkit/fixtures.hpp"
#include "gfkit/guess.hpp"
#include "gfkit/parse.hpp"
#include "gfkit/ratfun.hpp"
#include "gfkit/upoly.hpp"

using namespace gfkit;

namespace {

std::vector<Rat> catalan_seq(int len, bool shifted) {
    std::vector<Rat> out;
    Int c(1);
    if (shifted) out.push_back(Rat(0));
    for (int n = 0; (int)out.size() < len; ++n) {
        out.push_back(Rat(c));
        c = c * 2 * (2 * n + 1) / (n + 2);
    }
    return out;
}

Rat rnd_rat(std::mt19937& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Rat(d(rng));
}

} // namespace

TEST_CASE("rational guesses from pinned sequences") {
    // loops in a two-letter automaton counted by a degree (4,3) function
    std::vector<Rat> walk = {Rat(0),    Rat(1),    Rat(2),    Rat(6),
                             Rat(19),   Rat(61),   Rat(196),  Rat(629),
                             Rat(2017), Rat(6466), Rat(20727)};
    auto g = guess_rational(walk, 4, 3);
    REQUIRE(g.has_value());
    CHECK(g->kind == GuessResult::Kind::rational);
    RatFun expected = ratfun_parse("t - 3*t^2 + 3*t^3 - t^4",
                                   "1 - 5*t + 7*t^2 - 4*t^3");
    CHECK(g->fun.equals(expected));
    CHECK(g->used == 8);
    CHECK(g->validated == 3);

    // the expansion of the guess reproduces the data
    TSeries back = ratfun_expand(g->fun, (int)walk.size() - 1);
    for (size_t i = 0; i < walk.size(); ++i)
        CHECK(back.coeff_rat((int)i) == walk[i]);

    std::vector<Rat> ones(10, Rat(1));
    auto h = guess_rational(ones, 2, 2);
    REQUIRE(h.has_value());
    CHECK(h->fun.equals(ratfun_parse("1", "1 - t")));
    CHECK(h->used == 2);
    CHECK(h->validated == 8);

    std::vector<Rat> fib = {Rat(0),  Rat(1),  Rat(1),  Rat(2),
                            Rat(3),  Rat(5),  Rat(8),  Rat(13),
                            Rat(21), Rat(34), Rat(55), Rat(89)};
    auto f = guess_rational(fib, 2, 2);
    REQUIRE(f.has_value());
    CHECK(f->fun.equals(ratfun_parse("t", "1 - t - t^2")));
    CHECK(f->used == 4);
    CHECK(f->validated == 8);

    // Catalan numbers satisfy no small linear recurrence with constant
    // numerator window, so every candidate fails its validation rows
    CHECK_FALSE(guess_rational(catalan_seq(12, false), 4, 4).has_value());

    // ten walk coefficients cannot confirm the (4,3) window, and no smaller
    // window represents the function
    std::vector<Rat> short_walk(walk.begin(), walk.end() - 1);
    CHECK_FALSE(guess_rational(short_walk, 4, 3).has_value());

    std::vector<Rat> zeros(10, Rat(0));
    auto z = guess_rational(zeros, 2, 2);
    REQUIRE(z.has_value());
    CHECK(z->fun.equals(RatFun()));
    CHECK(z->used == 1);

    CHECK_THROWS_AS((void)guess_rational({Rat(1), Rat(2), Rat(3)}, 1, 1),
                    std::domain_error);
    CHECK_THROWS_AS((void)guess_rational({}, 1, 1), std::domain_error);
    CHECK_THROWS_AS((void)guess_rational(ones, -1, 2), std::invalid_argument);
}

TEST_CASE("random rational functions round-trip through the guesser") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        int dn = deg(rng), dd = deg(rng);
        UPolyQ num(dn + 1), den(dd + 1);
        for (auto& c : num) c = rnd_rat(rng, -5, 5);
        for (auto& c : den) c = rnd_rat(rng, -5, 5);
        den[0] = rnd_rat(rng, 1, 5);
        RatFun f(upolyt_from_rational(upq_trim(num)),
                 upolyt_from_rational(upq_trim(den)));

        std::vector<Rat> data = ratfun_expand(f, 29).rational_coeffs();
        auto g = guess_rational(data, 4, 4);
        REQUIRE(g.has_value());
        CHECK(g->fun.equals(f));
        CHECK(g->validated >= 3);
    }
}

TEST_CASE("algebraic guesses recover the named equations") {
    MPoly vt = fixture_equation("vtree");
    auto report = series_roots(vt, 11);
    REQUIRE(report.branches.size() == 2);
    REQUIRE(report.branches[0].constant_term == 0);
    std::vector<Rat> vdata = report.branches[0].series.rational_coeffs();
    REQUIRE(vdata.size() == 12);

    auto g = guess_algebraic(vdata, 1, 4);
    REQUIRE(g.has_value());
    CHECK(g->kind == GuessResult::Kind::algebraic);
    bool sign_match =
        g->equation == vt || g->equation == vt * MPoly(Rat(-1));
    CHECK(sign_match);
    CHECK(g->used == 9);
    CHECK(g->validated == 3);
    CHECK(verify_algebraic(report.branches[0].series, g->equation) == 11);

    // shifted Catalan series satisfies a^2 - a + t = 0
    auto c = guess_algebraic(catalan_seq(12, true), 1, 2);
    REQUIRE(c.has_value());
    CHECK(c->equation == parse_poly("a^2 - a + t"));
    CHECK(c->used == 5);
    CHECK(c->validated == 7);

    // geometric series as a degree (1,1) algebraic function
    std::vector<Rat> pow2;
    Int p(1);
    for (int i = 0; i < 12; ++i) { pow2.push_back(Rat(p)); p *= 2; }
    auto q = guess_algebraic(pow2, 1, 1);
    REQUIRE(q.has_value());
    CHECK(q->equation == parse_poly("2*t*a - a + 1"));

    // factorials outgrow every small algebraic equation
    std::vector<Rat> fact;
    Int fv(1);
    for (int i = 0; i < 12; ++i) { fact.push_back(Rat(fv)); fv *= (i + 1); }
    CHECK_FALSE(guess_algebraic(fact, 1, 2).has_value());

    // the zero series is annihilated by the smallest monomial involving a
    std::vector<Rat> zeros(10, Rat(0));
    auto z = guess_algebraic(zeros, 1, 1);
    REQUIRE(z.has_value());
    CHECK(z->equation == parse_poly("a"));

    std::vector<Rat> short_v(vdata.begin(), vdata.end() - 1);
    CHECK_THROWS_AS((void)guess_algebraic(short_v, 1, 4), std::domain_error);
    CHECK_THROWS_AS((void)guess_algebraic(vdata, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)guess_algebraic(vdata, -1, 2), std::invalid_argument);
}

TEST_CASE("guessed equations annihilate random algebraic branches") {
    std::mt19937 rng(1313);
    int done = 0;
    while (done < 10) {
        // quadratic in the series variable with distinct rational head roots
        Rat r = rnd_rat(rng, 1, 3);
        Rat s = r + rnd_rat(rng, 1, 3);
        int avar = var_id("a");
        MPoly head = (MPoly::variable(avar) - MPoly(r)) *
                     (MPoly::variable(avar) - MPoly(s));
        MPoly pert = MPoly(rnd_rat(rng, 1, 3)) +
                     MPoly::variable(avar) * MPoly(rnd_rat(rng, -2, 2));
        MPoly p = head - MPoly::variable(VAR_T) * pert;

        SeriesRootReport rep;
        try {
            rep = series_roots(p, 17);
        } catch (const std::domain_error&) {
            continue; // squarefree or head condition failed, draw again
        }
        if (rep.branches.empty()) continue;

        for (const auto& b : rep.branches) {
            std::vector<Rat> data = b.series.rational_coeffs();
            auto g = guess_algebraic(data, 1, 2);
            REQUIRE(g.has_value());
            CHECK(g->equation.degree(avar) >= 1);
            CHECK(g->validated >= 3);
            CHECK(verify_algebraic(b.series, g->equation) == 17);
        }
        ++done;
    }
}

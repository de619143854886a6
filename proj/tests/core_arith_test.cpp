#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gfkit/linalg.hpp"
#include "gfkit/mpoly.hpp"
#include "gfkit/parse.hpp"
#include "gfkit/rat.hpp"
#include "gfkit/ratfun.hpp"
#include "gfkit/tseries.hpp"
#include "gfkit/upoly.hpp"

using namespace gfkit;

namespace {

MPoly P(const std::string& s) { return parse_poly(s); }

Rat rnd_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

TSeries rnd_series(std::mt19937& rng, int order, bool with_x = false) {
    TSeries s(order);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int i = 0; i <= order; ++i) {
        MPoly c(rnd_rat(rng));
        if (with_x && coin(rng) == 0)
            c += MPoly::variable(var_id("x")) * rnd_rat(rng);
        s.set_coeff(i, c);
    }
    return s;
}

// independent first-row cofactor expansion, used as the determinant oracle
MPoly cofactor_det(const PolyMatrix& m) {
    size_t n = m.size();
    if (n == 0) return MPoly(1);
    if (n == 1) return m[0][0];
    MPoly acc;
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        PolyMatrix minor(n - 1, std::vector<MPoly>(n - 1));
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = m[r][c];
            }
        }
        MPoly t = m[0][j] * cofactor_det(minor);
        if (j % 2 == 0) acc += t; else acc -= t;
    }
    return acc;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(rat_parse("3/6") == Rat(1, 2));
    CHECK(rat_parse("-14") == Rat(-14));
    CHECK(rat_str(Rat(-3, 7)) == "-3/7");
    CHECK(rat_str(Rat(5)) == "5");
    CHECK(rat_is_int(rat_parse("8/2")));
    CHECK(!rat_is_int(Rat(1, 3)));
    CHECK_THROWS_AS(rat_parse("1/0"), parse_error);
    CHECK_THROWS_AS(rat_parse("abc"), parse_error);
    CHECK(rat_sign(Rat(-2, 5)) == -1);
    CHECK(rat_sign(Rat(0)) == 0);
}

TEST_CASE("polynomial parsing round trips through str") {
    const char* exprs[] = {
        "0",
        "1 - 4*t",
        "x^2*y - 3*t + 1/2",
        "1 - 5*t + 7*t^2 - 4*t^3",
        "t*u^3*v - u*v + 7",
    };
    for (const char* e : exprs) {
        MPoly p = P(e);
        CHECK(P(p.str()) == p);
    }
}

TEST_CASE("polynomial parser rejects malformed input with position info") {
    try {
        parse_poly("1 + (2*t");
        CHECK(false);
    } catch (const parse_error& err) {
        CHECK(std::string(err.what()).find(":") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_poly("1 +"), parse_error);
    CHECK_THROWS_AS(parse_poly("t / x"), parse_error);
    CHECK_THROWS_AS(parse_poly("x ^ y"), parse_error);
    CHECK_THROWS_AS(parse_poly("1/0"), parse_error);
}

TEST_CASE("polynomial ring identities on random elements") {
    std::mt19937 rng(12345);
    auto rnd_poly = [&](int nvars) {
        MPoly p;
        std::uniform_int_distribution<int> ex(0, 3), nt(1, 5);
        int terms = nt(rng);
        for (int i = 0; i < terms; ++i) {
            Monomial m;
            for (int v = 0; v < nvars; ++v) m.set(v, ex(rng));
            p.add_term(m, rnd_rat(rng));
        }
        return p;
    };
    for (int it = 0; it < 50; ++it) {
        MPoly a = rnd_poly(3), b = rnd_poly(3), c = rnd_poly(3);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MPoly());
        CHECK(a * MPoly(1) == a);
        CHECK((a * b).is_zero() == (a.is_zero() || b.is_zero()));
    }
}

TEST_CASE("polynomial substitution, powers and derivatives") {
    int x = var_id("x"), y = var_id("y");
    MPoly p = P("x^2*y + 3*x - 1");
    CHECK(p.subst(x, Rat(2)) == P("4*y + 5"));
    CHECK(p.subst(x, P("1 + y")) == P("y^3 + 2*y^2 + 4*y + 2"));
    CHECK(p.derivative(x) == P("2*x*y + 3"));
    CHECK(p.derivative(y) == P("x^2"));
    CHECK(P("1 + x").pow(3) == P("1 + 3*x + 3*x^2 + x^3"));
    CHECK(P("x*y").pow(-2) == P("x^-2 * y^-2"));
    CHECK_THROWS_AS(P("1 + x").pow(-1), domain_error);
    CHECK(p.degree(x) == 2);
    CHECK(p.total_degree() == 3);
    CHECK(P("x^-2*y").min_exponent(x) == -2);
}

TEST_CASE("polynomial exact division") {
    MPoly a = P("1 - 4*t + 4*t^2"), b = P("1 - 2*t");
    CHECK(a.exact_div(b) == b);
    MPoly c = P("x^2 - y^2");
    CHECK(c.exact_div(P("x - y")) == P("x + y"));
    CHECK_THROWS_AS(P("1 + t").exact_div(P("t")), domain_error);
    CHECK_THROWS_AS(P("x^2 + 1").exact_div(P("x + 1")), domain_error);
}

TEST_CASE("dense rational polynomial helpers") {
    // gcd is monic
    UPolyQ a = {Rat(-1), Rat(0), Rat(1)};        // x^2 - 1
    UPolyQ b = {Rat(1), Rat(2), Rat(1)};         // (x+1)^2
    UPolyQ g = upq_gcd(a, b);
    CHECK(g == UPolyQ{Rat(1), Rat(1)});
    CHECK(upq_gcd(a, UPolyQ{}) == UPolyQ{Rat(-1), Rat(0), Rat(1)});

    // remainder: x^3 mod (x^2 - 1) = x
    UPolyQ r = upq_rem({Rat(0), Rat(0), Rat(0), Rat(1)}, a);
    CHECK(r == UPolyQ{Rat(0), Rat(1)});

    UPolyQ prod = upq_mul(a, b);
    CHECK(upq_div_exact(prod, b) == a);
    CHECK_THROWS_AS(upq_div_exact({Rat(1), Rat(1)}, {Rat(0), Rat(1)}),
                    domain_error);

    // Yun decomposition of (1-t)^3 (1+t)
    UPolyQ p = upq_mul(upq_mul(upq_mul({Rat(1), Rat(-1)}, {Rat(1), Rat(-1)}),
                               {Rat(1), Rat(-1)}),
                       {Rat(1), Rat(1)});
    auto sf = upq_squarefree(p);
    REQUIRE(sf.size() == 3);
    CHECK(sf[0] == UPolyQ{Rat(1), Rat(1)});
    CHECK(sf[1].size() <= 1);
    CHECK(sf[2] == UPolyQ{Rat(-1), Rat(1)});
    // recombine: p = lc * prod sf[i]^(i+1)
    UPolyQ rec = {p.back()};
    for (size_t i = 0; i < sf.size(); ++i)
        for (size_t k = 0; k <= i; ++k) rec = upq_mul(rec, sf[i]);
    CHECK(rec == p);
}

TEST_CASE("polynomials in t with free coefficients") {
    MPoly p = P("1 - (3+x)*t + (1+3*x)*t^2 - 2*x*t^3 + (x-y)*t^4");
    UPolyT u = UPolyT::from_mpoly(p);
    CHECK(u.degree() == 4);
    CHECK(u.coeff(1) == P("-3 - x"));
    CHECK(u.coeff(4) == P("x - y"));
    CHECK(u.to_mpoly() == p);
    CHECK(u.eval(Rat(0)) == MPoly(1));
    CHECK_THROWS_AS(UPolyT::from_mpoly(P("t^-1 + x")), domain_error);

    UPolyT a = UPolyT::from_mpoly(P("1 + t"));
    UPolyT b = UPolyT::from_mpoly(P("1 - t"));
    CHECK((a * b).to_mpoly() == P("1 - t^2"));
    CHECK((a + b).to_mpoly() == P("2"));
    CHECK(a.derivative().to_mpoly() == MPoly(1));
    CHECK(!u.rational_coeffs());
    CHECK(a.rational_coeffs());
    CHECK(a.to_rational() == UPolyQ{Rat(1), Rat(1)});
}

TEST_CASE("series ring laws at order 12") {
    std::mt19937 rng(777);
    for (int it = 0; it < 25; ++it) {
        TSeries a = rnd_series(rng, 12, true);
        TSeries b = rnd_series(rng, 12, true);
        TSeries c = rnd_series(rng, 12, true);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a * TSeries::one(12) == a);
    }
}

TEST_CASE("series order tracking under multiplication") {
    // product order improves with the valuation of the other factor
    TSeries a = TSeries::t(5) * TSeries::t(5);   // t^2, order 6
    CHECK(a.order() == 6);
    CHECK(a.valuation() == 2);
    TSeries b = TSeries::one(4);
    CHECK((a * b).order() == 6);
    TSeries c = a * a;
    CHECK(c.order() == 8);
    CHECK(c.coeff_rat(4) == Rat(1));
}

TEST_CASE("series inversion") {
    std::mt19937 rng(31337);
    for (int it = 0; it < 10; ++it) {
        TSeries a = rnd_series(rng, 12, it % 2 == 0);
        if (!a.coeff(0).is_constant() || a.coeff(0).is_zero())
            a.set_coeff(0, MPoly(Rat(1 + it)));
        TSeries prod = a * a.invert();
        CHECK(prod.matches(TSeries::one(12), 12));
    }
    // geometric series
    TSeries g = (TSeries::one(10) - TSeries::t(10)).invert();
    for (int i = 0; i <= 10; ++i) CHECK(g.coeff_rat(i) == Rat(1));
    CHECK_THROWS_AS(TSeries::t(5).invert(), domain_error);
}

TEST_CASE("series square root") {
    std::mt19937 rng(999);
    for (int it = 0; it < 10; ++it) {
        TSeries a = rnd_series(rng, 12, true);
        a.set_coeff(0, MPoly(Rat(1)));
        TSeries s = a.sqrt();
        CHECK((s * s).matches(a, 12));
    }
    // sqrt(1-4t) gives Catalan numbers: (1 - sqrt(1-4t))/2 = sum C_{n-1} t^n
    TSeries f = TSeries::from_mpoly(P("1 - 4*t"), 10).sqrt();
    TSeries cat = (TSeries::one(10) - f) * Rat(1, 2);
    Rat expect[] = {Rat(0), Rat(1), Rat(1), Rat(2), Rat(5), Rat(14), Rat(42)};
    for (int i = 0; i <= 6; ++i) CHECK(cat.coeff_rat(i) == expect[i]);
    // perfect-square rational constants are fine, others are not
    CHECK(TSeries::from_mpoly(P("9/4"), 3).sqrt().coeff_rat(0) == Rat(3, 2));
    CHECK_THROWS_AS(TSeries::from_mpoly(P("2"), 3).sqrt(), domain_error);
    CHECK_THROWS_AS(TSeries::from_mpoly(P("-1"), 3).sqrt(), domain_error);
}

TEST_CASE("series composition, derivative, shifts") {
    // exp-like check via formal identities: D(f o g) = (Df o g) * Dg
    std::mt19937 rng(4242);
    for (int it = 0; it < 8; ++it) {
        TSeries f = rnd_series(rng, 10);
        TSeries g = rnd_series(rng, 10);
        g.set_coeff(0, MPoly());
        TSeries lhs = f.compose(g).derive();
        TSeries rhs = f.derive().compose(g.truncate(9)) * g.derive();
        int upto = std::min(lhs.order(), rhs.order());
        CHECK(lhs.matches(rhs, upto));
    }
    CHECK_THROWS_AS(TSeries::one(5).compose(TSeries::one(5)), domain_error);

    TSeries s = TSeries::from_mpoly(P("t^2 + 2*t^3"), 6);
    CHECK(s.shift_down(2).coeff_rat(0) == Rat(1));
    CHECK(s.shift_down(2).coeff_rat(1) == Rat(2));
    CHECK(s.shift_down(2).order() == 4);
    CHECK(s.shift_up(1).coeff_rat(3) == Rat(1));
    CHECK(s.shift_up(1).order() == 7);
    CHECK_THROWS_AS(TSeries::one(5).shift_down(1), domain_error);

    TSeries d = TSeries::from_mpoly(P("1 + 3*t + 5*t^2"), 5).derive();
    CHECK(d.coeff_rat(0) == Rat(3));
    CHECK(d.coeff_rat(1) == Rat(10));
    CHECK(d.order() == 4);
}

TEST_CASE("rational function normalization") {
    RatFun f(UPolyT::from_mpoly(P("2 + 2*t")), UPolyT::from_mpoly(P("4 + 4*t")));
    CHECK(f.num.degree() == 0);
    CHECK(f.den.degree() == 0);
    CHECK(f.equals(ratfun_parse("1", "2")));

    RatFun g = ratfun_parse("t - t^2", "1 - t^2");
    // common factor 1-t cancels, denominator constant term positive
    CHECK(g.den.to_mpoly() == P("1 + t"));
    CHECK(g.num.to_mpoly() == P("t"));

    RatFun h = ratfun_parse("1", "-1 + 2*t");
    CHECK(h.den.coeff(0).as_constant() > 0);
    CHECK(h.equals(ratfun_parse("-1", "1 - 2*t")));
    CHECK(ratfun_parse("t^2", "1").is_polynomial());
    CHECK(!g.is_polynomial());
}

TEST_CASE("rational function expansion") {
    RatFun f = ratfun_parse("1", "1 - 2*t");
    TSeries s = ratfun_expand(f, 12);
    Rat pw(1);
    for (int i = 0; i <= 12; ++i, pw *= 2) CHECK(s.coeff_rat(i) == pw);

    CHECK_THROWS_AS(ratfun_expand(ratfun_parse("1", "t"), 4), domain_error);
}

TEST_CASE("expansion coefficients obey the denominator recurrence") {
    // a_n = 25^n cos^2(n*alpha) with cos(alpha) = 3/5: with b_n = 5^n cos(n a),
    // b_{n+1} = 6 b_n - 25 b_{n-1} and a_n = b_n^2 gives an independent oracle
    RatFun f = ratfun_parse("1 - 2*t + 225*t^2",
                            "(1 - 25*t)*(625*t^2 + 14*t + 1)");
    int n = 20;
    TSeries s = ratfun_expand(f, n);
    std::vector<Rat> b(n + 1);
    b[0] = 1; b[1] = 3;
    for (int i = 2; i <= n; ++i) b[i] = 6 * b[i - 1] - 25 * b[i - 2];
    for (int i = 0; i <= n; ++i) CHECK(s.coeff_rat(i) == b[i] * b[i]);
    CHECK(s.coeff_rat(1) == Rat(9));
    CHECK(s.coeff_rat(2) == Rat(49));

    // recurrence induced by the denominator holds beyond deg(num)
    auto q = f.den.to_rational();
    auto a = s.rational_coeffs();
    for (int k = f.num.degree() + 1; k <= n; ++k) {
        Rat acc(0);
        for (size_t i = 0; i < q.size(); ++i)
            if ((int)i <= k) acc += q[i] * a[k - i];
        CHECK(acc == Rat(0));
    }
}

TEST_CASE("loop walk generating function expansion") {
    RatFun f = ratfun_parse("t*(1-t)^3", "1 - 5*t + 7*t^2 - 4*t^3");
    TSeries s = ratfun_expand(f, 10);
    long expect[] = {0, 1, 2, 6, 19, 61, 196, 629, 2017, 6466, 20727};
    for (int i = 0; i <= 10; ++i) CHECK(s.coeff_rat(i) == Rat(expect[i]));
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-6, 6), dim(1, 5);
    for (int it = 0; it < 100; ++it) {
        size_t n = (size_t)dim(rng);
        PolyMatrix m(n, std::vector<MPoly>(n));
        for (auto& row : m)
            for (auto& e : row) e = MPoly(Rat(entry(rng)));
        CHECK(det_bareiss(m) == cofactor_det(m));
    }
    // polynomial entries
    PolyMatrix v = {{P("1"), P("x")}, {P("1"), P("y")}};
    CHECK(det_bareiss(v) == P("y - x"));
    PolyMatrix m3 = {{P("1 - t"), P("-t"), P("0")},
                     {P("-x*t"), P("1"), P("-t")},
                     {P("0"), P("-t"), P("1 - y*t")}};
    CHECK(det_bareiss(m3) == cofactor_det(m3));
    CHECK(det_bareiss({}) == MPoly(1));
    CHECK(det_bareiss({{P("7")}}) == MPoly(7));
}

TEST_CASE("resultant and discriminant") {
    int a = var_id("a");
    // disc_a(a^2 - a + t) = 1 - 4t
    MPoly p = P("a^2 - a + t");
    CHECK(discriminant(coeffs_in_var(p, a)) == P("1 - 4*t"));

    // resultant of polynomials with a planted common factor vanishes
    MPoly f = P("(a - t)*(a + 1)");
    MPoly g = P("(a - t)*(a - 2)");
    CHECK(resultant(coeffs_in_var(f, a), coeffs_in_var(g, a)).is_zero());

    MPoly f2 = P("(a - t)*(a + 1)");
    MPoly g2 = P("(a + t + 1)*(a - 2)");
    CHECK(!resultant(coeffs_in_var(f2, a), coeffs_in_var(g2, a)).is_zero());

    // resultant of two linear polys: res(a - u, a - v) = v - u up to sign
    MPoly l1 = P("a - u"), l2 = P("a - v");
    MPoly r = resultant(coeffs_in_var(l1, a), coeffs_in_var(l2, a));
    CHECK((r == P("v - u") || r == P("u - v")));

    // disc((a-1)(a-2)) = 1
    CHECK(discriminant(coeffs_in_var(P("(a-1)*(a-2)"), a)) == MPoly(1));
}

TEST_CASE("quartic branch discriminant") {
    // P(t,a) = a - 5a^2 + 9a^3 - 6a^4 - t; its discriminant in a is a
    // constant multiple of -3 + 114t - 4635t^2 + 55296t^3
    int a = var_id("a");
    MPoly p = P("a - 5*a^2 + 9*a^3 - 6*a^4 - t");
    MPoly disc = discriminant(coeffs_in_var(p, a));
    MPoly delta = P("-3 + 114*t - 4635*t^2 + 55296*t^3");
    CHECK(disc == delta);
}

TEST_CASE("series utility constructors") {
    TSeries s = TSeries::from_rational({Rat(1), Rat(2), Rat(3)});
    CHECK(s.order() == 2);
    CHECK(s.coeff_rat(1) == Rat(2));
    CHECK(s.all_rational());
    CHECK(TSeries::zero(4).valuation() == 5);
    CHECK(TSeries::t(4).valuation() == 1);
    TSeries m = TSeries::from_mpoly(P("1 + x*t"), 3);
    CHECK(!m.all_rational());
    CHECK(m.coeff(1) == P("x"));
    CHECK(m.truncate(1).order() == 1);
    CHECK(m * P("y") == TSeries::from_mpoly(P("y + x*y*t"), 3));
}

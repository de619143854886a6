#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "gfkit/parse.hpp"
#include "gfkit/posets.hpp"

using namespace gfkit;

namespace {

NaturalPoset example_poset() { return NaturalPoset(4, {{1, 3}, {2, 3}, {2, 4}}); }

// independent tuple enumerator for the compatibility-class property
void all_tuples(int k, int maxval, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
    if ((int)cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= maxval; ++v) {
        cur.push_back(v);
        all_tuples(k, maxval, cur, out);
        cur.pop_back();
    }
}

bool satisfies(const NaturalPoset& p, const std::vector<int>& lambda) {
    for (int i = 1; i <= p.size(); ++i)
        for (int j = 1; j <= p.size(); ++j)
            if (p.less(i, j) && lambda[i - 1] > lambda[j - 1]) return false;
    return true;
}

NaturalPoset random_poset(std::mt19937& rng, int k) {
    std::uniform_int_distribution<int> pct(0, 99);
    std::vector<std::pair<int, int>> rel;
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (pct(rng) < 30) rel.emplace_back(i, j);
    return NaturalPoset(k, rel);
}

}  // namespace

TEST_CASE("construction rejects unnatural relations") {
    CHECK_THROWS_AS(NaturalPoset(3, {{2, 1}}), domain_error);
    CHECK_THROWS_AS(NaturalPoset(3, {{1, 1}}), domain_error);
    CHECK_THROWS_AS(NaturalPoset(3, {{1, 4}}), domain_error);

    NaturalPoset p(3, {{1, 2}, {2, 3}});
    CHECK(p.less(1, 3));  // transitive closure
    CHECK(!p.less(3, 1));
    CHECK(!p.less(1, 1));
}

TEST_CASE("linear extensions of the four-element example") {
    auto ext = linear_extensions(example_poset());
    std::vector<std::vector<int>> expect = {
        {1, 2, 3, 4}, {1, 2, 4, 3}, {2, 1, 3, 4}, {2, 1, 4, 3}, {2, 4, 1, 3}};
    CHECK(ext == expect);
}

TEST_CASE("linear extensions of chains and antichains") {
    NaturalPoset chain(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    auto ec = linear_extensions(chain);
    REQUIRE(ec.size() == 1);
    CHECK(ec[0] == std::vector<int>{1, 2, 3, 4, 5});

    NaturalPoset anti(3, {});
    CHECK(linear_extensions(anti).size() == 6);

    CHECK_THROWS_AS(linear_extensions(NaturalPoset(13, {})), domain_error);
}

TEST_CASE("descent statistic and minimal compatible tuple") {
    auto [e, lambda] = sigma_data({2, 1, 4, 3});
    CHECK(e == 4);
    CHECK(lambda == std::vector<int>{1, 0, 2, 1});

    auto [e0, l0] = sigma_data({1, 2, 3, 4, 5});
    CHECK(e0 == 0);
    CHECK(l0 == std::vector<int>{0, 0, 0, 0, 0});

    CHECK_THROWS_AS(sigma_data({1, 1, 2}), domain_error);
    CHECK_THROWS_AS(sigma_data({0, 1}), domain_error);
}

TEST_CASE("statistic equals the weight of its minimal tuple") {
    // all permutations of k <= 7 via linear extensions of the antichain
    for (int k = 1; k <= 7; ++k) {
        for (auto& sigma : linear_extensions(NaturalPoset(k, {}))) {
            auto [e, lambda] = sigma_data(sigma);
            int w = 0;
            for (int v : lambda) w += v;
            CHECK(e == w);
            CHECK(compatible_with(lambda, sigma));
        }
    }
}

TEST_CASE("partition generating function of the example poset") {
    RatFun f = p_partition_gf(example_poset());
    RatFun expect = ratfun_parse(
        "1 + t + t^2 + t^3 + t^4",
        "(1 - t)*(1 - t^2)*(1 - t^3)*(1 - t^4)");
    CHECK(f.equals(expect));

    NaturalPoset chain(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(p_partition_gf(chain).equals(
        ratfun_parse("1", "(1 - t)*(1 - t^2)*(1 - t^3)*(1 - t^4)")));

    NaturalPoset anti(2, {});
    CHECK(p_partition_gf(anti).equals(ratfun_parse("1", "(1 - t)^2")));
}

TEST_CASE("exhaustive counts match the generating function") {
    NaturalPoset p = example_poset();
    TSeries brute = brute_p_partitions(p, 20);
    CHECK(brute.coeff_rat(0) == Rat(1));
    CHECK(brute.coeff_rat(1) == Rat(2));
    CHECK(brute.coeff_rat(2) == Rat(4));
    TSeries expanded = ratfun_expand(p_partition_gf(p), 20);
    CHECK(brute == expanded);

    // empty poset counts exactly the empty tuple
    TSeries empty = brute_p_partitions(NaturalPoset(0, {}), 4);
    CHECK(empty.coeff_rat(0) == Rat(1));
    for (int i = 1; i <= 4; ++i) CHECK(empty.coeff_rat(i) == Rat(0));
}

TEST_CASE("each order-respecting tuple lies in exactly one extension class") {
    std::mt19937 rng(17);
    std::vector<NaturalPoset> sample;
    sample.push_back(example_poset());
    for (int it = 0; it < 20; ++it)
        sample.push_back(random_poset(rng, 2 + (int)(rng() % 4)));

    for (const auto& p : sample) {
        auto exts = linear_extensions(p);
        std::vector<std::vector<int>> tuples;
        std::vector<int> cur;
        all_tuples(p.size(), 3, cur, tuples);
        for (const auto& lambda : tuples) {
            int classes = 0;
            for (const auto& sigma : exts)
                if (compatible_with(lambda, sigma)) ++classes;
            CHECK(classes == (satisfies(p, lambda) ? 1 : 0));
        }
    }
}

TEST_CASE("generating function matches brute counts on random posets") {
    std::mt19937 rng(99);
    for (int it = 0; it < 20; ++it) {
        NaturalPoset p = random_poset(rng, 2 + (int)(rng() % 4));
        TSeries brute = brute_p_partitions(p, 15);
        TSeries expanded = ratfun_expand(p_partition_gf(p), 15);
        CHECK(brute == expanded);
    }
}

TEST_CASE("lattice points of two-dimensional cones") {
    HalfspaceSystem h;
    h.m = 2;
    h.rows = {{Int(2), Int(-1)}, {Int(-1), Int(2)}};
    TSeries e = cone_points_bruteforce(h, 40);
    long expect[] = {1, 0, 1, 2, 1, 2, 3, 2};
    for (int i = 0; i <= 7; ++i) CHECK(e.coeff_rat(i) == Rat(expect[i]));
    TSeries closed =
        ratfun_expand(ratfun_parse("1 - t + t^2", "(1 - t)*(1 - t^3)"), 40);
    CHECK(e == closed);
}

TEST_CASE("lattice points of a three-dimensional cone") {
    HalfspaceSystem h;
    h.m = 3;
    h.rows = {{Int(1), Int(1), Int(-1)}};
    TSeries e = cone_points_bruteforce(h, 30);
    TSeries closed = ratfun_expand(
        ratfun_parse("1 + t + t^2", "(1 - t)*(1 - t^2)^2"), 30);
    CHECK(e == closed);
}

TEST_CASE("unconstrained cone counts everything") {
    HalfspaceSystem h;
    h.m = 1;
    TSeries e = cone_points_bruteforce(h, 20);
    for (int i = 0; i <= 20; ++i) CHECK(e.coeff_rat(i) == Rat(1));

    HalfspaceSystem bad;
    bad.m = 5;
    CHECK_THROWS_AS(cone_points_bruteforce(bad, 10), domain_error);
    HalfspaceSystem wrongrow;
    wrongrow.m = 2;
    wrongrow.rows = {{Int(1)}};
    CHECK_THROWS_AS(cone_points_bruteforce(wrongrow, 10), domain_error);
}

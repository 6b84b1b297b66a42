#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "linhg/construct.hpp"
#include "linhg/cycles.hpp"

#include <algorithm>
#include <cmath>

using namespace linhg;

TEST_CASE("c5free sizes and structure") {
    auto h1 = construct_c5free(1);
    CHECK(h1.n == 3);
    CHECK(h1.m() == 1);

    auto h2 = construct_c5free(2);
    CHECK(h2.n == 12);
    CHECK(h2.m() == 8);
    CHECK(is_linear(h2));

    auto h3 = construct_c5free(3);
    CHECK(h3.n == 27);
    CHECK(h3.m() == 27);
    CHECK(is_linear(h3));
    CHECK(is_family_free(h3, FamilySpec::parse("berge:2,3,5")).free);

    CHECK_THROWS(construct_c5free(0));
}

TEST_CASE("c5free edge count is (n/3)^{3/2} exactly") {
    for (int s = 1; s <= 5; ++s) {
        auto h = construct_c5free(s);
        long long n3 = h.n / 3;  // = s^2
        CHECK(static_cast<long long>(h.m()) * h.m() == n3 * n3 * n3);
    }
}

TEST_CASE("lift sizes") {
    auto g = gen_complete_bipartite(2, 3);
    for (int q = 1; q <= 3; ++q) {
        auto h = construct_from_bipartite(g, q);
        CHECK(h.n == q * 5 + 6);
        CHECK(h.m() == 6 * q);
        CHECK(is_linear(h));
    }
    CHECK_THROWS(construct_from_bipartite(g, 0));
    CHECK_THROWS(construct_from_bipartite(BipartiteGraph{2, 2, {}}, 1));
}

TEST_CASE("lift of K_{s,s} with q=s matches c5free") {
    for (int s = 2; s <= 3; ++s) {
        auto a = construct_c5free(s);
        auto b = construct_from_bipartite(gen_complete_bipartite(s, s), s);
        CHECK(a.n == b.n);
        CHECK(a.m() == b.m());
        auto da = degrees(a).degree;
        auto db = degrees(b).degree;
        std::sort(da.begin(), da.end());
        std::sort(db.begin(), db.end());
        CHECK(da == db);
    }
}

TEST_CASE("heawood lift avoids short linear cycles") {
    auto g = gen_projective_incidence(2);
    CHECK(g.n_left == 7);
    CHECK(g.n_right == 7);
    CHECK(g.m() == 21);
    REQUIRE(girth(g) == 6);
    for (int q = 1; q <= 3; ++q) {
        auto h = construct_from_bipartite(g, q);
        CHECK(h.n == q * 14 + 21);
        CHECK(h.m() == 21 * q);
        CHECK(is_linear(h));
        for (int len : {3, 5, 7})
            CHECK(find_linear_cycle(h, len).status == SearchStatus::absent);
    }
}

TEST_CASE("block layout is a partition") {
    auto g = gen_complete_bipartite(2, 2);
    auto layout = lift_layout(g, 2);
    CHECK(layout.total() == 2 * 4 + 4);
    std::vector<int> seen;
    for (int t = 0; t < 2; ++t)
        for (int i = 0; i < 2; ++i) {
            seen.push_back(layout.left_vertex(t, i));
            seen.push_back(layout.right_vertex(t, i));
        }
    for (int e = 0; e < 4; ++e) seen.push_back(layout.b_vertex(e));
    std::sort(seen.begin(), seen.end());
    for (int v = 0; v < layout.total(); ++v) CHECK(seen[static_cast<size_t>(v)] == v);
}

TEST_CASE("complete bipartite generator") {
    CHECK(gen_complete_bipartite(1, 1).m() == 1);
    CHECK(gen_complete_bipartite(2, 3).m() == 6);
    CHECK(girth(gen_complete_bipartite(3, 3)) == 4);
}

TEST_CASE("projective incidence graphs") {
    auto g3 = gen_projective_incidence(3);
    CHECK(g3.n_left == 13);
    CHECK(g3.n_right == 13);
    CHECK(g3.m() == 52);
    CHECK(girth(g3) == 6);

    auto g5 = gen_projective_incidence(5);
    CHECK(g5.n_left == 31);
    CHECK(g5.m() == 6 * 31);
    CHECK(girth(g5) == 6);

    CHECK_THROWS(gen_projective_incidence(4));
    CHECK_THROWS(gen_projective_incidence(1));
    CHECK_THROWS(gen_projective_incidence(101));
}

TEST_CASE("lower bound formula") {
    // coefficient at c=1, alpha=2 is 1/(3 sqrt 3)
    double coeff = lower_bound_value(1.0, 1.0, 2.0);
    CHECK(std::abs(coeff - 0.19245008972987526) < 1e-14);
    CHECK(std::abs(lower_bound_value(27.0, 1.0, 2.0) - 27.0) < 1e-9);
    CHECK(lower_bound_value(0.0, 1.0, 2.0) == 0.0);
    for (double n : {1e3, 1e6}) {
        double got = lower_bound_value(n, 1.0, 2.0) * 3.0 * std::sqrt(3.0);
        CHECK(std::abs(got - std::pow(n, 1.5)) / std::pow(n, 1.5) < 1e-12);
    }
}

TEST_CASE("corollary bound and substitution identity") {
    // k=2 collapses to (n/3)^{3/2}
    CHECK(std::abs(corollary_bound(300.0, 2) - std::pow(100.0, 1.5)) < 1e-9);
    CHECK(corollary_bound(0.0, 3) == 0.0);
    CHECK_THROWS(corollary_bound(10.0, 1));
    for (int k : {2, 3, 4, 6}) {
        for (double n : {100.0, 1e5}) {
            double a = corollary_bound(n, k);
            double b = lower_bound_value(n, 1.0, 1.0 + 1.0 / (k - 1));
            CHECK(std::abs(a - b) / b < 1e-9);
        }
    }
}

TEST_CASE("plan parameters") {
    auto plan = plan_parameters(1000000, 1.0, 2.0);
    CHECK(plan.q >= 1);
    CHECK(plan.z >= 2);
    CHECK(plan.k == 2);
    CHECK(std::abs(plan.predicted_bound - lower_bound_value(1e6, 1.0, 2.0)) < 1e-6);
    // z tracks (4/3)^{1/2} sqrt(n)
    CHECK(std::abs(plan.z - std::sqrt(4.0 / 3.0) * 1000.0) <= 1.0);

    auto p43 = plan_parameters(1000000, 1.0, 4.0 / 3.0);
    CHECK(std::abs(p43.predicted_bound - lower_bound_value(1e6, 1.0, 4.0 / 3.0)) /
              p43.predicted_bound <
          1e-9);
    CHECK(p43.k == 4);

    CHECK_THROWS(plan_parameters(1, 1.0, 2.0));
    CHECK_THROWS(plan_parameters(100, 1.0, 1.0));
    CHECK_THROWS(plan_parameters(100, 0.0, 2.0));
}

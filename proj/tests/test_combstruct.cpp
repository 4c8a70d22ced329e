#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <vector>

#include "helpers.hpp"
#include "stabpoly/combstruct.hpp"
#include "stabpoly/rng.hpp"

using namespace testutil;
using stabpoly::degree_sequence_system;
using stabpoly::has_internal_zeros;
using stabpoly::indicator_support;
using stabpoly::is_delta_matroid;
using stabpoly::is_jump_system;
using stabpoly::is_matroid_bases;
using stabpoly::matching_support;
using stabpoly::SplitMix64;
using stabpoly::steps;
using stabpoly::support_of;
using stabpoly::SupportSet;
using stabpoly::WeightedGraph;

namespace {

SupportSet make_support(int dim, std::initializer_list<std::vector<int>> pts) {
    SupportSet s;
    s.dim = dim;
    for (const auto& p : pts) s.points.insert(p);
    return s;
}

std::set<std::vector<int>> fano_bases() {
    // 0-indexed lines of the seven-point plane
    std::set<std::vector<int>> lines = {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}, {0, 3, 6},
                                        {1, 4, 6}, {2, 5, 6}, {1, 3, 5}};
    std::set<std::vector<int>> bases;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                std::vector<int> t = {a, b, c};
                if (lines.count(t) == 0) bases.insert(t);
            }
    return bases;
}

WeightedGraph graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    WeightedGraph g;
    g.nvertices = n;
    for (auto [u, v] : edges) g.edges.push_back({u, v, Q(1)});
    g.normalize();
    return g;
}

}  // namespace

TEST_CASE("unit steps toward a target") {
    CHECK(steps({0, 0}, {2, 1}) == std::set<std::vector<int>>{{1, 0}, {0, 1}});
    CHECK(steps({1, 1}, {1, 1}).empty());
    CHECK(steps({1}, {0}) == std::set<std::vector<int>>{{-1}});
    CHECK(steps({3, 0}, {1, 2}) == std::set<std::vector<int>>{{-1, 0}, {0, 1}});
    CHECK_THROWS_AS(steps({1}, {1, 2}), std::invalid_argument);
}

TEST_CASE("steps are empty exactly at the target") {
    SplitMix64 rng(77);
    for (int t = 0; t < 200; ++t) {
        std::vector<int> a, b;
        for (int i = 0; i < 3; ++i) {
            a.push_back(static_cast<int>(rng.integer_in(-3, 3)));
            b.push_back(static_cast<int>(rng.integer_in(-3, 3)));
        }
        CHECK(steps(a, b).empty() == (a == b));
    }
}

TEST_CASE("two-step axiom") {
    // a hole of size two
    auto bad = is_jump_system(make_support(1, {{0}, {3}}));
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->alpha == std::vector<int>{0});
    CHECK(bad.violation->beta == std::vector<int>{3});
    CHECK(bad.violation->sigma == std::vector<int>{1});

    CHECK(is_jump_system(make_support(1, {{0}, {1}, {3}})).ok);
    CHECK(is_jump_system(make_support(2, {{0, 0}, {1, 1}})).ok);
    CHECK(is_jump_system(make_support(1, {{5}})).ok);
    CHECK_THROWS_AS(is_jump_system(SupportSet{1, {}}), std::invalid_argument);
}

TEST_CASE("symmetric exchange axiom") {
    auto ok = is_delta_matroid(make_support(2, {{0, 0}, {1, 1}}));
    CHECK(ok.axiom_ok);
    CHECK(ok.covers_ground());
    CHECK(ok.strict_ok());

    CHECK(is_delta_matroid(make_support(1, {{0}, {1}})).axiom_ok);

    auto bad = is_delta_matroid(make_support(3, {{0, 0, 0}, {1, 1, 1}}));
    CHECK_FALSE(bad.axiom_ok);
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->a == std::vector<int>{});
    CHECK(bad.violation->b == std::vector<int>{0, 1, 2});
    CHECK(bad.violation->x == 0);

    auto slack = is_delta_matroid(make_support(3, {{0, 0, 0}, {1, 1, 0}}));
    CHECK(slack.axiom_ok);
    CHECK_FALSE(slack.covers_ground());
    CHECK(slack.unused_elements == std::vector<int>{2});
    CHECK_FALSE(slack.strict_ok());

    CHECK_THROWS_AS(is_delta_matroid(make_support(1, {{2}})), std::invalid_argument);
}

TEST_CASE("basis exchange axiom") {
    std::set<std::vector<int>> u23 = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(is_matroid_bases(u23, 3).ok);

    auto card = is_matroid_bases({{0}, {1, 2}}, 3);
    CHECK_FALSE(card.ok);
    REQUIRE(card.violation.has_value());
    CHECK(card.violation->reason == "cardinality");

    // pairs from a 4-cycle do not satisfy exchange
    auto bad = is_matroid_bases({{0, 1}, {2, 3}}, 4);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violation.has_value());
    CHECK(bad.violation->reason == "exchange");
    CHECK(bad.violation->a == std::vector<int>{0, 1});
    CHECK(bad.violation->b == std::vector<int>{2, 3});
    CHECK(bad.violation->x == 0);

    CHECK_THROWS_AS(is_matroid_bases({}, 3), std::invalid_argument);
}

TEST_CASE("the seven-point plane gives a matroid") {
    auto bases = fano_bases();
    CHECK(bases.size() == 28);
    CHECK(is_matroid_bases(bases, 7).ok);
    // and its indicator vectors pass the binary axioms
    SupportSet f = indicator_support(7, bases);
    CHECK(is_delta_matroid(f).strict_ok());
    CHECK(is_jump_system(f).ok);
}

TEST_CASE("internal zeros of a support") {
    auto w = has_internal_zeros(make_support(2, {{0, 0}, {1, 1}}));
    REQUIRE(w.has_value());
    CHECK(*w == std::vector<int>{0, 1});

    CHECK_FALSE(has_internal_zeros(make_support(2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}})).has_value());

    auto hole = has_internal_zeros(make_support(1, {{0}, {2}}));
    REQUIRE(hole.has_value());
    CHECK(*hole == std::vector<int>{1});

    CHECK_FALSE(has_internal_zeros(make_support(1, {{0}, {1}, {2}})).has_value());
    CHECK_FALSE(has_internal_zeros(SupportSet{2, {}}).has_value());
}

TEST_CASE("matching supports") {
    CHECK(matching_support(graph(2, {{0, 1}})).points ==
          std::set<std::vector<int>>{{0, 0}, {1, 1}});
    CHECK(matching_support(graph(3, {{0, 1}, {1, 2}})).points ==
          std::set<std::vector<int>>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}});
    CHECK(matching_support(graph(3, {{0, 1}, {1, 2}, {0, 2}})).points ==
          std::set<std::vector<int>>{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    // parallel edges merge
    WeightedGraph p;
    p.nvertices = 2;
    p.edges = {{0, 1, Q(1)}, {1, 0, Q(2)}};
    p.normalize();
    CHECK(matching_support(p).points == std::set<std::vector<int>>{{0, 0}, {1, 1}});
}

TEST_CASE("degree sequences of spanning subgraphs") {
    CHECK(degree_sequence_system(graph(2, {{0, 1}})).points ==
          std::set<std::vector<int>>{{0, 0}, {1, 1}});
    CHECK(degree_sequence_system(graph(4, {{0, 1}, {2, 3}})).points ==
          std::set<std::vector<int>>{{0, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 1}, {1, 1, 1, 1}});
    auto tri = degree_sequence_system(graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK(tri.points.size() == 8);
    CHECK(tri.contains({2, 2, 2}));
    CHECK(tri.contains({1, 2, 1}));
}

TEST_CASE("graph validation") {
    WeightedGraph g;
    g.nvertices = 2;
    g.edges = {{0, 0, Q(1)}};
    CHECK_THROWS_AS(g.normalize(), std::invalid_argument);
    WeightedGraph h;
    h.nvertices = 2;
    h.edges = {{0, 1, Q(-1)}};
    CHECK_THROWS_AS(h.normalize(), std::invalid_argument);
    WeightedGraph big;
    big.nvertices = 17;
    CHECK_THROWS_AS(matching_support(big), std::invalid_argument);
}

TEST_CASE("binary exchange families are jump systems") {
    // every delta-matroid here must pass the two-step axiom
    std::vector<SupportSet> families = {
        make_support(2, {{0, 0}, {1, 1}}),
        make_support(3, {{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}}),
        indicator_support(3, {{0, 1}, {0, 2}, {1, 2}}),
        indicator_support(7, fano_bases()),
    };
    for (const auto& f : families) {
        REQUIRE(is_delta_matroid(f).axiom_ok);
        CHECK(is_jump_system(f).ok);
    }
}

TEST_CASE("random matching supports satisfy the exchange axiom") {
    SplitMix64 rng(424241);
    for (int t = 0; t < 40; ++t) {
        int n = 2 + static_cast<int>(rng.below(7));  // up to 8 vertices
        WeightedGraph g;
        g.nvertices = n;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(2) == 0) g.edges.push_back({u, v, Q(1)});
        SupportSet ms = matching_support(g);
        CHECK(is_delta_matroid(ms).axiom_ok);
        CHECK(is_jump_system(ms).ok);
    }
}

TEST_CASE("random degree systems satisfy the two-step axiom") {
    SplitMix64 rng(51515);
    for (int t = 0; t < 25; ++t) {
        int n = 2 + static_cast<int>(rng.below(4));  // up to 5 vertices
        WeightedGraph g;
        g.nvertices = n;
        int budget = 12;
        for (int u = 0; u < n && budget > 0; ++u)
            for (int v = u + 1; v < n && budget > 0; ++v)
                if (rng.below(2) == 0) {
                    g.edges.push_back({u, v, Q(1)});
                    --budget;
                    // sometimes duplicate an edge to exercise parallels
                    if (rng.below(4) == 0 && budget > 0) {
                        g.edges.push_back({u, v, Q(1)});
                        --budget;
                    }
                }
        CHECK(is_jump_system(degree_sequence_system(g)).ok);
    }
}

TEST_CASE("support extraction from polynomials") {
    Polynomial f = poly(2, {{{0, 0}, C(1)}, {{1, 1}, C(1)}});
    SupportSet s = support_of(f);
    CHECK(s.dim == 2);
    CHECK(s.points == std::set<std::vector<int>>{{0, 0}, {1, 1}});
    CHECK(support_of(Polynomial(3)).points.empty());
    Polynomial g = poly(2, {{{2, 0}, C(3)}, {{0, 1}, C(-1)}});
    CHECK(support_of(g).points == std::set<std::vector<int>>{{2, 0}, {0, 1}});
}

#include <doctest.h>

#include <algorithm>
#include <json.hpp>

#include "mbar/chi_recursion.hpp"
#include "mbar/errors.hpp"
#include "mbar/graph_oracle.hpp"
#include "mbar/initial_data.hpp"

using namespace mbar;

namespace {

std::vector<std::uint64_t> auts(int g, int n) {
    std::vector<std::uint64_t> a;
    for (const auto& c : enumerate_stable_graphs(g, n)) a.push_back(c.aut);
    std::sort(a.begin(), a.end());
    return a;
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

StableGraph one_vertex(int genus, int legs, int loops) {
    return StableGraph{{genus}, {legs}, {{loops}}};
}

}  // namespace

TEST_CASE("class counts and automorphism orders of the displayed expansions") {
    CHECK(auts(2, 0) == sorted({1, 2, 2, 8, 2, 8, 12}));
    CHECK(auts(1, 1) == sorted({1, 2}));
    CHECK(auts(0, 4) == sorted({24, 8}));
    CHECK(auts(1, 2) == sorted({2, 4, 2, 4, 4}));
}

TEST_CASE("hand-built automorphism orders") {
    // two loops on a genus-0 vertex
    CHECK(automorphism_count(one_vertex(0, 0, 2)) == 8);
    // theta graph
    StableGraph theta{{0, 0}, {0, 0}, {{0, 3}, {3, 0}}};
    CHECK(automorphism_count(theta) == 12);
    // smooth (0,4)
    CHECK(automorphism_count(one_vertex(0, 4, 0)) == 24);
    // two genus-0 vertices with two legs each, joined by one edge
    StableGraph bridge{{0, 0}, {2, 2}, {{0, 1}, {1, 0}}};
    CHECK(automorphism_count(bridge) == 8);
}

TEST_CASE("feynman sums equal the quadratic recursion within the default budget") {
    ChiTable t;
    const std::pair<int, int> types[] = {{0, 4}, {0, 5}, {0, 6}, {1, 1}, {1, 2}, {1, 3}, {2, 0}};
    for (auto [g, n] : types) {
        CAPTURE(g);
        CAPTURE(n);
        auto fs = feynman_sum(g, n);
        CHECK(fs.poly == t.chi_tilde_quadratic(g, n));
        CHECK(fs.t_exponent == 2 - 2 * g - n);
    }
    CHECK(feynman_sum(0, 3).poly == KPoly(make_rat(1, 6)));
}

TEST_CASE("feynman sums at a raised budget") {
    ChiTable t;
    OracleBudget b{5};
    const std::pair<int, int> types[] = {{0, 7}, {0, 8}, {1, 4}, {1, 5}, {2, 1}, {2, 2}};
    for (auto [g, n] : types) {
        CAPTURE(g);
        CAPTURE(n);
        CHECK(feynman_sum(g, n, b).poly == t.chi_tilde_quadratic(g, n));
    }
}

TEST_CASE("stratum census") {
    CHECK(stratum_census(0, 4) == std::map<int, int>{{0, 1}, {1, 1}});
    CHECK(stratum_census(1, 1) == std::map<int, int>{{0, 1}, {1, 1}});
    CHECK(stratum_census(2, 0) == std::map<int, int>{{0, 1}, {1, 2}, {2, 2}, {3, 2}});
}

TEST_CASE("invariants of every enumerated class") {
    OracleBudget b{5};
    for (int g = 0; g <= 2; ++g) {
        for (int n = 0; n <= 6; ++n) {
            if (!is_stable(g, n) || 3 * g - 3 + n > b.max_dimension) continue;
            auto classes = enumerate_stable_graphs(g, n, b);
            auto census = stratum_census(g, n, b);
            CHECK(census[0] == 1);
            std::vector<std::vector<int>> keys;
            for (const auto& c : classes) {
                const auto& sg = c.graph;
                CHECK(sg.is_connected());
                CHECK(sg.is_stable());
                CHECK(sg.total_genus() == g);
                CHECK(sg.num_legs() == n);
                CHECK(c.aut == automorphism_count_formula(sg));
                // |Aut| divides the order of the symmetric group on half-edges
                std::uint64_t full = 1;
                for (std::size_t i = 2; i <= sg.half_edge_vertex().size(); ++i) full *= i;
                CHECK(full % c.aut == 0);
                keys.push_back(sg.canonical_key());
                if (sg.num_edges() == 0) {
                    CHECK(feynman_sum(g, n, b).poly[0] == chi_open(g, n) / Rat(c.aut));
                }
            }
            CHECK(std::is_sorted(keys.begin(), keys.end()));
            CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
        }
    }
}

TEST_CASE("canonical key is invariant under relabelling") {
    StableGraph a{{1, 0, 0}, {0, 1, 2}, {{0, 1, 0}, {1, 1, 1}, {0, 1, 0}}};
    StableGraph b{{0, 0, 1}, {2, 1, 0}, {{0, 1, 0}, {1, 1, 1}, {0, 1, 0}}};
    CHECK(a.canonical_key() == b.canonical_key());
    CHECK(automorphism_count(a) == automorphism_count(b));
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(enumerate_stable_graphs(2, 1), BudgetExceeded);
    try {
        feynman_sum(3, 0);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("(3,0)") != std::string::npos);
    }
    CHECK_THROWS_AS(enumerate_stable_graphs(0, 2), DomainError);
}

TEST_CASE("json and dot export") {
    auto classes = enumerate_stable_graphs(1, 1);
    auto j = nlohmann::json::parse(catalog_to_json(classes));
    REQUIRE(j.size() == 2);
    for (const auto& rec : j) {
        CHECK(rec.contains("vertices"));
        CHECK(rec.contains("edges"));
        CHECK(rec["legs"].size() == 1);
        CHECK(rec["aut"].get<int>() >= 1);
    }
    auto dot = graph_to_dot(classes[0].graph);
    CHECK(dot.rfind("graph G {", 0) == 0);
}

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mbar/poly.hpp"
#include "mbar/rational.hpp"

namespace mbar {

// Connected stable graph with genus-labelled vertices, unlabelled external
// legs, and a symmetric multiplicity matrix: mult[v][w] parallel edges
// between v != w, mult[v][v] loops at v.
struct StableGraph {
    std::vector<int> genus;
    std::vector<int> legs;
    std::vector<std::vector<int>> mult;

    int num_vertices() const { return static_cast<int>(genus.size()); }
    int num_edges() const;
    int num_legs() const;
    // Internal half-edges plus legs at v.
    int valence(int v) const;
    int total_genus() const;
    bool is_connected() const;
    bool is_stable() const;

    // Each edge as (v, w) with v <= w, loops included, sorted.
    std::vector<std::pair<int, int>> edges() const;
    // Half-edge form: half-edges are numbered with all legs first, then both
    // ends of each edge in edges() order. pairing[h] is the partner
    // half-edge, or -1 for a leg.
    std::vector<int> half_edge_vertex() const;
    std::vector<int> pairing() const;

    // Lexicographically least (genus, legs, upper-triangle of mult) encoding
    // over all vertex orderings; equal keys <=> isomorphic graphs.
    std::vector<int> canonical_key() const;
    // The graph with its vertices reordered to realize canonical_key().
    StableGraph canonical() const;
};

struct GraphClass {
    StableGraph graph;
    std::uint64_t aut;
};

// |Aut| by explicit search: every genus- and incidence-preserving vertex
// permutation, extended in all possible ways to a bijection of half-edges
// preserving the pairing and the leg/internal distinction.
std::uint64_t automorphism_count(const StableGraph& g);

// The same order from the closed product formula
// |{vertex symmetries}| * prod legs_v! * prod_{v<w} mult_vw! * prod_v mult_vv! 2^mult_vv.
std::uint64_t automorphism_count_formula(const StableGraph& g);

struct OracleBudget {
    // Largest allowed dimension 3g - 3 + n.
    int max_dimension = 3;
};

// One representative per isomorphism class of connected stable graphs of
// type (g, n), sorted by canonical key. Throws BudgetExceeded when
// 3g - 3 + n exceeds the budget.
std::vector<GraphClass> enumerate_stable_graphs(int g, int n, OracleBudget budget = {});

struct FeynmanSum {
    KPoly poly;      // sum of kappa^|E| / |Aut| * prod chi(M_{g_v, n_v})
    int t_exponent;  // 2 - 2g - n
};
FeynmanSum feynman_sum(int g, int n, OracleBudget budget = {});

// Number of classes with exactly k edges, for k = 0..3g-3+n.
std::map<int, int> stratum_census(int g, int n, OracleBudget budget = {});

// {"vertices":[genus,...],"edges":[[v,w],...],"legs":[v,...],"aut":order}
std::string graph_to_json(const GraphClass& c);
std::string catalog_to_json(const std::vector<GraphClass>& classes);
std::string graph_to_dot(const StableGraph& g, const std::string& name = "G");

}  // namespace mbar

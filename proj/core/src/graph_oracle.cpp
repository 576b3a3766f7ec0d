#include "mbar/graph_oracle.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "mbar/errors.hpp"
#include "mbar/initial_data.hpp"

namespace mbar {

int StableGraph::num_edges() const {
    int e = 0;
    for (int v = 0; v < num_vertices(); ++v) {
        for (int w = v; w < num_vertices(); ++w) e += mult[v][w];
    }
    return e;
}

int StableGraph::num_legs() const { return std::accumulate(legs.begin(), legs.end(), 0); }

int StableGraph::valence(int v) const {
    int val = legs[v] + 2 * mult[v][v];
    for (int w = 0; w < num_vertices(); ++w) {
        if (w != v) val += mult[v][w];
    }
    return val;
}

int StableGraph::total_genus() const {
    return 1 + num_edges() - num_vertices() + std::accumulate(genus.begin(), genus.end(), 0);
}

bool StableGraph::is_connected() const {
    const int nv = num_vertices();
    if (nv == 0) return false;
    std::vector<bool> seen(nv, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < nv; ++w) {
            if (!seen[w] && mult[v][w] > 0) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool StableGraph::is_stable() const {
    for (int v = 0; v < num_vertices(); ++v) {
        if (genus[v] < 0 || 2 * genus[v] - 2 + valence(v) <= 0) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> StableGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < num_vertices(); ++v) {
        for (int w = v; w < num_vertices(); ++w) {
            for (int i = 0; i < mult[v][w]; ++i) out.emplace_back(v, w);
        }
    }
    return out;
}

std::vector<int> StableGraph::half_edge_vertex() const {
    std::vector<int> hv;
    for (int v = 0; v < num_vertices(); ++v) {
        for (int i = 0; i < legs[v]; ++i) hv.push_back(v);
    }
    for (auto [v, w] : edges()) {
        hv.push_back(v);
        hv.push_back(w);
    }
    return hv;
}

std::vector<int> StableGraph::pairing() const {
    std::vector<int> p(static_cast<std::size_t>(num_legs()), -1);
    const int e = num_edges();
    for (int i = 0; i < e; ++i) {
        const int a = static_cast<int>(p.size());
        p.push_back(a + 1);
        p.push_back(a);
    }
    return p;
}

namespace {

std::vector<int> encode(const StableGraph& g, const std::vector<int>& order) {
    // order[i] = original vertex placed at position i
    std::vector<int> key;
    const int nv = g.num_vertices();
    key.push_back(nv);
    for (int i = 0; i < nv; ++i) {
        key.push_back(g.genus[order[i]]);
        key.push_back(g.legs[order[i]]);
    }
    for (int i = 0; i < nv; ++i) {
        for (int j = i; j < nv; ++j) key.push_back(g.mult[order[i]][order[j]]);
    }
    return key;
}

std::vector<int> best_order(const StableGraph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.num_vertices()));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> best = order;
    std::vector<int> best_key = encode(g, order);
    while (std::next_permutation(order.begin(), order.end())) {
        auto key = encode(g, order);
        if (key < best_key) {
            best_key = std::move(key);
            best = order;
        }
    }
    return best;
}

}  // namespace

std::vector<int> StableGraph::canonical_key() const { return encode(*this, best_order(*this)); }

StableGraph StableGraph::canonical() const {
    const auto order = best_order(*this);
    const int nv = num_vertices();
    StableGraph c;
    c.mult.assign(nv, std::vector<int>(nv, 0));
    for (int i = 0; i < nv; ++i) {
        c.genus.push_back(genus[order[i]]);
        c.legs.push_back(legs[order[i]]);
        for (int j = 0; j < nv; ++j) c.mult[i][j] = mult[order[i]][order[j]];
    }
    return c;
}

namespace {

// Counts bijections phi of half-edges with vertex(phi(h)) = sigma(vertex(h)),
// phi(partner(h)) = partner(phi(h)), legs to legs.
struct HalfEdgeSearch {
    const std::vector<int>& hv;
    const std::vector<int>& pair;
    const std::vector<int>& sigma;
    std::vector<int> image;
    std::vector<bool> used;
    std::uint64_t count = 0;

    HalfEdgeSearch(const std::vector<int>& hv_, const std::vector<int>& pair_, const std::vector<int>& sigma_)
        : hv(hv_), pair(pair_), sigma(sigma_), image(hv_.size(), -1), used(hv_.size(), false) {}

    void run(std::size_t h) {
        while (h < hv.size() && image[h] != -1) ++h;
        if (h == hv.size()) {
            ++count;
            return;
        }
        const int ph = pair[h];
        for (std::size_t t = 0; t < hv.size(); ++t) {
            if (used[t] || hv[t] != sigma[hv[h]]) continue;
            const int pt = pair[t];
            if ((ph == -1) != (pt == -1)) continue;
            if (ph == -1) {
                assign(h, t);
                run(h + 1);
                unassign(h, t);
                continue;
            }
            if (static_cast<std::size_t>(ph) == h) continue;
            // Map the partner along with h.
            if (static_cast<std::size_t>(pt) == t || used[pt] || hv[pt] != sigma[hv[ph]]) continue;
            assign(h, t);
            assign(ph, pt);
            run(h + 1);
            unassign(ph, pt);
            unassign(h, t);
        }
    }
    void assign(std::size_t a, std::size_t b) {
        image[a] = static_cast<int>(b);
        used[b] = true;
    }
    void unassign(std::size_t a, std::size_t b) {
        image[a] = -1;
        used[b] = false;
    }
};

bool preserves_structure(const StableGraph& g, const std::vector<int>& sigma) {
    const int nv = g.num_vertices();
    for (int v = 0; v < nv; ++v) {
        if (g.genus[sigma[v]] != g.genus[v] || g.legs[sigma[v]] != g.legs[v]) return false;
        for (int w = 0; w < nv; ++w) {
            if (g.mult[sigma[v]][sigma[w]] != g.mult[v][w]) return false;
        }
    }
    return true;
}

std::uint64_t ufact(int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
    return r;
}

}  // namespace

std::uint64_t automorphism_count(const StableGraph& g) {
    const auto hv = g.half_edge_vertex();
    const auto pair = g.pairing();
    std::vector<int> sigma(static_cast<std::size_t>(g.num_vertices()));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint64_t total = 0;
    do {
        if (!preserves_structure(g, sigma)) continue;
        HalfEdgeSearch search(hv, pair, sigma);
        search.run(0);
        total += search.count;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

std::uint64_t automorphism_count_formula(const StableGraph& g) {
    const int nv = g.num_vertices();
    std::vector<int> sigma(static_cast<std::size_t>(nv));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::uint64_t vertex_syms = 0;
    do {
        if (preserves_structure(g, sigma)) ++vertex_syms;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    std::uint64_t r = vertex_syms;
    for (int v = 0; v < nv; ++v) {
        r *= ufact(g.legs[v]) * ufact(g.mult[v][v]) * (std::uint64_t{1} << g.mult[v][v]);
        for (int w = v + 1; w < nv; ++w) r *= ufact(g.mult[v][w]);
    }
    return r;
}

namespace {

struct VertexType {
    int genus;
    int legs;
    int internal;  // internal half-edges
    auto operator<=>(const VertexType&) const = default;
};

void check_budget(int g, int n, const OracleBudget& budget) {
    require_stable(g, n);
    const int dim = 3 * g - 3 + n;
    if (dim > budget.max_dimension) {
        throw BudgetExceeded("graph oracle budget exceeded at (g,n) = (" + std::to_string(g) + "," +
                             std::to_string(n) + "): dimension " + std::to_string(dim) + " > " +
                             std::to_string(budget.max_dimension));
    }
}

class Enumerator {
public:
    Enumerator(int g, int n) : g_(g), n_(n) {}

    std::vector<GraphClass> run() {
        const int dim = 3 * g_ - 3 + n_;
        for (int nv = 1; nv <= 2 * g_ - 2 + n_; ++nv) {
            for (int ne = nv - 1; ne <= dim; ++ne) {
                const int vertex_genus = g_ - (ne - nv + 1);
                if (vertex_genus < 0) continue;
                types_.clear();
                choose_types(nv, vertex_genus, n_, 2 * ne);
            }
        }
        std::vector<GraphClass> out;
        for (auto& [key, graph] : found_) out.push_back({graph, automorphism_count(graph)});
        return out;
    }

private:
    // Vertex types in nonincreasing order with the remaining totals.
    void choose_types(int left, int genus_left, int legs_left, int internal_left) {
        if (left == 0) {
            if (genus_left == 0 && legs_left == 0 && internal_left == 0) build_matrices();
            return;
        }
        const bool single = types_.empty() && left == 1;
        for (int gv = genus_left; gv >= 0; --gv) {
            for (int lv = legs_left; lv >= 0; --lv) {
                for (int hv = internal_left; hv >= 0; --hv) {
                    VertexType t{gv, lv, hv};
                    if (!types_.empty() && types_.back() < t) continue;
                    if (2 * gv - 2 + lv + hv <= 0) continue;
                    if (!single && hv == 0) continue;
                    types_.push_back(t);
                    choose_types(left - 1, genus_left - gv, legs_left - lv, internal_left - hv);
                    types_.pop_back();
                }
            }
        }
    }

    void build_matrices() {
        const int nv = static_cast<int>(types_.size());
        mult_.assign(nv, std::vector<int>(nv, 0));
        remaining_.clear();
        for (const auto& t : types_) remaining_.push_back(t.internal);
        fill(0, 0);
    }

    void fill(int i, int j) {
        const int nv = static_cast<int>(types_.size());
        if (i == nv) {
            emit();
            return;
        }
        if (j == nv) {
            if (remaining_[i] != 0) return;
            fill(i + 1, i + 1);
            return;
        }
        if (i == j) {
            for (int m = remaining_[i] / 2; m >= 0; --m) {
                mult_[i][i] = m;
                remaining_[i] -= 2 * m;
                fill(i, j + 1);
                remaining_[i] += 2 * m;
            }
            mult_[i][i] = 0;
            return;
        }
        const int cap = std::min(remaining_[i], remaining_[j]);
        for (int m = cap; m >= 0; --m) {
            mult_[i][j] = mult_[j][i] = m;
            remaining_[i] -= m;
            remaining_[j] -= m;
            fill(i, j + 1);
            remaining_[i] += m;
            remaining_[j] += m;
        }
        mult_[i][j] = mult_[j][i] = 0;
    }

    void emit() {
        StableGraph sg;
        for (const auto& t : types_) {
            sg.genus.push_back(t.genus);
            sg.legs.push_back(t.legs);
        }
        sg.mult = mult_;
        if (!sg.is_connected()) return;
        StableGraph c = sg.canonical();
        auto key = c.canonical_key();
        found_.emplace(std::move(key), std::move(c));
    }

    int g_;
    int n_;
    std::vector<VertexType> types_;
    std::vector<std::vector<int>> mult_;
    std::vector<int> remaining_;
    std::map<std::vector<int>, StableGraph> found_;
};

}  // namespace

std::vector<GraphClass> enumerate_stable_graphs(int g, int n, OracleBudget budget) {
    check_budget(g, n, budget);
    auto classes = Enumerator(g, n).run();
    for (const auto& c : classes) {
        const auto& sg = c.graph;
        if (!sg.is_connected() || !sg.is_stable() || sg.total_genus() != g || sg.num_legs() != n) {
            throw std::logic_error("graph oracle produced an invalid graph");
        }
    }
    return classes;
}

FeynmanSum feynman_sum(int g, int n, OracleBudget budget) {
    KPoly total;
    for (const auto& c : enumerate_stable_graphs(g, n, budget)) {
        Rat w = Rat(1) / Rat(static_cast<unsigned long>(c.aut));
        for (int v = 0; v < c.graph.num_vertices(); ++v) w *= chi_open(c.graph.genus[v], c.graph.valence(v));
        total += KPoly::monomial(static_cast<std::size_t>(c.graph.num_edges()), w);
    }
    return {total, 2 - 2 * g - n};
}

std::map<int, int> stratum_census(int g, int n, OracleBudget budget) {
    std::map<int, int> census;
    for (int k = 0; k <= 3 * g - 3 + n; ++k) census[k] = 0;
    for (const auto& c : enumerate_stable_graphs(g, n, budget)) ++census[c.graph.num_edges()];
    return census;
}

namespace {

nlohmann::json graph_json(const GraphClass& c) {
    nlohmann::json j;
    j["vertices"] = c.graph.genus;
    nlohmann::json edges = nlohmann::json::array();
    for (auto [v, w] : c.graph.edges()) edges.push_back({v, w});
    j["edges"] = edges;
    nlohmann::json legs = nlohmann::json::array();
    for (int v = 0; v < c.graph.num_vertices(); ++v) {
        for (int i = 0; i < c.graph.legs[v]; ++i) legs.push_back(v);
    }
    j["legs"] = legs;
    j["aut"] = c.aut;
    return j;
}

}  // namespace

std::string graph_to_json(const GraphClass& c) { return graph_json(c).dump(); }

std::string catalog_to_json(const std::vector<GraphClass>& classes) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : classes) arr.push_back(graph_json(c));
    return arr.dump();
}

std::string graph_to_dot(const StableGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        os << "  v" << v << " [label=\"" << g.genus[v] << "\"];\n";
        for (int i = 0; i < g.legs[v]; ++i) {
            os << "  l" << v << "_" << i << " [shape=point];\n";
            os << "  v" << v << " -- l" << v << "_" << i << ";\n";
        }
    }
    for (auto [v, w] : g.edges()) os << "  v" << v << " -- v" << w << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace mbar

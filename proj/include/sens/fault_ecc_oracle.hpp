#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sens/replacement_oracle.hpp"
#include "sens/sp_tree.hpp"

namespace sens {

/*
 * Auxiliary graph G_e for a High tree edge e = (w, w') of T_v.
 *
 * Local vertex ids: [0, members.size()) are the vertices of T_e (members[i]
 * is the original id), followed by the path P = r, p_1, p_2, ... The arc
 * r -> p_1 weighs d_G(v, w') - 1 and every other arc weighs 1, so p_k sits at
 * distance d_G(v, w') + k - 2 from r. Each original arc (z, z') entering T_e
 * from outside (other than e) becomes an arc from the path vertex at distance
 * d_G(v, z) to z'. Distances from r to T_e then equal d_{G\e}(v, .).
 */
struct AuxGraph {
    Vertex source = 0;
    Vertex child = 0;
    EdgeId failed = 0;
    std::vector<Vertex> members;
    std::size_t path_vertices = 0;
    std::int64_t first_weight = 0;
    std::size_t reentry_arcs = 0;
    Graph graph;

    Vertex root() const noexcept { return static_cast<Vertex>(members.size()); }
    Vertex path_vertex(std::size_t k) const noexcept { return static_cast<Vertex>(members.size() + k); }
};

inline AuxGraph build_aux_graph(const Graph& g, const ShortestPathTree& tree, EdgeId e) {
    const auto child = tree.tree_child(e);
    if (!child) {
        throw Error("edge " + std::to_string(e) + " is not a tree edge of T_" + std::to_string(tree.source()));
    }
    if (tree.classify(*child) != EdgeClass::High) {
        throw Error("edge " + std::to_string(e) + " is not a high edge");
    }
    const Vertex wp = *child;
    const std::int64_t base = tree.level(wp).value();
    const std::int64_t de = tree.subtree_height(wp);

    AuxGraph aux;
    aux.source = tree.source();
    aux.child = wp;
    aux.failed = e;
    const auto sub = tree.subtree(wp);
    aux.members.assign(sub.begin(), sub.end());
    std::unordered_map<Vertex, Vertex> local;
    local.reserve(aux.members.size() * 2);
    for (std::size_t i = 0; i < aux.members.size(); ++i) {
        local.emplace(aux.members[i], static_cast<Vertex>(i));
    }

    // Path positions: p_k lies at distance level(z) when k = level(z) - base + 2.
    struct Reentry {
        std::size_t pos;
        Vertex target;
    };
    std::vector<Reentry> reentries;
    std::vector<std::pair<Vertex, Vertex>> internal;
    std::size_t max_pos = 0;
    for (std::size_t i = 0; i < aux.members.size(); ++i) {
        const Vertex x = aux.members[i];
        for (const Arc& a : g.in(x)) {
            if (a.id == e) {
                continue;
            }
            const Vertex z = a.to;
            if (tree.in_subtree(z, wp)) {
                internal.emplace_back(local.at(z), static_cast<Vertex>(i));
                continue;
            }
            if (!tree.contains(z)) {
                continue;  // z unreachable from v, so it cannot lead anywhere
            }
            const std::int64_t k = tree.level(z).value() - base + 2;
            if (k < 1) {
                throw InternalError("re-entry position below the first path vertex");
            }
            reentries.push_back(Reentry{static_cast<std::size_t>(k), static_cast<Vertex>(i)});
            max_pos = std::max(max_pos, static_cast<std::size_t>(k));
        }
    }
    // d_e + 4 vertices suffice when arcs join levels at most one apart (every
    // undirected graph). A directed arc may enter T_e from arbitrarily deep,
    // so P is stretched to the deepest entry.
    aux.path_vertices = static_cast<std::size_t>(de + 4);
    if (max_pos >= aux.path_vertices) {
        if (!g.directed()) {
            throw InternalError("re-entry position beyond the end of P");
        }
        aux.path_vertices = max_pos + 1;
    }
    aux.first_weight = base - 1;
    aux.reentry_arcs = reentries.size();

    aux.graph = Graph(aux.members.size() + aux.path_vertices, /*directed=*/true, /*weighted=*/true,
                      /*allow_parallel=*/true);
    aux.graph.add_edge(aux.path_vertex(0), aux.path_vertex(1), aux.first_weight);
    for (std::size_t k = 1; k + 1 < aux.path_vertices; ++k) {
        aux.graph.add_edge(aux.path_vertex(k), aux.path_vertex(k + 1), 1);
    }
    for (const auto& [from, to] : internal) {
        aux.graph.add_edge(from, to, 1);
    }
    for (const auto& r : reentries) {
        aux.graph.add_edge(aux.path_vertex(r.pos), r.target, 1);
    }
    return aux;
}

/// Distances from r inside the auxiliary graph, by a unit-weight search
/// seeded at p_1 with offset d_G(v, w') - 1. Counts scanned arcs in `relaxations`.
inline std::vector<Distance> aux_distances(const AuxGraph& aux, std::uint64_t* relaxations = nullptr) {
    const auto& h = aux.graph;
    std::vector<Distance> dist(h.n());
    dist[aux.root()] = Distance(0);
    const Vertex p1 = aux.path_vertex(1);
    dist[p1] = Distance(aux.first_weight);
    std::vector<Vertex> queue{p1};
    queue.reserve(h.n());
    std::uint64_t scanned = 1;  // the weighted first arc
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex x = queue[head];
        for (const Arc& a : h.out(x)) {
            ++scanned;
            if (dist[a.to].is_infinite()) {
                dist[a.to] = dist[x] + 1;
                queue.push_back(a.to);
            }
        }
    }
    if (relaxations != nullptr) {
        *relaxations += scanned;
    }
    return dist;
}

/// Eccentricity of v in G\e for a High edge: the deepest T_e vertex seen
/// from r, combined with the unchanged distances outside T_e.
inline EccEstimate high_edge_value(const AuxGraph& aux, Distance outside_max, std::int64_t den = 1,
                                   std::uint64_t* relaxations = nullptr) {
    const auto dist = aux_distances(aux, relaxations);
    Distance inside(0);
    for (std::size_t i = 0; i < aux.members.size(); ++i) {
        inside = std::max(inside, dist[i]);
    }
    return EccEstimate::exact(std::max(inside, outside_max), den);
}

/// F = max(1, round(sqrt(D n / (eps m)))).
inline std::int64_t default_threshold(Distance diameter, std::size_t n, std::size_t m, const RationalEps& eps) {
    if (m == 0 || n == 0) {
        return 1;
    }
    const double D = diameter.finite() ? static_cast<double>(diameter.value()) : static_cast<double>(n);
    const double f = std::sqrt(D * static_cast<double>(n) * static_cast<double>(eps.den()) /
                               (static_cast<double>(eps.num()) * static_cast<double>(m)));
    return std::max<std::int64_t>(1, std::llround(f));
}

struct FaultEccOptions {
    std::optional<std::int64_t> F_override;
    MarkerRule marker_rule = MarkerRule::Covering;
};

struct FaultEccStats {
    std::uint64_t high_edges = 0;
    std::uint64_t low_edges = 0;
    std::uint64_t aux_relaxations = 0;
    std::uint64_t replacement_queries = 0;
    std::uint64_t replacement_searches = 0;
    // Per source: Step-3 replacement queries, tree depth d_v, |S_v|.
    std::vector<std::uint64_t> low_queries;
    std::vector<std::int64_t> depth;
    std::vector<std::size_t> markers;
};

/*
 * Precomputed (1+eps)-approximate eccentricity, diameter and radius of G\e for
 * every single edge e. Queries are table lookups; the oracle keeps no
 * reference to the graph.
 */
class FaultEccOracle {
public:
    using Table = std::unordered_map<EdgeId, EccEstimate>;

    const RationalEps& eps() const noexcept { return eps_; }
    std::int64_t threshold() const noexcept { return F_; }
    std::size_t n() const noexcept { return ecc_.size(); }
    std::size_t m() const noexcept { return endpoints_.size(); }
    bool directed() const noexcept { return directed_; }

    EccEstimate query_ecc(Vertex v, EdgeId e) const {
        check(e);
        if (v >= ecc_.size()) {
            throw Error("vertex " + std::to_string(v) + " out of range");
        }
        const auto& t = per_source_[v];
        const auto it = t.find(e);
        return it == t.end() ? ecc_[v] : it->second;
    }

    EccEstimate query_diameter(EdgeId e) const {
        check(e);
        const auto it = diameter_.find(e);
        return it == diameter_.end() ? static_diameter_ : it->second;
    }

    EccEstimate query_radius(EdgeId e) const {
        check(e);
        const auto it = radius_.find(e);
        return it == radius_.end() ? static_radius_ : it->second;
    }

    /// Values with no edge removed.
    EccEstimate static_ecc(Vertex v) const { return ecc_.at(v); }
    EccEstimate static_diameter() const noexcept { return static_diameter_; }
    EccEstimate static_radius() const noexcept { return static_radius_; }

    const Table& source_table(Vertex v) const { return per_source_.at(v); }
    const Table& diameter_table() const noexcept { return diameter_; }
    const Table& radius_table() const noexcept { return radius_; }
    const std::vector<std::pair<Vertex, Vertex>>& endpoints() const noexcept { return endpoints_; }
    const FaultEccStats& stats() const noexcept { return stats_; }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
        for (EdgeId id = 0; id < endpoints_.size(); ++id) {
            const auto& [a, b] = endpoints_[id];
            if ((a == u && b == v) || (!directed_ && a == v && b == u)) {
                return id;
            }
        }
        return std::nullopt;
    }

    friend FaultEccOracle build_fault_ecc_oracle(const Graph&, const RationalEps&, const FaultEccOptions&);
    friend class FaultEccCodec;

private:
    FaultEccOracle(RationalEps eps, std::int64_t F) : eps_(eps), F_(F) {}

    void check(EdgeId e) const {
        if (e >= endpoints_.size()) {
            throw Error("unknown edge id " + std::to_string(e));
        }
    }

    RationalEps eps_;
    std::int64_t F_;
    bool directed_ = false;
    std::vector<std::pair<Vertex, Vertex>> endpoints_;
    std::vector<EccEstimate> ecc_;
    std::vector<Table> per_source_;
    Table diameter_;
    Table radius_;
    EccEstimate static_diameter_;
    EccEstimate static_radius_;
    FaultEccStats stats_;
};

inline FaultEccOracle build_fault_ecc_oracle(const Graph& g, const RationalEps& eps,
                                             const FaultEccOptions& opts = {}) {
    if (g.weighted()) {
        throw Error("fault-tolerant eccentricity oracle requires an unweighted graph");
    }
    const std::size_t n = g.n();
    const auto static_ecc = all_eccentricities(g);
    const Distance D = n == 0 ? Distance(0) : max_distance(static_ecc);
    const std::int64_t F = opts.F_override.value_or(default_threshold(D, n, g.m(), eps));
    if (F < 1) {
        throw Error("threshold F must be >= 1");
    }

    FaultEccOracle o(eps, F);
    const std::int64_t den = eps.den();
    o.directed_ = g.directed();
    for (const Edge& e : g.edges()) {
        o.endpoints_.emplace_back(e.u, e.v);
    }
    o.ecc_.reserve(n);
    for (const Distance d : static_ecc) {
        o.ecc_.push_back(EccEstimate::exact(d, den));
    }
    o.per_source_.assign(n, {});
    auto& st = o.stats_;
    st.low_queries.assign(n, 0);
    st.depth.assign(n, 0);
    st.markers.assign(n, 0);

    ReplacementDistanceOracle rep(g, CachePolicy::Lazy);
    std::vector<bool> in_some_tree(g.m(), false);

    for (Vertex v = 0; v < n; ++v) {
        const auto tree = build_sp_tree(g, v, eps, F, opts.marker_rule);
        st.depth[v] = tree.depth().value();
        st.markers[v] = tree.markers().size();
        for (const Vertex child : tree.tree_edge_children()) {
            in_some_tree[tree.parent(child)->edge] = true;
        }
        const Distance dv = tree.eccentricity();
        if (!dv.finite()) {
            continue;  // every deletion leaves ecc(v) infinite; the default covers it
        }
        auto& table = o.per_source_[v];
        table.reserve(tree.tree_edge_children().size());
        for (const Vertex child : tree.tree_edge_children()) {
            const EdgeId e = tree.parent(child)->edge;
            if (tree.classify(child) == EdgeClass::High) {
                ++st.high_edges;
                const auto aux = build_aux_graph(g, tree, e);
                table.emplace(e, high_edge_value(aux, tree.max_level_outside(child), den, &st.aux_relaxations));
                continue;
            }
            ++st.low_edges;
            Distance far = rep.query(v, child, e);
            ++st.low_queries[v];
            for (const Vertex y : tree.markers_in(tree.marker_range(child))) {
                if (y == child) {
                    continue;
                }
                far = std::max(far, rep.query(v, y, e));
                ++st.low_queries[v];
            }
            table.emplace(e, std::max(EccEstimate::exact(dv, den), EccEstimate::scaled(far, eps)));
        }
        rep.evict(v);
    }
    st.replacement_searches = rep.searches();
    for (const auto q : st.low_queries) {
        st.replacement_queries += q;
    }

    if (n > 0) {
        o.static_diameter_ = *std::max_element(o.ecc_.begin(), o.ecc_.end());
        o.static_radius_ = *std::min_element(o.ecc_.begin(), o.ecc_.end());
    } else {
        o.static_diameter_ = o.static_radius_ = EccEstimate::exact(Distance(0), den);
    }
    for (EdgeId e = 0; e < g.m(); ++e) {
        if (!in_some_tree[e]) {
            continue;
        }
        EccEstimate hi = o.query_ecc(0, e);
        EccEstimate lo = hi;
        for (Vertex v = 1; v < n; ++v) {
            const auto x = o.query_ecc(v, e);
            hi = std::max(hi, x);
            lo = std::min(lo, x);
        }
        o.diameter_.emplace(e, hi);
        o.radius_.emplace(e, lo);
    }
    return o;
}

}  // namespace sens

#pragma once

#include <set>

#include "sens/sens.hpp"

namespace testutil {

using sens::Distance;
using sens::Graph;
using sens::Vertex;

inline Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) {
        g.add_edge(v, v + 1);
    }
    return g;
}

inline Graph cycle(std::size_t n) { return sens::gen_cycle(n); }

inline Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) {
        g.add_edge(0, v);
    }
    return g;
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline Graph without(const Graph& g, sens::EdgeId e) { return sens::apply_batch(g, sens::UpdateBatch{}.erase(e)); }

inline sens::EdgeId edge_id(const Graph& g, Vertex u, Vertex v) { return g.find_edge(u, v).value(); }

// Floyd-Warshall, independent of the library's searches.
inline std::vector<std::vector<Distance>> floyd(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::vector<Distance>> d(n, std::vector<Distance>(n));
    for (Vertex v = 0; v < n; ++v) {
        d[v][v] = Distance(0);
    }
    for (const auto& e : g.edges()) {
        d[e.u][e.v] = std::min(d[e.u][e.v], Distance(e.w));
        if (!g.directed()) {
            d[e.v][e.u] = std::min(d[e.v][e.u], Distance(e.w));
        }
    }
    for (Vertex k = 0; k < n; ++k) {
        for (Vertex i = 0; i < n; ++i) {
            for (Vertex j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

inline std::set<Vertex> as_set(std::span<const Vertex> s) { return {s.begin(), s.end()}; }

}  // namespace testutil

#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <queue>
#include <vector>

#include "sens/graph.hpp"

namespace sens {

/// Unit-weight search for unweighted graphs, label-setting search otherwise.
/// `skip` names an edge to treat as deleted.
inline std::vector<Distance> sssp(const Graph& g, Vertex src, std::optional<EdgeId> skip = std::nullopt) {
    if (src >= g.n()) {
        throw Error("source " + std::to_string(src) + " out of range");
    }
    std::vector<Distance> dist(g.n());
    dist[src] = Distance(0);
    if (!g.weighted()) {
        std::vector<Vertex> queue{src};
        queue.reserve(g.n());
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const Vertex x = queue[head];
            const Distance next = dist[x] + 1;
            for (const Arc& a : g.out(x)) {
                if (a.id != skip && dist[a.to].is_infinite()) {
                    dist[a.to] = next;
                    queue.push_back(a.to);
                }
            }
        }
        return dist;
    }
    using Item = std::pair<std::int64_t, Vertex>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0, src);
    while (!heap.empty()) {
        const auto [d, x] = heap.top();
        heap.pop();
        if (d != dist[x].raw()) {
            continue;
        }
        for (const Arc& a : g.out(x)) {
            if (a.id == skip) {
                continue;
            }
            const Distance cand = dist[x] + a.w;
            if (cand < dist[a.to]) {
                dist[a.to] = cand;
                heap.emplace(cand.raw(), a.to);
            }
        }
    }
    return dist;
}

struct TreeLink {
    Vertex parent;
    EdgeId edge;
};

/// Distances from one source plus a deterministic shortest-path tree:
/// every vertex hangs off its smallest-id tight predecessor.
struct ShortestPathLinks {
    Vertex source = 0;
    std::vector<Distance> dist;
    std::vector<std::optional<TreeLink>> parent;
};

inline ShortestPathLinks shortest_path_links(const Graph& g, Vertex src, std::optional<EdgeId> skip = std::nullopt) {
    ShortestPathLinks out;
    out.source = src;
    out.dist = sssp(g, src, skip);
    out.parent.assign(g.n(), std::nullopt);

    // With zero weights several tight predecessors can sit at equal distance;
    // restricting to vertices settled earlier keeps the parent relation acyclic.
    std::vector<std::size_t> rank(g.n(), 0);
    bool zero_weights = false;
    if (g.weighted()) {
        for (const Edge& e : g.edges()) {
            zero_weights = zero_weights || e.w == 0;
        }
    }
    if (zero_weights) {
        // Re-derive a settle order: BFS over the zero-weight tight subgraph
        // inside each distance class, ordered by (distance, discovery).
        std::vector<Vertex> order;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (out.dist[v].finite()) {
                order.push_back(v);
            }
        }
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return out.dist[a] < out.dist[b]; });
        std::vector<bool> placed(g.n(), false);
        std::vector<Vertex> settled;
        settled.reserve(order.size());
        for (std::size_t i = 0; i < order.size();) {
            std::size_t j = i;
            while (j < order.size() && out.dist[order[j]] == out.dist[order[i]]) {
                ++j;
            }
            // Vertices of this class reachable from an earlier vertex by a tight
            // positive arc enter first, then expand along tight zero arcs.
            std::vector<Vertex> frontier;
            for (std::size_t k = i; k < j; ++k) {
                const Vertex v = order[k];
                bool entry = v == src;
                for (const Arc& a : g.in(v)) {
                    if (a.id != skip && a.w > 0 && out.dist[a.to].finite() && out.dist[a.to] + a.w == out.dist[v]) {
                        entry = true;
                    }
                }
                if (entry) {
                    frontier.push_back(v);
                    placed[v] = true;
                }
            }
            for (std::size_t h = 0; h < frontier.size(); ++h) {
                const Vertex x = frontier[h];
                settled.push_back(x);
                for (const Arc& a : g.out(x)) {
                    if (a.id != skip && a.w == 0 && !placed[a.to] && out.dist[a.to] == out.dist[x]) {
                        placed[a.to] = true;
                        frontier.push_back(a.to);
                    }
                }
            }
            i = j;
        }
        for (std::size_t k = 0; k < settled.size(); ++k) {
            rank[settled[k]] = k;
        }
    }

    for (Vertex v = 0; v < g.n(); ++v) {
        if (v == src || out.dist[v].is_infinite()) {
            continue;
        }
        std::optional<TreeLink> best;
        for (const Arc& a : g.in(v)) {
            const Vertex p = a.to;
            if (a.id == skip || out.dist[p].is_infinite() || out.dist[p] + a.w != out.dist[v]) {
                continue;
            }
            if (zero_weights && rank[p] >= rank[v]) {
                continue;
            }
            if (!best || p < best->parent || (p == best->parent && a.id < best->edge)) {
                best = TreeLink{p, a.id};
            }
        }
        out.parent[v] = best;
    }
    return out;
}

/// max over the vector; INFINITE if any entry is.
inline Distance max_distance(const std::vector<Distance>& dist) {
    Distance best(0);
    for (const Distance d : dist) {
        best = std::max(best, d);
    }
    return best;
}

/// Out-eccentricity of v.
inline Distance static_ecc(const Graph& g, Vertex v) { return max_distance(sssp(g, v)); }

namespace detail {

// Bit-parallel eccentricities for unweighted graphs. reach[v] holds the set of
// sources within k hops of v; the sources contained in every reach[v] at
// round k are exactly those with eccentricity <= k.
inline std::vector<Distance> all_eccentricities_bitset(const Graph& g) {
    const std::size_t n = g.n();
    const std::size_t words = (n + 63) / 64;
    std::vector<std::uint64_t> reach(n * words, 0);
    std::vector<std::uint64_t> next(n * words, 0);
    for (Vertex v = 0; v < n; ++v) {
        reach[v * words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
    std::vector<Distance> ecc(n);
    std::vector<std::uint64_t> common(words);
    std::vector<std::uint64_t> assigned(words, 0);
    std::size_t remaining = n;
    for (std::int64_t k = 0; remaining > 0; ++k) {
        std::fill(common.begin(), common.end(), ~std::uint64_t{0});
        for (Vertex v = 0; v < n; ++v) {
            for (std::size_t w = 0; w < words; ++w) {
                common[w] &= reach[v * words + w];
            }
        }
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t fresh = common[w] & ~assigned[w];
            assigned[w] |= fresh;
            while (fresh != 0) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(fresh));
                fresh &= fresh - 1;
                ecc[w * 64 + bit] = Distance(k);
                --remaining;
            }
        }
        if (remaining == 0) {
            break;
        }
        bool changed = false;
        for (Vertex v = 0; v < n; ++v) {
            std::uint64_t* dst = &next[v * words];
            const std::uint64_t* own = &reach[v * words];
            std::copy(own, own + words, dst);
            for (const Arc& a : g.in(v)) {
                const std::uint64_t* src = &reach[a.to * words];
                for (std::size_t w = 0; w < words; ++w) {
                    dst[w] |= src[w];
                }
            }
            for (std::size_t w = 0; w < words && !changed; ++w) {
                changed = dst[w] != own[w];
            }
        }
        if (!changed) {
            break;  // everything still unassigned misses some vertex forever
        }
        reach.swap(next);
    }
    return ecc;
}

}  // namespace detail

/// Out-eccentricity of every vertex.
inline std::vector<Distance> all_eccentricities(const Graph& g) {
    if (!g.weighted()) {
        return detail::all_eccentricities_bitset(g);
    }
    std::vector<Distance> ecc(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
        ecc[v] = static_ecc(g, v);
    }
    return ecc;
}

inline Distance static_diameter(const Graph& g) {
    if (g.n() == 0) {
        return Distance(0);
    }
    return max_distance(all_eccentricities(g));
}

inline Distance static_radius(const Graph& g) {
    if (g.n() == 0) {
        return Distance(0);
    }
    const auto ecc = all_eccentricities(g);
    return *std::min_element(ecc.begin(), ecc.end());
}

/// Vertices reachable from `src` (including src).
inline std::vector<bool> reachable_from(const Graph& g, Vertex src) {
    std::vector<bool> seen(g.n(), false);
    std::vector<Vertex> stack{src};
    seen[src] = true;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const Arc& a : g.out(x)) {
            if (!seen[a.to]) {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
        }
    }
    return seen;
}

/// Vertices that can reach `dst` (including dst).
inline std::vector<bool> reaching(const Graph& g, Vertex dst) {
    std::vector<bool> seen(g.n(), false);
    std::vector<Vertex> stack{dst};
    seen[dst] = true;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const Arc& a : g.in(x)) {
            if (!seen[a.to]) {
                seen[a.to] = true;
                stack.push_back(a.to);
            }
        }
    }
    return seen;
}

}  // namespace sens

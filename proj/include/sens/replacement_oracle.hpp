#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sens/shortest_paths.hpp"

namespace sens {

enum class CachePolicy { Eager, Lazy };

/*
 * Exact replacement distances d_{G\e}(u, v).
 *
 * Behind the constant-time query interface sits one search per
 * (source, tree edge) pair: deleting an edge off the source's shortest-path
 * tree cannot change any distance from that source, so only the at most n-1
 * tree edges per source need their own distance vector.
 *
 * Eager builds every vector up front and is read-only afterwards. Lazy fills
 * vectors on first use; it is not safe for concurrent queries.
 */
class ReplacementDistanceOracle {
public:
    ReplacementDistanceOracle(const Graph& g, CachePolicy policy) : g_(&g), policy_(policy), sources_(g.n()) {
        if (policy_ == CachePolicy::Eager) {
            for (Vertex u = 0; u < g.n(); ++u) {
                auto& s = source(u);
                for (Vertex child = 0; child < g.n(); ++child) {
                    if (s.links.parent[child]) {
                        replacement(s, child);
                    }
                }
            }
        }
    }

    // Keeps a pointer to g, so temporaries are rejected.
    ReplacementDistanceOracle(Graph&&, CachePolicy) = delete;

    CachePolicy policy() const noexcept { return policy_; }
    const Graph& graph() const noexcept { return *g_; }

    Distance query(Vertex u, Vertex v, EdgeId e) {
        check_vertex(u);
        check_vertex(v);
        g_->edge(e);
        auto& s = source(u);
        const auto child = s.child_of_edge[e];
        if (child == kNone) {
            return s.links.dist[v];
        }
        return replacement(s, child)[v];
    }

    /// d_G(u, v).
    Distance base_distance(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        return source(u).links.dist[v];
    }

    /// Shortest-path tree of u under the smallest-id parent rule.
    const ShortestPathLinks& tree(Vertex u) {
        check_vertex(u);
        return source(u).links;
    }

    /*
     * Replacement-paths profile: for each edge of the canonical s-t path (the
     * tree path of T_s, listed from s), the s-t distance with that edge removed.
     */
    std::vector<std::pair<EdgeId, Distance>> profile(Vertex s, Vertex t) {
        check_vertex(s);
        check_vertex(t);
        auto& src = source(s);
        if (src.links.dist[t].is_infinite()) {
            throw Error("target " + std::to_string(t) + " unreachable from " + std::to_string(s));
        }
        std::vector<Vertex> path_children;
        for (Vertex x = t; x != s; x = src.links.parent[x]->parent) {
            path_children.push_back(x);
        }
        std::vector<std::pair<EdgeId, Distance>> out;
        out.reserve(path_children.size());
        for (auto it = path_children.rbegin(); it != path_children.rend(); ++it) {
            out.emplace_back(src.links.parent[*it]->edge, replacement(src, *it)[t]);
        }
        return out;
    }

    /// Number of cached replacement vectors.
    std::size_t cache_size() const noexcept {
        std::size_t total = 0;
        for (const auto& s : sources_) {
            if (s) {
                for (const auto& r : s->by_child) {
                    total += r.empty() ? 0 : 1;
                }
            }
        }
        return total;
    }

    /// Searches run so far (base trees plus replacement vectors).
    std::size_t searches() const noexcept { return searches_; }

    /// Drops everything cached for source u (Lazy only; Eager ignores it).
    void evict(Vertex u) {
        if (policy_ == CachePolicy::Lazy && u < sources_.size()) {
            sources_[u].reset();
        }
    }

private:
    static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

    struct SourceEntry {
        ShortestPathLinks links;
        std::vector<Vertex> child_of_edge;
        std::vector<std::vector<Distance>> by_child;
    };

    void check_vertex(Vertex v) const {
        if (v >= g_->n()) {
            throw Error("vertex " + std::to_string(v) + " out of range");
        }
    }

    SourceEntry& source(Vertex u) {
        auto& slot = sources_[u];
        if (!slot) {
            slot.emplace();
            slot->links = shortest_path_links(*g_, u);
            ++searches_;
            slot->child_of_edge.assign(g_->m(), kNone);
            for (Vertex v = 0; v < g_->n(); ++v) {
                if (const auto& p = slot->links.parent[v]) {
                    slot->child_of_edge[p->edge] = v;
                }
            }
            slot->by_child.assign(g_->n(), {});
        }
        return *slot;
    }

    const std::vector<Distance>& replacement(SourceEntry& s, Vertex child) {
        auto& vec = s.by_child[child];
        if (vec.empty()) {
            vec = sssp(*g_, s.links.source, s.links.parent[child]->edge);
            ++searches_;
        }
        return vec;
    }

    const Graph* g_;
    CachePolicy policy_;
    std::vector<std::optional<SourceEntry>> sources_;
    std::size_t searches_ = 0;
};

}  // namespace sens

#pragma once

#include "sens/gadget.hpp"

namespace sens {

/*
 * Triangle detection gadgets. Layout shared by all of them, for an input
 * graph on n vertices:
 *
 *   V1 = [0, n)   V2 = [n, 2n)   V3 = [2n, 3n)   V4 = [3n, 4n)
 *
 * Consecutive layers are joined by the input edges in both orientations, so
 * v1 reaches v4 in three steps exactly when v lies on a triangle.
 */
namespace triangle_layout {
inline Vertex layer(std::size_t n, int i, Vertex v) { return static_cast<Vertex>((i - 1) * n + v); }
}  // namespace triangle_layout

enum class TriangleVariant { St2, Ss1, Ap0 };

inline const char* variant_name(TriangleVariant v) {
    switch (v) {
        case TriangleVariant::St2: return "st2";
        case TriangleVariant::Ss1: return "ss1";
        case TriangleVariant::Ap0: return "ap0";
    }
    return "?";
}

inline TriangleVariant parse_triangle_variant(const std::string& s) {
    if (s == "st2") return TriangleVariant::St2;
    if (s == "ss1") return TriangleVariant::Ss1;
    if (s == "ap0") return TriangleVariant::Ap0;
    throw Error("unknown variant '" + s + "' (expected st2, ss1 or ap0)");
}

namespace detail {

inline void require_simple_undirected(const Graph& g) {
    if (g.directed() || g.weighted()) {
        throw Error("triangle gadgets need an undirected unweighted graph");
    }
}

// (v, u, w) with u, w the smallest neighbours closing a triangle through v.
inline Witness triangle_through(const Graph& g, Vertex v) {
    for (Vertex u = 0; u < g.n(); ++u) {
        if (u == v || !g.has_edge(v, u)) {
            continue;
        }
        for (Vertex w = 0; w < g.n(); ++w) {
            if (w != v && w != u && g.has_edge(u, w) && g.has_edge(w, v)) {
                return {v, u, w};
            }
        }
    }
    throw InternalError("stage fired for a vertex on no triangle");
}

inline void add_layers(Graph& out, const Graph& g) {
    const std::size_t n = g.n();
    for (int i = 1; i <= 3; ++i) {
        for (const Edge& e : g.edges()) {
            out.add_edge(triangle_layout::layer(n, i, e.u), triangle_layout::layer(n, i + 1, e.v));
            out.add_edge(triangle_layout::layer(n, i, e.v), triangle_layout::layer(n, i + 1, e.u));
        }
    }
}

}  // namespace detail

struct TriangleDiameterOptions {
    /// Query "< 4" instead of "= 3". Same decision on exact oracles; also
    /// correct for (1+eps)-approximate ones with eps < 1/3.
    bool gap_threshold = false;
};

/*
 * Decremental diameter / eccentricity gadget. Beyond the four layers:
 *
 *   A = [4n, 5n), B = [5n, 6n) cliques, c = 6n, d = 6n + 1;
 *   v1-a_v, a_v-b_v, B x V4 complete, c to V2, V3 and A, d to V3, V4 and B, c-d.
 *
 * Stage v deletes (b_v, v4); afterwards d(v1, v4) is 3 with a triangle at v
 * and 4 without, and every other pair stays within 3.
 */
inline GadgetInstance build_triangle_diameter_like(const Graph& g, bool ecc, TriangleDiameterOptions opts) {
    detail::require_simple_undirected(g);
    const std::size_t n = g.n();
    const Vertex A = static_cast<Vertex>(4 * n);
    const Vertex B = static_cast<Vertex>(5 * n);
    const Vertex c = static_cast<Vertex>(6 * n);
    const Vertex d = c + 1;
    GadgetInstance inst;
    inst.gadget = ecc ? "triangle-ecc" : "triangle-diam";
    inst.source_size = n;
    inst.sensitivity = 1;
    Graph h(6 * n + 2);
    detail::add_layers(h, g);
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex u = v + 1; u < n; ++u) {
            h.add_edge(A + v, A + u);
            h.add_edge(B + v, B + u);
        }
    }
    std::vector<EdgeId> cut(n);
    for (Vertex v = 0; v < n; ++v) {
        h.add_edge(triangle_layout::layer(n, 1, v), A + v);
        h.add_edge(A + v, B + v);
        for (Vertex u = 0; u < n; ++u) {
            const EdgeId id = h.add_edge(B + v, triangle_layout::layer(n, 4, u));
            if (u == v) {
                cut[v] = id;
            }
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        h.add_edge(c, triangle_layout::layer(n, 2, v));
        h.add_edge(c, triangle_layout::layer(n, 3, v));
        h.add_edge(c, A + v);
        h.add_edge(d, triangle_layout::layer(n, 3, v));
        h.add_edge(d, triangle_layout::layer(n, 4, v));
        h.add_edge(d, B + v);
    }
    h.add_edge(c, d);
    for (Vertex v = 0; v < n; ++v) {
        Stage st;
        st.label = std::to_string(v);
        st.batch.erase(cut[v]);
        Query q = ecc ? Query::ecc(triangle_layout::layer(n, 1, v)) : Query::diameter();
        if (opts.gap_threshold) {
            q.when(Cmp::Less, 4);
        } else {
            q.when(Cmp::Eq, 3);
        }
        st.queries.push_back(std::move(q));
        inst.stages.push_back(std::move(st));
    }
    inst.graph = std::move(h);
    inst.witness = [g](std::size_t stage, const StageTrace&) {
        return detail::triangle_through(g, static_cast<Vertex>(stage));
    };
    return inst;
}

inline GadgetInstance gadget_triangle_diameter(const Graph& g, TriangleDiameterOptions opts = {}) {
    return build_triangle_diameter_like(g, false, opts);
}

inline GadgetInstance gadget_triangle_ecc(const Graph& g, TriangleDiameterOptions opts = {}) {
    return build_triangle_diameter_like(g, true, opts);
}

namespace detail {

// Shared by the reachability (directed) and approximate-distance (undirected)
// variants: the four layers, plus s = 4n and t = 4n + 1 when the variant uses them.
inline GadgetInstance triangle_layered(const Graph& g, TriangleVariant variant, bool directed) {
    require_simple_undirected(g);
    const std::size_t n = g.n();
    const std::size_t extra = variant == TriangleVariant::St2 ? 2 : (variant == TriangleVariant::Ss1 ? 1 : 0);
    const Vertex s = static_cast<Vertex>(4 * n);
    const Vertex t = s + 1;
    GadgetInstance inst;
    inst.gadget = std::string(directed ? "triangle-reach-" : "triangle-sp-") + variant_name(variant);
    inst.source_size = n;
    inst.sensitivity = extra;
    Graph h(4 * n + extra, directed);
    add_layers(h, g);
    for (Vertex v = 0; v < n; ++v) {
        const Vertex v1 = triangle_layout::layer(n, 1, v);
        const Vertex v4 = triangle_layout::layer(n, 4, v);
        Stage st;
        st.label = std::to_string(v);
        Query q;
        switch (variant) {
            case TriangleVariant::St2:
                st.batch.insert(s, v1).insert(v4, t);
                q = directed ? Query::reach(s, t) : Query::dist(s, t).when(Cmp::Less, 7);
                break;
            case TriangleVariant::Ss1:
                st.batch.insert(s, v1);
                q = directed ? Query::reach(s, v4) : Query::dist(s, v4).when(Cmp::Less, 6);
                break;
            case TriangleVariant::Ap0:
                q = directed ? Query::reach(v1, v4) : Query::dist(v1, v4).when(Cmp::Less, 5);
                break;
        }
        if (directed) {
            q.when(true);
        }
        st.queries.push_back(std::move(q));
        inst.stages.push_back(std::move(st));
    }
    inst.graph = std::move(h);
    inst.witness = [g](std::size_t stage, const StageTrace&) {
        return triangle_through(g, static_cast<Vertex>(stage));
    };
    return inst;
}

}  // namespace detail

/// Directed layers V_i -> V_{i+1}; stages ask reachability.
inline GadgetInstance gadget_triangle_reach(const Graph& g, TriangleVariant variant) {
    return detail::triangle_layered(g, variant, true);
}

/// Undirected layers; stages ask distances with thresholds 7, 6 and 5.
inline GadgetInstance gadget_triangle_approx_sp(const Graph& g, TriangleVariant variant) {
    return detail::triangle_layered(g, variant, false);
}

}  // namespace sens

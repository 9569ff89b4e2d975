#pragma once

#include "sens/brute.hpp"
#include "sens/gadget.hpp"

namespace sens {

namespace detail {

// (i, j, k) minimising the triangle sum through x_i (any negative one will do).
inline Witness negtri_through_x(const NegTriangleInput& h, std::size_t i) {
    for (std::size_t j = 0; j < h.n; ++j) {
        for (std::size_t k = 0; k < h.n; ++k) {
            if (h.w_xy(i, j) + h.w_yz(j, k) + h.w_xz(i, k) < 0) {
                return {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)};
            }
        }
    }
    throw InternalError("stage fired for an x on no negative triangle");
}

inline Witness negtri_through_z(const NegTriangleInput& h, std::size_t k) {
    for (std::size_t i = 0; i < h.n; ++i) {
        for (std::size_t j = 0; j < h.n; ++j) {
            if (h.w_xy(i, j) + h.w_yz(j, k) + h.w_xz(i, k) < 0) {
                return {static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), static_cast<std::int64_t>(k)};
            }
        }
    }
    throw InternalError("stage fired for a z on no negative triangle");
}

}  // namespace detail

/*
 * Decremental weighted diameter gadget. With M = max|w| + 1 every input edge
 * is shifted by 5M into (4M, 6M); all other edges weigh 4M. Layout:
 *
 *   V1 = x copies [0, n), V2 = y [n, 2n), V3 = z [2n, 3n), V4 = x [3n, 4n),
 *   A = [4n, 5n), B = [5n, 6n), c = 6n, d = 6n + 1.
 *
 * Layer edges x1-y2, y2-z3, z3-x4 carry the shifted weights. x_i^1-a_i,
 * a_i-b_i, B x V4, A and B cliques, c to V2/V3/A, d to V3/V4/B and c-d weigh 4M.
 * Stage i deletes (b_i, x_i^4); then d(x_i^1, x_i^4) < 15M iff some triangle
 * through x_i is negative, and all other pairs stay below 15M.
 */
inline GadgetInstance gadget_negtri_diameter(const NegTriangleInput& h, bool ecc = false) {
    const std::size_t n = h.n;
    const std::int64_t M = h.max_abs() + 1;
    const std::int64_t heavy = 4 * M;
    const Vertex A = static_cast<Vertex>(4 * n);
    const Vertex B = static_cast<Vertex>(5 * n);
    const Vertex c = static_cast<Vertex>(6 * n);
    const Vertex d = c + 1;
    auto V = [n](int layer, std::size_t i) { return static_cast<Vertex>((layer - 1) * n + i); };

    Graph g(6 * n + 2, false, true);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g.add_edge(V(1, i), V(2, j), h.w_xy(i, j) + 5 * M);
            g.add_edge(V(2, i), V(3, j), h.w_yz(i, j) + 5 * M);
            g.add_edge(V(3, j), V(4, i), h.w_xz(i, j) + 5 * M);
        }
    }
    for (Vertex i = 0; i < n; ++i) {
        for (Vertex j = i + 1; j < n; ++j) {
            g.add_edge(A + i, A + j, heavy);
            g.add_edge(B + i, B + j, heavy);
        }
    }
    std::vector<EdgeId> cut(n);
    for (Vertex i = 0; i < n; ++i) {
        g.add_edge(V(1, i), A + i, heavy);
        g.add_edge(A + i, B + i, heavy);
        for (Vertex j = 0; j < n; ++j) {
            const EdgeId id = g.add_edge(B + i, V(4, j), heavy);
            if (i == j) {
                cut[i] = id;
            }
        }
    }
    for (Vertex i = 0; i < n; ++i) {
        g.add_edge(c, V(2, i), heavy);
        g.add_edge(c, V(3, i), heavy);
        g.add_edge(c, A + i, heavy);
        g.add_edge(d, V(3, i), heavy);
        g.add_edge(d, V(4, i), heavy);
        g.add_edge(d, B + i, heavy);
    }
    g.add_edge(c, d, heavy);

    GadgetInstance inst;
    inst.gadget = ecc ? "negtri-ecc" : "negtri-diam";
    inst.source_size = n;
    inst.sensitivity = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Stage st;
        st.label = std::to_string(i);
        st.batch.erase(cut[i]);
        Query q = ecc ? Query::ecc(V(1, i)) : Query::diameter();
        st.queries.push_back(q.when(Cmp::Less, 15 * M));
        inst.stages.push_back(std::move(st));
    }
    inst.graph = std::move(g);
    inst.witness = [h](std::size_t stage, const StageTrace&) { return detail::negtri_through_x(h, stage); };
    return inst;
}

/*
 * Decremental s-t distance gadget with two deletions per stage. The input is
 * shifted by -Mmin + 1 (Mmin the most negative weight) so every weight H is
 * positive; W = 4 max H. Layout, with A = x, B = y, C = z:
 *
 *   A = [0, n), B = [n, 2n), C = [2n, 3n), s = 3n,
 *   c'_j = 3n + j for j = 1..n+1  (path s, c'_1, ..., c'_{n+1}, weight 0),
 *   t = 4n + 2,
 *   c''_i = 4n + 3 + i for i = 0..n  (path t, c''_n, ..., c''_0, weight 0).
 *
 * A-B and B-C edges weigh H + 6nW, (a_i, c'_j) weighs (7n - j)W + H(a_i, c_j)
 * and (c_i, c''_i) weighs (6n + i)W. The end vertices c'_{n+1} and c''_0 pad
 * the paths so stage i can always delete (c'_i, c'_{i+1}) and (c''_i, c''_{i-1}):
 * s then reaches c'_1..c'_i only and t reaches c''_i..c''_n only, and the
 * shortest s-t path weighs 25nW plus the lightest shifted triangle through c_i.
 */
inline GadgetInstance gadget_negtri_st2(const NegTriangleInput& h) {
    const std::size_t n = h.n;
    GadgetInstance inst;
    inst.gadget = "negtri-st2";
    inst.source_size = n;
    inst.sensitivity = 2;
    if (n == 0 || h.min_weight() >= 0) {
        inst.graph = Graph(0, false, true);
        inst.default_answer = false;
        return inst;
    }
    const std::int64_t Mmin = h.min_weight();
    auto H = [&](std::int64_t w) { return w - Mmin + 1; };
    const std::int64_t W = 4 * H(h.max_weight());
    const auto nn = static_cast<std::int64_t>(n);

    const Vertex s = static_cast<Vertex>(3 * n);
    const Vertex t = static_cast<Vertex>(4 * n + 2);
    auto a = [](std::size_t i) { return static_cast<Vertex>(i); };
    auto b = [n](std::size_t j) { return static_cast<Vertex>(n + j); };
    auto cz = [n](std::size_t k) { return static_cast<Vertex>(2 * n + k); };
    auto cp = [n](std::size_t j) { return static_cast<Vertex>(3 * n + j); };       // j = 1..n+1
    auto cpp = [n](std::size_t i) { return static_cast<Vertex>(4 * n + 3 + i); };  // i = 0..n

    Graph g(5 * n + 4, false, true);
    std::vector<EdgeId> p1(n + 2);  // p1[j] = edge (c'_j, c'_{j+1}); p1[0] = (s, c'_1)
    std::vector<EdgeId> p2(n + 1);  // p2[i] = edge (c''_i, c''_{i-1}) for i >= 1
    p1[0] = g.add_edge(s, cp(1), 0);
    for (std::size_t j = 1; j <= n; ++j) {
        p1[j] = g.add_edge(cp(j), cp(j + 1), 0);
    }
    g.add_edge(t, cpp(n), 0);
    for (std::size_t i = n; i >= 1; --i) {
        p2[i] = g.add_edge(cpp(i), cpp(i - 1), 0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g.add_edge(a(i), b(j), H(h.w_xy(i, j)) + 6 * nn * W);
            g.add_edge(b(i), cz(j), H(h.w_yz(i, j)) + 6 * nn * W);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            g.add_edge(a(i), cp(j), (7 * nn - static_cast<std::int64_t>(j)) * W + H(h.w_xz(i, j - 1)));
        }
    }
    for (std::size_t k = 1; k <= n; ++k) {
        g.add_edge(cz(k - 1), cpp(k), (6 * nn + static_cast<std::int64_t>(k)) * W);
    }
    const std::int64_t threshold = 25 * nn * W - 3 * Mmin + 3;
    for (std::size_t i = 1; i <= n; ++i) {
        Stage st;
        st.label = std::to_string(i - 1);
        st.batch.erase(p1[i]).erase(p2[i]);
        st.queries.push_back(Query::dist(s, t).when(Cmp::Less, threshold));
        inst.stages.push_back(std::move(st));
    }
    inst.graph = std::move(g);
    inst.witness = [h](std::size_t stage, const StageTrace&) { return detail::negtri_through_z(h, stage); };
    return inst;
}

}  // namespace sens

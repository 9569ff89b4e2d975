#pragma once

#include "sens/harness/rng.hpp"
#include "sens/problems.hpp"

namespace sens {

/// G(n, p): each of the n(n-1)/2 pairs independently, in lexicographic order.
inline Graph gen_gnp(std::size_t n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0) {
        throw Error("gnp probability must lie in [0, 1]");
    }
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

/// G(n, p) plus a triangle on three distinct random vertices.
inline Graph gen_planted_triangle(std::size_t n, double p, Rng& rng) {
    if (n < 3) {
        throw Error("planted-triangle needs n >= 3");
    }
    Graph base = gen_gnp(n, p, rng);
    std::vector<Vertex> pick(n);
    for (Vertex v = 0; v < n; ++v) {
        pick[v] = v;
    }
    rng.shuffle(pick);
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            if (!base.has_edge(pick[a], pick[b])) {
                base.add_edge(pick[a], pick[b]);
            }
        }
    }
    return base;
}

inline Graph gen_cycle(std::size_t n) {
    if (n < 3) {
        throw Error("cycle needs n >= 3");
    }
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        g.add_edge(v, static_cast<Vertex>((v + 1) % n));
    }
    return g;
}

/// Connected undirected graph: a random recursive tree plus random extra edges up to m.
inline Graph gen_connected(std::size_t n, std::size_t m, Rng& rng) {
    if (n == 0) {
        if (m != 0) {
            throw Error("connected graph on 0 vertices has no edges");
        }
        return Graph(0);
    }
    const std::size_t max_m = n * (n - 1) / 2;
    if (m < n - 1 || m > max_m) {
        throw Error("connected graph on " + std::to_string(n) + " vertices needs m in [" + std::to_string(n - 1) +
                    ", " + std::to_string(max_m) + "]");
    }
    std::vector<Vertex> label(n);
    for (Vertex v = 0; v < n; ++v) {
        label[v] = v;
    }
    rng.shuffle(label);
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) {
        g.add_edge(label[rng.index(i)], label[i]);
    }
    if (m - g.m() > max_m / 2) {
        // Dense: pick from the remaining pairs explicitly.
        std::vector<std::pair<Vertex, Vertex>> rest;
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v)) {
                    rest.emplace_back(u, v);
                }
            }
        }
        rng.shuffle(rest);
        for (std::size_t i = 0; g.m() < m; ++i) {
            g.add_edge(rest[i].first, rest[i].second);
        }
        return g;
    }
    while (g.m() < m) {
        const auto u = static_cast<Vertex>(rng.index(n));
        const auto v = static_cast<Vertex>(rng.index(n));
        if (u != v && !g.has_edge(u, v)) {
            g.add_edge(u, v);
        }
    }
    return g;
}

inline NegTriangleInput gen_negtri(std::size_t n, std::int64_t wmax, Rng& rng) {
    if (wmax < 0) {
        throw Error("wmax must be non-negative");
    }
    NegTriangleInput h(n);
    for (auto* mat : {&h.xy, &h.yz, &h.xz}) {
        for (auto& w : *mat) {
            w = rng.uniform(-wmax, wmax);
        }
    }
    return h;
}

/// m clauses over num_vars variables, each on k distinct variables with random signs.
inline Cnf gen_cnf(std::size_t k, std::size_t num_vars, std::size_t m, Rng& rng) {
    if (k > num_vars) {
        throw Error("clause width exceeds the variable count");
    }
    Cnf f;
    f.num_vars = num_vars;
    std::vector<int> vars(num_vars);
    for (std::size_t i = 0; i < num_vars; ++i) {
        vars[i] = static_cast<int>(i + 1);
    }
    for (std::size_t c = 0; c < m; ++c) {
        rng.shuffle(vars);
        std::vector<int> clause(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(k));
        for (auto& lit : clause) {
            if (rng.bernoulli(0.5)) {
                lit = -lit;
            }
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

inline BitVector gen_bits(std::size_t n, double density, Rng& rng) {
    BitVector v(n);
    for (auto& b : v) {
        b = rng.bernoulli(density) ? 1 : 0;
    }
    return v;
}

/// M with the given density; u and v with vec_density (defaults to density).
inline UmvInput gen_umv(std::size_t n1, std::size_t n2, double density, Rng& rng, double vec_density = -1.0) {
    if (vec_density < 0.0) {
        vec_density = density;
    }
    if (density < 0.0 || density > 1.0 || vec_density > 1.0) {
        throw Error("density must lie in [0, 1]");
    }
    UmvInput in;
    in.M = BitMatrix(n1, n2);
    for (auto& b : in.M.bits) {
        b = rng.bernoulli(density) ? 1 : 0;
    }
    in.u = gen_bits(n1, vec_density, rng);
    in.v = gen_bits(n2, vec_density, rng);
    return in;
}

}  // namespace sens

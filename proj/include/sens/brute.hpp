#pragma once

#include <array>
#include <optional>
#include <vector>

#include "sens/problems.hpp"

namespace sens {

/// First triangle (v, u, w), v < u < w, in lexicographic order.
inline std::optional<std::array<Vertex, 3>> brute_triangle(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex u = v + 1; u < g.n(); ++u) {
            if (!g.has_edge(v, u)) {
                continue;
            }
            for (Vertex w = u + 1; w < g.n(); ++w) {
                if (g.has_edge(u, w) && g.has_edge(v, w)) {
                    return std::array<Vertex, 3>{v, u, w};
                }
            }
        }
    }
    return std::nullopt;
}

/// participates[v] iff v lies on some triangle.
inline std::vector<bool> triangle_participants(const Graph& g) {
    std::vector<bool> in(g.n(), false);
    for (Vertex v = 0; v < g.n(); ++v) {
        for (Vertex u = v + 1; u < g.n(); ++u) {
            if (!g.has_edge(v, u)) {
                continue;
            }
            for (Vertex w = u + 1; w < g.n(); ++w) {
                if (g.has_edge(u, w) && g.has_edge(v, w)) {
                    in[v] = in[u] = in[w] = true;
                }
            }
        }
    }
    return in;
}

/// First (i, j, k) in lexicographic order with w(x_i,y_j) + w(y_j,z_k) + w(x_i,z_k) < 0.
inline std::optional<std::array<std::size_t, 3>> brute_negative_triangle(const NegTriangleInput& h) {
    for (std::size_t i = 0; i < h.n; ++i) {
        for (std::size_t j = 0; j < h.n; ++j) {
            for (std::size_t k = 0; k < h.n; ++k) {
                if (h.w_xy(i, j) + h.w_yz(j, k) + h.w_xz(i, k) < 0) {
                    return std::array<std::size_t, 3>{i, j, k};
                }
            }
        }
    }
    return std::nullopt;
}

/// Smallest satisfying assignment (bit i = variable i), if any.
inline std::optional<std::uint64_t> brute_sat(const Cnf& f) {
    if (f.num_vars > 40) {
        throw Error("brute-force SAT limited to 40 variables");
    }
    const std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t a = 0; a < total; ++a) {
        bool ok = true;
        for (const auto& c : f.clauses) {
            if (!Cnf::clause_true(c, a)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return a;
        }
    }
    return std::nullopt;
}

/// u^T M v over the Boolean semiring.
inline bool brute_umv(const BitMatrix& M, const BitVector& u, const BitVector& v) {
    if (u.size() != M.rows || v.size() != M.cols) {
        throw Error("uMv dimension mismatch");
    }
    for (std::size_t i = 0; i < M.rows; ++i) {
        for (std::size_t j = 0; j < M.cols; ++j) {
            if (u[i] && M.at(i, j) && v[j]) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace sens

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sens/distance.hpp"

namespace sens {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    Vertex u;
    Vertex v;
    Weight w;
    EdgeId id;

    bool operator==(const Edge&) const = default;
};

/// One direction of an edge as seen from an adjacency list.
struct Arc {
    Vertex to;
    Weight w;
    EdgeId id;
};

namespace detail {
// Counts adjacency-list reads on the calling thread. Used to check that
// table-lookup oracles never walk a graph while answering queries.
inline thread_local std::uint64_t adjacency_reads = 0;
}  // namespace detail

inline std::uint64_t graph_touches() noexcept { return detail::adjacency_reads; }

/*
 * Directed or undirected graph with integer weights and stable edge ids 0..m-1.
 *
 * Undirected edges are stored once in edges() and appear in both endpoints'
 * adjacency under the same id. Self-loops are rejected; parallel edges are
 * rejected unless the graph was created with allow_parallel (gadget and
 * auxiliary constructions only), in which case has_parallel_edges() reports them.
 */
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n, bool directed = false, bool weighted = false, bool allow_parallel = false)
        : n_(n), directed_(directed), weighted_(weighted), allow_parallel_(allow_parallel), out_(n) {
        if (directed_) {
            in_.resize(n);
        }
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    bool directed() const noexcept { return directed_; }
    bool weighted() const noexcept { return weighted_; }
    bool allows_parallel() const noexcept { return allow_parallel_; }
    bool has_parallel_edges() const noexcept { return has_parallel_; }

    /// Appends a vertex and returns its id.
    Vertex add_vertex() {
        out_.emplace_back();
        if (directed_) {
            in_.emplace_back();
        }
        return static_cast<Vertex>(n_++);
    }

    EdgeId add_edge(Vertex u, Vertex v, Weight w = 1) {
        if (u >= n_ || v >= n_) {
            throw Error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has a vertex out of range [0," +
                        std::to_string(n_) + ")");
        }
        if (u == v) {
            throw Error("self-loop at vertex " + std::to_string(u));
        }
        if (w < 0) {
            throw Error("negative weight " + std::to_string(w));
        }
        if (!weighted_ && w != 1) {
            throw Error("unweighted graph requires weight 1, got " + std::to_string(w));
        }
        const auto key = pair_key(u, v);
        if (pair_count_[key]++ > 0) {
            if (!allow_parallel_) {
                throw Error("parallel edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            }
            has_parallel_ = true;
        }
        const auto id = static_cast<EdgeId>(edges_.size());
        edges_.push_back(Edge{u, v, w, id});
        out_[u].push_back(Arc{v, w, id});
        if (directed_) {
            in_[v].push_back(Arc{u, w, id});
        } else {
            out_[v].push_back(Arc{u, w, id});
        }
        return id;
    }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const Edge& edge(EdgeId id) const {
        if (id >= edges_.size()) {
            throw Error("unknown edge id " + std::to_string(id));
        }
        return edges_[id];
    }

    std::span<const Arc> out(Vertex v) const {
        ++detail::adjacency_reads;
        return out_[v];
    }

    /// Incoming arcs; equals out() for undirected graphs.
    std::span<const Arc> in(Vertex v) const {
        ++detail::adjacency_reads;
        return directed_ ? std::span<const Arc>(in_[v]) : std::span<const Arc>(out_[v]);
    }

    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
        if (u >= n_ || v >= n_) {
            return std::nullopt;
        }
        for (const Arc& a : out_[u]) {
            if (a.to == v) {
                return a.id;
            }
        }
        return std::nullopt;
    }

    bool has_edge(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }

    /// Order-sensitive FNV-1a hash of (n, flags, edge list). Equal graphs hash equal.
    std::uint64_t fingerprint() const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&h](std::uint64_t x) {
            for (int i = 0; i < 8; ++i) {
                h ^= (x >> (8 * i)) & 0xffU;
                h *= 1099511628211ULL;
            }
        };
        mix(n_);
        mix((directed_ ? 1U : 0U) | (weighted_ ? 2U : 0U));
        for (const Edge& e : edges_) {
            mix(e.u);
            mix(e.v);
            mix(static_cast<std::uint64_t>(e.w));
        }
        return h;
    }

private:
    std::uint64_t pair_key(Vertex u, Vertex v) const noexcept {
        if (!directed_ && u > v) {
            std::swap(u, v);
        }
        return (static_cast<std::uint64_t>(u) << 32) | v;
    }

    std::size_t n_ = 0;
    bool directed_ = false;
    bool weighted_ = false;
    bool allow_parallel_ = false;
    bool has_parallel_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<Arc>> out_;
    std::vector<std::vector<Arc>> in_;
    std::unordered_map<std::uint64_t, std::uint32_t> pair_count_;
};

}  // namespace sens

#pragma once

#include "sens/gadget.hpp"
#include "sens/problems.hpp"

namespace sens {

enum class UmvMode { Incremental, Decremental };

/*
 * Boolean u^T M v through s-l distances. Layout for M of size n1 x n2:
 *
 *   L = [0, n1), R = [n1, n1 + n2), s, p1, p2, p3.
 *
 * l_i - r_j iff M_ij = 1, the pendant path s - p1 - p2 - p3, and p3 - l_i for
 * every i, so d(s, l_i) <= 4 always. Making s adjacent to exactly the r_j with
 * v_j = 1 drops d(s, l_i) to 2 iff (M v)_i = 1; nothing lands at 3.
 */
class UmvGadget {
public:
    UmvGadget(BitMatrix M, UmvMode mode) : M_(std::move(M)), mode_(mode) {
        const std::size_t n1 = M_.rows;
        const std::size_t n2 = M_.cols;
        s_ = static_cast<Vertex>(n1 + n2);
        Graph g(n1 + n2 + 4);
        for (std::size_t i = 0; i < n1; ++i) {
            for (std::size_t j = 0; j < n2; ++j) {
                if (M_.at(i, j)) {
                    g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(n1 + j));
                }
            }
        }
        g.add_edge(s_, s_ + 1);
        g.add_edge(s_ + 1, s_ + 2);
        g.add_edge(s_ + 2, s_ + 3);
        for (std::size_t i = 0; i < n1; ++i) {
            g.add_edge(s_ + 3, static_cast<Vertex>(i));
        }
        if (mode_ == UmvMode::Decremental) {
            s_edges_.resize(n2);
            for (std::size_t j = 0; j < n2; ++j) {
                s_edges_[j] = g.add_edge(s_, static_cast<Vertex>(n1 + j));
            }
        }
        graph_ = std::move(g);
    }

    const Graph& graph() const noexcept { return graph_; }
    Vertex s() const noexcept { return s_; }
    UmvMode mode() const noexcept { return mode_; }

    /// Single-stage instance answering u^T M v.
    GadgetInstance instance(const BitVector& u, const BitVector& v) const {
        if (u.size() != M_.rows || v.size() != M_.cols) {
            throw Error("uMv dimension mismatch: M is " + std::to_string(M_.rows) + "x" + std::to_string(M_.cols) +
                        ", u has " + std::to_string(u.size()) + ", v has " + std::to_string(v.size()));
        }
        const std::size_t n1 = M_.rows;
        GadgetInstance inst;
        inst.gadget = mode_ == UmvMode::Incremental ? "umv-inc" : "umv-dec";
        inst.graph = graph_;
        inst.sensitivity = M_.cols;
        inst.source_size = n1;
        Stage st;
        st.label = "uv";
        for (std::size_t j = 0; j < M_.cols; ++j) {
            if (mode_ == UmvMode::Incremental && v[j]) {
                st.batch.insert(s_, static_cast<Vertex>(n1 + j));
            } else if (mode_ == UmvMode::Decremental && !v[j]) {
                st.batch.erase(s_edges_[j]);
            }
        }
        std::vector<std::size_t> rows;
        for (std::size_t i = 0; i < n1; ++i) {
            if (u[i]) {
                st.queries.push_back(Query::dist(s_, static_cast<Vertex>(i)).when(Cmp::Less, 4));
                rows.push_back(i);
            }
        }
        inst.stages.push_back(std::move(st));
        inst.witness = [M = M_, v, rows](std::size_t, const StageTrace& tr) {
            for (std::size_t q = 0; q < rows.size(); ++q) {
                if (!tr.query_fired[q]) {
                    continue;
                }
                for (std::size_t j = 0; j < M.cols; ++j) {
                    if (v[j] && M.at(rows[q], j)) {
                        return Witness{static_cast<std::int64_t>(rows[q]), static_cast<std::int64_t>(j)};
                    }
                }
            }
            throw InternalError("uMv stage fired without a witness pair");
        };
        return inst;
    }

private:
    BitMatrix M_;
    UmvMode mode_;
    Vertex s_ = 0;
    Graph graph_;
    std::vector<EdgeId> s_edges_;
};

inline UmvGadget gadget_umv(const BitMatrix& M, UmvMode mode) { return UmvGadget(M, mode); }

}  // namespace sens

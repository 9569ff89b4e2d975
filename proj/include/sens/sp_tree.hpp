#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "sens/shortest_paths.hpp"

namespace sens {

enum class EdgeClass : std::uint8_t { High, Low };

/*
 * How the marker set S_v is chosen.
 *
 * Let s = floor(eps*F). If s = 0 every tree vertex is a marker, whatever the rule.
 *
 * Covering (default): repeatedly take the deepest vertex with no marker
 * ancestor within tree distance s and mark its ancestor
 * exactly s above it. Every tree vertex then has a marker ancestor within
 * tree distance s, and each non-root marker owns a private chain of s
 * descendants, so |S_v| <= 1 + (n-1)/s <= 1 + 2n/(eps*F).
 *
 * LevelStride: the root plus every vertex at a level i*s (i > 0) whose
 * subtree reaches floor(eps*F/2) below it. Kept for comparison; it can leave
 * a vertex farther than s from every marker ancestor, which breaks the
 * low-edge estimate (see the fault-ecc tests for a concrete graph).
 */
enum class MarkerRule { Covering, LevelStride };

/// Contiguous slice of the preorder-sorted marker list: the markers inside one subtree.
struct MarkerRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    bool empty() const noexcept { return begin == end; }
};

/*
 * Shortest-path tree T_v annotated for single-edge-failure queries:
 * levels, subtree heights d_e, High/Low classification at threshold F, and
 * the marker set S_v. Each tree edge is identified by its lower endpoint
 * (the child w' of e = (w, w')).
 */
class ShortestPathTree {
public:
    Vertex source() const noexcept { return source_; }
    std::size_t n() const noexcept { return level_.size(); }
    std::int64_t threshold() const noexcept { return F_; }
    std::int64_t marker_spacing() const noexcept { return spacing_; }

    bool contains(Vertex v) const { return level_[v].finite(); }
    Distance level(Vertex v) const { return level_[v]; }
    const std::vector<Distance>& levels() const noexcept { return level_; }
    const std::optional<TreeLink>& parent(Vertex v) const { return parent_[v]; }
    std::span<const Vertex> children(Vertex v) const { return children_[v]; }

    /// Depth d_v: largest level among tree vertices.
    Distance depth() const noexcept { return depth_; }
    /// Eccentricity in G: the depth, or INFINITE when the tree does not span.
    Distance eccentricity() const noexcept { return spanning_ ? depth_ : Distance::infinite(); }
    bool spanning() const noexcept { return spanning_; }

    /// Height of the subtree rooted at v (d_e when v is the child of e).
    std::int64_t subtree_height(Vertex v) const { return height_[v]; }

    /// Tree vertices in preorder; subtree(v) is preorder()[tin(v), tout(v)).
    std::span<const Vertex> preorder() const noexcept { return preorder_; }
    std::size_t tin(Vertex v) const { return tin_[v]; }
    std::size_t tout(Vertex v) const { return tout_[v]; }
    std::span<const Vertex> subtree(Vertex v) const {
        return std::span<const Vertex>(preorder_).subspan(tin_[v], tout_[v] - tin_[v]);
    }
    bool in_subtree(Vertex x, Vertex root) const {
        return contains(x) && tin_[root] <= tin_[x] && tin_[x] < tout_[root];
    }

    /// Child endpoint of tree edge `id`, or nullopt for non-tree edges.
    std::optional<Vertex> tree_child(EdgeId id) const {
        if (id >= child_of_edge_.size() || child_of_edge_[id] == kNone) {
            return std::nullopt;
        }
        return child_of_edge_[id];
    }
    bool is_tree_edge(EdgeId id) const { return tree_child(id).has_value(); }

    /// Child endpoints of all tree edges, in preorder.
    std::span<const Vertex> tree_edge_children() const noexcept {
        return std::span<const Vertex>(preorder_).subspan(preorder_.empty() ? 0 : 1);
    }

    /// High iff both endpoints have level < F.
    EdgeClass classify(Vertex child) const {
        const auto& link = *parent_[child];
        return (level_[link.parent].value() < F_ && level_[child].value() < F_) ? EdgeClass::High : EdgeClass::Low;
    }

    bool is_marker(Vertex v) const { return is_marker_[v]; }
    /// S_v sorted by preorder position.
    std::span<const Vertex> markers() const noexcept { return markers_; }
    /// S_e for the tree edge above `child`, as a slice of markers().
    MarkerRange marker_range(Vertex child) const {
        const auto lo = std::lower_bound(marker_tin_.begin(), marker_tin_.end(), tin_[child]);
        const auto hi = std::lower_bound(lo, marker_tin_.end(), tout_[child]);
        return MarkerRange{static_cast<std::size_t>(lo - marker_tin_.begin()),
                           static_cast<std::size_t>(hi - marker_tin_.begin())};
    }
    std::span<const Vertex> markers_in(MarkerRange r) const {
        return std::span<const Vertex>(markers_).subspan(r.begin, r.size());
    }

    /// Largest level outside subtree(child); vertices outside the tree are ignored.
    Distance max_level_outside(Vertex child) const {
        const std::int64_t a = prefix_max_[tin_[child]];
        const std::int64_t b = suffix_max_[tout_[child]];
        const std::int64_t best = std::max(a, b);
        return best < 0 ? Distance::infinite() : Distance(best);
    }

    friend ShortestPathTree build_sp_tree(const Graph&, Vertex, const RationalEps&, std::int64_t, MarkerRule);

private:
    static constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

    Vertex source_ = 0;
    std::int64_t F_ = 1;
    std::int64_t spacing_ = 1;
    bool spanning_ = false;
    Distance depth_;
    std::vector<Distance> level_;
    std::vector<std::optional<TreeLink>> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<std::int64_t> height_;
    std::vector<Vertex> preorder_;
    std::vector<std::size_t> tin_;
    std::vector<std::size_t> tout_;
    std::vector<Vertex> child_of_edge_;
    std::vector<bool> is_marker_;
    std::vector<Vertex> markers_;
    std::vector<std::size_t> marker_tin_;
    std::vector<std::int64_t> prefix_max_;  // max level over preorder[0, i)
    std::vector<std::int64_t> suffix_max_;  // max level over preorder[i, end)
};

inline ShortestPathTree build_sp_tree(const Graph& g, Vertex src, const RationalEps& eps, std::int64_t F,
                                      MarkerRule rule = MarkerRule::Covering) {
    if (F < 1) {
        throw Error("threshold F must be >= 1");
    }
    auto links = shortest_path_links(g, src);
    ShortestPathTree t;
    const std::size_t n = g.n();
    t.source_ = src;
    t.F_ = F;
    t.spacing_ = eps.floor_times(F);
    t.level_ = std::move(links.dist);
    t.parent_ = std::move(links.parent);
    t.children_.assign(n, {});
    t.height_.assign(n, 0);
    t.tin_.assign(n, 0);
    t.tout_.assign(n, 0);
    t.child_of_edge_.assign(g.m(), ShortestPathTree::kNone);
    t.is_marker_.assign(n, false);

    t.spanning_ = true;
    for (Vertex v = 0; v < n; ++v) {
        if (!t.level_[v].finite()) {
            t.spanning_ = false;
            continue;
        }
        if (const auto& p = t.parent_[v]) {
            t.children_[p->parent].push_back(v);
            t.child_of_edge_[p->edge] = v;
        }
    }

    // Preorder with children by increasing id.
    std::vector<Vertex> stack{src};
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        t.tin_[x] = t.preorder_.size();
        t.preorder_.push_back(x);
        const auto& ch = t.children_[x];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    std::int64_t depth = 0;
    for (auto it = t.preorder_.rbegin(); it != t.preorder_.rend(); ++it) {
        const Vertex x = *it;
        std::size_t end = t.tin_[x] + 1;
        std::int64_t h = 0;
        for (const Vertex c : t.children_[x]) {
            end = std::max(end, t.tout_[c]);
            h = std::max(h, t.height_[c] + (t.level_[c].value() - t.level_[x].value()));
        }
        t.tout_[x] = end;
        t.height_[x] = h;
        depth = std::max(depth, t.level_[x].value());
    }
    t.depth_ = Distance(depth);

    const std::size_t tn = t.preorder_.size();
    t.prefix_max_.assign(tn + 1, -1);
    t.suffix_max_.assign(tn + 1, -1);
    for (std::size_t i = 0; i < tn; ++i) {
        t.prefix_max_[i + 1] = std::max(t.prefix_max_[i], t.level_[t.preorder_[i]].value());
    }
    for (std::size_t i = tn; i-- > 0;) {
        t.suffix_max_[i] = std::max(t.suffix_max_[i + 1], t.level_[t.preorder_[i]].value());
    }

    // Marker set.
    const std::int64_t s = t.spacing_;
    t.is_marker_[src] = true;
    if (s == 0) {
        // eps*F < 1: a marker at distance 1 would already overshoot eps * level,
        // so every tree vertex is a marker (still within 1 + 2n/(eps*F) > n).
        for (const Vertex u : t.preorder_) {
            t.is_marker_[u] = true;
        }
    } else if (rule == MarkerRule::LevelStride) {
        const std::int64_t reach = eps.num() * F / (2 * eps.den());
        for (const Vertex u : t.preorder_) {
            const std::int64_t lvl = t.level_[u].value();
            if (lvl > 0 && lvl % s == 0 && t.height_[u] >= reach) {
                t.is_marker_[u] = true;
            }
        }
    } else {
        std::vector<Vertex> by_depth(t.preorder_.begin(), t.preorder_.end());
        std::stable_sort(by_depth.begin(), by_depth.end(),
                         [&](Vertex a, Vertex b) { return t.level_[a] > t.level_[b]; });
        for (const Vertex z : by_depth) {
            const std::int64_t lz = t.level_[z].value();
            Vertex x = z;
            Vertex top = z;
            bool covered = false;
            while (true) {
                if (t.is_marker_[x]) {
                    covered = true;
                    break;
                }
                top = x;
                if (!t.parent_[x]) {
                    break;
                }
                const Vertex p = t.parent_[x]->parent;
                if (lz - t.level_[p].value() > s) {
                    break;
                }
                x = p;
            }
            if (!covered) {
                t.is_marker_[top] = true;
            }
        }
    }
    for (const Vertex u : t.preorder_) {
        if (t.is_marker_[u]) {
            t.markers_.push_back(u);
            t.marker_tin_.push_back(t.tin_[u]);
        }
    }
    return t;
}

}  // namespace sens

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sens/shortest_paths.hpp"

namespace sens {

struct InsertOp {
    Vertex u = 0;
    Vertex v = 0;
    Weight w = 1;
};

/// Deletes edge `id`. Ids below m name original edges; id m + k names the
/// k-th insertion earlier in the same batch.
struct DeleteOp {
    EdgeId id = 0;
};

using UpdateOp = std::variant<InsertOp, DeleteOp>;

/// Up to d edits, always applied to the original instance.
struct UpdateBatch {
    std::vector<UpdateOp> ops;

    std::size_t size() const noexcept { return ops.size(); }
    bool empty() const noexcept { return ops.empty(); }
    UpdateBatch& insert(Vertex u, Vertex v, Weight w = 1) {
        ops.emplace_back(InsertOp{u, v, w});
        return *this;
    }
    UpdateBatch& erase(EdgeId id) {
        ops.emplace_back(DeleteOp{id});
        return *this;
    }
};

/// Delete op for the edge joining u and v; throws if there is none.
inline DeleteOp delete_pair(const Graph& g, Vertex u, Vertex v) {
    const auto id = g.find_edge(u, v);
    if (!id) {
        throw Error("no edge (" + std::to_string(u) + "," + std::to_string(v) + ") to delete");
    }
    return DeleteOp{*id};
}

enum class QueryKind { Dist, Ecc, Diameter, Radius, Reach, CountReach, AllReach };

inline const char* query_kind_name(QueryKind k) {
    switch (k) {
        case QueryKind::Dist: return "dist";
        case QueryKind::Ecc: return "ecc";
        case QueryKind::Diameter: return "diameter";
        case QueryKind::Radius: return "radius";
        case QueryKind::Reach: return "reach";
        case QueryKind::CountReach: return "countreach";
        case QueryKind::AllReach: return "allreach";
    }
    return "?";
}

enum class Cmp { Less, LessEq, Eq, GreaterEq, Greater };

inline const char* cmp_name(Cmp c) {
    switch (c) {
        case Cmp::Less: return "<";
        case Cmp::LessEq: return "<=";
        case Cmp::Eq: return "=";
        case Cmp::GreaterEq: return ">=";
        case Cmp::Greater: return ">";
    }
    return "?";
}

/// Either a comparison against an integer bound or an expected boolean.
struct Predicate {
    std::variant<std::monostate, std::pair<Cmp, std::int64_t>, bool> test;

    static Predicate compare(Cmp c, std::int64_t bound) { return Predicate{std::pair{c, bound}}; }
    static Predicate equals(bool expected) { return Predicate{expected}; }
    bool present() const noexcept { return !std::holds_alternative<std::monostate>(test); }
};

struct Query {
    QueryKind kind = QueryKind::Diameter;
    Vertex u = 0;  // source for Dist/Ecc/Reach/CountReach
    Vertex v = 0;  // target for Dist/Reach
    std::vector<Vertex> S;
    std::vector<Vertex> T;
    Predicate pred;

    static Query dist(Vertex u, Vertex v) { return Query{QueryKind::Dist, u, v, {}, {}, {}}; }
    static Query ecc(Vertex u) { return Query{QueryKind::Ecc, u, 0, {}, {}, {}}; }
    static Query diameter() { return Query{QueryKind::Diameter, 0, 0, {}, {}, {}}; }
    static Query radius() { return Query{QueryKind::Radius, 0, 0, {}, {}, {}}; }
    static Query reach(Vertex u, Vertex v) { return Query{QueryKind::Reach, u, v, {}, {}, {}}; }
    static Query count_reach(Vertex s) { return Query{QueryKind::CountReach, s, 0, {}, {}, {}}; }
    static Query all_reach(std::vector<Vertex> S, std::vector<Vertex> T) {
        return Query{QueryKind::AllReach, 0, 0, std::move(S), std::move(T), {}};
    }
    Query& when(Cmp c, std::int64_t bound) {
        pred = Predicate::compare(c, bound);
        return *this;
    }
    Query& when(bool expected) {
        pred = Predicate::equals(expected);
        return *this;
    }
};

/// A query result: a distance (possibly approximate), a truth value, or a count.
struct Answer {
    std::variant<EccEstimate, bool, std::uint64_t> value;

    static Answer distance(Distance d) { return Answer{EccEstimate::exact(d)}; }

    std::string to_string() const {
        if (const auto* e = std::get_if<EccEstimate>(&value)) {
            if (e->finite() && e->den() == 1) {
                return std::to_string(e->num());
            }
            return e->to_string();
        }
        if (const auto* b = std::get_if<bool>(&value)) {
            return *b ? "true" : "false";
        }
        return std::to_string(std::get<std::uint64_t>(value));
    }

    bool operator==(const Answer&) const = default;
};

namespace detail {

inline bool apply_cmp(std::strong_ordering ord, Cmp c) {
    switch (c) {
        case Cmp::Less: return ord < 0;
        case Cmp::LessEq: return ord <= 0;
        case Cmp::Eq: return ord == 0;
        case Cmp::GreaterEq: return ord >= 0;
        case Cmp::Greater: return ord > 0;
    }
    return false;
}

}  // namespace detail

/// Whether `a` satisfies `p`. A missing predicate never holds.
inline bool holds(const Predicate& p, const Answer& a) {
    if (const auto* expected = std::get_if<bool>(&p.test)) {
        const auto* b = std::get_if<bool>(&a.value);
        if (b == nullptr) {
            throw Error("boolean predicate applied to a non-boolean answer");
        }
        return *b == *expected;
    }
    const auto* cmp = std::get_if<std::pair<Cmp, std::int64_t>>(&p.test);
    if (cmp == nullptr) {
        return false;
    }
    const auto [c, bound] = *cmp;
    if (const auto* e = std::get_if<EccEstimate>(&a.value)) {
        if (bound < 0) {
            return detail::apply_cmp(std::strong_ordering::greater, c);
        }
        return detail::apply_cmp(e->compare(Distance(bound)), c);
    }
    if (const auto* n = std::get_if<std::uint64_t>(&a.value)) {
        const auto lhs = static_cast<__int128>(*n);
        const auto rhs = static_cast<__int128>(bound);
        return detail::apply_cmp(lhs <=> rhs, c);
    }
    throw Error("comparison predicate applied to a boolean answer");
}

/*
 * The original graph edited by `batch`. Surviving original edges keep their
 * relative order, followed by surviving insertions. Inserting an existing
 * pair or deleting a missing edge is an error; inserting and then deleting
 * the same edge in one batch cancels out.
 */
inline Graph apply_batch(const Graph& g, const UpdateBatch& batch) {
    struct Pending {
        Vertex u, v;
        Weight w;
        bool alive;
    };
    std::vector<bool> keep(g.m(), true);
    std::vector<Pending> added;
    auto key = [&](Vertex u, Vertex v) {
        if (!g.directed() && u > v) {
            std::swap(u, v);
        }
        return std::pair{u, v};
    };
    std::map<std::pair<Vertex, Vertex>, int> live;  // pairs touched by the batch
    auto present = [&](Vertex u, Vertex v) {
        const auto it = live.find(key(u, v));
        if (it != live.end()) {
            return it->second > 0;
        }
        return g.has_edge(u, v);
    };
    for (const auto& op : batch.ops) {
        if (const auto* ins = std::get_if<InsertOp>(&op)) {
            if (ins->u >= g.n() || ins->v >= g.n()) {
                throw Error("insert (" + std::to_string(ins->u) + "," + std::to_string(ins->v) +
                            ") has a vertex out of range");
            }
            if (present(ins->u, ins->v)) {
                throw Error("insert duplicates existing edge (" + std::to_string(ins->u) + "," +
                            std::to_string(ins->v) + ")");
            }
            auto& slot = live.try_emplace(key(ins->u, ins->v), g.has_edge(ins->u, ins->v) ? 1 : 0).first->second;
            ++slot;
            added.push_back(Pending{ins->u, ins->v, ins->w, true});
            continue;
        }
        const EdgeId id = std::get<DeleteOp>(op).id;
        Vertex u = 0;
        Vertex v = 0;
        if (id < g.m()) {
            if (!keep[id]) {
                throw Error("edge " + std::to_string(id) + " deleted twice");
            }
            keep[id] = false;
            u = g.edge(id).u;
            v = g.edge(id).v;
        } else if (id - g.m() < added.size() && added[id - g.m()].alive) {
            added[id - g.m()].alive = false;
            u = added[id - g.m()].u;
            v = added[id - g.m()].v;
        } else {
            throw Error("delete of nonexistent edge " + std::to_string(id));
        }
        auto& slot = live.try_emplace(key(u, v), g.has_edge(u, v) ? 1 : 0).first->second;
        --slot;
    }
    Graph out(g.n(), g.directed(), g.weighted(), g.allows_parallel());
    for (const Edge& e : g.edges()) {
        if (keep[e.id]) {
            out.add_edge(e.u, e.v, e.w);
        }
    }
    for (const auto& p : added) {
        if (p.alive) {
            out.add_edge(p.u, p.v, p.w);
        }
    }
    return out;
}

/*
 * Answers queries on one fixed graph, caching single-source searches and the
 * all-eccentricities vector so several queries in a stage share work.
 */
class GraphEvaluator {
public:
    explicit GraphEvaluator(const Graph& g) : g_(&g) {}
    explicit GraphEvaluator(Graph&&) = delete;

    Answer answer(const Query& q) {
        switch (q.kind) {
            case QueryKind::Dist:
                check(q.u);
                check(q.v);
                return Answer::distance(from(q.u)[q.v]);
            case QueryKind::Reach:
                check(q.u);
                check(q.v);
                return Answer{from(q.u)[q.v].finite()};
            case QueryKind::Ecc:
                check(q.u);
                return Answer::distance(eccentricities()[q.u]);
            case QueryKind::Diameter:
                return Answer::distance(g_->n() == 0 ? Distance(0) : max_distance(eccentricities()));
            case QueryKind::Radius: {
                if (g_->n() == 0) {
                    return Answer::distance(Distance(0));
                }
                const auto& ecc = eccentricities();
                return Answer::distance(*std::min_element(ecc.begin(), ecc.end()));
            }
            case QueryKind::CountReach: {
                check(q.u);
                const auto& d = from(q.u);
                const auto count = std::count_if(d.begin(), d.end(), [](Distance x) { return x.finite(); });
                return Answer{static_cast<std::uint64_t>(count - 1)};
            }
            case QueryKind::AllReach: {
                for (const Vertex t : q.T) {
                    check(t);
                    const auto back = reaching(*g_, t);
                    for (const Vertex s : q.S) {
                        check(s);
                        if (!back[s]) {
                            return Answer{false};
                        }
                    }
                }
                return Answer{true};
            }
        }
        throw InternalError("unhandled query kind");
    }

    std::size_t searches() const noexcept { return searches_; }

private:
    void check(Vertex v) const {
        if (v >= g_->n()) {
            throw Error("query vertex " + std::to_string(v) + " out of range");
        }
    }

    const std::vector<Distance>& from(Vertex u) {
        auto it = sssp_.find(u);
        if (it == sssp_.end()) {
            it = sssp_.emplace(u, sssp(*g_, u)).first;
            ++searches_;
        }
        return it->second;
    }

    const std::vector<Distance>& eccentricities() {
        if (!ecc_) {
            ecc_ = all_eccentricities(*g_);
            searches_ += g_->n();
        }
        return *ecc_;
    }

    const Graph* g_;
    std::map<Vertex, std::vector<Distance>> sssp_;
    std::optional<std::vector<Distance>> ecc_;
    std::size_t searches_ = 0;
};

namespace detail {

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) {
            return out;
        }
        start = pos + 1;
    }
}

inline Vertex parse_vertex(const std::string& s, const std::string& ctx) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(s, &used);
    } catch (const std::logic_error&) {
        throw Error("bad vertex '" + s + "' in '" + ctx + "'");
    }
    if (used != s.size()) {
        throw Error("bad vertex '" + s + "' in '" + ctx + "'");
    }
    return static_cast<Vertex>(v);
}

}  // namespace detail

/*
 * Batch text: comma-separated ops, "d:u-v" deletes the edge u-v and
 * "i:u-v[:w]" inserts it (weight 1 by default). Empty text is the empty batch.
 */
inline UpdateBatch parse_batch(const Graph& g, const std::string& text) {
    UpdateBatch b;
    if (text.empty()) {
        return b;
    }
    for (const auto& op : detail::split_on(text, ',')) {
        const auto parts = detail::split_on(op, ':');
        if (parts.size() < 2 || (parts[0] != "d" && parts[0] != "i") || (parts[0] == "d" && parts.size() != 2) ||
            parts.size() > 3) {
            throw Error("bad batch op '" + op + "' (expected d:u-v or i:u-v[:w])");
        }
        const auto ends = detail::split_on(parts[1], '-');
        if (ends.size() != 2) {
            throw Error("bad batch op '" + op + "' (expected d:u-v or i:u-v[:w])");
        }
        const Vertex u = detail::parse_vertex(ends[0], op);
        const Vertex v = detail::parse_vertex(ends[1], op);
        if (parts[0] == "d") {
            b.ops.emplace_back(delete_pair(g, u, v));
        } else {
            Weight w = 1;
            if (parts.size() == 3) {
                try {
                    w = std::stoll(parts[2]);
                } catch (const std::logic_error&) {
                    throw Error("bad weight in '" + op + "'");
                }
            }
            b.insert(u, v, w);
        }
    }
    return b;
}

/*
 * Query text: "dist:u,v", "reach:u,v", "ecc:v", "diameter", "radius",
 * "countreach:s" or "allreach:s1+s2+...,t1+t2+...".
 */
inline Query parse_query(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    const auto list = args.empty() ? std::vector<std::string>{} : detail::split_on(args, ',');
    auto need = [&](std::size_t k) {
        if (list.size() != k) {
            throw Error("query '" + text + "' needs " + std::to_string(k) + " argument(s)");
        }
    };
    if (kind == "dist" || kind == "reach") {
        need(2);
        const Vertex u = detail::parse_vertex(list[0], text);
        const Vertex v = detail::parse_vertex(list[1], text);
        return kind == "dist" ? Query::dist(u, v) : Query::reach(u, v);
    }
    if (kind == "ecc" || kind == "countreach") {
        need(1);
        const Vertex u = detail::parse_vertex(list[0], text);
        return kind == "ecc" ? Query::ecc(u) : Query::count_reach(u);
    }
    if (kind == "diameter" || kind == "radius") {
        need(0);
        return kind == "diameter" ? Query::diameter() : Query::radius();
    }
    if (kind == "allreach") {
        need(2);
        std::vector<Vertex> S;
        std::vector<Vertex> T;
        for (const auto& x : detail::split_on(list[0], '+')) {
            S.push_back(detail::parse_vertex(x, text));
        }
        for (const auto& x : detail::split_on(list[1], '+')) {
            T.push_back(detail::parse_vertex(x, text));
        }
        return Query::all_reach(std::move(S), std::move(T));
    }
    throw Error("unknown query kind '" + kind + "'");
}

}  // namespace sens

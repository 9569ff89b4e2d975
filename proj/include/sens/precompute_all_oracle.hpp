#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "sens/sensitivity_oracle.hpp"

namespace sens {

/*
 * Tabulates answers for every graph within K edge flips of the original.
 * A batch is looked up by its canonical key: the sorted list of vertex pairs
 * whose presence differs from the original (pairs ordered lexicographically,
 * (u, v) with u < v when undirected). Unweighted simple graphs only.
 */
class PrecomputeAllOracle : public SensitivityOracle {
public:
    using Pair = std::pair<Vertex, Vertex>;
    using Key = std::vector<Pair>;

    PrecomputeAllOracle(const Graph& g, std::size_t K, std::set<QueryKind> kinds, std::uint64_t budget = 1'000'000)
        : original_(g), K_(K), kinds_(std::move(kinds)) {
        if (g.weighted()) {
            throw Error("precompute-all oracle requires an unweighted graph");
        }
        for (Vertex u = 0; u < g.n(); ++u) {
            for (Vertex v = g.directed() ? 0 : u + 1; v < g.n(); ++v) {
                if (u != v) {
                    pairs_.emplace_back(u, v);
                }
            }
        }
        // Number of admissible batches: sum_{i <= K} C(N, i).
        std::uint64_t total = 0;
        std::uint64_t term = 1;
        for (std::size_t i = 0; i <= K && i <= pairs_.size(); ++i) {
            if (i > 0) {
                term = term * (pairs_.size() - i + 1) / i;
            }
            total += term;
            if (total > budget) {
                throw Error("precompute-all store needs more than " + std::to_string(budget) +
                            " entries; lower K or n");
            }
        }
        need_apsp_ = std::any_of(kinds_.begin(), kinds_.end(), [](QueryKind k) {
            return k == QueryKind::Dist || k == QueryKind::Reach || k == QueryKind::CountReach ||
                   k == QueryKind::AllReach;
        });
        need_ecc_ = kinds_.count(QueryKind::Ecc) > 0 || kinds_.count(QueryKind::Diameter) > 0 ||
                    kinds_.count(QueryKind::Radius) > 0;
        Key key;
        enumerate(0, key);
    }

    std::string name() const override { return "precompute-all"; }
    bool supports(QueryKind kind) const override { return kinds_.count(kind) > 0; }
    std::optional<std::size_t> sensitivity() const override { return K_; }
    std::size_t store_size() const noexcept { return store_.size(); }

    /// Canonical key of `batch` against the original graph.
    Key key_of(const UpdateBatch& batch) const {
        std::map<Pair, bool> state;  // present after the batch, for touched pairs
        std::vector<Pair> inserted;
        auto present = [&](const Pair& p) {
            const auto it = state.find(p);
            return it != state.end() ? it->second : original_.has_edge(p.first, p.second);
        };
        for (const auto& op : batch.ops) {
            if (const auto* ins = std::get_if<InsertOp>(&op)) {
                if (ins->w != 1) {
                    throw Error("precompute-all oracle accepts only unit-weight insertions");
                }
                if (ins->u >= original_.n() || ins->v >= original_.n() || ins->u == ins->v) {
                    throw Error("insert (" + std::to_string(ins->u) + "," + std::to_string(ins->v) + ") is invalid");
                }
                const Pair p = canon(ins->u, ins->v);
                if (present(p)) {
                    throw Error("insert duplicates existing edge (" + std::to_string(ins->u) + "," +
                                std::to_string(ins->v) + ")");
                }
                state[p] = true;
                inserted.push_back(p);
                continue;
            }
            const EdgeId id = std::get<DeleteOp>(op).id;
            Pair p;
            if (id < original_.m()) {
                p = canon(original_.edge(id).u, original_.edge(id).v);
            } else if (id - original_.m() < inserted.size()) {
                p = inserted[id - original_.m()];
            } else {
                throw Error("delete of nonexistent edge " + std::to_string(id));
            }
            if (!present(p)) {
                throw Error("delete of nonexistent edge " + std::to_string(id));
            }
            state[p] = false;
        }
        Key key;
        for (const auto& [p, now] : state) {
            if (now != original_.has_edge(p.first, p.second)) {
                key.push_back(p);
            }
        }
        return key;
    }

    void apply(const UpdateBatch& batch) override {
        if (batch.size() > K_) {
            throw Error("batch of size " + std::to_string(batch.size()) + " exceeds sensitivity " +
                        std::to_string(K_));
        }
        const auto key = key_of(batch);
        const auto it = store_.find(key);
        if (it == store_.end()) {
            throw InternalError("admissible batch missing from the store");
        }
        active_ = &it->second;
    }

    Answer query(const Query& q) override {
        if (!supports(q.kind)) {
            throw Error(std::string("query kind '") + query_kind_name(q.kind) + "' was not precomputed");
        }
        const Entry& e = active_ != nullptr ? *active_ : store_.at(Key{});
        const std::size_t n = original_.n();
        auto check = [&](Vertex v) {
            if (v >= n) {
                throw Error("query vertex " + std::to_string(v) + " out of range");
            }
        };
        switch (q.kind) {
            case QueryKind::Dist:
                check(q.u);
                check(q.v);
                return Answer::distance(e.apsp[q.u * n + q.v]);
            case QueryKind::Reach:
                check(q.u);
                check(q.v);
                return Answer{e.apsp[q.u * n + q.v].finite()};
            case QueryKind::CountReach: {
                check(q.u);
                std::uint64_t c = 0;
                for (std::size_t v = 0; v < n; ++v) {
                    c += (v != q.u && e.apsp[q.u * n + v].finite()) ? 1 : 0;
                }
                return Answer{c};
            }
            case QueryKind::AllReach:
                for (const Vertex s : q.S) {
                    check(s);
                    for (const Vertex t : q.T) {
                        check(t);
                        if (!e.apsp[s * n + t].finite()) {
                            return Answer{false};
                        }
                    }
                }
                return Answer{true};
            case QueryKind::Ecc:
                check(q.u);
                return Answer::distance(e.ecc[q.u]);
            case QueryKind::Diameter:
                return Answer::distance(n == 0 ? Distance(0) : max_distance(e.ecc));
            case QueryKind::Radius:
                return Answer::distance(n == 0 ? Distance(0) : *std::min_element(e.ecc.begin(), e.ecc.end()));
        }
        throw InternalError("unhandled query kind");
    }

    void rollback() override { active_ = nullptr; }

private:
    struct Entry {
        std::vector<Distance> apsp;
        std::vector<Distance> ecc;
    };

    Pair canon(Vertex u, Vertex v) const {
        if (!original_.directed() && u > v) {
            std::swap(u, v);
        }
        return {u, v};
    }

    void enumerate(std::size_t from, Key& key) {
        store_.emplace(key, compute(key));
        if (key.size() == K_) {
            return;
        }
        for (std::size_t i = from; i < pairs_.size(); ++i) {
            key.push_back(pairs_[i]);
            enumerate(i + 1, key);
            key.pop_back();
        }
    }

    Entry compute(const Key& key) const {
        Graph h(original_.n(), original_.directed(), false);
        for (const Edge& e : original_.edges()) {
            if (!std::binary_search(key.begin(), key.end(), canon(e.u, e.v))) {
                h.add_edge(e.u, e.v);
            }
        }
        for (const auto& [u, v] : key) {
            if (!original_.has_edge(u, v)) {
                h.add_edge(u, v);
            }
        }
        Entry out;
        if (need_apsp_) {
            out.apsp.reserve(h.n() * h.n());
            for (Vertex u = 0; u < h.n(); ++u) {
                const auto d = sssp(h, u);
                out.apsp.insert(out.apsp.end(), d.begin(), d.end());
            }
        }
        if (need_ecc_) {
            out.ecc = all_eccentricities(h);
        }
        return out;
    }

    Graph original_;
    std::size_t K_;
    std::set<QueryKind> kinds_;
    std::vector<Pair> pairs_;
    bool need_apsp_ = false;
    bool need_ecc_ = false;
    std::map<Key, Entry> store_;
    const Entry* active_ = nullptr;
};

}  // namespace sens

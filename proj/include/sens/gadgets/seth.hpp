#pragma once

#include <bit>

#include "sens/brute.hpp"
#include "sens/gadget.hpp"

namespace sens {

enum class SethTarget { Ssr, Diameter, StReach };

inline const char* seth_target_name(SethTarget t) {
    switch (t) {
        case SethTarget::Ssr: return "ssr";
        case SethTarget::Diameter: return "diameter";
        case SethTarget::StReach: return "streach";
    }
    return "?";
}

inline SethTarget parse_seth_target(const std::string& s) {
    if (s == "ssr") return SethTarget::Ssr;
    if (s == "diameter") return SethTarget::Diameter;
    if (s == "streach") return SethTarget::StReach;
    throw Error("unknown SETH target '" + s + "' (expected ssr, diameter or streach)");
}

struct SethOptions {
    std::size_t u_size = 1;
    std::size_t group_size = 2;
    /// Upper bound on gadget vertices.
    std::size_t node_budget = std::size_t{1} << 20;
};

namespace detail {

// Clause satisfied by a partial assignment: some literal on a variable in
// [lo, lo + width) evaluates true under `bits` (bit i = variable lo + i).
inline bool partial_satisfies(const std::vector<int>& clause, std::size_t lo, std::size_t width, std::uint64_t bits) {
    for (const int lit : clause) {
        const auto var = static_cast<std::size_t>(std::abs(lit) - 1);
        if (var < lo || var >= lo + width) {
            continue;
        }
        const bool val = ((bits >> (var - lo)) & 1U) != 0;
        if ((lit > 0) == val) {
            return true;
        }
    }
    return false;
}

inline Witness full_assignment(std::size_t num_vars, std::size_t u, std::uint64_t ubar, std::uint64_t phi) {
    Witness w(num_vars);
    for (std::size_t v = 0; v < num_vars; ++v) {
        w[v] = v < u ? static_cast<std::int64_t>((ubar >> v) & 1U) : static_cast<std::int64_t>((phi >> (v - u)) & 1U);
    }
    return w;
}

}  // namespace detail

/*
 * CNF-SAT gadgets. U is the first u_size variables; \bar U holds one vertex per
 * assignment of U. Clauses satisfied by every \bar u are dropped first; if one
 * \bar u satisfies all remaining clauses the instance is decided at build time.
 * The remaining clauses are cut into groups of group_size (in input order) and
 * every non-empty subset of a group gets a vertex. There is one stage per
 * assignment phi of the other variables; it connects the terminal to the
 * subset d_i = {c in G_i : phi does not satisfy c} of each group.
 *
 * Vertex layout: \bar U = [0, 2^u), clauses next, then subset vertices
 * (group by group, subset mask order), then the target's extra vertices.
 *
 *   Ssr      directed: d -> c for c in d, c -> \bar u when \bar u fails c;
 *            stage inserts s -> d_i; fires when fewer than d(s) + B + 2^u
 *            vertices besides s are reachable from s.
 *   Diameter undirected: x - \bar u, y - c, y - g, c - g for c in g,
 *            \bar u - c when \bar u fails c, x - y, y - z, z - t;
 *            stage inserts t - d_i; fires when the diameter is 4 (3 otherwise).
 *   StReach  directed \bar u -> c -> g; stage inserts g -> t; fires when some
 *            \bar u cannot reach t.
 */
inline GadgetInstance gadget_seth(const Cnf& f, SethTarget target, const SethOptions& opts) {
    if (opts.group_size == 0) {
        throw Error("group size must be positive");
    }
    if (opts.u_size > f.num_vars) {
        throw Error("u_size " + std::to_string(opts.u_size) + " exceeds the " + std::to_string(f.num_vars) +
                    " variables");
    }
    if (opts.u_size >= 31 || opts.group_size >= 31 || f.num_vars - opts.u_size >= 40) {
        throw Error("u_size, group_size or the free variable count is too large; choose smaller parameters");
    }
    const std::size_t u = opts.u_size;
    const std::size_t free_vars = f.num_vars - u;
    const std::uint64_t n_ubar = std::uint64_t{1} << u;
    if (n_ubar > opts.node_budget) {
        throw Error("2^u_size = " + std::to_string(n_ubar) + " exceeds the node budget; choose a smaller u_size");
    }

    GadgetInstance inst;
    inst.gadget = std::string("seth-") + seth_target_name(target);
    inst.source_size = f.num_vars;

    // Drop clauses every \bar u satisfies; look for a \bar u satisfying everything.
    std::vector<std::vector<bool>> fails(n_ubar);  // fails[ubar][c]: ubar does not satisfy clause c
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        bool some_fail = false;
        for (std::uint64_t ub = 0; ub < n_ubar && !some_fail; ++ub) {
            some_fail = !detail::partial_satisfies(f.clauses[c], 0, u, ub);
        }
        if (some_fail) {
            kept.push_back(c);
        }
    }
    for (std::uint64_t ub = 0; ub < n_ubar; ++ub) {
        fails[ub].resize(kept.size());
        bool all = true;
        for (std::size_t k = 0; k < kept.size(); ++k) {
            fails[ub][k] = !detail::partial_satisfies(f.clauses[kept[k]], 0, u, ub);
            all = all && !fails[ub][k];
        }
        if (all) {
            inst.default_answer = true;
            inst.default_witness = [nv = f.num_vars, u, ub] { return detail::full_assignment(nv, u, ub, 0); };
            inst.graph = Graph(0, target != SethTarget::Diameter);
            return inst;
        }
    }

    const std::size_t nc = kept.size();
    const std::size_t groups = (nc + opts.group_size - 1) / opts.group_size;
    inst.sensitivity = groups;
    std::vector<std::size_t> group_lo(groups + 1);
    std::vector<Vertex> subset_base(groups);
    const Vertex clause_base = static_cast<Vertex>(n_ubar);
    std::size_t next = n_ubar + nc;
    for (std::size_t gi = 0; gi < groups; ++gi) {
        group_lo[gi] = gi * opts.group_size;
        subset_base[gi] = static_cast<Vertex>(next);
        const std::size_t size = std::min(opts.group_size, nc - group_lo[gi]);
        next += (std::size_t{1} << size) - 1;
        if (next > opts.node_budget) {
            throw Error("gadget needs more than " + std::to_string(opts.node_budget) +
                        " vertices; choose a smaller u_size or group_size");
        }
    }
    group_lo[groups] = nc;
    const std::size_t core = next;
    auto subset_vertex = [&](std::size_t gi, std::uint64_t mask) { return static_cast<Vertex>(subset_base[gi] + mask - 1); };

    const bool directed = target != SethTarget::Diameter;
    const std::size_t extra = target == SethTarget::Diameter ? 4 : 1;
    Graph g(core + extra, directed);
    const Vertex term = static_cast<Vertex>(target == SethTarget::Diameter ? core + 3 : core);  // s or t

    // \bar U - C
    for (std::uint64_t ub = 0; ub < n_ubar; ++ub) {
        for (std::size_t k = 0; k < nc; ++k) {
            if (fails[ub][k]) {
                if (target == SethTarget::Ssr) {
                    g.add_edge(clause_base + static_cast<Vertex>(k), static_cast<Vertex>(ub));
                } else {
                    g.add_edge(static_cast<Vertex>(ub), clause_base + static_cast<Vertex>(k));
                }
            }
        }
    }
    // C - D
    for (std::size_t gi = 0; gi < groups; ++gi) {
        const std::size_t size = group_lo[gi + 1] - group_lo[gi];
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
            for (std::size_t b = 0; b < size; ++b) {
                if ((mask >> b) & 1U) {
                    const Vertex c = clause_base + static_cast<Vertex>(group_lo[gi] + b);
                    if (target == SethTarget::Ssr) {
                        g.add_edge(subset_vertex(gi, mask), c);
                    } else {
                        g.add_edge(c, subset_vertex(gi, mask));
                    }
                }
            }
        }
    }
    if (target == SethTarget::Diameter) {
        const Vertex x = static_cast<Vertex>(core);
        const Vertex y = x + 1;
        const Vertex z = x + 2;
        for (std::uint64_t ub = 0; ub < n_ubar; ++ub) {
            g.add_edge(x, static_cast<Vertex>(ub));
        }
        for (Vertex v = clause_base; v < core; ++v) {
            g.add_edge(y, v);
        }
        g.add_edge(x, y);
        g.add_edge(y, z);
        g.add_edge(z, term);
    }

    const std::uint64_t stages = std::uint64_t{1} << free_vars;
    for (std::uint64_t phi = 0; phi < stages; ++phi) {
        Stage st;
        for (std::size_t b = 0; b < free_vars; ++b) {
            st.label.push_back(((phi >> b) & 1U) ? '1' : '0');
        }
        std::size_t ds = 0;
        std::size_t B = 0;
        for (std::size_t gi = 0; gi < groups; ++gi) {
            std::uint64_t mask = 0;
            for (std::size_t k = group_lo[gi]; k < group_lo[gi + 1]; ++k) {
                if (!detail::partial_satisfies(f.clauses[kept[k]], u, free_vars, phi)) {
                    mask |= std::uint64_t{1} << (k - group_lo[gi]);
                }
            }
            if (mask == 0) {
                continue;
            }
            ++ds;
            B += static_cast<std::size_t>(std::popcount(mask));
            if (target == SethTarget::StReach) {
                st.batch.insert(subset_vertex(gi, mask), term);
            } else {
                st.batch.insert(term, subset_vertex(gi, mask));
            }
        }
        switch (target) {
            case SethTarget::Ssr:
                st.queries.push_back(Query::count_reach(term).when(
                    Cmp::Less, static_cast<std::int64_t>(ds + B + n_ubar)));
                break;
            case SethTarget::Diameter:
                st.queries.push_back(Query::diameter().when(Cmp::Eq, 4));
                break;
            case SethTarget::StReach: {
                std::vector<Vertex> S(n_ubar);
                for (std::uint64_t ub = 0; ub < n_ubar; ++ub) {
                    S[ub] = static_cast<Vertex>(ub);
                }
                st.queries.push_back(Query::all_reach(std::move(S), {term}).when(false));
                break;
            }
        }
        inst.stages.push_back(std::move(st));
    }
    inst.graph = std::move(g);
    inst.witness = [f, u, free_vars, n_ubar](std::size_t stage, const StageTrace&) {
        const auto phi = static_cast<std::uint64_t>(stage);
        for (std::uint64_t ub = 0; ub < n_ubar; ++ub) {
            bool ok = true;
            for (const auto& c : f.clauses) {
                if (!detail::partial_satisfies(c, 0, u, ub) && !detail::partial_satisfies(c, u, free_vars, phi)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                return detail::full_assignment(f.num_vars, u, ub, phi);
            }
        }
        throw InternalError("SAT stage fired but no completion satisfies the formula");
    };
    return inst;
}

}  // namespace sens

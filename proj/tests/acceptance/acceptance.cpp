// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Timings are printed for information only.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "sens/sens.hpp"

using namespace sens;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Check = std::function<Outcome()>;

Graph without(const Graph& g, EdgeId e) { return apply_batch(g, UpdateBatch{}.erase(e)); }

SourceAnswer run_recompute(const GadgetInstance& inst, bool stop_at_first = false) {
    RecomputeOracle o(inst.graph);
    RunOptions opts;
    opts.stop_at_first = stop_at_first;
    return run_gadget(inst, o, opts);
}

// 50 connected graphs, n in [20, 200], m <= 4n.
std::vector<Graph> sandwich_corpus() {
    std::vector<Graph> out;
    Rng rng(0xAC1);
    for (int i = 0; i < 50; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(20, 200));
        const auto m = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(n - 1),
                                                            static_cast<std::int64_t>(4 * n)));
        out.push_back(gen_connected(n, m, rng));
    }
    return out;
}

// Per failed edge: eccentricities of G \ e.
std::vector<std::vector<Distance>> truth_table(const Graph& g) {
    std::vector<std::vector<Distance>> t;
    t.reserve(g.m());
    for (EdgeId e = 0; e < g.m(); ++e) {
        t.push_back(all_eccentricities(without(g, e)));
    }
    return t;
}

struct SandwichCount {
    std::uint64_t checks = 0;
    std::uint64_t bad = 0;
};

SandwichCount compare(const FaultEccOracle& o, const std::vector<std::vector<Distance>>& truth,
                      const RationalEps& eps, bool exact) {
    SandwichCount c;
    auto ok = [&](const EccEstimate& est, Distance t) {
        return exact ? est == EccEstimate::exact(t) : est.sandwiches(t, eps);
    };
    for (EdgeId e = 0; e < truth.size(); ++e) {
        const auto& ecc = truth[e];
        for (Vertex v = 0; v < ecc.size(); ++v) {
            ++c.checks;
            c.bad += ok(o.query_ecc(v, e), ecc[v]) ? 0 : 1;
        }
        c.checks += 2;
        c.bad += ok(o.query_diameter(e), max_distance(ecc)) ? 0 : 1;
        c.bad += ok(o.query_radius(e), *std::min_element(ecc.begin(), ecc.end())) ? 0 : 1;
    }
    return c;
}

const std::vector<Graph>& corpus() {
    static const std::vector<Graph> c = sandwich_corpus();
    return c;
}

const std::vector<std::vector<std::vector<Distance>>>& corpus_truth() {
    static const auto t = [] {
        std::vector<std::vector<std::vector<Distance>>> all;
        for (const auto& g : corpus()) {
            all.push_back(truth_table(g));
        }
        return all;
    }();
    return t;
}

Outcome ac1() {
    SandwichCount total;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        for (const auto& eps : {RationalEps(1, 10), RationalEps(1, 2), RationalEps(1, 1)}) {
            const auto o = build_fault_ecc_oracle(corpus()[i], eps);
            const auto c = compare(o, corpus_truth()[i], eps, false);
            total.checks += c.checks;
            total.bad += c.bad;
        }
    }
    std::ostringstream os;
    os << "50 graphs x 3 eps, " << total.checks << " ecc/diameter/radius checks, " << total.bad << " violations";
    return {total.bad == 0, os.str()};
}

Outcome ac2() {
    SandwichCount total;
    std::uint64_t low = 0;
    for (std::size_t i = 0; i < corpus().size(); ++i) {
        const auto& g = corpus()[i];
        FaultEccOptions opts;
        opts.F_override = static_diameter(g).value() + 1;
        const RationalEps eps(1, 10);
        const auto o = build_fault_ecc_oracle(g, eps, opts);
        low += o.stats().low_edges;
        const auto c = compare(o, corpus_truth()[i], eps, true);
        total.checks += c.checks;
        total.bad += c.bad;
    }
    std::ostringstream os;
    os << "F = D+1, " << total.checks << " checks, " << total.bad << " inexact, " << low << " low edges";
    return {total.bad == 0 && low == 0, os.str()};
}

Outcome ac3() {
    Rng rng(0xAC3);
    const RationalEps choices[] = {RationalEps(1, 10), RationalEps(1, 4), RationalEps(1, 2), RationalEps(1, 1),
                                   RationalEps(2, 1)};
    std::uint64_t marker_bad = 0;
    std::uint64_t work_bad = 0;
    std::uint64_t sources = 0;
    for (int draw = 0; draw < 1000; ++draw) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 60));
        const std::size_t max_m = std::min(n * (n - 1) / 2, 4 * n);
        const auto m = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(n - 1),
                                                            static_cast<std::int64_t>(max_m)));
        const auto g = gen_connected(n, m, rng);
        const auto eps = choices[rng.index(5)];
        FaultEccOptions opts;
        opts.F_override = rng.uniform(1, static_cast<std::int64_t>(n));
        const auto o = build_fault_ecc_oracle(g, eps, opts);
        const long double per = 1.0L + 2.0L * static_cast<long double>(n) * eps.den() /
                                           (static_cast<long double>(eps.num()) * o.threshold());
        for (Vertex v = 0; v < n; ++v) {
            ++sources;
            marker_bad += static_cast<long double>(o.stats().markers[v]) <= per ? 0 : 1;
            work_bad += static_cast<long double>(o.stats().low_queries[v]) <=
                                static_cast<long double>(o.stats().depth[v]) * per
                            ? 0
                            : 1;
        }
    }
    std::ostringstream os;
    os << "1000 draws, " << sources << " sources, marker bound broken " << marker_bad << "x, step-3 bound broken "
       << work_bad << "x";
    return {marker_bad == 0 && work_bad == 0, os.str()};
}

Outcome ac4() {
    Rng rng(0xAC4);
    const double ps[] = {0.1, 0.3, 0.6};
    std::size_t bad = 0;
    std::size_t yes = 0;
    for (int i = 0; i < 100; ++i) {
        const auto g = gen_gnp(40, ps[i % 3], rng);
        const auto part = triangle_participants(g);
        std::vector<std::size_t> expect;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (part[v]) {
                expect.push_back(v);
            }
        }
        const bool truth = !expect.empty();
        yes += truth ? 1 : 0;
        for (const bool ecc : {false, true}) {
            const auto ans = run_recompute(ecc ? gadget_triangle_ecc(g) : gadget_triangle_diameter(g));
            bad += ans.answer == truth && ans.fired_stages() == expect ? 0 : 1;
        }
        for (const auto v : {TriangleVariant::St2, TriangleVariant::Ss1, TriangleVariant::Ap0}) {
            bad += run_recompute(gadget_triangle_reach(g, v)).answer == truth ? 0 : 1;
            bad += run_recompute(gadget_triangle_approx_sp(g, v)).answer == truth ? 0 : 1;
        }
    }
    std::ostringstream os;
    os << "100 G(40,p) (" << yes << " with triangles), 8 gadgets each, " << bad << " mismatches";
    return {bad == 0, os.str()};
}

Outcome ac5() {
    Rng rng(0xAC5);
    std::size_t bad = 0;
    std::size_t batch_bad = 0;
    std::size_t yes = 0;
    for (int i = 0; i < 100; ++i) {
        const auto h = gen_negtri(static_cast<std::size_t>(rng.uniform(1, 12)), 10, rng);
        const bool truth = brute_negative_triangle(h).has_value();
        yes += truth ? 1 : 0;
        const auto diam = gadget_negtri_diameter(h);
        const auto st2 = gadget_negtri_st2(h);
        for (const auto& s : diam.stages) {
            batch_bad += s.batch.size() == 1 ? 0 : 1;
        }
        for (const auto& s : st2.stages) {
            batch_bad += s.batch.size() == 2 ? 0 : 1;
        }
        bad += run_recompute(diam).answer == truth ? 0 : 1;
        bad += run_recompute(st2).answer == truth ? 0 : 1;
    }
    std::ostringstream os;
    os << "100 instances (" << yes << " negative), " << bad << " mismatches, " << batch_bad << " wrong batch sizes";
    return {bad == 0 && batch_bad == 0, os.str()};
}

Outcome ac6() {
    Rng rng(0xAC6);
    std::size_t bad = 0;
    std::size_t batch_bad = 0;
    std::size_t sat = 0;
    std::size_t stages = 0;
    for (int i = 0; i < 200; ++i) {
        SethOptions opts;
        opts.u_size = static_cast<std::size_t>(rng.uniform(3, 7));
        opts.group_size = static_cast<std::size_t>(rng.uniform(2, 5));
        // odd draws: few variables, many clauses, so unsatisfiable formulas show up too
        const std::int64_t lo = static_cast<std::int64_t>(opts.u_size);
        const auto vars = static_cast<std::size_t>(rng.uniform(lo, i % 2 ? std::max<std::int64_t>(lo, 7) : 14));
        const auto f = gen_cnf(3, vars, static_cast<std::size_t>(rng.uniform(i % 2 ? 24 : 1, 30)), rng);
        const bool truth = brute_sat(f).has_value();
        sat += truth ? 1 : 0;
        for (const auto t : {SethTarget::Ssr, SethTarget::Diameter, SethTarget::StReach}) {
            const auto inst = gadget_seth(f, t, opts);
            batch_bad += inst.max_batch() <= inst.sensitivity ? 0 : 1;
            const auto ans = run_recompute(inst, true);
            stages += ans.trace.size();
            bad += ans.answer == truth ? 0 : 1;
        }
    }
    std::ostringstream os;
    os << "200 3-CNFs (" << sat << " satisfiable) x 3 targets, " << stages << " stages run, " << bad
       << " mismatches, " << batch_bad << " oversized batches";
    return {bad == 0 && batch_bad == 0, os.str()};
}

Outcome ac7() {
    Rng rng(0xAC7);
    std::size_t bad = 0;
    std::size_t batch_bad = 0;
    std::size_t ones = 0;
    for (int i = 0; i < 100; ++i) {
        // sparse enough that both answers occur
        const auto in = gen_umv(20, 20, rng.unit() * 0.1, rng, rng.unit() * 0.3);
        const bool truth = brute_umv(in.M, in.u, in.v);
        ones += truth ? 1 : 0;
        for (const auto mode : {UmvMode::Incremental, UmvMode::Decremental}) {
            const auto inst = gadget_umv(in.M, mode).instance(in.u, in.v);
            if (mode == UmvMode::Incremental) {
                batch_bad += inst.max_batch() <= 20 ? 0 : 1;
            }
            bad += run_recompute(inst).answer == truth ? 0 : 1;
        }
    }
    std::ostringstream os;
    os << "100 (M,u,v) 20x20 (" << ones << " with u'Mv = 1), 2 modes, " << bad << " mismatches";
    return {bad == 0 && batch_bad == 0, os.str()};
}

Outcome ac8() {
    Rng rng(0xAC8);
    std::uint64_t compared = 0;
    std::uint64_t bad = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int directed = 0; directed < 2; ++directed) {
            Graph g(n, directed == 1);
            std::vector<std::pair<Vertex, Vertex>> pairs;
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = 0; v < n; ++v) {
                    if (u != v && (directed || u < v)) {
                        pairs.emplace_back(u, v);
                        if (rng.bernoulli(0.35)) {
                            g.add_edge(u, v);
                        }
                    }
                }
            }
            std::vector<Query> qs{Query::diameter()};
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = 0; v < n; ++v) {
                    qs.push_back(Query::dist(u, v));
                    qs.push_back(Query::reach(u, v));
                }
            }
            for (std::size_t K = 0; K <= 2; ++K) {
                PrecomputeAllOracle pa(g, K, {QueryKind::Dist, QueryKind::Reach, QueryKind::Diameter});
                RecomputeOracle rc(g);
                auto flip = [&](UpdateBatch& b, std::size_t i) {
                    if (const auto id = g.find_edge(pairs[i].first, pairs[i].second)) {
                        b.erase(*id);
                    } else {
                        b.insert(pairs[i].first, pairs[i].second);
                    }
                };
                auto check = [&](const UpdateBatch& b) {
                    pa.apply(b);
                    rc.apply(b);
                    for (const auto& q : qs) {
                        ++compared;
                        bad += pa.query(q) == rc.query(q) ? 0 : 1;
                    }
                    pa.rollback();
                    rc.rollback();
                };
                std::size_t batches = 1;
                check(UpdateBatch{});
                for (std::size_t i = 0; i < pairs.size() && K >= 1; ++i) {
                    UpdateBatch b;
                    flip(b, i);
                    check(b);
                    ++batches;
                    for (std::size_t j = i + 1; j < pairs.size() && K >= 2; ++j) {
                        UpdateBatch c = b;
                        flip(c, j);
                        check(c);
                        ++batches;
                    }
                }
                bad += batches == pa.store_size() ? 0 : 1;
            }
        }
    }
    std::ostringstream os;
    os << "n = 2..8, directed and undirected, K = 0..2, " << compared << " answers compared, " << bad
       << " mismatches";
    return {bad == 0, os.str()};
}

Outcome ac9() {
    Rng rng(0xAC9);
    std::uint64_t triples = 0;
    std::uint64_t bad = 0;
    std::uint64_t profile_bad = 0;
    for (int i = 0; i < 12; ++i) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 48));
        Graph g(n, i % 3 == 2);
        for (std::size_t k = 0; k < 3 * n; ++k) {
            const auto u = static_cast<Vertex>(rng.index(n));
            const auto v = static_cast<Vertex>(rng.index(n));
            if (u != v && !g.has_edge(u, v)) {
                g.add_edge(u, v);
            }
        }
        ReplacementDistanceOracle o(g, i % 2 == 0 ? CachePolicy::Eager : CachePolicy::Lazy);
        for (EdgeId e = 0; e < g.m(); ++e) {
            const auto h = without(g, e);
            for (Vertex u = 0; u < n; ++u) {
                const auto truth = sssp(h, u);
                for (Vertex v = 0; v < n; ++v) {
                    ++triples;
                    bad += o.query(u, v, e) == truth[v] ? 0 : 1;
                }
            }
        }
        for (Vertex s = 0; s < n; ++s) {
            const auto base = sssp(g, s);
            for (Vertex t = 0; t < n; ++t) {
                if (base[t].is_infinite()) {
                    continue;
                }
                for (const auto& [e, d] : o.profile(s, t)) {
                    profile_bad += d >= base[t] ? 0 : 1;
                }
            }
        }
    }
    std::ostringstream os;
    os << "12 graphs n <= 48, " << triples << " (u,v,e) triples, " << bad << " mismatches, " << profile_bad
       << " profile entries below d_G";
    return {bad == 0 && profile_bad == 0, os.str()};
}

Outcome ac10() {
    Rng rng(0xAC10);
    const auto g = gen_connected(500, 2000, rng);
    const auto r = bench_fault_ecc(g, RationalEps(1, 2));
    std::ostringstream os;
    os << "n=500 m=2000 eps=1/2 F=" << r.F << ", work " << r.work << " <= bound " << static_cast<std::uint64_t>(r.bound)
       << ": " << (r.within_bound() ? "yes" : "no") << ", " << r.query_touches << " graph touches in " << r.queries
       << " queries; preprocess " << r.preprocess_ns / 1000000 << " ms, " << (r.queries ? r.query_ns / r.queries : 0)
       << " ns/query (machine dependent, not gated)";
    return {r.within_bound() && r.query_touches == 0, os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, Check>> checks = {
        {"AC1", ac1}, {"AC2", ac2}, {"AC3", ac3}, {"AC4", ac4}, {"AC5", ac5},
        {"AC6", ac6}, {"AC7", ac7}, {"AC8", ac8}, {"AC9", ac9}, {"AC10", ac10},
    };
    std::set<std::string> only(argv + 1, argv + argc);
    bool all = true;
    for (const auto& [name, fn] : checks) {
        if (!only.empty() && only.count(name) == 0) {
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, " [%.1fs]", secs);
        std::cout << (out.pass ? "PASS " : "FAIL ") << name << ": " << out.detail << timing << std::endl;
        all = all && out.pass;
    }
    return all ? 0 : 1;
}

#pragma once

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <thread>
#include <variant>

#include <json.hpp>

#include "sens/brute.hpp"
#include "sens/fault_ecc_adapter.hpp"
#include "sens/gadgets/negative_triangle.hpp"
#include "sens/gadgets/seth.hpp"
#include "sens/gadgets/triangle.hpp"
#include "sens/gadgets/umv.hpp"
#include "sens/harness/generators.hpp"
#include "sens/precompute_all_oracle.hpp"
#include "sens/recompute_oracle.hpp"

namespace sens {

using Json = nlohmann::ordered_json;

/*
 * Experiment configuration (JSON):
 *
 *   seed         64-bit integer; repetition i uses derive_seed(seed, i)
 *   family       {"name": gnp|planted-triangle|cycle|connected|tripartite-negtri|random-cnf|random-matrix, ...params}
 *                a numeric parameter may be [lo, hi], drawn uniformly per repetition
 *   pipeline     triangle-diam|triangle-ecc|triangle-reach|triangle-sp|negtri-diam|negtri-st2|seth|umv|fault-ecc
 *   variant      st2|ss1|ap0 (triangle-reach/sp), ssr|diameter|streach (seth), inc|dec (umv), ecc (negtri-diam)
 *   oracle       recompute|precompute-all|fault-ecc
 *   eps          "p/q" (fault-ecc)
 *   F            optional threshold override (fault-ecc)
 *   u_size, group_size   SETH parameters, numbers or ranges
 *   repetitions, check_brute, threads, output
 */
struct ExperimentConfig {
    std::uint64_t seed = 1;
    Json family = Json::object();
    std::string pipeline = "triangle-diam";
    std::string variant;
    std::string oracle = "recompute";
    std::string eps = "1/2";
    std::optional<std::int64_t> F;
    Json u_size = 3;
    Json group_size = 2;
    std::size_t repetitions = 1;
    bool check_brute = true;
    std::size_t threads = 1;
    std::string output = "sensbench-out";

    static ExperimentConfig from_json(const Json& j) {
        ExperimentConfig c;
        try {
            c.seed = j.value("seed", c.seed);
            c.family = j.at("family");
            c.pipeline = j.value("pipeline", c.pipeline);
            c.variant = j.value("variant", c.variant);
            c.oracle = j.value("oracle", c.oracle);
            c.eps = j.value("eps", c.eps);
            if (j.contains("F") && !j.at("F").is_null()) {
                c.F = j.at("F").get<std::int64_t>();
            }
            c.u_size = j.value("u_size", c.u_size);
            c.group_size = j.value("group_size", c.group_size);
            c.repetitions = j.value("repetitions", c.repetitions);
            c.check_brute = j.value("check_brute", c.check_brute);
            c.threads = j.value("threads", c.threads);
            c.output = j.value("output", c.output);
        } catch (const nlohmann::json::exception& e) {
            throw Error(std::string("bad config: ") + e.what());
        }
        if (!c.family.is_object() || !c.family.contains("name")) {
            throw Error("bad config: family must be an object with a name");
        }
        return c;
    }

    Json to_json() const {
        Json j;
        j["seed"] = seed;
        j["family"] = family;
        j["pipeline"] = pipeline;
        j["variant"] = variant;
        j["oracle"] = oracle;
        j["eps"] = eps;
        j["F"] = F ? Json(*F) : Json(nullptr);
        j["u_size"] = u_size;
        j["group_size"] = group_size;
        j["repetitions"] = repetitions;
        j["check_brute"] = check_brute;
        j["threads"] = threads;
        j["output"] = output;
        return j;
    }
};

using Instance = std::variant<Graph, NegTriangleInput, Cnf, UmvInput>;

namespace detail {

inline std::int64_t draw_int(const Json& v, Rng& rng, const char* name) {
    if (v.is_array()) {
        if (v.size() != 2) {
            throw Error(std::string("range for '") + name + "' must be [lo, hi]");
        }
        return rng.uniform(v[0].get<std::int64_t>(), v[1].get<std::int64_t>());
    }
    if (!v.is_number()) {
        throw Error(std::string("parameter '") + name + "' must be a number or [lo, hi]");
    }
    return v.get<std::int64_t>();
}

inline double draw_real(const Json& v, Rng& rng, const char* name) {
    if (v.is_array()) {
        if (v.size() != 2) {
            throw Error(std::string("range for '") + name + "' must be [lo, hi]");
        }
        const double lo = v[0].get<double>();
        const double hi = v[1].get<double>();
        return lo + (hi - lo) * rng.unit();
    }
    if (!v.is_number()) {
        throw Error(std::string("parameter '") + name + "' must be a number or [lo, hi]");
    }
    return v.get<double>();
}

inline std::int64_t param_int(const Json& fam, const char* name, Rng& rng, std::optional<std::int64_t> dflt = {}) {
    if (!fam.contains(name)) {
        if (dflt) {
            return *dflt;
        }
        throw Error(std::string("family '") + fam.at("name").get<std::string>() + "' needs parameter '" + name + "'");
    }
    const auto v = draw_int(fam.at(name), rng, name);
    if (v < 0) {
        throw Error(std::string("parameter '") + name + "' must be non-negative");
    }
    return v;
}

inline double param_real(const Json& fam, const char* name, Rng& rng, std::optional<double> dflt = {}) {
    if (!fam.contains(name)) {
        if (dflt) {
            return *dflt;
        }
        throw Error(std::string("family '") + fam.at("name").get<std::string>() + "' needs parameter '" + name + "'");
    }
    return draw_real(fam.at(name), rng, name);
}

}  // namespace detail

/// Draws one instance of the configured family.
inline Instance generate_instance(const Json& fam, Rng& rng) {
    const auto name = fam.at("name").get<std::string>();
    using detail::param_int;
    using detail::param_real;
    if (name == "gnp") {
        const auto n = param_int(fam, "n", rng);
        return gen_gnp(static_cast<std::size_t>(n), param_real(fam, "p", rng), rng);
    }
    if (name == "planted-triangle") {
        const auto n = param_int(fam, "n", rng);
        return gen_planted_triangle(static_cast<std::size_t>(n), param_real(fam, "p", rng, 0.1), rng);
    }
    if (name == "cycle") {
        return gen_cycle(static_cast<std::size_t>(param_int(fam, "n", rng)));
    }
    if (name == "connected") {
        const auto n = param_int(fam, "n", rng);
        std::int64_t m = 0;
        if (fam.contains("m")) {
            m = param_int(fam, "m", rng);
        } else {
            // Default: average degree drawn up to 8, i.e. m up to 4n.
            const auto lo = std::max<std::int64_t>(n - 1, 0);
            m = rng.uniform(lo, std::max(lo, std::min<std::int64_t>(4 * n, n * (n - 1) / 2)));
        }
        return gen_connected(static_cast<std::size_t>(n), static_cast<std::size_t>(m), rng);
    }
    if (name == "tripartite-negtri") {
        const auto n = param_int(fam, "n", rng);
        return gen_negtri(static_cast<std::size_t>(n), param_int(fam, "wmax", rng, 10), rng);
    }
    if (name == "random-cnf") {
        const auto k = param_int(fam, "k", rng, 3);
        const auto nv = param_int(fam, "vars", rng);
        const auto m = param_int(fam, "clauses", rng);
        return gen_cnf(static_cast<std::size_t>(k), static_cast<std::size_t>(nv), static_cast<std::size_t>(m), rng);
    }
    if (name == "random-matrix") {
        const auto n1 = param_int(fam, "n1", rng);
        const auto n2 = param_int(fam, "n2", rng);
        const auto density = param_real(fam, "density", rng, 0.5);
        const auto vd = param_real(fam, "vector_density", rng, density);
        if (density < 0 || density > 1 || vd < 0 || vd > 1) {
            throw Error("densities must lie in [0, 1]");
        }
        return gen_umv(static_cast<std::size_t>(n1), static_cast<std::size_t>(n2), density, rng, vd);
    }
    throw Error("unknown instance family '" + name + "'");
}

inline std::string instance_extension(const Instance& inst) {
    switch (inst.index()) {
        case 0: return ".graph";
        case 1: return ".negtri";
        case 2: return ".cnf";
        default: return ".umv";
    }
}

inline std::string write_instance(const Instance& inst) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Graph>) {
                return write_graph(x);
            } else if constexpr (std::is_same_v<T, NegTriangleInput>) {
                return write_negtri(x);
            } else if constexpr (std::is_same_v<T, Cnf>) {
                return write_dimacs(x);
            } else {
                return write_umv(x);
            }
        },
        inst);
}

struct PhaseTimes {
    std::uint64_t preprocess_ns = 0;
    std::uint64_t update_ns = 0;
    std::uint64_t query_ns = 0;
};

struct RunRecord {
    std::size_t rep = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    std::vector<std::pair<std::string, bool>> stages;
    bool decision = false;
    std::optional<Witness> witness;
    std::optional<bool> brute_force_agrees;
    std::map<std::string, std::uint64_t> counters;
    PhaseTimes times;
    std::string error;

    Json to_json() const {
        Json j;
        j["rep"] = rep;
        j["seed"] = seed;
        j["n"] = n;
        auto st = Json::array();
        for (const auto& [label, fired] : stages) {
            st.push_back(Json{{"label", label}, {"fired", fired}});
        }
        j["stages"] = std::move(st);
        j["decision"] = decision;
        j["witness"] = witness ? Json(*witness) : Json(nullptr);
        j["brute_force_agrees"] = brute_force_agrees ? Json(*brute_force_agrees) : Json(nullptr);
        j["counters"] = counters;
        if (!error.empty()) {
            j["error"] = error;
        }
        return j;
    }
};

/// Forwards to another oracle, adding up time spent in updates and queries.
class TimedOracle : public SensitivityOracle {
public:
    TimedOracle(SensitivityOracle& inner, PhaseTimes& times) : inner_(inner), times_(times) {}

    std::string name() const override { return inner_.name(); }
    bool supports(QueryKind k) const override { return inner_.supports(k); }
    std::optional<std::size_t> sensitivity() const override { return inner_.sensitivity(); }
    void apply(const UpdateBatch& b) override {
        const auto t0 = Clock::now();
        inner_.apply(b);
        times_.update_ns += elapsed(t0);
    }
    Answer query(const Query& q) override {
        const auto t0 = Clock::now();
        auto a = inner_.query(q);
        times_.query_ns += elapsed(t0);
        ++queries_;
        return a;
    }
    void rollback() override {
        const auto t0 = Clock::now();
        inner_.rollback();
        times_.update_ns += elapsed(t0);
    }
    std::uint64_t queries() const noexcept { return queries_; }

private:
    using Clock = std::chrono::steady_clock;
    static std::uint64_t elapsed(Clock::time_point t0) {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
    }

    SensitivityOracle& inner_;
    PhaseTimes& times_;
    std::uint64_t queries_ = 0;
};

namespace detail {

using Clock = std::chrono::steady_clock;

inline std::uint64_t since(Clock::time_point t0) {
    return static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count());
}

template <class T>
const T& expect(const Instance& inst, const std::string& pipeline) {
    const auto* p = std::get_if<T>(&inst);
    if (p == nullptr) {
        throw Error("pipeline '" + pipeline + "' cannot run on this instance family");
    }
    return *p;
}

inline void record_answer(RunRecord& rec, const SourceAnswer& ans) {
    for (const auto& t : ans.trace) {
        rec.stages.emplace_back(t.label, t.fired);
    }
    rec.decision = ans.answer;
    rec.witness = ans.witness;
}

// Runs `inst` against the configured oracle, filling stage data and timings.
inline SourceAnswer drive(const GadgetInstance& inst, const ExperimentConfig& cfg, RunRecord& rec) {
    const auto t0 = Clock::now();
    std::unique_ptr<SensitivityOracle> oracle;
    if (cfg.oracle == "recompute") {
        oracle = std::make_unique<RecomputeOracle>(inst.graph);
    } else if (cfg.oracle == "precompute-all") {
        std::set<QueryKind> kinds;
        for (const auto& st : inst.stages) {
            for (const auto& q : st.queries) {
                kinds.insert(q.kind);
            }
        }
        oracle = std::make_unique<PrecomputeAllOracle>(inst.graph, inst.sensitivity, kinds);
    } else if (cfg.oracle == "fault-ecc") {
        FaultEccOptions fo;
        fo.F_override = cfg.F;
        auto built =
            std::make_shared<const FaultEccOracle>(build_fault_ecc_oracle(inst.graph, RationalEps::parse(cfg.eps), fo));
        rec.counters["replacement_queries"] = built->stats().replacement_queries;
        rec.counters["aux_relaxations"] = built->stats().aux_relaxations;
        oracle = std::make_unique<FaultEccAdapter>(built);
    } else {
        throw Error("unknown oracle '" + cfg.oracle + "'");
    }
    rec.times.preprocess_ns += since(t0);
    TimedOracle timed(*oracle, rec.times);
    auto ans = run_gadget(inst, timed);
    rec.counters["stages"] = inst.stages.size();
    rec.counters["queries"] = timed.queries();
    rec.counters["max_batch"] = inst.max_batch();
    if (const auto* rc = dynamic_cast<RecomputeOracle*>(oracle.get())) {
        rec.counters["searches"] = rc->searches();
    }
    record_answer(rec, ans);
    return ans;
}

inline void run_triangle(const Graph& g, const ExperimentConfig& cfg, RunRecord& rec) {
    const auto t0 = Clock::now();
    GadgetInstance inst;
    const bool gap = cfg.oracle == "fault-ecc";
    if (cfg.pipeline == "triangle-diam") {
        inst = gadget_triangle_diameter(g, {gap});
    } else if (cfg.pipeline == "triangle-ecc") {
        inst = gadget_triangle_ecc(g, {gap});
    } else if (cfg.pipeline == "triangle-reach") {
        inst = gadget_triangle_reach(g, parse_triangle_variant(cfg.variant.empty() ? "st2" : cfg.variant));
    } else {
        inst = gadget_triangle_approx_sp(g, parse_triangle_variant(cfg.variant.empty() ? "st2" : cfg.variant));
    }
    rec.times.preprocess_ns += since(t0);
    const auto ans = drive(inst, cfg, rec);
    if (cfg.check_brute) {
        const auto part = triangle_participants(g);
        bool agree = ans.answer == brute_triangle(g).has_value();
        for (std::size_t v = 0; v < g.n() && agree; ++v) {
            agree = ans.trace[v].fired == part[v];
        }
        rec.brute_force_agrees = agree;
    }
}

inline void run_fault_ecc(const Graph& g, const ExperimentConfig& cfg, RunRecord& rec) {
    const auto eps = RationalEps::parse(cfg.eps);
    FaultEccOptions fo;
    fo.F_override = cfg.F;
    auto t0 = Clock::now();
    const auto o = build_fault_ecc_oracle(g, eps, fo);
    rec.times.preprocess_ns += since(t0);
    const auto& st = o.stats();
    rec.counters["F"] = static_cast<std::uint64_t>(o.threshold());
    rec.counters["m"] = g.m();
    rec.counters["replacement_queries"] = st.replacement_queries;
    rec.counters["aux_relaxations"] = st.aux_relaxations;
    rec.counters["high_edges"] = st.high_edges;
    rec.counters["low_edges"] = st.low_edges;
    if (!cfg.check_brute) {
        return;
    }
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    t0 = Clock::now();
    for (EdgeId e = 0; e < g.m(); ++e) {
        UpdateBatch b;
        b.erase(e);
        const Graph h = apply_batch(g, b);
        const auto ecc = all_eccentricities(h);
        for (Vertex v = 0; v < g.n(); ++v) {
            ++checks;
            const auto est = o.query_ecc(v, e);
            if (!est.sandwiches(ecc[v], eps)) {
                ++violations;
            }
        }
        if (g.n() > 0) {
            ++checks;
            violations += o.query_diameter(e).sandwiches(max_distance(ecc), eps) ? 0 : 1;
            ++checks;
            violations += o.query_radius(e).sandwiches(*std::min_element(ecc.begin(), ecc.end()), eps) ? 0 : 1;
        }
    }
    rec.times.query_ns += since(t0);
    rec.counters["checks"] = checks;
    rec.counters["violations"] = violations;
    rec.brute_force_agrees = violations == 0;
    rec.decision = violations == 0;
}

}  // namespace detail

/// Runs repetition `rep` of the configured pipeline.
inline RunRecord run_one(const ExperimentConfig& cfg, std::size_t rep) {
    RunRecord rec;
    rec.rep = rep;
    rec.seed = derive_seed(cfg.seed, rep);
    Rng rng(rec.seed);
    const Instance inst = generate_instance(cfg.family, rng);
    const auto& p = cfg.pipeline;
    using detail::expect;
    if (p == "triangle-diam" || p == "triangle-ecc" || p == "triangle-reach" || p == "triangle-sp") {
        const auto& g = expect<Graph>(inst, p);
        rec.n = g.n();
        detail::run_triangle(g, cfg, rec);
    } else if (p == "fault-ecc") {
        const auto& g = expect<Graph>(inst, p);
        rec.n = g.n();
        detail::run_fault_ecc(g, cfg, rec);
    } else if (p == "negtri-diam" || p == "negtri-st2") {
        const auto& h = expect<NegTriangleInput>(inst, p);
        rec.n = h.n;
        const auto t0 = detail::Clock::now();
        const auto gi = p == "negtri-st2" ? gadget_negtri_st2(h) : gadget_negtri_diameter(h, cfg.variant == "ecc");
        rec.times.preprocess_ns += detail::since(t0);
        const auto ans = detail::drive(gi, cfg, rec);
        if (cfg.check_brute) {
            rec.brute_force_agrees = ans.answer == brute_negative_triangle(h).has_value();
        }
    } else if (p == "seth") {
        const auto& f = expect<Cnf>(inst, p);
        rec.n = f.num_vars;
        SethOptions so;
        so.u_size = static_cast<std::size_t>(detail::draw_int(cfg.u_size, rng, "u_size"));
        so.group_size = static_cast<std::size_t>(detail::draw_int(cfg.group_size, rng, "group_size"));
        so.u_size = std::min(so.u_size, f.num_vars);
        rec.counters["u_size"] = so.u_size;
        rec.counters["group_size"] = so.group_size;
        const auto t0 = detail::Clock::now();
        const auto gi = gadget_seth(f, parse_seth_target(cfg.variant.empty() ? "ssr" : cfg.variant), so);
        rec.times.preprocess_ns += detail::since(t0);
        const auto ans = detail::drive(gi, cfg, rec);
        rec.counters["groups"] = gi.sensitivity;
        if (cfg.check_brute) {
            rec.brute_force_agrees = ans.answer == brute_sat(f).has_value();
        }
    } else if (p == "umv") {
        const auto& in = expect<UmvInput>(inst, p);
        rec.n = in.M.rows;
        const auto mode = cfg.variant == "dec" ? UmvMode::Decremental : UmvMode::Incremental;
        const auto t0 = detail::Clock::now();
        const auto gi = gadget_umv(in.M, mode).instance(in.u, in.v);
        rec.times.preprocess_ns += detail::since(t0);
        const auto ans = detail::drive(gi, cfg, rec);
        if (cfg.check_brute) {
            rec.brute_force_agrees = ans.answer == brute_umv(in.M, in.u, in.v);
        }
    } else {
        throw Error("unknown pipeline '" + p + "'");
    }
    return rec;
}

/// All repetitions, spread over cfg.threads workers, returned in repetition order.
inline std::vector<RunRecord> run_experiment(const ExperimentConfig& cfg) {
    std::vector<RunRecord> out(cfg.repetitions);
    const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.threads, cfg.repetitions));
    auto work = [&](std::size_t w) {
        for (std::size_t rep = w; rep < cfg.repetitions; rep += workers) {
            try {
                out[rep] = run_one(cfg, rep);
            } catch (const std::exception& e) {
                out[rep].rep = rep;
                out[rep].seed = derive_seed(cfg.seed, rep);
                out[rep].error = e.what();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return out;
}

/// CSV columns, in order. Never reordered; new columns go at the end.
inline const char* summary_header() {
    return "rep,seed,pipeline,family,n,stages,fired,decision,brute_force_agrees,error";
}

inline std::string summary_csv(const ExperimentConfig& cfg, const std::vector<RunRecord>& recs) {
    std::ostringstream os;
    os << summary_header() << '\n';
    for (const auto& r : recs) {
        std::size_t fired = 0;
        for (const auto& s : r.stages) {
            fired += s.second ? 1 : 0;
        }
        os << r.rep << ',' << r.seed << ',' << cfg.pipeline << ',' << cfg.family.at("name").get<std::string>() << ','
           << r.n << ',' << r.stages.size() << ',' << fired << ',' << (r.decision ? 1 : 0) << ','
           << (r.brute_force_agrees ? (*r.brute_force_agrees ? "1" : "0") : "") << ','
           << (r.error.empty() ? "" : "1") << '\n';
    }
    return os.str();
}

inline std::string timings_csv(const std::vector<RunRecord>& recs) {
    std::ostringstream os;
    os << "rep,preprocess_ns,update_ns,query_ns\n";
    for (const auto& r : recs) {
        os << r.rep << ',' << r.times.preprocess_ns << ',' << r.times.update_ns << ',' << r.times.query_ns << '\n';
    }
    return os.str();
}

inline Json results_json(const ExperimentConfig& cfg, const std::vector<RunRecord>& recs) {
    Json j;
    j["config"] = cfg.to_json();
    auto arr = Json::array();
    std::size_t agree = 0;
    std::size_t checked = 0;
    for (const auto& r : recs) {
        arr.push_back(r.to_json());
        if (r.brute_force_agrees) {
            ++checked;
            agree += *r.brute_force_agrees ? 1 : 0;
        }
    }
    j["records"] = std::move(arr);
    j["agreement"] = Json{{"checked", checked}, {"agree", agree}};
    return j;
}

/// Writes results.json, runs/rep-NNNN.json, summary.csv and timings.csv under cfg.output.
inline void write_outputs(const ExperimentConfig& cfg, const std::vector<RunRecord>& recs) {
    const std::filesystem::path dir(cfg.output);
    std::filesystem::create_directories(dir / "runs");
    detail::write_file((dir / "results.json").string(), results_json(cfg, recs).dump(1) + "\n");
    for (const auto& r : recs) {
        char name[32];
        std::snprintf(name, sizeof name, "rep-%04zu.json", r.rep);
        detail::write_file((dir / "runs" / name).string(), r.to_json().dump(1) + "\n");
    }
    detail::write_file((dir / "summary.csv").string(), summary_csv(cfg, recs));
    detail::write_file((dir / "timings.csv").string(), timings_csv(recs));
}

/// Writes each repetition's instance to <output>/instances/rep-NNNN.<ext>.
inline std::vector<std::string> generate_files(const ExperimentConfig& cfg) {
    const std::filesystem::path dir = std::filesystem::path(cfg.output) / "instances";
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
        Rng rng(derive_seed(cfg.seed, rep));
        const auto inst = generate_instance(cfg.family, rng);
        char name[32];
        std::snprintf(name, sizeof name, "rep-%04zu", rep);
        const auto path = (dir / (std::string(name) + instance_extension(inst))).string();
        detail::write_file(path, write_instance(inst));
        paths.push_back(path);
    }
    return paths;
}

/*
 * Preprocessing-cost check for the fault-tolerant eccentricity oracle. The
 * work counter is aux-graph relaxations plus replacement-distance queries
 * (each query counted as one unit); the bound is
 * sum_v d_v * (1 + 2n/(eps F)) + n * F * m.
 */
struct BenchReport {
    std::size_t n = 0;
    std::size_t m = 0;
    std::int64_t F = 0;
    std::uint64_t work = 0;
    long double bound = 0;
    std::uint64_t queries = 0;
    std::uint64_t query_touches = 0;
    std::uint64_t preprocess_ns = 0;
    std::uint64_t query_ns = 0;

    bool within_bound() const noexcept { return static_cast<long double>(work) <= bound; }

    Json to_json() const {
        Json j;
        j["n"] = n;
        j["m"] = m;
        j["F"] = F;
        j["work"] = work;
        j["bound"] = static_cast<double>(bound);
        j["within_bound"] = within_bound();
        j["queries"] = queries;
        j["query_graph_touches"] = query_touches;
        j["preprocess_ns"] = preprocess_ns;
        j["query_ns"] = query_ns;
        return j;
    }
};

inline BenchReport bench_fault_ecc(const Graph& g, const RationalEps& eps, const FaultEccOptions& opts = {}) {
    BenchReport r;
    r.n = g.n();
    r.m = g.m();
    auto t0 = detail::Clock::now();
    const auto o = build_fault_ecc_oracle(g, eps, opts);
    r.preprocess_ns = detail::since(t0);
    r.F = o.threshold();
    const auto& st = o.stats();
    r.work = st.aux_relaxations + st.replacement_queries;
    const long double per = 1.0L + 2.0L * static_cast<long double>(g.n()) * static_cast<long double>(eps.den()) /
                                       (static_cast<long double>(eps.num()) * static_cast<long double>(r.F));
    long double sum_depth = 0;
    for (const auto d : st.depth) {
        sum_depth += static_cast<long double>(d);
    }
    r.bound = sum_depth * per + static_cast<long double>(g.n()) * static_cast<long double>(r.F) *
                                    static_cast<long double>(g.m());

    // Every (v, e) lookup plus the diameter/radius tables, counting adjacency reads.
    const auto before = graph_touches();
    t0 = detail::Clock::now();
    std::int64_t sink = 0;
    for (EdgeId e = 0; e < g.m(); ++e) {
        for (Vertex v = 0; v < g.n(); ++v) {
            const auto est = o.query_ecc(v, e);
            sink += est.finite() ? est.num() : 0;
            ++r.queries;
        }
        sink += o.query_diameter(e).finite() ? 1 : 0;
        sink += o.query_radius(e).finite() ? 1 : 0;
        r.queries += 2;
    }
    r.query_ns = detail::since(t0);
    r.query_touches = graph_touches() - before;
    if (sink < 0) {
        r.queries = 0;  // keeps the loop from being optimised away
    }
    return r;
}

}  // namespace sens

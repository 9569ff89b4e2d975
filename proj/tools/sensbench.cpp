// sensbench: instance generation, experiment runs and the preprocessing bench.
//
//   sensbench gen   --config cfg.json   writes <output>/instances/rep-NNNN.*
//   sensbench run   --config cfg.json   writes results.json, runs/, summary.csv, timings.csv
//   sensbench bench --config cfg.json   fault-ecc work counter and lookup check (timings are machine dependent)

#include <CLI11.hpp>
#include <iostream>

#include "sens/sens.hpp"

namespace {

sens::ExperimentConfig load_config(const std::string& path) {
    const auto text = sens::detail::read_file(path);
    sens::Json j;
    try {
        j = sens::Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw sens::Error(path + ": " + e.what());
    }
    return sens::ExperimentConfig::from_json(j);
}

int do_gen(const sens::ExperimentConfig& cfg) {
    for (const auto& p : sens::generate_files(cfg)) {
        std::cout << p << '\n';
    }
    return 0;
}

int do_run(const sens::ExperimentConfig& cfg) {
    const auto recs = sens::run_experiment(cfg);
    sens::write_outputs(cfg, recs);
    std::size_t checked = 0;
    std::size_t agree = 0;
    std::size_t errors = 0;
    for (const auto& r : recs) {
        if (!r.error.empty()) {
            ++errors;
            std::cerr << "rep " << r.rep << ": " << r.error << '\n';
        }
        if (r.brute_force_agrees) {
            ++checked;
            agree += *r.brute_force_agrees ? 1 : 0;
        }
    }
    std::cout << cfg.pipeline << ": " << recs.size() << " runs";
    if (checked > 0) {
        std::cout << ", " << agree << "/" << checked << " agree with brute force";
    }
    if (errors > 0) {
        std::cout << ", " << errors << " errors";
    }
    std::cout << " -> " << cfg.output << '\n';
    return errors == 0 && agree == checked ? 0 : 2;
}

int do_bench(const sens::ExperimentConfig& cfg) {
    const auto eps = sens::RationalEps::parse(cfg.eps);
    sens::FaultEccOptions fo;
    fo.F_override = cfg.F;
    auto reports = sens::Json::array();
    bool ok = true;
    for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
        sens::Rng rng(sens::derive_seed(cfg.seed, rep));
        const auto inst = sens::generate_instance(cfg.family, rng);
        const auto* g = std::get_if<sens::Graph>(&inst);
        if (g == nullptr) {
            throw sens::Error("bench needs a graph family");
        }
        const auto r = sens::bench_fault_ecc(*g, eps, fo);
        ok = ok && r.within_bound() && r.query_touches == 0;
        std::cout << "rep " << rep << ": n=" << r.n << " m=" << r.m << " F=" << r.F << " work=" << r.work
                  << " bound=" << static_cast<double>(r.bound) << (r.within_bound() ? " ok" : " EXCEEDED")
                  << " query_graph_touches=" << r.query_touches << " preprocess_ms=" << r.preprocess_ns / 1000000
                  << " ns_per_query=" << (r.queries ? r.query_ns / r.queries : 0) << '\n';
        auto j = r.to_json();
        j["rep"] = rep;
        reports.push_back(std::move(j));
    }
    std::filesystem::create_directories(cfg.output);
    sens::Json out;
    out["config"] = cfg.to_json();
    out["bench"] = std::move(reports);
    sens::detail::write_file((std::filesystem::path(cfg.output) / "bench.json").string(), out.dump(1) + "\n");
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generators, experiment runner and bench for the sensitivity-oracle library"};
    app.require_subcommand(1);
    std::string config;
    std::optional<std::string> output;
    for (const char* name : {"gen", "run", "bench"}) {
        auto* sub = app.add_subcommand(name, name == std::string("gen")   ? "write generated instances"
                                             : name == std::string("run") ? "run the configured pipeline"
                                                                          : "fault-ecc preprocessing bench");
        sub->add_option("--config", config, "experiment config JSON")->required();
        sub->add_option("--output", output, "override the config's output directory");
    }
    CLI11_PARSE(app, argc, argv);
    try {
        auto cfg = load_config(config);
        if (output) {
            cfg.output = *output;
        }
        const auto* sub = app.get_subcommands().front();
        if (sub->get_name() == "gen") {
            return do_gen(cfg);
        }
        if (sub->get_name() == "run") {
            return do_run(cfg);
        }
        return do_bench(cfg);
    } catch (const std::exception& e) {
        std::cerr << "sensbench: " << e.what() << '\n';
        return 1;
    }
}

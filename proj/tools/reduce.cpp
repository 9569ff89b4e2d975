// reduce: solve a source problem by driving a gadget through an oracle.
//
//   reduce <gadget> --input F [--variant V] [--oracle O] [--check-brute] --out results.json

#include <CLI11.hpp>
#include <iostream>
#include <memory>

#include "sens/sens.hpp"

namespace {

struct Options {
    std::string gadget;
    std::string input;
    std::string variant;
    std::string oracle = "recompute";
    std::string eps = "1/4";
    std::size_t u_size = 1;
    std::size_t group_size = 2;
    bool check_brute = false;
    std::string out;
};

std::unique_ptr<sens::SensitivityOracle> make_oracle(const Options& o, const sens::GadgetInstance& inst) {
    if (o.oracle == "recompute") {
        return std::make_unique<sens::RecomputeOracle>(inst.graph);
    }
    if (o.oracle == "fault-ecc") {
        return std::make_unique<sens::FaultEccAdapter>(std::make_shared<const sens::FaultEccOracle>(
            sens::build_fault_ecc_oracle(inst.graph, sens::RationalEps::parse(o.eps))));
    }
    std::set<sens::QueryKind> kinds;
    for (const auto& st : inst.stages) {
        for (const auto& q : st.queries) {
            kinds.insert(q.kind);
        }
    }
    return std::make_unique<sens::PrecomputeAllOracle>(inst.graph, inst.sensitivity, kinds);
}

int run(const Options& o) {
    const std::string text = sens::detail::read_file(o.input);
    sens::GadgetInstance inst;
    std::optional<bool> brute;
    std::size_t n = 0;
    const std::string& g = o.gadget;
    if (g.rfind("triangle-", 0) == 0) {
        const auto graph = sens::parse_graph(text);
        n = graph.n();
        const sens::TriangleDiameterOptions topt{o.oracle == "fault-ecc"};
        if (g == "triangle-diam") {
            inst = sens::gadget_triangle_diameter(graph, topt);
        } else if (g == "triangle-ecc") {
            inst = sens::gadget_triangle_ecc(graph, topt);
        } else if (g == "triangle-reach") {
            inst = sens::gadget_triangle_reach(graph, sens::parse_triangle_variant(o.variant.empty() ? "st2" : o.variant));
        } else {
            inst = sens::gadget_triangle_approx_sp(graph,
                                                   sens::parse_triangle_variant(o.variant.empty() ? "st2" : o.variant));
        }
        if (o.check_brute) {
            brute = sens::brute_triangle(graph).has_value();
        }
    } else if (g == "negtri-diam" || g == "negtri-st2") {
        const auto h = sens::parse_negtri(text);
        n = h.n;
        inst = g == "negtri-st2" ? sens::gadget_negtri_st2(h) : sens::gadget_negtri_diameter(h, o.variant == "ecc");
        if (o.check_brute) {
            brute = sens::brute_negative_triangle(h).has_value();
        }
    } else if (g == "seth") {
        const auto f = sens::parse_dimacs(text);
        n = f.num_vars;
        sens::SethOptions so;
        so.u_size = o.u_size;
        so.group_size = o.group_size;
        inst = sens::gadget_seth(f, sens::parse_seth_target(o.variant.empty() ? "ssr" : o.variant), so);
        if (o.check_brute) {
            brute = sens::brute_sat(f).has_value();
        }
    } else {
        const auto in = sens::parse_umv(text);
        n = in.M.rows;
        if (!o.variant.empty() && o.variant != "inc" && o.variant != "dec") {
            throw sens::Error("umv variant must be inc or dec");
        }
        const auto mode = o.variant == "dec" ? sens::UmvMode::Decremental : sens::UmvMode::Incremental;
        inst = sens::gadget_umv(in.M, mode).instance(in.u, in.v);
        if (o.check_brute) {
            brute = sens::brute_umv(in.M, in.u, in.v);
        }
    }

    auto oracle = make_oracle(o, inst);
    const auto ans = sens::run_gadget(inst, *oracle);

    sens::Json j;
    j["gadget"] = inst.gadget;
    j["n"] = n;
    auto stages = sens::Json::array();
    for (const auto& t : ans.trace) {
        stages.push_back(sens::Json{{"label", t.label}, {"fired", t.fired}});
    }
    j["stages"] = std::move(stages);
    j["decision"] = ans.answer;
    j["witness"] = ans.witness ? sens::Json(*ans.witness) : sens::Json(nullptr);
    j["brute_force_agrees"] = brute ? sens::Json(*brute == ans.answer) : sens::Json(nullptr);
    sens::detail::write_file(o.out, j.dump(1) + "\n");
    std::cout << inst.gadget << ": " << (ans.answer ? "yes" : "no");
    if (brute) {
        std::cout << (*brute == ans.answer ? " (brute force agrees)" : " (BRUTE FORCE DISAGREES)");
    }
    std::cout << '\n';
    return brute && *brute != ans.answer ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Solve triangle, negative triangle, CNF-SAT and uMv instances through reduction gadgets"};
    Options o;
    app.add_option("gadget", o.gadget, "gadget to build")
        ->required()
        ->check(CLI::IsMember({"triangle-diam", "triangle-ecc", "triangle-reach", "triangle-sp", "negtri-diam",
                               "negtri-st2", "seth", "umv"}));
    app.add_option("--input", o.input, "instance file (graph, negtri matrices, DIMACS CNF or uMv)")->required();
    app.add_option("--variant", o.variant,
                   "st2|ss1|ap0 (triangle-reach/sp), ssr|diameter|streach (seth), inc|dec (umv), ecc (negtri-diam)");
    app.add_option("--oracle", o.oracle, "recompute, precompute-all or fault-ecc")
        ->check(CLI::IsMember({"recompute", "precompute-all", "fault-ecc"}));
    app.add_option("--eps", o.eps, "eps for --oracle fault-ecc");
    app.add_option("--u-size", o.u_size, "SETH: size of the variable block U");
    app.add_option("--group-size", o.group_size, "SETH: clauses per group");
    app.add_flag("--check-brute", o.check_brute, "compare against brute force");
    app.add_option("--out", o.out, "results JSON")->required();
    CLI11_PARSE(app, argc, argv);
    try {
        return run(o);
    } catch (const std::exception& e) {
        std::cerr << "reduce: " << e.what() << '\n';
        return 1;
    }
}

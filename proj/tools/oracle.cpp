// oracle: replacement-path profiles and the fault-tolerant eccentricity oracle.
//
//   oracle replacement --graph G --source s --target t
//   oracle fault-ecc build --graph G --eps p/q [--F k] --out O
//   oracle fault-ecc query --in O --kind ecc|diameter|radius [--source v] --edge u,v

#include <CLI11.hpp>
#include <iostream>

#include "sens/fault_ecc_io.hpp"
#include "sens/graph_io.hpp"

namespace {

std::pair<sens::Vertex, sens::Vertex> parse_edge(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw sens::Error("edge must be written u,v");
    }
    try {
        return {static_cast<sens::Vertex>(std::stoul(text.substr(0, comma))),
                static_cast<sens::Vertex>(std::stoul(text.substr(comma + 1)))};
    } catch (const std::logic_error&) {
        throw sens::Error("edge must be written u,v");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Replacement distances and single-failure eccentricity oracle"};
    app.require_subcommand(1);

    auto* rep = app.add_subcommand("replacement", "print d(s,t) with each s-t path edge removed, as CSV");
    std::string graph_path;
    sens::Vertex source = 0;
    sens::Vertex target = 0;
    rep->add_option("--graph", graph_path, "edge-list file")->required();
    rep->add_option("--source", source, "source vertex")->required();
    rep->add_option("--target", target, "target vertex")->required();

    auto* fe = app.add_subcommand("fault-ecc", "(1+eps)-approximate eccentricity under one edge failure");
    fe->require_subcommand(1);
    auto* build = fe->add_subcommand("build", "preprocess a graph and write the tables as JSON");
    std::string eps_text;
    std::optional<std::int64_t> F;
    std::string out_path;
    std::string rule = "covering";
    build->add_option("--graph", graph_path, "edge-list file")->required();
    build->add_option("--eps", eps_text, "approximation parameter p/q")->required();
    build->add_option("--F", F, "threshold override");
    build->add_option("--marker-rule", rule, "covering or level-stride")
        ->check(CLI::IsMember({"covering", "level-stride"}));
    build->add_option("--out", out_path, "output JSON")->required();

    auto* query = fe->add_subcommand("query", "look up one answer in a built oracle");
    std::string in_path;
    std::string kind;
    std::optional<sens::Vertex> qsource;
    std::string edge_text;
    query->add_option("--in", in_path, "oracle JSON")->required();
    query->add_option("--kind", kind, "ecc, diameter or radius")
        ->required()
        ->check(CLI::IsMember({"ecc", "diameter", "radius"}));
    query->add_option("--source", qsource, "vertex (ecc only)");
    query->add_option("--edge", edge_text, "failed edge u,v")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rep->parsed()) {
            const auto g = sens::load_graph(graph_path);
            if (source >= g.n() || target >= g.n()) {
                throw sens::Error("source or target out of range");
            }
            sens::ReplacementDistanceOracle o(g, sens::CachePolicy::Lazy);
            std::cout << "edge,distance\n";
            for (const auto& [id, d] : o.profile(source, target)) {
                const auto& e = g.edge(id);
                std::cout << e.u << '-' << e.v << ',' << d << '\n';
            }
            return 0;
        }
        if (build->parsed()) {
            const auto g = sens::load_graph(graph_path);
            sens::FaultEccOptions opts;
            opts.F_override = F;
            opts.marker_rule = rule == "covering" ? sens::MarkerRule::Covering : sens::MarkerRule::LevelStride;
            const auto o = sens::build_fault_ecc_oracle(g, sens::RationalEps::parse(eps_text), opts);
            sens::detail::write_file(out_path, sens::fault_ecc_to_string(o) + "\n");
            std::cerr << "F=" << o.threshold() << " high=" << o.stats().high_edges << " low=" << o.stats().low_edges
                      << " replacement_queries=" << o.stats().replacement_queries << '\n';
            return 0;
        }
        const auto o = sens::fault_ecc_from_string(sens::detail::read_file(in_path));
        const auto [u, v] = parse_edge(edge_text);
        const auto id = o.find_edge(u, v);
        if (!id) {
            throw sens::Error("no edge " + edge_text + " in the oracle's graph");
        }
        sens::EccEstimate ans;
        if (kind == "ecc") {
            if (!qsource) {
                throw sens::Error("--source is required for --kind ecc");
            }
            ans = o.query_ecc(*qsource, *id);
        } else if (kind == "diameter") {
            ans = o.query_diameter(*id);
        } else {
            ans = o.query_radius(*id);
        }
        std::cout << ans << '\n';
    } catch (const std::exception& e) {
        std::cerr << "oracle: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

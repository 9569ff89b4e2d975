// baseline: answer queries on the original graph edited by one batch.
//
//   baseline recompute --graph G --batch "d:0-1,i:2-3" --query "dist:0,4"
//   baseline precompute-all --graph G --batch "d:0-1" --query diameter [--K k]

#include <CLI11.hpp>
#include <iostream>
#include <memory>

#include "sens/graph_io.hpp"
#include "sens/precompute_all_oracle.hpp"
#include "sens/recompute_oracle.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Recompute-from-scratch and precompute-all sensitivity oracles"};
    std::string kind;
    std::string graph_path;
    std::string batch_text;
    std::vector<std::string> query_texts;
    std::optional<std::size_t> K;
    app.add_option("oracle", kind, "recompute or precompute-all")
        ->required()
        ->check(CLI::IsMember({"recompute", "precompute-all"}));
    app.add_option("--graph", graph_path, "edge-list file")->required();
    app.add_option("--batch", batch_text, "ops d:u-v (delete) and i:u-v[:w] (insert), comma separated");
    app.add_option("--query", query_texts,
                   "dist:u,v reach:u,v ecc:v diameter radius countreach:s allreach:s1+s2,t1+t2 (repeatable)")
        ->required();
    app.add_option("--K", K, "precompute-all sensitivity (default: batch size)");
    CLI11_PARSE(app, argc, argv);

    try {
        const auto g = sens::load_graph(graph_path);
        const auto batch = sens::parse_batch(g, batch_text);
        std::vector<sens::Query> queries;
        std::set<sens::QueryKind> kinds;
        for (const auto& t : query_texts) {
            queries.push_back(sens::parse_query(t));
            kinds.insert(queries.back().kind);
        }
        std::unique_ptr<sens::SensitivityOracle> o;
        if (kind == "recompute") {
            o = std::make_unique<sens::RecomputeOracle>(g);
        } else {
            o = std::make_unique<sens::PrecomputeAllOracle>(g, K.value_or(batch.size()), kinds);
        }
        o->apply(batch);
        for (const auto& q : queries) {
            std::cout << o->query(q).to_string() << '\n';
        }
        o->rollback();
    } catch (const std::exception& e) {
        std::cerr << "baseline: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

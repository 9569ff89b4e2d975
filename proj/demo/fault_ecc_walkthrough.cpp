// Builds the single-failure eccentricity oracle on a small graph and prints
// every estimate next to the recomputed value.

#include <iostream>

#include "sens/sens.hpp"

#ifndef DEMO_DATA
#define DEMO_DATA ""
#endif

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : DEMO_DATA "c6_chord.graph";
    const std::string eps_text = argc > 2 ? argv[2] : "1/2";
    try {
        const auto g = sens::load_graph(path);
        const auto eps = sens::RationalEps::parse(eps_text);
        const auto o = sens::build_fault_ecc_oracle(g, eps);
        std::cout << "n=" << g.n() << " m=" << g.m() << " eps=" << eps_text << " F=" << o.threshold() << '\n';
        std::cout << "edge  v  estimate  true\n";
        for (sens::EdgeId e = 0; e < g.m(); ++e) {
            const auto h = sens::apply_batch(g, sens::UpdateBatch{}.erase(e));
            const auto ecc = sens::all_eccentricities(h);
            for (sens::Vertex v = 0; v < g.n(); ++v) {
                const auto est = o.query_ecc(v, e);
                std::cout << g.edge(e).u << '-' << g.edge(e).v << "   " << v << "  " << est << "  " << ecc[v]
                          << (est.sandwiches(ecc[v], eps) ? "" : "  <- outside [true, (1+eps) true]") << '\n';
            }
            std::cout << "diameter " << o.query_diameter(e) << " radius " << o.query_radius(e) << '\n';
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}

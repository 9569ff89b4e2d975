// Runs the triangle diameter gadget stage by stage against the recompute
// oracle and prints which vertices the oracle flags.

#include <iostream>

#include "sens/sens.hpp"

#ifndef DEMO_DATA
#define DEMO_DATA ""
#endif

int main(int argc, char** argv) {
    const std::string path = argc > 1 ? argv[1] : DEMO_DATA "bowtie.graph";
    try {
        const auto g = sens::load_graph(path);
        const auto inst = sens::gadget_triangle_diameter(g);
        std::cout << "gadget graph: n=" << inst.graph.n() << " m=" << inst.graph.m()
                  << " static diameter=" << sens::static_diameter(inst.graph) << '\n';
        sens::RecomputeOracle o(inst.graph);
        const auto ans = sens::run_gadget(inst, o);
        for (const auto& t : ans.trace) {
            std::cout << "stage " << t.label << ": " << (t.fired ? "fired" : "-");
            for (const auto& a : t.answers) {
                std::cout << " diameter=" << a.to_string();
            }
            std::cout << '\n';
        }
        std::cout << "triangle: " << (ans.answer ? "yes" : "no");
        if (ans.witness) {
            std::cout << " (";
            for (std::size_t i = 0; i < ans.witness->size(); ++i) {
                std::cout << (i ? " " : "") << (*ans.witness)[i];
            }
            std::cout << ")";
        }
        std::cout << "\nbrute force: " << (sens::brute_triangle(g) ? "yes" : "no") << '\n';
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
    return 0;
}

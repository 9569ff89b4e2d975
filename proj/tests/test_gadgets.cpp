#include <gtest/gtest.h>

#include "support.hpp"

using namespace testutil;
using sens::GadgetInstance;
using sens::TriangleVariant;

namespace {

sens::SourceAnswer run(const GadgetInstance& inst) {
    sens::RecomputeOracle o(inst.graph);
    return sens::run_gadget(inst, o);
}

std::vector<Distance> stage_distances(const GadgetInstance& inst) {
    std::vector<Distance> out;
    for (const auto& t : run(inst).trace) {
        out.push_back(Distance(std::get<sens::EccEstimate>(t.answers.at(0).value).num()));
    }
    return out;
}

Graph single_edge() {
    Graph g(2);
    g.add_edge(0, 1);
    return g;
}

sens::NegTriangleInput negtri1(std::int64_t a, std::int64_t b, std::int64_t c) {
    sens::NegTriangleInput h(1);
    h.xy[0] = a;
    h.yz[0] = b;
    h.xz[0] = c;
    return h;
}

}  // namespace

TEST(TriangleDiameter, CompleteThreeFiresEverywhere) {
    for (const bool ecc : {false, true}) {
        const auto inst = ecc ? sens::gadget_triangle_ecc(complete(3)) : sens::gadget_triangle_diameter(complete(3));
        const auto ans = run(inst);
        EXPECT_TRUE(ans.answer);
        EXPECT_EQ(ans.fired_stages(), (std::vector<std::size_t>{0, 1, 2}));
        ASSERT_TRUE(ans.witness);
        EXPECT_EQ(*ans.witness, (sens::Witness{0, 1, 2}));
    }
}

TEST(TriangleDiameter, SquareNeverFires) {
    const auto inst = sens::gadget_triangle_diameter(cycle(4));
    const auto ans = run(inst);
    EXPECT_FALSE(ans.answer);
    for (const auto& t : ans.trace) {
        EXPECT_GE(std::get<sens::EccEstimate>(t.answers[0].value), sens::EccEstimate::exact(Distance(4)));
    }
    EXPECT_FALSE(run(sens::gadget_triangle_ecc(cycle(4))).answer);
}

TEST(TriangleDiameter, EdgelessNeverFires) {
    EXPECT_FALSE(run(sens::gadget_triangle_diameter(Graph(3))).answer);
    EXPECT_FALSE(run(sens::gadget_triangle_ecc(Graph(3))).answer);
}

TEST(TriangleDiameter, ShapeAndStaticDiameter) {
    sens::Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 3 + rng.index(10);
        auto g = sens::gen_gnp(n, 0.5, rng);
        for (Vertex v = 0; v < n; ++v) {  // minimum degree at least one
            if (g.out(v).empty()) {
                g.add_edge(v, v == 0 ? 1 : 0);
            }
        }
        const auto inst = sens::gadget_triangle_diameter(g);
        EXPECT_EQ(inst.graph.n(), 6 * n + 2);
        // 3 layer copies of E (both orientations), A and B cliques, v1-a, a-b, B x V4, hub spokes, c-d
        EXPECT_EQ(inst.graph.m(), 6 * g.m() + n * (n - 1) + 2 * n + n * n + 6 * n + 1);
        EXPECT_EQ(inst.stages.size(), n);
        EXPECT_EQ(inst.sensitivity, 1u);
        EXPECT_EQ(inst.max_batch(), 1u);
        EXPECT_EQ(sens::static_diameter(inst.graph), Distance(3)) << "trial " << trial;
    }
}

TEST(TriangleDiameter, RejectsDirectedOrWeighted) {
    EXPECT_THROW(sens::gadget_triangle_diameter(Graph(3, true)), sens::Error);
    EXPECT_THROW(sens::gadget_triangle_diameter(Graph(3, false, true)), sens::Error);
    EXPECT_THROW(sens::gadget_triangle_reach(Graph(3, true), TriangleVariant::St2), sens::Error);
}

TEST(TriangleReach, Variants) {
    for (const auto v : {TriangleVariant::St2, TriangleVariant::Ss1, TriangleVariant::Ap0}) {
        const auto k3 = sens::gadget_triangle_reach(complete(3), v);
        EXPECT_TRUE(k3.graph.directed());
        EXPECT_TRUE(run(k3).answer) << sens::variant_name(v);
        EXPECT_FALSE(run(sens::gadget_triangle_reach(path(3), v)).answer) << sens::variant_name(v);
        const std::size_t expect = v == TriangleVariant::St2 ? 2 : (v == TriangleVariant::Ss1 ? 1 : 0);
        EXPECT_EQ(k3.sensitivity, expect);
        for (const auto& st : k3.stages) {
            EXPECT_EQ(st.batch.size(), expect);
        }
    }
}

TEST(TriangleApproxSp, Thresholds) {
    const auto st2 = sens::gadget_triangle_approx_sp(complete(3), TriangleVariant::St2);
    EXPECT_FALSE(st2.graph.directed());
    for (const auto d : stage_distances(st2)) {
        EXPECT_EQ(d, Distance(5));
    }
    for (const auto& t : run(sens::gadget_triangle_approx_sp(cycle(4), TriangleVariant::Ss1)).trace) {
        const auto& e = std::get<sens::EccEstimate>(t.answers[0].value);
        EXPECT_TRUE(!e.finite() || e >= sens::EccEstimate::exact(Distance(6)));
    }
    const auto ap0 = run(sens::gadget_triangle_approx_sp(single_edge(), TriangleVariant::Ap0));
    EXPECT_TRUE(ap0.fired_stages().empty());
    EXPECT_TRUE(run(sens::gadget_triangle_approx_sp(complete(3), TriangleVariant::Ap0)).answer);
}

TEST(TriangleGadgets, FiredSetIsParticipantSet) {
    sens::Rng rng(40);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = sens::gen_gnp(2 + rng.index(8), rng.unit(), rng);
        const auto part = sens::triangle_participants(g);
        std::vector<std::size_t> expect;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (part[v]) {
                expect.push_back(v);
            }
        }
        const bool truth = sens::brute_triangle(g).has_value();
        ASSERT_EQ(run(sens::gadget_triangle_diameter(g)).fired_stages(), expect);
        ASSERT_EQ(run(sens::gadget_triangle_ecc(g)).fired_stages(), expect);
        for (const auto v : {TriangleVariant::St2, TriangleVariant::Ss1, TriangleVariant::Ap0}) {
            ASSERT_EQ(run(sens::gadget_triangle_reach(g, v)).answer, truth);
            ASSERT_EQ(run(sens::gadget_triangle_approx_sp(g, v)).answer, truth);
        }
    }
}

TEST(TriangleGadgets, FaultEccOracleWithQuarterEps) {
    sens::Rng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = sens::gen_gnp(3 + rng.index(6), 0.4, rng);
        const auto inst = sens::gadget_triangle_diameter(g, sens::TriangleDiameterOptions{true});
        sens::FaultEccAdapter o(std::make_shared<const sens::FaultEccOracle>(
            sens::build_fault_ecc_oracle(inst.graph, sens::RationalEps(1, 4))));
        ASSERT_EQ(sens::run_gadget(inst, o).answer, sens::brute_triangle(g).has_value()) << "trial " << trial;
    }
}

TEST(RunGadget, RollbackLaw) {
    const auto inst = sens::gadget_triangle_diameter(sens::parse_graph("4 4 undirected unweighted\n0 1\n1 2\n2 0\n2 3"));
    sens::RecomputeOracle o(inst.graph);
    const auto before = o.current().fingerprint();
    std::size_t calls = 0;
    sens::RunOptions opts;
    opts.after_stage = [&](std::size_t) {
        ++calls;
        EXPECT_FALSE(o.active());
        EXPECT_EQ(o.current().fingerprint(), before);
    };
    sens::run_gadget(inst, o, opts);
    EXPECT_EQ(calls, inst.stages.size());
}

TEST(RunGadget, RejectsUnsupportedKindsAndSensitivity) {
    const auto inst = sens::gadget_triangle_reach(complete(3), TriangleVariant::St2);
    sens::PrecomputeAllOracle pa(inst.graph, 2, {sens::QueryKind::Dist});
    try {
        sens::run_gadget(inst, pa);
        FAIL() << "expected an error";
    } catch (const sens::Error& e) {
        EXPECT_NE(std::string(e.what()).find("reach"), std::string::npos) << e.what();
    }
    sens::FaultEccAdapter fe(std::make_shared<const sens::FaultEccOracle>(
        sens::build_fault_ecc_oracle(Graph(inst.graph.n(), false), sens::RationalEps(1, 1))));
    EXPECT_THROW(sens::run_gadget(inst, fe), sens::Error);
}

TEST(RunGadget, ZeroStageUsesDefault) {
    GadgetInstance inst;
    inst.default_answer = true;
    inst.default_witness = [] { return sens::Witness{7}; };
    const auto ans = run(inst);
    EXPECT_TRUE(ans.answer);
    EXPECT_EQ(ans.witness, (sens::Witness{7}));
    EXPECT_TRUE(ans.trace.empty());
}

TEST(NegTriangle, SingleTriple) {
    EXPECT_TRUE(run(sens::gadget_negtri_diameter(negtri1(1, 1, -3))).answer);
    EXPECT_TRUE(run(sens::gadget_negtri_diameter(negtri1(1, 1, -3), true)).answer);
    EXPECT_TRUE(run(sens::gadget_negtri_st2(negtri1(1, 1, -3))).answer);
    EXPECT_FALSE(run(sens::gadget_negtri_diameter(negtri1(1, 1, -2))).answer);  // weight 0 is not negative
}

TEST(NegTriangle, AllPositiveAndAllZero) {
    sens::NegTriangleInput pos(3);
    sens::NegTriangleInput zero(3);
    for (auto* m : {&pos.xy, &pos.yz, &pos.xz}) {
        std::fill(m->begin(), m->end(), 1);
    }
    EXPECT_FALSE(run(sens::gadget_negtri_diameter(pos)).answer);
    EXPECT_FALSE(run(sens::gadget_negtri_st2(pos)).answer);
    const auto st2 = sens::gadget_negtri_st2(zero);
    EXPECT_TRUE(st2.stages.empty());
    EXPECT_FALSE(run(st2).answer);
}

TEST(NegTriangle, RandomAgainstBruteForce) {
    sens::Rng rng(58);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = sens::gen_negtri(1 + rng.index(5), 10, rng);
        const auto truth = sens::brute_negative_triangle(h);
        const auto diam = sens::gadget_negtri_diameter(h);
        const auto st2 = sens::gadget_negtri_st2(h);
        EXPECT_EQ(diam.max_batch(), 1u);
        for (const auto& st : st2.stages) {
            ASSERT_EQ(st.batch.size(), 2u);
        }
        const auto a = run(diam);
        ASSERT_EQ(a.answer, truth.has_value()) << "trial " << trial;
        ASSERT_EQ(run(sens::gadget_negtri_diameter(h, true)).answer, truth.has_value());
        const auto b = run(st2);
        ASSERT_EQ(b.answer, truth.has_value()) << "trial " << trial;
        for (const auto* ans : {&a, &b}) {
            if (ans->witness) {
                const auto& w = *ans->witness;
                const auto i = static_cast<std::size_t>(w[0]);
                const auto j = static_cast<std::size_t>(w[1]);
                const auto k = static_cast<std::size_t>(w[2]);
                EXPECT_LT(h.w_xy(i, j) + h.w_yz(j, k) + h.w_xz(i, k), 0);
            }
        }
    }
}

TEST(Seth, Examples) {
    const auto contra = sens::parse_dimacs("p cnf 1 2\n1 0\n-1 0\n");
    const auto either = sens::parse_dimacs("p cnf 2 1\n1 2 0\n");
    const sens::Cnf empty{3, {}};
    sens::SethOptions opts;
    opts.u_size = 1;
    for (const auto t : {sens::SethTarget::Ssr, sens::SethTarget::Diameter, sens::SethTarget::StReach}) {
        EXPECT_FALSE(run(sens::gadget_seth(contra, t, opts)).answer);
        EXPECT_TRUE(run(sens::gadget_seth(either, t, opts)).answer);
        const auto e = sens::gadget_seth(empty, t, opts);
        EXPECT_TRUE(e.stages.empty());
        EXPECT_TRUE(run(e).answer);
    }
}

TEST(Seth, BudgetAndParameterErrors) {
    sens::Cnf f{20, {{1, 2, 3}}};
    sens::SethOptions opts;
    opts.u_size = 12;
    opts.node_budget = 1024;
    EXPECT_THROW(sens::gadget_seth(f, sens::SethTarget::Ssr, opts), sens::Error);
    opts.u_size = 21;
    EXPECT_THROW(sens::gadget_seth(f, sens::SethTarget::Ssr, opts), sens::Error);
    opts.u_size = 2;
    opts.group_size = 0;
    EXPECT_THROW(sens::gadget_seth(f, sens::SethTarget::Ssr, opts), sens::Error);
}

TEST(Seth, RandomAgainstBruteForce) {
    sens::Rng rng(66);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t vars = 3 + rng.index(6);
        const auto f = sens::gen_cnf(3, vars, 1 + rng.index(20), rng);
        sens::SethOptions opts;
        opts.u_size = 1 + rng.index(vars - 1);
        opts.group_size = 1 + rng.index(4);
        const auto truth = sens::brute_sat(f);
        for (const auto t : {sens::SethTarget::Ssr, sens::SethTarget::Diameter, sens::SethTarget::StReach}) {
            const auto inst = sens::gadget_seth(f, t, opts);
            EXPECT_LE(inst.max_batch(), inst.sensitivity);
            if (!inst.stages.empty()) {
                EXPECT_EQ(inst.stages.size(), std::size_t{1} << (vars - opts.u_size));
            }
            const auto ans = run(inst);
            ASSERT_EQ(ans.answer, truth.has_value()) << "trial " << trial << " " << sens::seth_target_name(t);
            if (ans.witness) {
                std::uint64_t bits = 0;
                for (std::size_t i = 0; i < ans.witness->size(); ++i) {
                    bits |= static_cast<std::uint64_t>((*ans.witness)[i] != 0) << i;
                }
                for (std::size_t c = 0; c < f.clauses.size(); ++c) {
                    ASSERT_TRUE(sens::Cnf::clause_true(f.clauses[c], bits)) << "witness fails clause " << c;
                }
            }
            if (t == sens::SethTarget::Diameter) {
                for (const auto& tr : ans.trace) {
                    const auto& d = std::get<sens::EccEstimate>(tr.answers[0].value);
                    ASSERT_TRUE(d == sens::EccEstimate::exact(Distance(3)) || d == sens::EccEstimate::exact(Distance(4)));
                }
            }
        }
    }
}

TEST(Umv, Examples) {
    sens::BitMatrix M(2, 2);
    M.set(0, 1, true);
    M.set(1, 0, true);
    for (const auto mode : {sens::UmvMode::Incremental, sens::UmvMode::Decremental}) {
        const auto gad = sens::gadget_umv(M, mode);
        const auto inst = gad.instance({1, 0}, {1, 0});
        const auto ans = run(inst);
        EXPECT_FALSE(ans.answer);
        ASSERT_EQ(ans.trace.size(), 1u);
        EXPECT_EQ(ans.trace[0].answers[0], sens::Answer::distance(Distance(4)));

        sens::BitMatrix one(1, 1);
        one.set(0, 0, true);
        const auto a = run(sens::gadget_umv(one, mode).instance({1}, {1}));
        EXPECT_TRUE(a.answer);
        EXPECT_EQ(a.trace[0].answers[0], sens::Answer::distance(Distance(2)));

        const auto zero = sens::gadget_umv(M, mode).instance({1, 1}, {0, 0});
        EXPECT_FALSE(run(zero).answer);
        if (mode == sens::UmvMode::Incremental) {
            EXPECT_EQ(zero.max_batch(), 0u);
        }
    }
    EXPECT_THROW(sens::gadget_umv(M, sens::UmvMode::Incremental).instance({1}, {1, 0}), sens::Error);
}

TEST(Umv, RandomAgainstBruteForce) {
    sens::Rng rng(70);
    for (int trial = 0; trial < 100; ++trial) {
        const auto in = sens::gen_umv(1 + rng.index(10), 1 + rng.index(10), rng.unit(), rng, rng.unit());
        const bool truth = sens::brute_umv(in.M, in.u, in.v);
        for (const auto mode : {sens::UmvMode::Incremental, sens::UmvMode::Decremental}) {
            const auto inst = sens::gadget_umv(in.M, mode).instance(in.u, in.v);
            EXPECT_LE(inst.max_batch(), in.M.cols);
            ASSERT_EQ(run(inst).answer, truth) << "trial " << trial;
        }
    }
}

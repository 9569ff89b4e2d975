#include <gtest/gtest.h>

#include "support.hpp"

using namespace testutil;

TEST(Dimacs, ParseAndWrite) {
    const auto f = sens::parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n2 3\n-1 0\n");
    EXPECT_EQ(f.num_vars, 3u);
    ASSERT_EQ(f.clauses.size(), 2u);
    EXPECT_EQ(f.clauses[1], (std::vector<int>{2, 3, -1}));
    EXPECT_EQ(sens::parse_dimacs(sens::write_dimacs(f)).clauses, f.clauses);
    EXPECT_THROW(sens::parse_dimacs("p cnf 2 1\n3 0\n"), sens::Error);
    EXPECT_THROW(sens::parse_dimacs("1 2 0\n"), sens::Error);
}

TEST(NegTriangleText, ParseAndWrite) {
    const auto h = sens::parse_negtri("1\n\n1\n\n-3\n");
    EXPECT_EQ(h.n, 1u);
    EXPECT_EQ(h.w_xz(0, 0), -3);
    EXPECT_EQ(sens::parse_negtri(sens::write_negtri(h)).xz, h.xz);
    EXPECT_THROW(sens::parse_negtri("1 2\n3 4\n\n1 2\n\n1 2\n3 4\n"), sens::Error);
    EXPECT_THROW(sens::parse_negtri("1\n\n1\n"), sens::Error);
}

TEST(UmvText, ParseAndWrite) {
    const auto in = sens::parse_umv("01\n10\n\n10\n10\n");
    EXPECT_TRUE(in.M.at(0, 1));
    EXPECT_FALSE(in.M.at(0, 0));
    EXPECT_EQ(sens::parse_umv(sens::write_umv(in)).M.bits, in.M.bits);
    EXPECT_THROW(sens::parse_umv("01\n1\n\n10\n10\n"), sens::Error);
    EXPECT_THROW(sens::parse_umv("01\n10\n\n101\n10\n"), sens::Error);
}

TEST(Brute, Triangle) {
    EXPECT_EQ(sens::brute_triangle(complete(3)), (std::array<Vertex, 3>{0, 1, 2}));
    EXPECT_FALSE(sens::brute_triangle(cycle(4)));
    EXPECT_FALSE(sens::brute_triangle(Graph(3)));
    const auto part = sens::triangle_participants(sens::parse_graph("4 4 undirected unweighted\n0 1\n1 2\n2 0\n2 3"));
    EXPECT_EQ(part, (std::vector<bool>{true, true, true, false}));
}

TEST(Brute, NegativeTriangle) {
    sens::NegTriangleInput pos(3);
    for (auto* m : {&pos.xy, &pos.yz, &pos.xz}) {
        std::fill(m->begin(), m->end(), 1);
    }
    EXPECT_FALSE(sens::brute_negative_triangle(pos));
    const auto neg = sens::parse_negtri("1\n\n1\n\n-3\n");
    EXPECT_EQ(sens::brute_negative_triangle(neg), (std::array<std::size_t, 3>{0, 0, 0}));
}

TEST(Brute, Sat) {
    EXPECT_FALSE(sens::brute_sat(sens::parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")));
    const auto f = sens::parse_dimacs("p cnf 2 1\n1 2 0\n");
    const auto a = sens::brute_sat(f);
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, 1u);  // smallest satisfying assignment: x1 true
    EXPECT_TRUE(sens::brute_sat(sens::Cnf{3, {}}));
}

TEST(Brute, UmvMatchesReversedLoops) {
    sens::Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto in = sens::gen_umv(1 + rng.index(8), 1 + rng.index(8), rng.unit(), rng);
        bool reversed = false;
        for (std::size_t j = in.M.cols; j-- > 0;) {
            for (std::size_t i = in.M.rows; i-- > 0;) {
                reversed = reversed || (in.u[i] && in.M.at(i, j) && in.v[j]);
            }
        }
        ASSERT_EQ(sens::brute_umv(in.M, in.u, in.v), reversed);
    }
}

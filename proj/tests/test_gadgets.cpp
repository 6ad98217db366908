#include <doctest.h>

#include "homcut/gadgets.hpp"
#include "test_helpers.hpp"

using namespace homcut;
using namespace testutil;

TEST_SUITE_BEGIN("gadgets");

TEST_CASE("block shapes and Euler characteristics") {
    Fragment d3 = block_disk3();
    CHECK(d3.triangles.size() == 4);
    SimplicialComplex K3 = d3.complex();
    CHECK(K3.skeleton(0).size() == 6);
    CHECK(K3.skeleton(1).size() == 12);
    CHECK(6 - 12 + 4 == -2);

    Fragment dc = block_double_collar();
    CHECK(dc.triangles.size() == 12);
    SimplicialComplex Kc = dc.complex();
    CHECK(Kc.skeleton(0).size() == 9);
    CHECK(Kc.skeleton(1).size() == 21);
    CHECK(9 - 21 + 12 == 0);

    Fragment m = block_main();
    CHECK(m.triangles.size() == 16);
    SimplicialComplex Km = m.complex();
    CHECK(Km.skeleton(0).size() == 12);
    CHECK(Km.skeleton(1).size() == 30);
}

TEST_CASE("disk3: outer class has a 2-edge minimum cut") {
    Fragment d3 = block_disk3();
    SimplicialComplex K = d3.complex();
    Chain<Rat> gamma = d3.outer_chain();
    auto cert = mhc_bruteforce<Rat>(K, gamma, 1, 3);
    REQUIRE(cert.found);
    CHECK(cert.size == 2);
    CHECK(is_cut<Rat>(K, gamma, cert.witness, 1));
}

TEST_CASE("double collar: 5-edge minimum cut through any outer/inner pair") {
    Fragment dc = block_double_collar();
    SimplicialComplex K = dc.complex();
    Chain<Rat> gamma = dc.outer_chain();
    auto cert = mhc_bruteforce<Rat>(K, gamma, 1, 5);
    REQUIRE(cert.found);
    CHECK(cert.size == 5);

    // any prescribed outer edge together with any prescribed inner edge
    const auto& inner = dc.holes[0].second;
    for (int oi = 0; oi < 3; ++oi) {
        for (int ii = 0; ii < 3; ++ii) {
            std::vector<int> o{dc.outer[static_cast<size_t>(oi)],
                               dc.outer[static_cast<size_t>((oi + 1) % 3)]};
            std::vector<int> in{inner[static_cast<size_t>(ii)],
                                inner[static_cast<size_t>((ii + 1) % 3)]};
            std::sort(o.begin(), o.end());
            std::sort(in.begin(), in.end());
            auto constrained =
                mhc_bruteforce<Rat>(K, gamma, 1, 5, {Simplex(o), Simplex(in)});
            REQUIRE(constrained.found);
            CHECK(constrained.size == 5);
        }
    }
}

TEST_CASE("main block: 6-edge minimum cut, any outer edge admissible") {
    Fragment m = block_main();
    SimplicialComplex K = m.complex();
    Chain<Rat> gamma = m.outer_chain();
    auto none_smaller = mhc_bruteforce<Rat>(K, gamma, 1, 5);
    CHECK(!none_smaller.found);
    auto exact = mhc_exact_cutgen<Rat>(K, gamma, 1);
    REQUIRE(exact.found);
    CHECK(exact.size == 6);
    CHECK(is_cut<Rat>(K, gamma, exact.witness, 1));

    for (int oi = 0; oi < 3; ++oi) {
        std::vector<int> o{m.outer[static_cast<size_t>(oi)],
                           m.outer[static_cast<size_t>((oi + 1) % 3)]};
        std::sort(o.begin(), o.end());
        auto constrained = mhc_exact_cutgen<Rat>(K, gamma, 1, {Simplex(o)});
        REQUIRE(constrained.found);
        CHECK(constrained.size == 6);
    }
}

TEST_CASE("per-element surfaces have cuts of size c + 2") {
    // k = 1: the surface degenerates to the double collar, cut 5 = 3 + 2
    Fragment lu1 = build_Lu({0}, 1);
    CHECK(lu1.triangles.size() == 12);
    {
        SimplicialComplex K = lu1.complex();
        Chain<Rat> gamma = lu1.outer_chain();
        auto none = mhc_bruteforce<Rat>(K, gamma, 1, 4);
        CHECK(!none.found);
        auto exact = mhc_exact_cutgen<Rat>(K, gamma, 1);
        CHECK(exact.size == 5);
    }

    // k = 3 with three containing sets: cut 10 = 5*1 + 5
    Fragment lu3 = build_Lu({0, 1, 2}, 3);
    {
        SimplicialComplex K = lu3.complex();
        Chain<Rat> gamma = lu3.outer_chain();
        auto exact = mhc_exact_cutgen<Rat>(K, gamma, 1);
        REQUIRE(exact.found);
        CHECK(exact.size == 10);
        CHECK(is_cut<Rat>(K, gamma, exact.witness, 1));

        // exactly one outer edge and one edge of exactly one set circle
        std::set<Simplex> outer_edges, set_edges;
        for (const auto& [s, c] : lu3.outer_chain().terms()) outer_edges.insert(s);
        std::map<int, int> per_set;
        for (const auto& [label, circ] : lu3.holes) {
            for (int i = 0; i < 3; ++i) {
                std::vector<int> e{circ[static_cast<size_t>(i)],
                                   circ[static_cast<size_t>((i + 1) % 3)]};
                std::sort(e.begin(), e.end());
                set_edges.insert(Simplex(e));
            }
            per_set[label] = 0;
        }
        int outer_hits = 0, set_hits = 0;
        for (const Simplex& w : exact.witness) {
            if (outer_edges.count(w)) ++outer_hits;
            if (set_edges.count(w)) ++set_hits;
        }
        CHECK(outer_hits == 1);
        CHECK(set_hits == 1);
    }

    // k = 2: same constant as k = 3
    Fragment lu2 = build_Lu({0, 1}, 2);
    {
        SimplicialComplex K = lu2.complex();
        auto exact = mhc_exact_cutgen<Rat>(K, lu2.outer_chain(), 1);
        CHECK(exact.size == 10);
    }
}

TEST_CASE("x3c search utilities") {
    X3CInstance one{{1, 2, 3}, {{{1, 2, 3}}}};
    CHECK(x3c_solvable(one));
    CHECK(x3c_min_cover(one) == 1);
    CHECK(x3c_max_multiplicity(one) == 1);
    CHECK(gadget_cut_constant(1) == 3);
    CHECK(gadget_cut_constant(2) == 8);
    CHECK(gadget_cut_constant(3) == 8);
    CHECK(gadget_cut_constant(4) == 13);
    CHECK(gadget_cut_bound(one) == 11);

    X3CInstance solvable6{{1, 2, 3, 4, 5, 6},
                          {{{1, 2, 3}}, {{4, 5, 6}}, {{1, 2, 4}}}};
    CHECK(x3c_solvable(solvable6));
    CHECK(x3c_max_multiplicity(solvable6) == 2);
    CHECK(gadget_cut_bound(solvable6) == 8 * 6 + 2 + 1);

    X3CInstance unsolvable6{{1, 2, 3, 4, 5, 6},
                            {{{1, 2, 3}}, {{1, 4, 5}}, {{1, 2, 6}}}};
    CHECK(!x3c_solvable(unsolvable6));
    CHECK(x3c_min_cover(unsolvable6) == 3);
}

TEST_CASE("glued complex of the single-set instance") {
    X3CInstance inst{{1, 2, 3}, {{{1, 2, 3}}}};
    GadgetComplex g = build_x3c_complex(inst);
    CHECK(g.k == 1);
    CHECK(g.c == 3);
    CHECK(g.complex.skeleton(2).size() == 36);
    CHECK(g.complex.skeleton(1).size() == 51);
    CHECK(g.complex.skeleton(0).size() == 15);

    // orientation bookkeeping: the fundamental chain of each surface bounds
    // its outer circle plus its set circles
    for (int u : inst.universe) {
        Chain<Rat> expect = g.outer_cycle;
        expect += g.set_cycles.at(0);
        CHECK(boundary(g.fundamental.at(u)) == expect);
    }

    // simplex count stays within the linear-in-instance-size budget
    CHECK(g.complex.skeleton(2).size() <= 64 * inst.universe.size() * inst.sets.size());
}

TEST_CASE("a global cut restricts to per-element cuts") {
    X3CInstance inst{{1, 2, 3}, {{{1, 2, 3}}}};
    GadgetComplex g = build_x3c_complex(inst);
    std::mt19937 rng(401);
    const auto& edges = g.complex.skeleton(1);
    std::uniform_int_distribution<size_t> pe(0, edges.size() - 1);
    int restricted_checks = 0;
    for (int trial = 0; trial < 60; ++trial) {
        std::set<Simplex> cset;
        std::uniform_int_distribution<int> szd(1, 12);
        int sz = szd(rng);
        while (static_cast<int>(cset.size()) < sz) cset.insert(edges[pe(rng)]);
        std::vector<Simplex> C(cset.begin(), cset.end());
        if (!is_cut<Rat>(g.complex, g.gamma, C, 1)) continue;
        for (int u : inst.universe) {
            SimplicialComplex sub = per_u_subcomplex(g, u);
            std::vector<Simplex> Cu;
            for (const Simplex& e : C)
                if (sub.contains(e)) Cu.push_back(e);
            CHECK(is_cut<Rat>(sub, g.outer_cycle, Cu, 1));
            ++restricted_checks;
        }
    }
    // random sets rarely cut; the recipe cut below exercises the branch too
    GadgetComplex g2 = build_x3c_complex(inst);
    const Simplex e_gamma = g2.outer_cycle.terms().begin()->first;
    const Simplex e_set = g2.set_cycles.at(0).terms().begin()->first;
    std::set<Simplex> recipe;
    for (int u : inst.universe) {
        SimplicialComplex sub = per_u_subcomplex(g2, u);
        auto cu = mhc_exact_cutgen<Rat>(sub, g2.outer_cycle, 1, {e_gamma, e_set});
        REQUIRE(cu.found);
        CHECK(cu.size == g2.c + 2);
        for (const Simplex& s : cu.witness) recipe.insert(s);
    }
    std::vector<Simplex> C(recipe.begin(), recipe.end());
    CHECK(static_cast<int>(C.size()) == gadget_cut_bound(inst));
    CHECK(is_cut<Rat>(g2.complex, g2.gamma, C, 1));
    for (int u : inst.universe) {
        SimplicialComplex sub = per_u_subcomplex(g2, u);
        std::vector<Simplex> Cu;
        for (const Simplex& e : C)
            if (sub.contains(e)) Cu.push_back(e);
        CHECK(is_cut<Rat>(sub, g2.outer_cycle, Cu, 1));
        ++restricted_checks;
    }
    CHECK(restricted_checks >= 3);
}

TEST_CASE("element missing from every set is rejected") {
    X3CInstance bad{{1, 2, 3, 4, 5, 6}, {{{1, 2, 3}}}};
    CHECK_THROWS_AS(build_x3c_complex(bad), error);
}

TEST_SUITE_END();

#include <doctest.h>

#include "test_helpers.hpp"

using namespace homcut;
using namespace testutil;

TEST_SUITE_BEGIN("persistence");

TEST_CASE("reduce: two vertices and an edge") {
    Filtration f;
    f.order = {Simplex{0}, Simplex{1}, Simplex{0, 1}};
    Barcode bc = reduce(f, FieldTag::GF2);
    auto h0 = bc.in_dim(0);
    REQUIRE(h0.size() == 2);
    CHECK(h0[0].birth_index == 0);
    CHECK(!h0[0].finite());
    CHECK(h0[1].birth_index == 1);
    CHECK(h0[1].death_index == 2);
}

TEST_CASE("reduce: hollow and closed triangle") {
    Filtration hollow = dimension_order_filtration(hollow_triangle());
    Barcode b1 = reduce(hollow, FieldTag::GF2);
    auto h1 = b1.in_dim(1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].birth_index == 5);
    CHECK(!h1[0].finite());

    Filtration closed = dimension_order_filtration(closed_triangle());
    Barcode b2 = reduce(closed, FieldTag::Rational);
    auto h1c = b2.in_dim(1);
    REQUIRE(h1c.size() == 1);
    CHECK(h1c[0].birth_index == 5);
    CHECK(h1c[0].death_index == 6);
}

TEST_CASE("reduce agrees with the rank-function barcode on random filtrations") {
    std::mt19937 rng(11);
    for (int it = 0; it < 12; ++it) {
        SimplicialComplex K = random_complex(rng, 5, 0.6, 0.6);
        Filtration f = random_filtration(rng, K);
        for (int p = 0; p <= 1; ++p) {
            auto naive = barcode_via_ranks<F2>(f, p);
            std::vector<std::pair<int, int>> fast;
            for (const Bar& b : reduce(f, FieldTag::GF2).in_dim(p))
                fast.emplace_back(b.birth_index, b.death_index);
            std::sort(fast.begin(), fast.end());
            CHECK(naive == fast);
        }
    }
}

TEST_CASE("index barcodes agree over GF(2) and the rationals on the corpus") {
    std::mt19937 rng(13);
    for (int it = 0; it < 10; ++it) {
        SimplicialComplex K = random_complex(rng, 5, 0.6, 0.5);
        Filtration f = random_filtration(rng, K);
        auto a = reduce(f, FieldTag::GF2);
        auto b = reduce(f, FieldTag::Rational);
        REQUIRE(a.bars.size() == b.bars.size());
        for (size_t i = 0; i < a.bars.size(); ++i) {
            CHECK(a.bars[i].birth_index == b.bars[i].birth_index);
            CHECK(a.bars[i].death_index == b.bars[i].death_index);
        }
    }
}

TEST_CASE("Euler consistency along random filtrations") {
    std::mt19937 rng(17);
    for (int it = 0; it < 8; ++it) {
        SimplicialComplex K = random_complex(rng, 5, 0.5, 0.5);
        Filtration f = random_filtration(rng, K);
        Barcode bc = reduce(f, FieldTag::GF2);
        for (size_t i = 0; i < f.size(); ++i) {
            int euler_bars = 0;
            for (const Bar& b : bc.bars) {
                bool alive = b.birth_index <= static_cast<int>(i) &&
                             (!b.finite() || b.death_index > static_cast<int>(i));
                if (alive) euler_bars += (b.dim % 2 == 0) ? 1 : -1;
            }
            int euler_cells = 0;
            for (size_t j = 0; j <= i; ++j)
                euler_cells += (f.order[j].dim() % 2 == 0) ? 1 : -1;
            CHECK(euler_bars == euler_cells);
        }
    }
}

TEST_CASE("image_membership basic contracts") {
    // z in L itself
    SimplicialComplex annulus = build_complex({{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5},
                                               {0, 2, 5}, {0, 3, 5}});
    SimplicialComplex inner = build_complex({{0, 1}, {1, 2}, {0, 2}});
    auto z = circle_chain<Rat>({0, 1, 2});
    CHECK(image_membership<Rat>(annulus, inner, z, 1));

    // boundary in K with L empty
    SimplicialComplex tri = closed_triangle();
    auto circ = circle_chain<Rat>({0, 1, 2});
    CHECK(image_membership<Rat>(tri, SimplicialComplex{}, circ, 1));

    // hollow triangle, L = one edge: class does not come from L
    SimplicialComplex hollow = hollow_triangle();
    SimplicialComplex oneedge = build_complex({{0, 1}});
    auto zc = circle_chain<F2>({0, 1, 2});
    CHECK(!image_membership<F2>(hollow, oneedge, zc, 1));
    // cross-check by explicit span enumeration over GF(2)
    std::vector<Chain<F2>> gens; // Z_1(L) is trivial; B_1(K) is trivial
    CHECK(!in_span_gf2_enumerated(gens, zc));

    // the zero cycle represents the zero class, always present
    CHECK(image_membership<F2>(hollow, oneedge, Chain<F2>(1), 1));
}

TEST_CASE("image_membership: K into K and boundaries") {
    std::mt19937 rng(23);
    for (int it = 0; it < 10; ++it) {
        SimplicialComplex K = random_complex(rng, 5, 0.6, 0.6);
        Filtration f = random_filtration(rng, K);
        Barcode bc = reduce(f, FieldTag::GF2);
        for (const Bar& b : bc.in_dim(1)) {
            if (!b.finite()) continue;
            Chain<F2> z = boundary<F2>(f.order[static_cast<size_t>(b.death_index)]);
            CHECK(image_membership<F2>(K, K, z, 1));
            // z is a boundary in K, so membership holds even from the empty
            // subcomplex
            CHECK(image_membership<F2>(K, SimplicialComplex{}, z, 1));
        }
    }
}

TEST_CASE("induced matching: identity and the closed/hollow triangle pair") {
    Filtration closed = dimension_order_filtration(closed_triangle());
    auto idm = induced_matching(closed, closed, 1);
    // L = K: every bar is matched to itself
    CHECK(idm.matching.pairs.size() == idm.source.in_dim(1).size());

    Filtration hollow = dimension_order_filtration(hollow_triangle());
    auto m = induced_matching(hollow, closed, 1);
    REQUIRE(m.matching.pairs.size() == 1);
    const Bar& src = m.source.bars[m.matching.pairs[0].first];
    const Bar& tgt = m.target.bars[m.matching.pairs[0].second];
    CHECK(src.dim == 1);
    CHECK(!src.finite());
    CHECK(tgt.death_index == 6); // the filling triangle
}

TEST_CASE("induced matching: vertex deletions from a discrete complex") {
    // K = three isolated vertices; L = two of them
    Filtration fK;
    fK.order = {Simplex{0}, Simplex{1}, Simplex{2}};
    Filtration fL;
    fL.order = {Simplex{0}, Simplex{1}};
    auto m = induced_matching(fL, fK, 0);
    REQUIRE(m.matching.pairs.size() == 2);
    for (auto [l, k] : m.matching.pairs) {
        CHECK(m.source.bars[l].birth_index <= 1);
        CHECK(m.target.bars[k].birth_simplex == m.source.bars[l].birth_simplex);
    }
}

TEST_CASE("induced matching contract on random restrictions") {
    std::mt19937 rng(31);
    int done = 0;
    for (int it = 0; it < 40 && done < 15; ++it) {
        SimplicialComplex K = random_complex(rng, 6, 0.5, 0.5);
        Filtration fK = random_filtration(rng, K);
        // delete a random vertex
        std::uniform_int_distribution<int> pick(0, K.vertex_count() - 1);
        Simplex v = K.skeleton(0)[static_cast<size_t>(pick(rng))];
        Filtration fL = restrict_filtration(fK, {v});
        if (fL.order.empty()) continue;
        ++done;
        for (int p = 0; p <= 1; ++p) {
            auto m = induced_matching(fL, fK, p);
            std::set<size_t> seen_l, seen_k;
            for (auto [l, k] : m.matching.pairs) {
                CHECK(seen_l.insert(l).second); // injective
                CHECK(seen_k.insert(k).second);
                const Bar& src = m.source.bars[l];
                const Bar& tgt = m.target.bars[k];
                // target birth precedes source birth; bars overlap
                int src_birth_k = fK.position_of(src.birth_simplex);
                CHECK(tgt.birth_index <= src_birth_k);
                if (tgt.finite()) {
                    CHECK(src_birth_k < tgt.death_index);
                    if (src.finite()) {
                        int src_death_k = fK.position_of(*src.death_simplex);
                        CHECK(tgt.death_index <= src_death_k);
                    }
                } else {
                    CHECK(!src.finite());
                }
            }
        }
    }
    CHECK(done >= 10);
}

TEST_SUITE_END();

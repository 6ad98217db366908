#include "homcut/instances.hpp"

#include <algorithm>

namespace homcut {

namespace {

Chain<Rat> walk_chain_ids(const std::vector<int>& walk) {
    Chain<Rat> z(1);
    for (size_t i = 0; i < walk.size(); ++i) {
        int u = walk[i], v = walk[(i + 1) % walk.size()];
        if (u < v)
            z.add(Simplex{u, v}, Rat(1));
        else
            z.add(Simplex{v, u}, Rat(-1));
    }
    return z;
}

} // namespace

EmbeddedComplex grid_complex(int nx, int ny, const std::set<std::pair<int, int>>& holes) {
    auto id = [nx](int x, int y) { return y * nx + x; };
    std::vector<std::vector<int>> gens;
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) gens.push_back({id(x, y)});
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x + 1 < nx; ++x) gens.push_back({id(x, y), id(x + 1, y)});
    for (int x = 0; x < nx; ++x)
        for (int y = 0; y + 1 < ny; ++y) gens.push_back({id(x, y), id(x, y + 1)});
    for (int x = 0; x + 1 < nx; ++x)
        for (int y = 0; y + 1 < ny; ++y) {
            if (holes.count({x, y})) continue;
            gens.push_back({id(x, y), id(x + 1, y), id(x + 1, y + 1)});
            gens.push_back({id(x, y), id(x, y + 1), id(x + 1, y + 1)});
        }
    EmbeddedComplex E;
    E.complex = build_complex(gens);
    for (int y = 0; y < ny; ++y)
        for (int x = 0; x < nx; ++x) E.coords.emplace(id(x, y), Point2{Rat(x), Rat(y)});
    return E;
}

Chain<Rat> grid_square_cycle(int nx, int x, int y) {
    auto id = [nx](int xx, int yy) { return yy * nx + xx; };
    return walk_chain_ids({id(x, y), id(x, y + 1), id(x + 1, y + 1), id(x + 1, y)});
}

TwoHoleGrid two_hole_grid() {
    TwoHoleGrid g;
    g.E = grid_complex(6, 4, {{1, 1}, {3, 1}});
    g.c_left = grid_square_cycle(6, 1, 1);
    g.c_right = grid_square_cycle(6, 3, 1);
    auto id = [](int x, int y) { return y * 6 + x; };
    g.C1 = {Simplex{id(1, 2), id(2, 2)}, Simplex{id(1, 2), id(2, 3)},
            Simplex{id(1, 3), id(2, 3)}};
    g.C2 = {Simplex{id(2, 1), id(2, 2)}, Simplex{id(2, 1), id(3, 2)},
            Simplex{id(3, 1), id(3, 2)}};
    for (const Simplex& s : g.C1)
        if (!g.E.complex.contains(s)) fail(errc::internal, "C1 edge missing from the grid");
    for (const Simplex& s : g.C2)
        if (!g.E.complex.contains(s)) fail(errc::internal, "C2 edge missing from the grid");
    RegionDecomposition R = complement_regions(g.E);
    g.left_hole_region = locate_region(g.E, R, Point2{Rat(3, 2), Rat(3, 2)});
    g.right_hole_region = locate_region(g.E, R, Point2{Rat(7, 2), Rat(3, 2)});
    return g;
}

Filtration two_hole_grid_killer_filtration() {
    TwoHoleGrid g = two_hole_grid();
    Filtration f;
    for (int d = 0; d <= g.E.complex.dim(); ++d)
        for (const Simplex& s : g.E.complex.skeleton(d)) f.order.push_back(s);
    auto id = [](int x, int y) { return y * 6 + x; };
    f.order.push_back(Simplex{id(1, 1), id(2, 2)});
    f.order.push_back(Simplex{id(1, 1), id(1, 2), id(2, 2)});
    f.order.push_back(Simplex{id(1, 1), id(2, 1), id(2, 2)});
    return f;
}

GapInstance duality_gap_instance() {
    // Vertex table of the figure, coordinates scaled by 10.
    struct V {
        const char* name;
        int x, y;
    };
    static const V table[] = {
        {"A00", -30, 10}, {"A0", -20, 10}, {"A1", -10, 10}, {"A2", 0, 10},   {"A3", 10, 10},
        {"Aex", 20, 10},  {"A4", 34, 10},  {"A5", 50, 10},  {"B00", -30, 20}, {"B0", -20, 20},
        {"B1", -10, 20},  {"B2", 0, 20},   {"B3", 10, 20},  {"B4", 20, 20},  {"B5", 34, 20},
        {"B6", 43, 20},   {"B7", 50, 20},  {"B8", 57, 20},  {"C00", -30, 30}, {"C0", -20, 30},
        {"C2", 0, 30},    {"C3", 10, 30},  {"C4", 20, 30},  {"C5", 27, 30},  {"C6", 50, 30},
        {"D00", -30, 40}, {"D0", -20, 40}, {"D1", -10, 40}, {"D2", 0, 40},   {"D3", 10, 40},
        {"D4", 20, 40},   {"D5", 34, 40},  {"D6", 43, 40},  {"D7x", 50, 40}, {"D7", 57, 40},
        {"E00", -30, 50}, {"E0", -20, 50}, {"E1", -10, 50}, {"E2", 0, 50},   {"E3", 10, 50},
        {"E4", 20, 50},   {"E5", 34, 50},  {"E6", 50, 50},
    };
    std::map<std::string, int> id;
    EmbeddedComplex E0;
    std::vector<std::vector<int>> gens;
    for (const V& v : table) {
        int i = static_cast<int>(id.size());
        id[v.name] = i;
        E0.coords.emplace(i, Point2{Rat(v.x), Rat(v.y)});
        gens.push_back({i});
    }
    static const char* edge_list[][2] = {
        // bottom, left column, top, right column, zigzag
        {"A00", "A0"}, {"A0", "A1"}, {"A1", "A2"}, {"A2", "A3"}, {"A3", "Aex"}, {"Aex", "A4"},
        {"A4", "A5"}, {"A00", "B00"}, {"B00", "C00"}, {"C00", "D00"}, {"D00", "E00"},
        {"E00", "E0"}, {"E0", "E1"}, {"E1", "E2"}, {"E2", "E3"}, {"E3", "E4"}, {"E4", "E5"},
        {"E5", "E6"}, {"A5", "B7"}, {"B7", "C6"}, {"C6", "D7x"}, {"D7x", "E6"}, {"A5", "B8"},
        {"B8", "C6"}, {"C6", "D7"}, {"D7", "E6"},
        // middle rows
        {"B0", "B1"}, {"B1", "B2"}, {"B2", "B3"}, {"B3", "B4"}, {"B4", "B5"}, {"B5", "B6"},
        {"B6", "B7"}, {"B7", "B8"}, {"C0", "C00"}, {"C2", "C3"}, {"C3", "C4"}, {"C4", "C5"},
        {"D0", "D1"}, {"D1", "D2"}, {"D2", "D3"}, {"D3", "D4"}, {"D4", "D5"}, {"D5", "D6"},
        {"D6", "D7x"}, {"D7x", "D7"},
        // fans at B0, C0, D0
        {"B0", "B00"}, {"B0", "A00"}, {"B0", "A0"}, {"B0", "A1"}, {"B0", "C00"}, {"B0", "C0"},
        {"C0", "B1"}, {"C0", "D00"}, {"C0", "D0"}, {"C0", "D1"}, {"D0", "D00"}, {"D0", "E00"},
        {"D0", "E0"}, {"D0", "E1"},
        // verticals
        {"A1", "B1"}, {"A2", "B2"}, {"A3", "B3"}, {"Aex", "B4"}, {"A4", "B5"}, {"B2", "C2"},
        {"B3", "C3"}, {"B4", "C4"}, {"C2", "D2"}, {"C3", "D3"}, {"C4", "D4"}, {"D1", "E1"},
        {"D2", "E2"}, {"D3", "E3"}, {"D4", "E4"}, {"D5", "E5"},
        // diagonals
        {"A2", "B1"}, {"A3", "B2"}, {"A3", "B4"}, {"A4", "B4"}, {"A4", "B6"}, {"A5", "B6"},
        {"B1", "C2"}, {"B3", "C2"}, {"B3", "C4"}, {"B4", "C5"}, {"B5", "C5"}, {"B6", "C6"},
        {"C2", "D1"}, {"C3", "D2"}, {"C4", "D3"}, {"C5", "D4"}, {"C5", "D5"}, {"C6", "D6"},
        {"D1", "E2"}, {"D2", "E3"}, {"D3", "E4"}, {"D4", "E5"}, {"E5", "D6"}, {"D6", "E6"},
    };
    for (auto& e : edge_list) gens.push_back({id.at(e[0]), id.at(e[1])});
    E0.complex = build_complex(gens);

    // Fill every bounded triangular face; exactly the two holes remain.
    RegionDecomposition R0 = complement_regions(E0);
    std::vector<std::vector<int>> filled = gens;
    int nontriangles = 0;
    for (size_t r = 0; r < R0.regions.size(); ++r) {
        if (!R0.regions[r].bounded) continue;
        const auto& bd = R0.regions[r].boundary;
        if (bd.support_size() == 3) {
            std::set<int> vs;
            for (const auto& [sx, c] : bd.terms()) {
                vs.insert(sx[0]);
                vs.insert(sx[1]);
            }
            filled.push_back(std::vector<int>(vs.begin(), vs.end()));
        } else {
            ++nontriangles;
        }
    }
    if (nontriangles != 2) fail(errc::internal, "transcription: expected exactly two holes");

    GapInstance g;
    g.E.coords = E0.coords;
    g.E.complex = build_complex(filled);
    g.left_hole_point = Point2{Rat(-10), Rat(30)};
    g.right_hole_point = Point2{Rat(38), Rat(30)};

    std::vector<int> walk;
    for (const char* name : {"A3", "B3", "C4", "D4", "E5", "E6", "D7", "C6", "B8", "A5",
                             "A4", "B5", "C5", "D5", "D6", "C6", "B6", "B5", "B4", "C4",
                             "D3", "E3", "E2", "E1", "E0", "E00", "D00", "C00", "B00", "A00",
                             "A0", "A1", "A2"})
        walk.push_back(id.at(name));
    g.c = walk_chain_ids(walk);
    if (!is_cycle(g.c) || !supported_on(g.c, g.E.complex))
        fail(errc::internal, "transcription: marked cycle is not a cycle of the complex");
    return g;
}

int locate_region(const EmbeddedComplex& E, const RegionDecomposition& R, const Point2& p) {
    for (size_t r = 0; r < R.regions.size(); ++r) {
        if (!R.regions[r].bounded) continue;
        if (sgn(winding_number(R.regions[r].boundary, E, p)) != 0) return static_cast<int>(r);
    }
    return R.unbounded;
}

Annulus hex_annulus() {
    Annulus a;
    // inner triangle 0,1,2; outer triangle 3,4,5
    a.E.complex = build_complex(
        {{0, 1, 3}, {1, 3, 4}, {1, 2, 4}, {2, 4, 5}, {0, 2, 5}, {0, 3, 5}});
    a.E.coords.emplace(0, Point2{Rat(-1), Rat(-1)});
    a.E.coords.emplace(1, Point2{Rat(1), Rat(-1)});
    a.E.coords.emplace(2, Point2{Rat(0), Rat(1)});
    a.E.coords.emplace(3, Point2{Rat(-4), Rat(-3)});
    a.E.coords.emplace(4, Point2{Rat(4), Rat(-3)});
    a.E.coords.emplace(5, Point2{Rat(0), Rat(4)});
    a.core = walk_chain_ids({0, 1, 2});
    return a;
}

} // namespace homcut

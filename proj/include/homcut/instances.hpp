#pragma once

#include <set>

#include "homcut/embed.hpp"

namespace homcut {

// Axis-aligned triangulated grid strip: vertices at integer coordinates
// (x, y), 0 <= x < nx, 0 <= y < ny; every unit square not listed in `holes`
// is split by its (x,y)-(x+1,y+1) diagonal. Vertex id = y*nx + x.
EmbeddedComplex grid_complex(int nx, int ny, const std::set<std::pair<int, int>>& holes);

// Walk x0,y0 -> up -> right -> down -> left around a unit square, as drawn
// in the running two-hole example.
Chain<Rat> grid_square_cycle(int nx, int x, int y);

// The 6x4 two-hole grid with its marked cycles and the two dashed edge sets.
struct TwoHoleGrid {
    EmbeddedComplex E;
    Chain<Rat> c_left, c_right;
    std::vector<Simplex> C1, C2;
    int left_hole_region = -1, right_hole_region = -1; // indices for a fresh decomposition
};
TwoHoleGrid two_hole_grid();

// Simplex-wise filtration of the grid followed by a diagonal and the two
// triangles filling the left hole; the last triangle's bar has the left
// cycle's class at its predeath complex.
Filtration two_hole_grid_killer_filtration();

// The duality-gap instance: two holes, a marked cycle winding once around
// the left hole and twice around the right one.
struct GapInstance {
    EmbeddedComplex E;
    Chain<Rat> c;
    Point2 left_hole_point, right_hole_point;
};
GapInstance duality_gap_instance();

// Region containing p: bounded region index, or R.unbounded.
int locate_region(const EmbeddedComplex& E, const RegionDecomposition& R, const Point2& p);

// Hexagonal annulus: outer triangle ring around a triangular hole, six
// triangles; the standard small instance with minimum radial cut 3.
struct Annulus {
    EmbeddedComplex E;
    Chain<Rat> core; // inner boundary circle
};
Annulus hex_annulus();

} // namespace homcut

#pragma once

#include "homcut/cut.hpp"

namespace homcut {

// Exact cover by 3-sets instance.
struct X3CInstance {
    std::vector<int> universe;           // element ids
    std::vector<std::array<int, 3>> sets; // 3-element subsets of the universe
};

bool x3c_solvable(const X3CInstance& inst);
// Minimum cover size by exhaustive search, or -1 when no cover exists.
int x3c_min_cover(const X3CInstance& inst);

// max_u |{S : u in S}| and the per-surface cut constant 5*ceil(log3 k) + 3.
int x3c_max_multiplicity(const X3CInstance& inst);
int gadget_cut_constant(int k);
// c*|U| + |U|/3 + 1, the reduction's cut-size threshold.
int gadget_cut_bound(const X3CInstance& inst);

// Triangulated surface piece with labeled boundary circles. Circles are
// given as vertex triples; orientations are recovered from coherent
// fundamental chains when pieces are glued.
struct Fragment {
    std::vector<std::array<int, 3>> triangles;
    int nverts = 0;
    std::vector<int> outer;                                 // outer boundary circle
    std::vector<std::pair<int, std::vector<int>>> holes;    // (label, circle)

    SimplicialComplex complex() const;
    Chain<Rat> outer_chain() const; // some orientation of the outer circle
};

// Disk with three holes made of 4 triangles.
Fragment block_disk3();
// Two concentric triangulated rings, 12 triangles.
Fragment block_double_collar();
// The double collar glued around the disk with three holes, 16 triangles.
Fragment block_main();

// Per-element surface: ceil(log3 k) nested levels of the main block, one
// double collar per containing set, unused slots capped by a triangle.
// For k = 1 this degenerates to a single double collar.
Fragment build_Lu(const std::vector<int>& sets_containing_u, int k);

// The glued complex of an instance, with the shared outer circle's class as
// the target.
struct GadgetComplex {
    SimplicialComplex complex;
    Chain<Rat> gamma;                        // class of the common outer circle
    Chain<Rat> outer_cycle;                  // the circle itself
    std::map<int, Chain<Rat>> set_cycles;    // set index -> identified circle
    std::map<int, std::vector<Simplex>> per_u_triangles; // element -> its 2-simplices
    std::map<int, Chain<Rat>> fundamental;   // element -> oriented triangle chain
    int k = 1;
    int c = 3;
};

GadgetComplex build_x3c_complex(const X3CInstance& inst);

// Face closure of one element's triangles inside the glued complex.
SimplicialComplex per_u_subcomplex(const GadgetComplex& g, int u);

// Oriented closed-walk chain helper shared by the generators.
Chain<Rat> closed_walk_chain(const std::vector<int>& walk);

} // namespace homcut

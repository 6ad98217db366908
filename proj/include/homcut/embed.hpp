#pragma once

#include "homcut/cut.hpp"

namespace homcut {

struct Point2 {
    Rat x, y;
};

// Simplicial complex with an exact straight-line embedding in the plane.
struct EmbeddedComplex {
    SimplicialComplex complex;
    std::map<int, Point2> coords; // vertex id -> point

    const Point2& point(int v) const {
        auto it = coords.find(v);
        if (it == coords.end()) fail(errc::geometry, "vertex without coordinates");
        return it->second;
    }
};

// Components of the plane minus the realization, each with an oriented
// boundary 1-cycle (interior-on-the-left walks, whisker edges cancelled).
struct RegionDecomposition {
    struct Region {
        Chain<Rat> boundary;
        bool bounded = true;
    };
    std::vector<Region> regions;
    int unbounded = -1;
};

// Dual graph extended by one vertex per complement region. Vertex ids:
// [0, num_triangles) are the 2-simplices in skeleton order, then regions.
struct ExtendedDualGraph {
    struct Edge {
        int u, v;
        int one_simplex; // index into K^(1)
    };
    int num_triangles = 0;
    int num_regions = 0;
    int infinite_region = -1; // region index (not dual-vertex id)
    std::vector<Edge> edges;  // exactly one per 1-simplex, in skeleton order

    int region_vertex(int region_index) const { return num_triangles + region_index; }
};

// Exact embedding validation: pairwise simplex intersections must be common
// faces. Throws a geometry error with a description of the first violation.
void validate_embedding(const EmbeddedComplex& E);

RegionDecomposition complement_regions(const EmbeddedComplex& E);

ExtendedDualGraph extended_dual_graph(const EmbeddedComplex& E);

// Both of the above from a single traversal.
std::pair<RegionDecomposition, ExtendedDualGraph> analyze_embedding(const EmbeddedComplex& E);

// Coefficients alpha with [gamma] = sum alpha_i [xi_i] over the bounded
// regions (the unbounded region carries alpha = 0). Solved by exact
// elimination against the boundary space.
std::vector<Rat> express_in_region_basis(const EmbeddedComplex& E, const RegionDecomposition& R,
                                         const Chain<Rat>& gamma);

// Minimum homological edge cut of [gamma] via shortest dual paths between
// complement regions with differing coefficients.
CutCertificate mincut_embedded(const EmbeddedComplex& E, const Chain<Rat>& gamma);

// Steps 2-3 on a caller-supplied decomposition: the dual graph is
// reconstructed from coface counts and the boundary-cycle supports (isolated
// loops cannot be recovered this way and are dropped; they never lie on a
// shortest path).
CutCertificate mincut_from_regions(const SimplicialComplex& K, const RegionDecomposition& R,
                                   const Chain<Rat>& gamma);

// Robustness of a 1-dimensional bar of a filtration of E.complex, decided by
// the polynomial-time embedded algorithm on the predeath complex.
RobustnessVerdict robustness_embedded(const EmbeddedComplex& E, const Filtration& f,
                                      const Bar& bar, int k);

// Winding number of a 1-chain around a point off the support (exact).
Rat winding_number(const Chain<Rat>& z, const EmbeddedComplex& E, const Point2& p);

// A point in the interior of a bounded region (test support).
Point2 region_sample_point(const EmbeddedComplex& E, const RegionDecomposition& R, int region);

} // namespace homcut

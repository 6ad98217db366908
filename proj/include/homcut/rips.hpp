#pragma once

#include "homcut/persistence.hpp"

namespace homcut {

// Finite dissimilarity data with a precedence order on the points used for
// tie-breaking. The triangle inequality is not required (nothing here uses
// it); triangle_violations() reports offenders so callers can warn.
struct MetricData {
    int n = 0;
    std::vector<std::vector<double>> dist;
    std::vector<int> rank; // rank[i] = position of point i in the precedence order

    static MetricData from_matrix(std::vector<std::vector<double>> d);
    static MetricData from_points(const std::vector<std::vector<double>>& pts);

    double d(int a, int b) const { return dist[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int triangle_violations() const;
};

// Simplex-wise Rips filtration: simplices of dimension <= max_dim ordered by
// (diameter, dimension, lexicographic order under the precedence); grades
// are the diameters.
Filtration rips_filtration(const MetricData& X, int max_dim);

// d_H(X \ A, X) collapses to max over removed points of the distance to the
// nearest survivor; 0 for empty A.
double hausdorff_removal_distance(const MetricData& X, const std::vector<int>& A);

struct HeuristicResult {
    double H = 0;             // max over x of d(x, k-th nearest neighbor)
    int x_star = -1;          // maximizing point
    std::vector<int> neighbors; // its k nearest neighbors in order
    // two witness candidates for the maximizing deletion: the size-k set
    // {x*} + first k-1 neighbors (realizes H), and the k+1-point variant
    std::vector<int> witness_k;
    std::vector<int> witness_k_plus_1;
};

HeuristicResult hausdorff_heuristic(const MetricData& X, int k);
HeuristicResult hausdorff_heuristic_serial(const MetricData& X, int k);

struct CertifiedBars {
    std::vector<size_t> certified;   // indices into Barcode::bars
    std::vector<size_t> uncertified;
    std::vector<size_t> boundary_cases; // bars with length exactly H
};

// Bars longer than H are certified robust; equality stays uncertified and is
// flagged.
CertifiedBars certify_bars(const Barcode& bc, double H);

} // namespace homcut

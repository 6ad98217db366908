#pragma once

#include <optional>
#include <vector>

#include "homcut/simplex.hpp"

namespace homcut {

// Simplex-wise filtration: a total insertion order, optionally with
// non-decreasing real grades (one per simplex).
struct Filtration {
    std::vector<Simplex> order;
    std::optional<std::vector<double>> grades;

    size_t size() const { return order.size(); }

    // Complex formed by the first `count` insertions.
    SimplicialComplex prefix(size_t count) const;
    SimplicialComplex full_complex() const { return prefix(order.size()); }

    // Position of s in the order, or -1.
    int position_of(const Simplex& s) const;
};

struct FiltrationCheck {
    bool ok = true;
    int violating_index = -1; // first bad index when !ok
    std::string reason;
};

// ok iff every simplex appears after all its proper faces and grades
// (when present) are non-decreasing.
FiltrationCheck validate_filtration(const Filtration& f);

// Restriction of f to the simplices that survive deleting A (same
// relative order, grades carried along).
Filtration restrict_filtration(const Filtration& f, const std::vector<Simplex>& A);

} // namespace homcut

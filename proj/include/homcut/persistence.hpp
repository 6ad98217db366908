#pragma once

#include <limits>
#include <optional>

#include "homcut/chain.hpp"
#include "homcut/filtration.hpp"

namespace homcut {

constexpr int INF_INDEX = std::numeric_limits<int>::max();

struct Bar {
    int dim = 0;
    int birth_index = 0;
    int death_index = INF_INDEX; // INF_INDEX for essential bars
    Simplex birth_simplex;
    std::optional<Simplex> death_simplex;
    std::optional<double> birth_grade;
    std::optional<double> death_grade;

    bool finite() const { return death_index != INF_INDEX; }
    // Grade length r(tau) - r(sigma); infinity for essential bars.
    double grade_length() const {
        if (!finite()) return std::numeric_limits<double>::infinity();
        return (death_grade && birth_grade) ? *death_grade - *birth_grade
                                            : static_cast<double>(death_index - birth_index);
    }
};

struct Barcode {
    std::vector<Bar> bars; // sorted by (dim, birth_index)

    std::vector<Bar> in_dim(int p) const;
    // Unique bar with the given birth index, if any.
    const Bar* bar_born_at(int birth_index) const;
    const Bar* bar_dying_at(int death_index) const;
};

// Standard left-to-right boundary-matrix reduction of a simplex-wise
// filtration. Grades, when present, are copied onto the bars.
Barcode reduce(const Filtration& f, FieldTag field);

template <class K>
Barcode reduce_t(const Filtration& f);

// True iff [z] lies in the image of H_p(L) -> H_p(K), decided by exact
// elimination: z in span(Z_p(L) + B_p(K)) inside C_p(K).
template <class K>
bool image_membership(const SimplicialComplex& K_, const SimplicialComplex& L,
                      const Chain<K>& z, int p);

bool image_membership(const SimplicialComplex& K, const SimplicialComplex& L,
                      const Chain<F2>& z, int p, FieldTag);
bool image_membership(const SimplicialComplex& K, const SimplicialComplex& L,
                      const Chain<Rat>& z, int p, FieldTag);

// Partial matching between two barcodes; pairs index into the source and
// target bar arrays.
struct PartialMatching {
    std::vector<std::pair<size_t, size_t>> pairs; // (index into B(L), index into B(K))

    bool target_matched(size_t k_index) const {
        for (auto& [l, k] : pairs)
            if (k == k_index) return true;
        return false;
    }
    std::optional<size_t> target_of(size_t l_index) const {
        for (auto& [l, k] : pairs)
            if (l == l_index) return k;
        return std::nullopt;
    }
};

// Matching induced by the inclusion of filtrations fL into fK on
// H_p, computed oracle-style from the rank function of the image module
// (per-index-pair exact rank computations, then the surjective/injective
// composition). fL must be the restriction of fK to a subcomplex.
// Returned indices refer to reduce(fL) and reduce(fK) bars of dimension p
// as positioned in the full barcodes.
struct InducedMatchingResult {
    Barcode source; // barcode of fL (indices in fL positions)
    Barcode target; // barcode of fK
    PartialMatching matching;
};

InducedMatchingResult induced_matching(const Filtration& fL, const Filtration& fK, int p,
                                       FieldTag field = FieldTag::GF2);

// rank(H_p(K_i) -> H_p(K_j)) for a single filtration; the test-side naive
// barcode route is built on this.
template <class K>
int persistent_rank(const Filtration& f, int p, int i, int j);

// Barcode of one dimension computed purely from the rank function by
// inclusion-exclusion; independent of the reduction algorithm.
template <class K>
std::vector<std::pair<int, int>> barcode_via_ranks(const Filtration& f, int p);

} // namespace homcut

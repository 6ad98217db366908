#pragma once

#include <optional>

#include "homcut/persistence.hpp"

namespace homcut {

// Result of a minimum homological cut search.
struct CutCertificate {
    int s = 0;                           // degree of the cut simplices
    bool found = false;                  // a cut within the searched bound exists
    int size = -1;                       // witness size when found
    std::vector<Simplex> witness;        // the cut itself when found
    bool exhaustive = false;             // minimality proven (resp. nonexistence proven)
    int searched_up_to = 0;              // subsets of size <= this were covered
};

struct RobustnessVerdict {
    Bar bar;
    int s = 0;
    int k = 0;
    bool robust = false; // mhc > k, i.e. no cut of size <= k exists
    CutCertificate min_cut;
};

enum class CutStrategy { Bruteforce, H0, Embedded };

// True iff [gamma] leaves the image of H_p(K - C) -> H_p(K). Delegates to
// delete_set + image_membership. C = {} is never a cut.
template <class K>
bool is_cut(const SimplicialComplex& complex, const Chain<K>& gamma,
            const std::vector<Simplex>& C, int s);

// Exhaustive search over subsets of K^(s), cardinality-ascending and
// lexicographic within each size; the first cut found is the deterministic
// witness. Subsets are only searched up to max_size. required: simplices
// forced into every candidate (their count is included in the sizes).
template <class K>
CutCertificate mhc_bruteforce(const SimplicialComplex& complex, const Chain<K>& gamma, int s,
                              int max_size, const std::vector<Simplex>& required = {});

// Serial reference implementation; the OpenMP version must agree with it
// bit for bit.
template <class K>
CutCertificate mhc_bruteforce_serial(const SimplicialComplex& complex, const Chain<K>& gamma,
                                     int s, int max_size,
                                     const std::vector<Simplex>& required = {});

// Linear-time minimum vertex cut for 0-dimensional classes: the smallest
// connected component carrying a nonzero coefficient.
template <class K>
CutCertificate mhc_h0(const SimplicialComplex& complex, const std::map<Simplex, K>& coeffs);

// Exact minimum homological cut via incremental witness-cycle generation:
// alternately solve a minimum hitting set over the cycles collected so far
// and test it with is_cut; a failed test contributes a new surviving cycle.
// Exact for any s <= 1 class over the given field; intended for the larger
// structured instances where plain enumeration is hopeless.
template <class K>
CutCertificate mhc_exact_cutgen(const SimplicialComplex& complex, const Chain<K>& gamma, int s,
                                const std::vector<Simplex>& required = {},
                                int upper_bound_hint = -1);

// Predeath complex K_B of a finite bar together with the boundary of its
// death simplex as a cycle in K_B.
template <class K>
std::pair<SimplicialComplex, Chain<K>> predeath_complex(const Filtration& f, const Bar& bar);

// Adversarial robustness of a finite bar in degree s at level k (Def: no
// deletion of <= k s-simplices expels the bar from the induced matching,
// equivalently every homological s-cut of [boundary of death simplex] in the
// predeath complex has size > k).
RobustnessVerdict robustness(const Filtration& f, const Bar& bar, int s, int k, FieldTag field,
                             CutStrategy strategy, int max_size_override = -1);

// --- internal helpers exposed for tests and the embedded module ---

// Fast evaluation context for repeated is_cut queries against a fixed
// (complex, gamma, s) with p = dim(gamma) in {0, 1}: homology classes are
// tracked through a cocycle basis and spanning-forest potentials.
template <class K>
class CutOracle {
public:
    CutOracle(const SimplicialComplex& complex, const Chain<K>& gamma, int s);

    // Same verdict as is_cut on every input (ids into universe()).
    bool operator()(const std::vector<int>& cut_member_ids) const;

    // Members of K^(s) in the enumeration order used by mhc search.
    const std::vector<Simplex>& universe() const { return universe_; }

    // [gamma] = 0, in which case no cut exists at all.
    bool null_class() const;

    // A cycle in K - C homologous to gamma, if one exists (iff C is not a
    // cut). Only for 1-dimensional classes.
    std::optional<Chain<K>> surviving_cycle(const std::vector<int>& cut_member_ids) const;

private:
    bool p1_image_contains_gamma(const std::vector<char>& edge_dead,
                                 const std::vector<char>& vertex_dead,
                                 Chain<K>* witness_out) const;
    void rescale_cocycles();

    const SimplicialComplex& K_;
    Chain<K> gamma_;
    int s_ = 0;
    int p_ = 0;
    std::vector<Simplex> universe_;

    // shared 1-skeleton data (compact vertex indices)
    int nv_ = 0;
    std::vector<int> vid_;                              // compact index -> vertex id
    std::vector<std::pair<int, int>> edges_;            // by edge id
    std::vector<std::vector<std::pair<int, int>>> adj_; // vertex -> (neighbor, edge id)

    // p = 1 data: cocycle representatives of H^1 and their evaluations
    std::vector<std::vector<K>> cocycles_; // values per edge id
    std::vector<K> gamma_ev_;
    std::vector<uint64_t> mask_;                 // GF(2): packed cocycle bits per edge
    std::vector<std::vector<int64_t>> phi_int_;  // rationals: integer cocycle values
    bool int_ok_ = false;

    // p = 0 data
    std::vector<int> component_of_;
    std::vector<int> component_size_;
    std::vector<K> gamma_comp_;
};

} // namespace homcut

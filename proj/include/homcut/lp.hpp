#pragma once

#include "homcut/cut.hpp"
#include "homcut/instances.hpp"

namespace homcut {

// Cochains: simplex -> value, zero entries absent. V is double for LP
// witnesses and Rat for exact certificates.
template <class V>
struct Cochain {
    int dimension = 0;
    std::map<Simplex, V> values;

    V value(const Simplex& s) const {
        auto it = values.find(s);
        return it == values.end() ? V(0) : it->second;
    }
    void set(const Simplex& s, const V& v) {
        if (v == V(0))
            values.erase(s);
        else
            values[s] = v;
    }
};

// (coboundary phi)(sigma) = phi(boundary sigma); transpose of the rational
// boundary matrix.
template <class V>
Cochain<V> coboundary(const SimplicialComplex& K, const Cochain<V>& phi, int p);

// Evaluation of a p-cochain on a p-chain.
Rat evaluate(const Cochain<Rat>& phi, const Chain<Rat>& z);
double evaluate(const Cochain<double>& phi, const Chain<Rat>& z);

// The cocycle supported exactly on a minimal edge cut C with phi(c) = 1,
// built from per-edge companion cycles. C must be minimal (no proper subset
// is a cut), otherwise a domain error is raised.
Cochain<Rat> cut_support_cocycle(const SimplicialComplex& K, const std::vector<Simplex>& C,
                                 const Chain<Rat>& c);

// l1 relaxation of the minimum-cut program: min ||phi||_1 with d*phi = 0 and
// phi(c) = 1, solved in floating point by a dense two-phase simplex.
std::pair<Cochain<double>, double> solve_mincut_l1(const SimplicialComplex& K,
                                                   const Chain<Rat>& c);

// Dual program: maximize r over 2-chains B with ||dB + r c||_inf <= 1.
struct FlowWitness {
    std::map<Simplex, double> B; // 2-chain
    double r = 0;
};
std::pair<FlowWitness, double> solve_maxflow(const SimplicialComplex& K, const Chain<Rat>& c);

struct LpReport {
    bool mc_known = false;
    int mc = -1;                   // l0 optimum by brute force, when within bound
    std::vector<Simplex> mc_witness;
    double mc_tilde = 0;           // l1 optimum, program (P)
    double mf = 0;                 // dual optimum, program (D)
    Cochain<double> phi;           // optimal phi of (P)
    FlowWitness flow;              // optimal (B, r) of (D)
    bool gap = false;              // mc_tilde < mc strictly (when mc known)
    std::vector<Simplex> lp_support; // Supp(phi) above the extraction threshold
    bool lp_support_is_cut = false;
    int ceil_mc_tilde = 0;         // candidate lower bound
    bool lower_bound_condition = false; // ||phi_C||_1 <= ||phi_C||_0 for the min cut's cocycle
    double support_threshold = 1e-7;
    double duality_tolerance = 1e-6;
};

LpReport duality_report(const SimplicialComplex& K, const Chain<Rat>& c, int bruteforce_bound);

// The two-hole instance whose cycle winds once around the left hole and
// twice around the right one; min cut 3 with max flow 3/2.
GapInstance build_example_6_3();

// --- small dense LP solver (exposed for tests) ---
// min c'x  s.t.  A x = b, x >= 0; two-phase tableau simplex with Bland's rule.
struct LpSolution {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    double value = 0;
    std::vector<double> x;
};
LpSolution simplex_solve(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                         const std::vector<double>& c);

} // namespace homcut

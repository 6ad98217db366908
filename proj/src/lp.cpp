#include "homcut/lp.hpp"

#include <algorithm>
#include <cmath>

namespace homcut {

template <class V>
Cochain<V> coboundary(const SimplicialComplex& K, const Cochain<V>& phi, int p) {
    if (phi.dimension != p) fail(errc::domain, "coboundary: cochain dimension mismatch");
    Cochain<V> out;
    out.dimension = p + 1;
    for (const Simplex& s : K.skeleton(p + 1)) {
        V acc(0);
        int sign = 1;
        for (int i = 0; i <= p + 1; ++i) {
            auto it = phi.values.find(s.face(i));
            if (it != phi.values.end()) acc = acc + (sign > 0 ? it->second : V(0) - it->second);
            sign = -sign;
        }
        out.set(s, acc);
    }
    return out;
}
template Cochain<Rat> coboundary<Rat>(const SimplicialComplex&, const Cochain<Rat>&, int);
template Cochain<double> coboundary<double>(const SimplicialComplex&, const Cochain<double>&, int);

Rat evaluate(const Cochain<Rat>& phi, const Chain<Rat>& z) {
    Rat acc(0);
    for (const auto& [s, c] : z.terms()) acc += phi.value(s) * c;
    return acc;
}

double evaluate(const Cochain<double>& phi, const Chain<Rat>& z) {
    double acc = 0;
    for (const auto& [s, c] : z.terms()) acc += phi.value(s) * c.get_d();
    return acc;
}

Cochain<Rat> cut_support_cocycle(const SimplicialComplex& K, const std::vector<Simplex>& C,
                                 const Chain<Rat>& c) {
    if (C.empty()) fail(errc::domain, "empty cut");
    if (!is_cut<Rat>(K, c, C, 1)) fail(errc::domain, "C is not a cut for [c]");
    CutOracle<Rat> oracle(K, c, 1);
    const auto& universe = oracle.universe();
    auto id_of = [&](const Simplex& e) {
        auto it = std::lower_bound(universe.begin(), universe.end(), e);
        if (it == universe.end() || !(*it == e)) fail(errc::domain, "cut edge outside K^(1)");
        return static_cast<int>(it - universe.begin());
    };
    Cochain<Rat> phi;
    phi.dimension = 1;
    for (size_t i = 0; i < C.size(); ++i) {
        std::vector<int> rest;
        for (size_t j = 0; j < C.size(); ++j)
            if (j != i) rest.push_back(id_of(C[j]));
        std::sort(rest.begin(), rest.end());
        auto z = oracle.surviving_cycle(rest);
        if (!z) fail(errc::domain, "C is not minimal: removing one edge still cuts");
        Rat lambda = z->coeff(C[i]);
        if (sgn(lambda) == 0)
            fail(errc::internal, "companion cycle avoids its own edge although C is a cut");
        // [z] = [c]; scale so the coefficient of e is one
        phi.set(C[i], Rat(1) / lambda); // alpha_e = 1 / lambda_e
    }
    // verify the three postconditions exactly
    Cochain<Rat> db = coboundary<Rat>(K, phi, 1);
    for (const auto& [s, v] : db.values)
        if (sgn(v) != 0) fail(errc::internal, "constructed cochain is not a cocycle");
    if (evaluate(phi, c) != Rat(1)) fail(errc::internal, "constructed cocycle has phi(c) != 1");
    if (phi.values.size() != C.size()) fail(errc::internal, "constructed cocycle support mismatch");
    return phi;
}

// ---------------------------------------------------------------------------
// dense two-phase simplex (Bland's rule)

namespace {

constexpr double kPivotEps = 1e-9;

struct Tableau {
    int m, n; // rows, structural columns (without artificials)
    std::vector<std::vector<double>> T; // m+1 rows, total+1 cols; last row = objective
    std::vector<int> basis;
    int total;

    Tableau(const std::vector<std::vector<double>>& A, const std::vector<double>& b, int ncols)
        : m(static_cast<int>(A.size())), n(ncols), total(ncols + m) {
        T.assign(static_cast<size_t>(m) + 1, std::vector<double>(static_cast<size_t>(total) + 1, 0));
        basis.resize(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) {
            double scale = b[static_cast<size_t>(i)] < 0 ? -1.0 : 1.0;
            for (int j = 0; j < n; ++j) T[static_cast<size_t>(i)][static_cast<size_t>(j)] = scale * A[static_cast<size_t>(i)][static_cast<size_t>(j)];
            T[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = 1; // artificial
            T[static_cast<size_t>(i)].back() = scale * b[static_cast<size_t>(i)];
            basis[static_cast<size_t>(i)] = n + i;
        }
    }

    void pivot(int r, int col) {
        auto& row = T[static_cast<size_t>(r)];
        double inv = 1.0 / row[static_cast<size_t>(col)];
        for (double& v : row) v *= inv;
        for (int i = 0; i <= m; ++i) {
            if (i == r) continue;
            double f = T[static_cast<size_t>(i)][static_cast<size_t>(col)];
            if (f == 0) continue;
            auto& other = T[static_cast<size_t>(i)];
            for (int j = 0; j <= total; ++j) other[static_cast<size_t>(j)] -= f * row[static_cast<size_t>(j)];
        }
        basis[static_cast<size_t>(r)] = col;
    }

    // Bland's rule: smallest eligible column, smallest-index tie-break on rows.
    // allowed(col) filters candidate entering columns.
    bool run(const std::vector<char>& allowed) {
        for (;;) {
            int col = -1;
            for (int j = 0; j < total; ++j) {
                if (!allowed[static_cast<size_t>(j)]) continue;
                if (T[static_cast<size_t>(m)][static_cast<size_t>(j)] < -kPivotEps) {
                    col = j;
                    break;
                }
            }
            if (col < 0) return true; // optimal
            int row = -1;
            double best = 0;
            for (int i = 0; i < m; ++i) {
                double a = T[static_cast<size_t>(i)][static_cast<size_t>(col)];
                if (a <= kPivotEps) continue;
                double ratio = T[static_cast<size_t>(i)].back() / a;
                if (row < 0 || ratio < best - 1e-12 ||
                    (std::abs(ratio - best) <= 1e-12 &&
                     basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(row)])) {
                    row = i;
                    best = ratio;
                }
            }
            if (row < 0) return false; // unbounded
            pivot(row, col);
        }
    }
};

} // namespace

LpSolution simplex_solve(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                         const std::vector<double>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    Tableau t(A, b, n);

    // phase 1: minimize the sum of artificials
    for (int j = 0; j <= t.total; ++j) {
        double s = 0;
        for (int i = 0; i < m; ++i) s += t.T[static_cast<size_t>(i)][static_cast<size_t>(j)];
        t.T[static_cast<size_t>(m)][static_cast<size_t>(j)] = -s;
    }
    for (int i = 0; i < m; ++i) t.T[static_cast<size_t>(m)][static_cast<size_t>(t.n + i)] = 0;
    std::vector<char> allowed(static_cast<size_t>(t.total), 1);
    if (!t.run(allowed)) fail(errc::internal, "phase-1 LP unbounded");
    if (t.T[static_cast<size_t>(m)].back() < -1e-7) return {LpSolution::Status::Infeasible, 0, {}};

    // drive leftover artificials out of the basis where possible
    for (int i = 0; i < m; ++i) {
        if (t.basis[static_cast<size_t>(i)] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (std::abs(t.T[static_cast<size_t>(i)][static_cast<size_t>(j)]) > kPivotEps) {
                col = j;
                break;
            }
        if (col >= 0) t.pivot(i, col);
    }

    // phase 2: the real objective, artificials barred
    for (int j = 0; j <= t.total; ++j) t.T[static_cast<size_t>(m)][static_cast<size_t>(j)] = 0;
    for (int j = 0; j < n; ++j) t.T[static_cast<size_t>(m)][static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
    for (int i = 0; i < m; ++i) {
        int bj = t.basis[static_cast<size_t>(i)];
        double f = t.T[static_cast<size_t>(m)][static_cast<size_t>(bj)];
        if (f == 0) continue;
        for (int j = 0; j <= t.total; ++j)
            t.T[static_cast<size_t>(m)][static_cast<size_t>(j)] -=
                f * t.T[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    std::fill(allowed.begin(), allowed.end(), 1);
    for (int j = n; j < t.total; ++j) allowed[static_cast<size_t>(j)] = 0;
    if (!t.run(allowed)) return {LpSolution::Status::Unbounded, 0, {}};

    LpSolution sol;
    sol.status = LpSolution::Status::Optimal;
    sol.x.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < m; ++i)
        if (t.basis[static_cast<size_t>(i)] < n)
            sol.x[static_cast<size_t>(t.basis[static_cast<size_t>(i)])] =
                t.T[static_cast<size_t>(i)].back();
    double v = 0;
    for (int j = 0; j < n; ++j) v += c[static_cast<size_t>(j)] * sol.x[static_cast<size_t>(j)];
    sol.value = v;
    return sol;
}

// ---------------------------------------------------------------------------
// programs (P) and (D)

namespace {

void check_lp_input(const SimplicialComplex& K, const Chain<Rat>& c) {
    if (c.dim() != 1 || c.empty()) fail(errc::domain, "c must be a nonzero 1-chain");
    if (!supported_on(c, K) || !is_cycle(c)) fail(errc::domain, "c must be a 1-cycle of K");
    if (image_membership<Rat>(K, SimplicialComplex{}, c, 1))
        fail(errc::domain, "c is a boundary; phi(c) = 1 is infeasible for cocycles");
}

} // namespace

std::pair<Cochain<double>, double> solve_mincut_l1(const SimplicialComplex& K,
                                                   const Chain<Rat>& c) {
    check_lp_input(K, c);
    const auto& edges = K.skeleton(1);
    const auto& tris = K.skeleton(2);
    const int ne = static_cast<int>(edges.size());
    // variables: phi = u - w with u, w >= 0
    std::vector<std::vector<double>> A;
    std::vector<double> b;
    for (const Simplex& t : tris) {
        std::vector<double> row(static_cast<size_t>(2 * ne), 0);
        Chain<Rat> bd = boundary<Rat>(t);
        for (const auto& [e, coeff] : bd.terms()) {
            int j = K.index_of(e);
            row[static_cast<size_t>(j)] += coeff.get_d();
            row[static_cast<size_t>(ne + j)] -= coeff.get_d();
        }
        A.push_back(std::move(row));
        b.push_back(0);
    }
    {
        std::vector<double> row(static_cast<size_t>(2 * ne), 0);
        for (const auto& [e, coeff] : c.terms()) {
            int j = K.index_of(e);
            row[static_cast<size_t>(j)] += coeff.get_d();
            row[static_cast<size_t>(ne + j)] -= coeff.get_d();
        }
        A.push_back(std::move(row));
        b.push_back(1);
    }
    std::vector<double> obj(static_cast<size_t>(2 * ne), 1.0);
    LpSolution sol = simplex_solve(A, b, obj);
    if (sol.status != LpSolution::Status::Optimal)
        fail(errc::internal, "program (P) did not solve to optimality");
    Cochain<double> phi;
    phi.dimension = 1;
    for (int j = 0; j < ne; ++j) {
        double v = sol.x[static_cast<size_t>(j)] - sol.x[static_cast<size_t>(ne + j)];
        if (v != 0) phi.set(edges[static_cast<size_t>(j)], v);
    }
    return {std::move(phi), sol.value};
}

std::pair<FlowWitness, double> solve_maxflow(const SimplicialComplex& K, const Chain<Rat>& c) {
    check_lp_input(K, c);
    const auto& edges = K.skeleton(1);
    const auto& tris = K.skeleton(2);
    const int ne = static_cast<int>(edges.size());
    const int nt = static_cast<int>(tris.size());
    // variables: B = p - q (per triangle), r = r1 - r2; slack per inequality
    // rows: (dB + r c)(e) <= 1 and -(dB + r c)(e) <= 1
    const int nvars = 2 * nt + 2;
    const int nrows = 2 * ne;
    std::vector<std::vector<double>> A(static_cast<size_t>(nrows),
                                       std::vector<double>(static_cast<size_t>(nvars + nrows), 0));
    std::vector<double> b(static_cast<size_t>(nrows), 1.0);
    for (int t = 0; t < nt; ++t) {
        Chain<Rat> bd = boundary<Rat>(tris[static_cast<size_t>(t)]);
        for (const auto& [e, coeff] : bd.terms()) {
            int j = K.index_of(e);
            double v = coeff.get_d();
            A[static_cast<size_t>(j)][static_cast<size_t>(t)] += v;
            A[static_cast<size_t>(j)][static_cast<size_t>(nt + t)] -= v;
            A[static_cast<size_t>(ne + j)][static_cast<size_t>(t)] -= v;
            A[static_cast<size_t>(ne + j)][static_cast<size_t>(nt + t)] += v;
        }
    }
    for (const auto& [e, coeff] : c.terms()) {
        int j = K.index_of(e);
        double v = coeff.get_d();
        A[static_cast<size_t>(j)][static_cast<size_t>(2 * nt)] += v;
        A[static_cast<size_t>(j)][static_cast<size_t>(2 * nt + 1)] -= v;
        A[static_cast<size_t>(ne + j)][static_cast<size_t>(2 * nt)] -= v;
        A[static_cast<size_t>(ne + j)][static_cast<size_t>(2 * nt + 1)] += v;
    }
    for (int i = 0; i < nrows; ++i) A[static_cast<size_t>(i)][static_cast<size_t>(nvars + i)] = 1;
    std::vector<double> obj(static_cast<size_t>(nvars + nrows), 0);
    obj[static_cast<size_t>(2 * nt)] = -1; // maximize r
    obj[static_cast<size_t>(2 * nt + 1)] = 1;
    LpSolution sol = simplex_solve(A, b, obj);
    if (sol.status != LpSolution::Status::Optimal)
        fail(errc::internal, "program (D) did not solve to optimality");
    FlowWitness w;
    for (int t = 0; t < nt; ++t) {
        double v = sol.x[static_cast<size_t>(t)] - sol.x[static_cast<size_t>(nt + t)];
        if (v != 0) w.B.emplace(tris[static_cast<size_t>(t)], v);
    }
    w.r = sol.x[static_cast<size_t>(2 * nt)] - sol.x[static_cast<size_t>(2 * nt + 1)];
    return {std::move(w), w.r};
}

LpReport duality_report(const SimplicialComplex& K, const Chain<Rat>& c, int bruteforce_bound) {
    LpReport rep;
    auto [phi, mct] = solve_mincut_l1(K, c);
    auto [flow, mf] = solve_maxflow(K, c);
    rep.phi = std::move(phi);
    rep.mc_tilde = mct;
    rep.flow = std::move(flow);
    rep.mf = mf;

    auto cert = mhc_bruteforce<Rat>(K, c, 1, bruteforce_bound);
    rep.mc_known = cert.found;
    if (cert.found) {
        rep.mc = cert.size;
        rep.mc_witness = cert.witness;
        rep.gap = rep.mc_tilde < static_cast<double>(rep.mc) - rep.duality_tolerance;
        // first-found minimum cut is minimal; its Lemma-style cocycle decides
        // the conditional lower bound
        Cochain<Rat> phi_C = cut_support_cocycle(K, cert.witness, c);
        Rat l1(0);
        for (const auto& [e, v] : phi_C.values) l1 += abs(v);
        rep.lower_bound_condition = l1 <= Rat(static_cast<long>(phi_C.values.size()));
    }

    for (const auto& [e, v] : rep.phi.values)
        if (std::abs(v) > rep.support_threshold) rep.lp_support.push_back(e);
    if (!rep.lp_support.empty()) rep.lp_support_is_cut = is_cut<Rat>(K, c, rep.lp_support, 1);
    rep.ceil_mc_tilde = static_cast<int>(std::ceil(rep.mc_tilde - rep.duality_tolerance));
    return rep;
}

GapInstance build_example_6_3() { return duality_gap_instance(); }

} // namespace homcut

#include "homcut/cut.hpp"
#include "homcut/linalg.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcut {

template <class K>
bool is_cut(const SimplicialComplex& complex, const Chain<K>& gamma,
            const std::vector<Simplex>& C, int s) {
    if (gamma.empty()) fail(errc::domain, "is_cut: zero chain");
    if (s > gamma.dim()) fail(errc::domain, "is_cut: s must not exceed dim(gamma)");
    for (const Simplex& c : C) {
        if (c.dim() != s) fail(errc::domain, "is_cut: C must consist of s-simplices");
        if (!complex.contains(c)) fail(errc::domain, "is_cut: C not contained in K");
    }
    SimplicialComplex rem = delete_set(complex, C);
    return !image_membership<K>(complex, rem, gamma, gamma.dim());
}

namespace {

template <class K>
void add_directed_edge(Chain<K>& chain, int u, int v, const K& coeff) {
    if (u < v)
        chain.add(Simplex{u, v}, coeff);
    else
        chain.add(Simplex{v, u}, field_traits<K>::neg(coeff));
}

// Spanning forest of the alive part of the 1-skeleton, one query at a time.
struct Forest {
    std::vector<int> parent;      // vertex -> parent vertex (-1 at roots, -2 unseen/dead)
    std::vector<int> parent_edge; // vertex -> edge id to parent
    std::vector<int> order;       // BFS visit order
    std::vector<char> tree_edge;

    void build(int nv, const std::vector<std::vector<std::pair<int, int>>>& adj,
               const std::vector<char>& edge_dead, const std::vector<char>& vertex_dead) {
        parent.assign(static_cast<size_t>(nv), -2);
        parent_edge.assign(static_cast<size_t>(nv), -1);
        order.clear();
        tree_edge.assign(edge_dead.size(), 0);
        for (int r = 0; r < nv; ++r) {
            if (vertex_dead[static_cast<size_t>(r)] || parent[static_cast<size_t>(r)] != -2)
                continue;
            parent[static_cast<size_t>(r)] = -1;
            size_t head = order.size();
            order.push_back(r);
            while (head < order.size()) {
                int u = order[head++];
                for (auto [w, eid] : adj[static_cast<size_t>(u)]) {
                    if (edge_dead[static_cast<size_t>(eid)] ||
                        vertex_dead[static_cast<size_t>(w)])
                        continue;
                    if (parent[static_cast<size_t>(w)] != -2) continue;
                    parent[static_cast<size_t>(w)] = u;
                    parent_edge[static_cast<size_t>(w)] = eid;
                    tree_edge[static_cast<size_t>(eid)] = 1;
                    order.push_back(w);
                }
            }
        }
    }
};

} // namespace

template <class K>
CutOracle<K>::CutOracle(const SimplicialComplex& complex, const Chain<K>& gamma, int s)
    : K_(complex), gamma_(gamma), s_(s), p_(gamma.dim()) {
    if (gamma.empty()) fail(errc::domain, "cut oracle: zero chain");
    if (s_ > p_) fail(errc::domain, "cut oracle: s must not exceed dim(gamma)");
    if (p_ > 1) fail(errc::unsupported, "cut oracle supports classes of dimension <= 1");
    if (!is_cycle(gamma)) fail(errc::domain, "cut oracle: gamma is not a cycle");
    if (!supported_on(gamma, complex)) fail(errc::domain, "cut oracle: gamma not in K");

    universe_ = K_.skeleton(s_);

    const auto& verts = K_.skeleton(0);
    nv_ = static_cast<int>(verts.size());
    vid_.resize(static_cast<size_t>(nv_));
    for (int v = 0; v < nv_; ++v) vid_[static_cast<size_t>(v)] = verts[static_cast<size_t>(v)][0];
    const auto& edges = K_.skeleton(1);
    adj_.assign(static_cast<size_t>(nv_), {});
    for (size_t eid = 0; eid < edges.size(); ++eid) {
        int a = K_.index_of(Simplex{edges[eid][0]});
        int b = K_.index_of(Simplex{edges[eid][1]});
        edges_.emplace_back(a, b);
        adj_[static_cast<size_t>(a)].emplace_back(b, static_cast<int>(eid));
        adj_[static_cast<size_t>(b)].emplace_back(a, static_cast<int>(eid));
    }

    if (p_ == 0) {
        component_of_.assign(static_cast<size_t>(nv_), -1);
        int comps = 0;
        for (int v = 0; v < nv_; ++v) {
            if (component_of_[static_cast<size_t>(v)] >= 0) continue;
            std::vector<int> stack{v};
            component_of_[static_cast<size_t>(v)] = comps;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, eid] : adj_[static_cast<size_t>(u)]) {
                    if (component_of_[static_cast<size_t>(w)] < 0) {
                        component_of_[static_cast<size_t>(w)] = comps;
                        stack.push_back(w);
                    }
                }
            }
            ++comps;
        }
        component_size_.assign(static_cast<size_t>(comps), 0);
        for (int v = 0; v < nv_; ++v)
            component_size_[static_cast<size_t>(component_of_[static_cast<size_t>(v)])]++;
        gamma_comp_.assign(static_cast<size_t>(comps), field_traits<K>::zero());
        for (const auto& [sx, c] : gamma.terms()) {
            int vi = K_.index_of(sx);
            gamma_comp_[static_cast<size_t>(component_of_[static_cast<size_t>(vi)])] += c;
        }
        return;
    }

    // p == 1: representatives of H^1(K) evaluated on edges; homology classes
    // of 1-cycles are separated by these evaluations.
    const size_t ne = edges.size();
    const auto& tris = K_.skeleton(2);
    Eliminator<K> cocycle_kernel(static_cast<int>(tris.size()), true);
    for (size_t eid = 0; eid < ne; ++eid) {
        std::vector<K> col(tris.size(), field_traits<K>::zero());
        for (size_t t = 0; t < tris.size(); ++t) {
            const Simplex& tri = tris[t];
            K sign = field_traits<K>::one();
            for (int i = 0; i <= 2; ++i) {
                if (tri.face(i) == edges[eid]) col[t] += sign;
                sign = field_traits<K>::neg(sign);
            }
        }
        cocycle_kernel.add(std::move(col));
    }
    Eliminator<K> rep(static_cast<int>(ne));
    for (int v = 0; v < nv_; ++v) {
        std::vector<K> cob(ne, field_traits<K>::zero());
        for (auto [w, eid] : adj_[static_cast<size_t>(v)]) {
            const auto& ab = edges_[static_cast<size_t>(eid)];
            cob[static_cast<size_t>(eid)] += (v == ab.second)
                                                 ? field_traits<K>::one()
                                                 : field_traits<K>::neg(field_traits<K>::one());
        }
        rep.add(std::move(cob));
    }
    for (const auto& combo : cocycle_kernel.kernel_combos()) {
        std::vector<K> phi(ne, field_traits<K>::zero());
        for (size_t e = 0; e < combo.size() && e < ne; ++e) phi[e] = combo[e];
        if (rep.add(phi)) cocycles_.push_back(std::move(phi));
    }
    rescale_cocycles();

    gamma_ev_.assign(cocycles_.size(), field_traits<K>::zero());
    for (const auto& [sx, c] : gamma.terms()) {
        int eid = K_.index_of(sx);
        if (sx.dim() != 1 || eid < 0) fail(errc::domain, "gamma must be an edge chain of K");
        for (size_t i = 0; i < cocycles_.size(); ++i)
            gamma_ev_[i] += cocycles_[i][static_cast<size_t>(eid)] * c;
    }
}

template <>
void CutOracle<F2>::rescale_cocycles() {
    // bit masks per edge
    if (cocycles_.size() > 64)
        fail(errc::unsupported, "GF(2) cut oracle limited to first Betti number <= 64");
    mask_.assign(edges_.size(), 0);
    for (size_t e = 0; e < edges_.size(); ++e)
        for (size_t i = 0; i < cocycles_.size(); ++i)
            if (cocycles_[i][e].v) mask_[e] |= (uint64_t(1) << i);
}

template <>
void CutOracle<Rat>::rescale_cocycles() {
    // Clear denominators: a nonzero scalar multiple represents the same
    // cohomology direction, and integer values admit int64 potentials.
    int_ok_ = true;
    phi_int_.assign(cocycles_.size(), {});
    for (size_t i = 0; i < cocycles_.size(); ++i) {
        auto& phi = cocycles_[i];
        mpz_class l(1);
        for (const Rat& x : phi)
            if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
        mpz_class g(0);
        for (Rat& x : phi) {
            if (sgn(x) == 0) continue;
            x *= Rat(l);
            x.canonicalize();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num().get_mpz_t());
        }
        if (g > 1) {
            for (Rat& x : phi) {
                x /= Rat(g);
                x.canonicalize();
            }
        }
        phi_int_[i].assign(edges_.size(), 0);
        mpz_class total(0);
        for (size_t e = 0; e < phi.size(); ++e) {
            if (phi[e].get_den() != 1) { int_ok_ = false; break; }
            mpz_class num = phi[e].get_num();
            total += abs(num);
            if (!num.fits_slong_p()) { int_ok_ = false; break; }
            phi_int_[i][e] = num.get_si();
        }
        if (total > mpz_class(int64_t(1) << 40)) int_ok_ = false;
        if (!int_ok_) break;
    }
    if (!int_ok_) phi_int_.clear();
}

template <class K>
bool CutOracle<K>::null_class() const {
    if (p_ == 0) {
        for (const K& c : gamma_comp_)
            if (!field_traits<K>::is_zero(c)) return false;
        return true;
    }
    for (const K& c : gamma_ev_)
        if (!field_traits<K>::is_zero(c)) return false;
    return true;
}

template <>
bool CutOracle<F2>::p1_image_contains_gamma(const std::vector<char>& edge_dead,
                                            const std::vector<char>& vertex_dead,
                                            Chain<F2>* witness_out) const {
    const size_t ne = edges_.size();
    uint64_t target = 0;
    for (size_t i = 0; i < gamma_ev_.size(); ++i)
        if (gamma_ev_[i].v) target |= (uint64_t(1) << i);
    if (target == 0) return true;

    Forest forest;
    forest.build(nv_, adj_, edge_dead, vertex_dead);
    std::vector<uint64_t> pot(static_cast<size_t>(nv_), 0);
    for (int u : forest.order) {
        int par = forest.parent[static_cast<size_t>(u)];
        if (par < 0) continue;
        pot[static_cast<size_t>(u)] =
            pot[static_cast<size_t>(par)] ^
            mask_[static_cast<size_t>(forest.parent_edge[static_cast<size_t>(u)])];
    }

    uint64_t basis[64] = {0};
    uint64_t basis_comb[64] = {0};
    std::vector<int> cols; // edge per contributed column
    auto reduce = [&](uint64_t w, uint64_t* comb) {
        while (w) {
            int b = 63 - __builtin_clzll(w);
            if (!basis[b]) return std::make_pair(w, b);
            w ^= basis[b];
            if (comb) *comb ^= basis_comb[b];
        }
        return std::make_pair(uint64_t(0), -1);
    };
    bool contains = false;
    for (size_t e = 0; e < ne; ++e) {
        if (edge_dead[e] || forest.tree_edge[e]) continue;
        auto [a, b] = edges_[e];
        if (vertex_dead[static_cast<size_t>(a)] || vertex_dead[static_cast<size_t>(b)]) continue;
        uint64_t w = mask_[e] ^ pot[static_cast<size_t>(a)] ^ pot[static_cast<size_t>(b)];
        if (!w) continue;
        if (witness_out && cols.size() >= 64)
            fail(errc::internal, "witness recovery overflow"); // beta <= 64 keeps this unreached
        uint64_t comb = witness_out ? (uint64_t(1) << cols.size()) : 0;
        auto [red, bit] = reduce(w, witness_out ? &comb : nullptr);
        if (red) {
            basis[bit] = red;
            basis_comb[bit] = comb;
            if (witness_out) cols.push_back(static_cast<int>(e));
            if (!contains) {
                uint64_t dummy = 0;
                contains = reduce(target, &dummy).first == 0;
            }
            if (contains && !witness_out) return true;
        }
    }
    {
        uint64_t dummy = 0;
        contains = contains || reduce(target, &dummy).first == 0;
    }
    if (!contains || !witness_out) return contains;

    uint64_t tcomb = 0;
    auto [tred, tbit] = reduce(target, &tcomb);
    if (tred != 0) fail(errc::internal, "cut oracle: inconsistent witness solve");
    Chain<F2> z(1);
    for (size_t i = 0; i < cols.size(); ++i) {
        if (!((tcomb >> i) & 1)) continue;
        int e = cols[i];
        auto [a, b] = edges_[static_cast<size_t>(e)];
        add_directed_edge(z, vid_[static_cast<size_t>(a)], vid_[static_cast<size_t>(b)], F2(1));
        for (int v2 = b; forest.parent[static_cast<size_t>(v2)] >= 0;
             v2 = forest.parent[static_cast<size_t>(v2)])
            add_directed_edge(z, vid_[static_cast<size_t>(v2)],
                              vid_[static_cast<size_t>(forest.parent[static_cast<size_t>(v2)])],
                              F2(1));
        for (int v2 = a; forest.parent[static_cast<size_t>(v2)] >= 0;
             v2 = forest.parent[static_cast<size_t>(v2)])
            add_directed_edge(z, vid_[static_cast<size_t>(v2)],
                              vid_[static_cast<size_t>(forest.parent[static_cast<size_t>(v2)])],
                              F2(1));
    }
    *witness_out = z;
    return true;
}

template <>
bool CutOracle<Rat>::p1_image_contains_gamma(const std::vector<char>& edge_dead,
                                             const std::vector<char>& vertex_dead,
                                             Chain<Rat>* witness_out) const {
    const size_t ne = edges_.size();
    const size_t nb = cocycles_.size();
    bool target_zero = true;
    for (const Rat& g : gamma_ev_)
        if (sgn(g) != 0) { target_zero = false; break; }
    if (target_zero) return true;

    Forest forest;
    forest.build(nv_, adj_, edge_dead, vertex_dead);

    Eliminator<Rat> span(static_cast<int>(nb), witness_out != nullptr);
    std::vector<int> added_edges;
    bool contains = false;

    auto feed = [&](size_t e, std::vector<Rat> w) {
        span.add(std::move(w));
        added_edges.push_back(static_cast<int>(e));
        if (!contains && (span.spans_everything() || span.contains(gamma_ev_))) contains = true;
    };

    if (int_ok_) {
        std::vector<std::vector<int64_t>> pot(nb, std::vector<int64_t>(static_cast<size_t>(nv_), 0));
        for (size_t i = 0; i < nb; ++i) {
            auto& pi = pot[i];
            const auto& phi = phi_int_[i];
            for (int u : forest.order) {
                int par = forest.parent[static_cast<size_t>(u)];
                if (par < 0) continue;
                int eid = forest.parent_edge[static_cast<size_t>(u)];
                int64_t val = phi[static_cast<size_t>(eid)];
                pi[static_cast<size_t>(u)] = pi[static_cast<size_t>(par)] +
                                             (u == edges_[static_cast<size_t>(eid)].second ? val : -val);
            }
        }
        std::vector<int64_t> w(nb);
        for (size_t e = 0; e < ne; ++e) {
            if (edge_dead[e] || forest.tree_edge[e]) continue;
            auto [a, b] = edges_[e];
            if (vertex_dead[static_cast<size_t>(a)] || vertex_dead[static_cast<size_t>(b)])
                continue;
            bool nonzero = false;
            for (size_t i = 0; i < nb; ++i) {
                w[i] = phi_int_[i][e] + pot[i][static_cast<size_t>(a)] -
                       pot[i][static_cast<size_t>(b)];
                if (w[i] != 0) nonzero = true;
            }
            if (!nonzero) continue;
            std::vector<Rat> wq(nb);
            for (size_t i = 0; i < nb; ++i) wq[i] = Rat(static_cast<long>(w[i]));
            feed(e, std::move(wq));
            if (contains && !witness_out) return true;
        }
    } else {
        std::vector<std::vector<Rat>> pot(nb, std::vector<Rat>(static_cast<size_t>(nv_), Rat(0)));
        for (size_t i = 0; i < nb; ++i) {
            auto& pi = pot[i];
            const auto& phi = cocycles_[i];
            for (int u : forest.order) {
                int par = forest.parent[static_cast<size_t>(u)];
                if (par < 0) continue;
                int eid = forest.parent_edge[static_cast<size_t>(u)];
                if (u == edges_[static_cast<size_t>(eid)].second)
                    pi[static_cast<size_t>(u)] =
                        pi[static_cast<size_t>(par)] + phi[static_cast<size_t>(eid)];
                else
                    pi[static_cast<size_t>(u)] =
                        pi[static_cast<size_t>(par)] - phi[static_cast<size_t>(eid)];
            }
        }
        for (size_t e = 0; e < ne; ++e) {
            if (edge_dead[e] || forest.tree_edge[e]) continue;
            auto [a, b] = edges_[e];
            if (vertex_dead[static_cast<size_t>(a)] || vertex_dead[static_cast<size_t>(b)])
                continue;
            std::vector<Rat> w(nb);
            bool nonzero = false;
            for (size_t i = 0; i < nb; ++i) {
                w[i] = cocycles_[i][e] + pot[i][static_cast<size_t>(a)] -
                       pot[i][static_cast<size_t>(b)];
                if (sgn(w[i]) != 0) nonzero = true;
            }
            if (!nonzero) continue;
            feed(e, std::move(w));
            if (contains && !witness_out) return true;
        }
    }
    if (!contains || !witness_out) return contains;

    auto expr = span.express(gamma_ev_);
    if (!expr) fail(errc::internal, "cut oracle: inconsistent witness solve");
    Chain<Rat> z(1);
    for (size_t i = 0; i < expr->size(); ++i) {
        const Rat& coeff = (*expr)[i];
        if (sgn(coeff) == 0) continue;
        int e = added_edges[i];
        auto [a, b] = edges_[static_cast<size_t>(e)];
        add_directed_edge(z, vid_[static_cast<size_t>(a)], vid_[static_cast<size_t>(b)], coeff);
        for (int v2 = b; forest.parent[static_cast<size_t>(v2)] >= 0;
             v2 = forest.parent[static_cast<size_t>(v2)])
            add_directed_edge(z, vid_[static_cast<size_t>(v2)],
                              vid_[static_cast<size_t>(forest.parent[static_cast<size_t>(v2)])],
                              coeff);
        for (int v2 = a; forest.parent[static_cast<size_t>(v2)] >= 0;
             v2 = forest.parent[static_cast<size_t>(v2)])
            add_directed_edge(z, vid_[static_cast<size_t>(v2)],
                              vid_[static_cast<size_t>(forest.parent[static_cast<size_t>(v2)])],
                              Rat(-coeff));
    }
    *witness_out = z;
    return true;
}

template <class K>
bool CutOracle<K>::operator()(const std::vector<int>& cut_member_ids) const {
    if (p_ == 0) {
        std::vector<int> killed(component_size_.size(), 0);
        for (int id : cut_member_ids) {
            int vi = K_.index_of(universe_[static_cast<size_t>(id)]);
            killed[static_cast<size_t>(component_of_[static_cast<size_t>(vi)])]++;
        }
        for (size_t c = 0; c < component_size_.size(); ++c) {
            if (field_traits<K>::is_zero(gamma_comp_[c])) continue;
            if (killed[c] >= component_size_[c]) return true;
        }
        return false;
    }
    std::vector<char> edge_dead(edges_.size(), 0);
    std::vector<char> vertex_dead(static_cast<size_t>(nv_), 0);
    for (int id : cut_member_ids) {
        const Simplex& sx = universe_[static_cast<size_t>(id)];
        if (s_ == 1)
            edge_dead[static_cast<size_t>(K_.index_of(sx))] = 1;
        else
            vertex_dead[static_cast<size_t>(K_.index_of(sx))] = 1;
    }
    return !p1_image_contains_gamma(edge_dead, vertex_dead, nullptr);
}

template <class K>
std::optional<Chain<K>> CutOracle<K>::surviving_cycle(const std::vector<int>& cut_member_ids) const {
    if (p_ != 1) fail(errc::unsupported, "surviving_cycle implemented for 1-classes only");
    std::vector<char> edge_dead(edges_.size(), 0);
    std::vector<char> vertex_dead(static_cast<size_t>(nv_), 0);
    for (int id : cut_member_ids) {
        const Simplex& sx = universe_[static_cast<size_t>(id)];
        if (s_ == 1)
            edge_dead[static_cast<size_t>(K_.index_of(sx))] = 1;
        else
            vertex_dead[static_cast<size_t>(K_.index_of(sx))] = 1;
    }
    Chain<K> z(1);
    if (!p1_image_contains_gamma(edge_dead, vertex_dead, &z)) return std::nullopt;
    return z;
}

// ---------------------------------------------------------------------------
// brute-force minimum cut search

namespace {

// Lexicographic enumeration of k-subsets of [first, n). cb gets the chosen
// ids appended to `scratch` and returns true to stop the whole search.
template <class CB>
bool enumerate_combinations(int n, int first, int k, std::vector<int>& scratch, CB&& cb) {
    if (k == 0) return cb(scratch);
    for (int i = first; i + k <= n; ++i) {
        scratch.push_back(i);
        if (enumerate_combinations(n, i + 1, k - 1, scratch, cb)) {
            scratch.pop_back();
            return true;
        }
        scratch.pop_back();
    }
    return false;
}

template <class K>
CutCertificate mhc_bruteforce_impl(const SimplicialComplex& complex, const Chain<K>& gamma,
                                   int s, int max_size, const std::vector<Simplex>& required,
                                   bool parallel) {
    CutCertificate cert;
    cert.s = s;

    const int p = gamma.dim();
    std::optional<CutOracle<K>> oracle;
    const std::vector<Simplex>* universe;
    std::function<bool(const std::vector<int>&)> test;
    if (p <= 1) {
        oracle.emplace(complex, gamma, s);
        if (oracle->null_class()) fail(errc::domain, "mhc: gamma is null-homologous");
        universe = &oracle->universe();
        test = [&](const std::vector<int>& ids) { return (*oracle)(ids); };
    } else {
        universe = &complex.skeleton(s);
        if (image_membership<K>(complex, SimplicialComplex{}, gamma, p))
            fail(errc::domain, "mhc: gamma is null-homologous");
        test = [&, universe](const std::vector<int>& ids) {
            std::vector<Simplex> C;
            for (int id : ids) C.push_back((*universe)[static_cast<size_t>(id)]);
            return is_cut<K>(complex, gamma, C, s);
        };
    }

    const int n = static_cast<int>(universe->size());
    max_size = std::min(max_size, n);
    std::vector<int> req_ids;
    for (const Simplex& r : required) {
        auto it = std::lower_bound(universe->begin(), universe->end(), r);
        if (it == universe->end() || !(*it == r))
            fail(errc::domain, "required simplex outside K^(s)");
        req_ids.push_back(static_cast<int>(it - universe->begin()));
    }
    std::sort(req_ids.begin(), req_ids.end());
    req_ids.erase(std::unique(req_ids.begin(), req_ids.end()), req_ids.end());
    std::vector<int> free_ids;
    for (int i = 0; i < n; ++i)
        if (!std::binary_search(req_ids.begin(), req_ids.end(), i)) free_ids.push_back(i);

    const int base = static_cast<int>(req_ids.size());
    for (int size = std::max(base, 1); size <= max_size; ++size) {
        const int pick = size - base;
        if (pick < 0 || pick > static_cast<int>(free_ids.size())) continue;
        std::vector<int> winner;
        bool found = false;

        auto assemble = [&](const std::vector<int>& chosen) {
            std::vector<int> ids = req_ids;
            for (int c : chosen) ids.push_back(free_ids[static_cast<size_t>(c)]);
            std::sort(ids.begin(), ids.end());
            return ids;
        };

        if (!parallel || pick == 0) {
            std::vector<int> scratch;
            enumerate_combinations(static_cast<int>(free_ids.size()), 0, pick, scratch,
                                   [&](const std::vector<int>& chosen) {
                                       auto ids = assemble(chosen);
                                       if (test(ids)) {
                                           winner = chosen;
                                           found = true;
                                           return true;
                                       }
                                       return false;
                                   });
        } else {
#ifdef _OPENMP
            const int nfree = static_cast<int>(free_ids.size());
            int best_head = nfree; // shared lexicographic frontier
            std::vector<int> best_tail;
#pragma omp parallel
            {
                std::vector<int> scratch;
#pragma omp for schedule(dynamic, 1)
                for (int head = 0; head <= nfree - pick; ++head) {
                    int frontier;
#pragma omp atomic read
                    frontier = best_head;
                    if (head > frontier) continue;
                    scratch.assign(1, head);
                    std::vector<int> local;
                    enumerate_combinations(nfree, head + 1, pick - 1, scratch,
                                           [&](const std::vector<int>& chosen) {
                                               auto ids = assemble(chosen);
                                               if (test(ids)) {
                                                   local = chosen;
                                                   return true;
                                               }
                                               int fr;
#pragma omp atomic read
                                               fr = best_head;
                                               return head > fr; // solution exists to our left
                                           });
                    if (!local.empty()) {
#pragma omp critical
                        {
                            if (head < best_head) {
                                best_head = head;
                                best_tail = local;
                            }
                        }
                    }
                }
            }
            if (best_head < nfree) {
                winner = best_tail;
                found = true;
            }
#else
            std::vector<int> scratch;
            enumerate_combinations(static_cast<int>(free_ids.size()), 0, pick, scratch,
                                   [&](const std::vector<int>& chosen) {
                                       auto ids = assemble(chosen);
                                       if (test(ids)) {
                                           winner = chosen;
                                           found = true;
                                           return true;
                                       }
                                       return false;
                                   });
#endif
        }

        if (found) {
            auto ids = assemble(winner);
            cert.found = true;
            cert.size = size;
            cert.exhaustive = true;
            cert.searched_up_to = size;
            for (int id : ids) cert.witness.push_back((*universe)[static_cast<size_t>(id)]);
            return cert;
        }
    }
    cert.found = false;
    cert.searched_up_to = max_size;
    cert.exhaustive = max_size >= n;
    return cert;
}

} // namespace

template <class K>
CutCertificate mhc_bruteforce(const SimplicialComplex& complex, const Chain<K>& gamma, int s,
                              int max_size, const std::vector<Simplex>& required) {
    return mhc_bruteforce_impl<K>(complex, gamma, s, max_size, required, true);
}

template <class K>
CutCertificate mhc_bruteforce_serial(const SimplicialComplex& complex, const Chain<K>& gamma,
                                     int s, int max_size, const std::vector<Simplex>& required) {
    return mhc_bruteforce_impl<K>(complex, gamma, s, max_size, required, false);
}

// ---------------------------------------------------------------------------
// H_0 minimum vertex cut

template <class K>
CutCertificate mhc_h0(const SimplicialComplex& complex, const std::map<Simplex, K>& coeffs) {
    const auto& verts = complex.skeleton(0);
    const int nv = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(static_cast<size_t>(nv));
    for (const Simplex& e : complex.skeleton(1)) {
        int a = complex.index_of(Simplex{e[0]});
        int b = complex.index_of(Simplex{e[1]});
        adj[static_cast<size_t>(a)].push_back(b);
        adj[static_cast<size_t>(b)].push_back(a);
    }
    std::vector<int> comp(static_cast<size_t>(nv), -1);
    std::vector<int> comp_size;
    for (int v = 0; v < nv; ++v) {
        if (comp[static_cast<size_t>(v)] >= 0) continue;
        int c = static_cast<int>(comp_size.size());
        comp_size.push_back(0);
        std::vector<int> stack{v};
        comp[static_cast<size_t>(v)] = c;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp_size[static_cast<size_t>(c)]++;
            for (int w : adj[static_cast<size_t>(u)]) {
                if (comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = c;
                    stack.push_back(w);
                }
            }
        }
    }

    std::vector<char> seen(comp_size.size(), 0);
    int best = -1;
    for (const auto& [v, lambda] : coeffs) {
        if (v.dim() != 0 || !complex.contains(v))
            fail(errc::domain, "mhc_h0: representative is not a vertex of K");
        int c = comp[static_cast<size_t>(complex.index_of(v))];
        if (seen[static_cast<size_t>(c)])
            fail(errc::domain, "mhc_h0: two representatives in one component");
        seen[static_cast<size_t>(c)] = 1;
        if (field_traits<K>::is_zero(lambda)) continue;
        if (best < 0 || comp_size[static_cast<size_t>(c)] < comp_size[static_cast<size_t>(best)])
            best = c;
    }
    if (best < 0) fail(errc::domain, "mhc_h0: gamma is zero");

    CutCertificate cert;
    cert.s = 0;
    cert.found = true;
    cert.exhaustive = true;
    cert.size = comp_size[static_cast<size_t>(best)];
    cert.searched_up_to = cert.size;
    for (int v = 0; v < nv; ++v)
        if (comp[static_cast<size_t>(v)] == best) cert.witness.push_back(verts[static_cast<size_t>(v)]);
    return cert;
}

// ---------------------------------------------------------------------------
// exact structured search: hitting sets over generated witness cycles

namespace {

struct HittingSetSolver {
    const std::vector<std::vector<int>>& sets;
    const std::vector<int>& forced;
    std::vector<char> in_chosen;
    std::vector<int> chosen;
    std::vector<int> best;
    bool have_best = false;

    HittingSetSolver(const std::vector<std::vector<int>>& s, const std::vector<int>& f, int n)
        : sets(s), forced(f), in_chosen(static_cast<size_t>(n), 0) {}

    bool hit(const std::vector<int>& set) const {
        for (int e : set)
            if (in_chosen[static_cast<size_t>(e)]) return true;
        return false;
    }

    // greedy count of pairwise-disjoint unhit sets
    int lower_bound() const {
        std::vector<char> used(in_chosen.size(), 0);
        int lb = 0;
        for (const auto& set : sets) {
            if (hit(set)) continue;
            bool free = true;
            for (int e : set)
                if (used[static_cast<size_t>(e)]) { free = false; break; }
            if (!free) continue;
            for (int e : set) used[static_cast<size_t>(e)] = 1;
            ++lb;
        }
        return lb;
    }

    void dfs() {
        if (have_best && static_cast<int>(chosen.size()) + lower_bound() >=
                             static_cast<int>(best.size()))
            return;
        const std::vector<int>* branch = nullptr;
        for (const auto& set : sets) {
            if (!hit(set)) { branch = &set; break; }
        }
        if (!branch) {
            if (!have_best || chosen.size() < best.size()) {
                best = chosen;
                have_best = true;
            }
            return;
        }
        for (int e : *branch) {
            if (in_chosen[static_cast<size_t>(e)]) continue;
            in_chosen[static_cast<size_t>(e)] = 1;
            chosen.push_back(e);
            dfs();
            chosen.pop_back();
            in_chosen[static_cast<size_t>(e)] = 0;
        }
    }

    std::vector<int> solve() {
        chosen = forced;
        for (int e : forced) in_chosen[static_cast<size_t>(e)] = 1;
        dfs();
        std::sort(best.begin(), best.end());
        return best;
    }
};

} // namespace

template <class K>
CutCertificate mhc_exact_cutgen(const SimplicialComplex& complex, const Chain<K>& gamma, int s,
                                const std::vector<Simplex>& required, int upper_bound_hint) {
    CutOracle<K> oracle(complex, gamma, s);
    if (oracle.null_class()) fail(errc::domain, "mhc: gamma is null-homologous");
    const auto& universe = oracle.universe();
    const int n = static_cast<int>(universe.size());

    std::vector<int> forced;
    for (const Simplex& r : required) {
        auto it = std::lower_bound(universe.begin(), universe.end(), r);
        if (it == universe.end() || !(*it == r)) fail(errc::domain, "required simplex outside K^(s)");
        forced.push_back(static_cast<int>(it - universe.begin()));
    }
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());

    std::vector<std::vector<int>> family;
    (void)upper_bound_hint;
    for (int round = 0; round < 100000; ++round) {
        HittingSetSolver solver(family, forced, n);
        std::vector<int> hs = solver.solve();
        if (oracle(hs)) {
            CutCertificate cert;
            cert.s = s;
            cert.found = true;
            cert.exhaustive = true;
            cert.size = static_cast<int>(hs.size());
            cert.searched_up_to = cert.size;
            for (int id : hs) cert.witness.push_back(universe[static_cast<size_t>(id)]);
            return cert;
        }
        auto z = oracle.surviving_cycle(hs);
        if (!z) fail(errc::internal, "cut test and witness extraction disagree");
        std::vector<int> face_ids;
        for (const auto& [edge, c] : z->terms()) {
            if (s == 1) {
                auto it = std::lower_bound(universe.begin(), universe.end(), edge);
                face_ids.push_back(static_cast<int>(it - universe.begin()));
            } else {
                for (int v : edge.vertices()) {
                    Simplex vs{v};
                    auto it = std::lower_bound(universe.begin(), universe.end(), vs);
                    face_ids.push_back(static_cast<int>(it - universe.begin()));
                }
            }
        }
        std::sort(face_ids.begin(), face_ids.end());
        face_ids.erase(std::unique(face_ids.begin(), face_ids.end()), face_ids.end());
        family.push_back(std::move(face_ids));
    }
    fail(errc::internal, "mhc_exact_cutgen did not converge");
}

// ---------------------------------------------------------------------------
// predeath complex and robustness

template <class K>
std::pair<SimplicialComplex, Chain<K>> predeath_complex(const Filtration& f, const Bar& bar) {
    if (!bar.finite()) fail(errc::unsupported, "predeath complex of an essential bar");
    if (bar.death_index <= 0 || bar.death_index >= static_cast<int>(f.order.size()))
        fail(errc::domain, "bar does not belong to this filtration");
    SimplicialComplex K_B = f.prefix(static_cast<size_t>(bar.death_index));
    const Simplex& tau = f.order[static_cast<size_t>(bar.death_index)];
    if (bar.death_simplex && !(*bar.death_simplex == tau))
        fail(errc::domain, "bar death simplex does not match the filtration");
    Chain<K> dtau = boundary<K>(tau);
    return {std::move(K_B), std::move(dtau)};
}

RobustnessVerdict robustness(const Filtration& f, const Bar& bar, int s, int k, FieldTag field,
                             CutStrategy strategy, int max_size_override) {
    if (!bar.finite()) fail(errc::unsupported, "robustness of an essential bar is not supported");
    if (s > bar.dim) fail(errc::domain, "robustness: s must not exceed the bar dimension");
    if (k < 0) fail(errc::domain, "robustness: k must be non-negative");

    RobustnessVerdict v;
    v.bar = bar;
    v.s = s;
    v.k = k;

    auto run = [&](auto field_tag_value) {
        using KF = decltype(field_tag_value);
        auto [K_B, dtau] = predeath_complex<KF>(f, bar);
        switch (strategy) {
        case CutStrategy::Bruteforce: {
            int limit = max_size_override >= 0 ? max_size_override : k;
            v.min_cut = mhc_bruteforce<KF>(K_B, dtau, s, limit);
            break;
        }
        case CutStrategy::H0: {
            if (bar.dim != 0 || s != 0)
                fail(errc::config, "h0 strategy needs a 0-dimensional bar and s = 0");
            std::map<Simplex, KF> coeffs;
            {
                // representative = smallest vertex of each component
                const auto& verts = K_B.skeleton(0);
                std::map<int, Simplex> rep;
                std::map<int, KF> sum;
                std::map<int, int> comp_of;
                // recompute components locally (cheap, keeps mhc_h0 the only
                // place the linear-time path lives)
                std::vector<std::vector<int>> adj(verts.size());
                for (const Simplex& e : K_B.skeleton(1)) {
                    int a = K_B.index_of(Simplex{e[0]});
                    int b = K_B.index_of(Simplex{e[1]});
                    adj[static_cast<size_t>(a)].push_back(b);
                    adj[static_cast<size_t>(b)].push_back(a);
                }
                std::vector<int> comp(verts.size(), -1);
                int nc = 0;
                for (size_t i = 0; i < verts.size(); ++i) {
                    if (comp[i] >= 0) continue;
                    std::vector<int> stack{static_cast<int>(i)};
                    comp[i] = nc;
                    while (!stack.empty()) {
                        int u = stack.back();
                        stack.pop_back();
                        for (int w : adj[static_cast<size_t>(u)])
                            if (comp[static_cast<size_t>(w)] < 0) {
                                comp[static_cast<size_t>(w)] = nc;
                                stack.push_back(w);
                            }
                    }
                    ++nc;
                }
                for (size_t i = 0; i < verts.size(); ++i)
                    if (!rep.count(comp[i])) rep.emplace(comp[i], verts[i]);
                for (int c = 0; c < nc; ++c) sum[c] = field_traits<KF>::zero();
                for (const auto& [sx, cc] : dtau.terms())
                    sum[comp[static_cast<size_t>(K_B.index_of(sx))]] += cc;
                for (int c = 0; c < nc; ++c) coeffs.emplace(rep.at(c), sum.at(c));
            }
            v.min_cut = mhc_h0<KF>(K_B, coeffs);
            break;
        }
        case CutStrategy::Embedded:
            fail(errc::config,
                 "embedded strategy needs embedded input; use the embedded module entry point");
        }
    };
    if (field == FieldTag::GF2)
        run(F2{});
    else
        run(Rat{});

    v.robust = !(v.min_cut.found && v.min_cut.size <= k);
    return v;
}

// explicit instantiations
template bool is_cut<F2>(const SimplicialComplex&, const Chain<F2>&, const std::vector<Simplex>&, int);
template bool is_cut<Rat>(const SimplicialComplex&, const Chain<Rat>&, const std::vector<Simplex>&, int);
template class CutOracle<F2>;
template class CutOracle<Rat>;
template CutCertificate mhc_bruteforce<F2>(const SimplicialComplex&, const Chain<F2>&, int, int,
                                           const std::vector<Simplex>&);
template CutCertificate mhc_bruteforce<Rat>(const SimplicialComplex&, const Chain<Rat>&, int, int,
                                            const std::vector<Simplex>&);
template CutCertificate mhc_bruteforce_serial<F2>(const SimplicialComplex&, const Chain<F2>&, int,
                                                  int, const std::vector<Simplex>&);
template CutCertificate mhc_bruteforce_serial<Rat>(const SimplicialComplex&, const Chain<Rat>&,
                                                   int, int, const std::vector<Simplex>&);
template CutCertificate mhc_h0<F2>(const SimplicialComplex&, const std::map<Simplex, F2>&);
template CutCertificate mhc_h0<Rat>(const SimplicialComplex&, const std::map<Simplex, Rat>&);
template CutCertificate mhc_exact_cutgen<F2>(const SimplicialComplex&, const Chain<F2>&, int,
                                             const std::vector<Simplex>&, int);
template CutCertificate mhc_exact_cutgen<Rat>(const SimplicialComplex&, const Chain<Rat>&, int,
                                              const std::vector<Simplex>&, int);
template std::pair<SimplicialComplex, Chain<F2>> predeath_complex<F2>(const Filtration&, const Bar&);
template std::pair<SimplicialComplex, Chain<Rat>> predeath_complex<Rat>(const Filtration&,
                                                                        const Bar&);

} // namespace homcut

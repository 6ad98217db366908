#include "homcut/gadgets.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <cmath>
#include <map>

namespace homcut {

Chain<Rat> closed_walk_chain(const std::vector<int>& walk) {
    Chain<Rat> z(1);
    for (size_t i = 0; i < walk.size(); ++i) {
        int u = walk[i], v = walk[(i + 1) % walk.size()];
        if (u < v)
            z.add(Simplex{u, v}, Rat(1));
        else
            z.add(Simplex{v, u}, Rat(-1));
    }
    return z;
}

// ---------------------------------------------------------------------------
// X3C bookkeeping

bool x3c_solvable(const X3CInstance& inst) {
    if (inst.universe.size() % 3 != 0) return false;
    std::map<int, int> pos;
    for (size_t i = 0; i < inst.universe.size(); ++i) pos.emplace(inst.universe[i], static_cast<int>(i));
    std::vector<uint32_t> masks;
    for (const auto& S : inst.sets) {
        uint32_t m = 0;
        for (int u : S) m |= (1u << pos.at(u));
        masks.push_back(m);
    }
    uint32_t full = (inst.universe.size() == 32) ? ~0u : ((1u << inst.universe.size()) - 1);
    std::function<bool(uint32_t, size_t)> rec = [&](uint32_t covered, size_t from) {
        if (covered == full) return true;
        // branch on the first uncovered element
        int first = __builtin_ctz(~covered & full);
        for (size_t i = from; i < masks.size(); ++i) {
            if (!(masks[i] & (1u << first))) continue;
            if (masks[i] & covered) continue;
            if (rec(covered | masks[i], 0)) return true;
        }
        return false;
    };
    return rec(0, 0);
}

int x3c_min_cover(const X3CInstance& inst) {
    std::map<int, int> pos;
    for (size_t i = 0; i < inst.universe.size(); ++i) pos.emplace(inst.universe[i], static_cast<int>(i));
    std::vector<uint32_t> masks;
    for (const auto& S : inst.sets) {
        uint32_t m = 0;
        for (int u : S) m |= (1u << pos.at(u));
        masks.push_back(m);
    }
    uint32_t full = (1u << inst.universe.size()) - 1;
    int best = -1;
    std::function<void(uint32_t, size_t, int)> rec = [&](uint32_t covered, size_t from, int used) {
        if (best >= 0 && used >= best) return;
        if (covered == full) {
            best = used;
            return;
        }
        int first = __builtin_ctz(~covered & full);
        for (size_t i = from; i < masks.size(); ++i)
            if (masks[i] & (1u << first)) rec(covered | masks[i], 0, used + 1);
    };
    rec(0, 0, 0);
    return best;
}

int x3c_max_multiplicity(const X3CInstance& inst) {
    int k = 0;
    for (int u : inst.universe) {
        int cnt = 0;
        for (const auto& S : inst.sets)
            if (S[0] == u || S[1] == u || S[2] == u) ++cnt;
        k = std::max(k, cnt);
    }
    return k;
}

int gadget_cut_constant(int k) {
    int levels = 0;
    int reach = 1;
    while (reach < k) {
        reach *= 3;
        ++levels;
    }
    return 5 * levels + 3;
}

int gadget_cut_bound(const X3CInstance& inst) {
    int c = gadget_cut_constant(x3c_max_multiplicity(inst));
    int n = static_cast<int>(inst.universe.size());
    return c * n + n / 3 + 1;
}

// ---------------------------------------------------------------------------
// building blocks

SimplicialComplex Fragment::complex() const {
    std::vector<std::vector<int>> gens;
    for (const auto& t : triangles) gens.push_back({t[0], t[1], t[2]});
    return build_complex(gens);
}

Chain<Rat> Fragment::outer_chain() const { return closed_walk_chain(outer); }

namespace {

// 6 triangles of a ring between two 3-circles given in cyclic order.
void add_ring(std::vector<std::array<int, 3>>& tris, const std::array<int, 3>& a,
              const std::array<int, 3>& b) {
    for (int j = 0; j < 3; ++j) {
        int j1 = (j + 1) % 3;
        tris.push_back({a[static_cast<size_t>(j)], a[static_cast<size_t>(j1)], b[static_cast<size_t>(j)]});
        tris.push_back({a[static_cast<size_t>(j1)], b[static_cast<size_t>(j)], b[static_cast<size_t>(j1)]});
    }
}

struct Builder {
    std::vector<std::array<int, 3>> tris;
    int next = 0;
    std::array<int, 3> fresh3() {
        std::array<int, 3> c{next, next + 1, next + 2};
        next += 3;
        return c;
    }
};

// disk with three holes; outer = given circle, returns the three hole circles
std::array<std::array<int, 3>, 3> add_disk3(Builder& b, const std::array<int, 3>& outer) {
    std::array<int, 3> inner = b.fresh3(); // d, e, f
    int a = outer[0], b2 = outer[1], c = outer[2];
    int d = inner[0], e = inner[1], f = inner[2];
    b.tris.push_back({a, b2, f});
    b.tris.push_back({a, c, d});
    b.tris.push_back({b2, c, e});
    b.tris.push_back({d, e, f});
    return {{{a, d, f}, {b2, e, f}, {c, d, e}}};
}

// double collar hanging inward from `outer`; returns its inner circle
std::array<int, 3> add_collar(Builder& b, const std::array<int, 3>& outer) {
    std::array<int, 3> mid = b.fresh3();
    std::array<int, 3> inner = b.fresh3();
    add_ring(b.tris, outer, mid);
    add_ring(b.tris, mid, inner);
    return inner;
}

// main block: collar around a disk3; returns the three hole circles
std::array<std::array<int, 3>, 3> add_main(Builder& b, const std::array<int, 3>& outer) {
    std::array<int, 3> mid = b.fresh3();
    std::array<int, 3> dout = b.fresh3();
    add_ring(b.tris, outer, mid);
    add_ring(b.tris, mid, dout);
    return add_disk3(b, dout);
}

Fragment finish(Builder& b, const std::array<int, 3>& outer,
                std::vector<std::pair<int, std::array<int, 3>>> holes) {
    Fragment f;
    f.triangles = std::move(b.tris);
    f.nverts = b.next;
    f.outer = {outer[0], outer[1], outer[2]};
    for (auto& [label, circ] : holes)
        f.holes.emplace_back(label, std::vector<int>{circ[0], circ[1], circ[2]});
    return f;
}

} // namespace

Fragment block_disk3() {
    Builder b;
    auto outer = b.fresh3();
    auto holes = add_disk3(b, outer);
    return finish(b, outer, {{0, holes[0]}, {1, holes[1]}, {2, holes[2]}});
}

Fragment block_double_collar() {
    Builder b;
    auto outer = b.fresh3();
    auto inner = add_collar(b, outer);
    return finish(b, outer, {{0, inner}});
}

Fragment block_main() {
    Builder b;
    auto outer = b.fresh3();
    auto holes = add_main(b, outer);
    return finish(b, outer, {{0, holes[0]}, {1, holes[1]}, {2, holes[2]}});
}

Fragment build_Lu(const std::vector<int>& sets_containing_u, int k) {
    if (sets_containing_u.empty()) fail(errc::domain, "element contained in no set");
    if (static_cast<int>(sets_containing_u.size()) > k)
        fail(errc::domain, "k below the element's multiplicity");
    int levels = 0;
    for (int reach = 1; reach < k; reach *= 3) ++levels;

    Builder b;
    auto outer = b.fresh3();
    std::vector<std::array<int, 3>> slots{outer};
    for (int l = 0; l < levels; ++l) {
        std::vector<std::array<int, 3>> next_slots;
        for (const auto& slot : slots) {
            auto holes = add_main(b, slot);
            next_slots.insert(next_slots.end(), holes.begin(), holes.end());
        }
        slots = std::move(next_slots);
    }
    if (static_cast<int>(slots.size()) < static_cast<int>(sets_containing_u.size()))
        fail(errc::internal, "not enough slots for the containing sets");

    std::vector<std::pair<int, std::array<int, 3>>> labeled;
    size_t si = 0;
    for (; si < sets_containing_u.size(); ++si) {
        auto inner = add_collar(b, slots[si]);
        labeled.emplace_back(sets_containing_u[si], inner);
    }
    for (; si < slots.size(); ++si)
        b.tris.push_back(slots[si]); // cap the unused boundary with a triangle
    return finish(b, outer, std::move(labeled));
}

// ---------------------------------------------------------------------------
// coherent orientations and boundary walks

namespace {

// Chain of all triangles with signs chosen so that interior edges cancel;
// the surface must be orientable with every edge in at most two triangles.
Chain<Rat> coherent_chain(const SimplicialComplex& surface) {
    const auto& tris = surface.skeleton(2);
    std::map<Simplex, std::vector<size_t>> by_edge;
    for (size_t t = 0; t < tris.size(); ++t)
        for (int i = 0; i <= 2; ++i) by_edge[tris[t].face(i)].push_back(t);
    for (auto& [e, owners] : by_edge)
        if (owners.size() > 2) fail(errc::domain, "not a surface: edge with three cofaces");

    std::vector<int> sign(tris.size(), 0);
    for (size_t root = 0; root < tris.size(); ++root) {
        if (sign[root] != 0) continue;
        sign[root] = 1;
        std::vector<size_t> stack{root};
        while (!stack.empty()) {
            size_t t = stack.back();
            stack.pop_back();
            Chain<Rat> bd = boundary<Rat>(tris[t]) * Rat(sign[t]);
            for (int i = 0; i <= 2; ++i) {
                const Simplex e = tris[t].face(i);
                for (size_t o : by_edge.at(e)) {
                    if (o == t) continue;
                    Chain<Rat> bo = boundary<Rat>(tris[o]);
                    // opposite induced signs on the shared edge
                    int needed = (sgn(bd.coeff(e)) == sgn(bo.coeff(e))) ? -1 : 1;
                    if (sign[o] == 0) {
                        sign[o] = needed;
                        stack.push_back(o);
                    } else if (sign[o] != needed) {
                        fail(errc::domain, "surface is not orientable");
                    }
                }
            }
        }
    }
    Chain<Rat> F(2);
    for (size_t t = 0; t < tris.size(); ++t) F.add(tris[t], Rat(sign[t]));
    return F;
}

// Oriented boundary circles of a fundamental chain, as vertex walks.
std::vector<std::vector<int>> boundary_walks(const Chain<Rat>& dF) {
    std::map<int, int> succ;
    for (const auto& [e, c] : dF.terms()) {
        if (abs(c) != Rat(1)) fail(errc::internal, "boundary chain with unexpected weight");
        int from = sgn(c) > 0 ? e[0] : e[1];
        int to = sgn(c) > 0 ? e[1] : e[0];
        if (succ.count(from)) fail(errc::internal, "boundary is not a disjoint union of circles");
        succ[from] = to;
    }
    std::vector<std::vector<int>> walks;
    std::set<int> seen;
    for (const auto& [v, w] : succ) {
        if (seen.count(v)) continue;
        std::vector<int> walk;
        int cur = v;
        do {
            walk.push_back(cur);
            seen.insert(cur);
            cur = succ.at(cur);
        } while (cur != v);
        walks.push_back(std::move(walk));
    }
    return walks;
}

std::vector<int> rotate_to_min(std::vector<int> walk) {
    auto it = std::min_element(walk.begin(), walk.end());
    std::rotate(walk.begin(), it, walk.end());
    return walk;
}

} // namespace

GadgetComplex build_x3c_complex(const X3CInstance& inst) {
    GadgetComplex g;
    g.k = x3c_max_multiplicity(inst);
    if (g.k == 0) fail(errc::domain, "instance without sets");
    g.c = gadget_cut_constant(g.k);

    // canonical oriented circles per label: -1 = the common outer circle,
    // s >= 0 = set s
    std::map<int, std::vector<int>> canonical;
    int next_global = 0;
    std::vector<std::array<int, 3>> global_tris;

    for (int u : inst.universe) {
        std::vector<int> sets_u;
        for (size_t s = 0; s < inst.sets.size(); ++s)
            if (inst.sets[s][0] == u || inst.sets[s][1] == u || inst.sets[s][2] == u)
                sets_u.push_back(static_cast<int>(s));
        Fragment lu = build_Lu(sets_u, g.k);

        // induced boundary orientation of the standalone piece
        SimplicialComplex local = lu.complex();
        Chain<Rat> F = coherent_chain(local);
        Chain<Rat> dF = boundary(F);
        // fix the global sign: the outer circle must appear in its walk order
        std::vector<std::vector<int>> walks = boundary_walks(dF);
        std::map<int, std::vector<int>> walk_of; // label -> oriented local walk
        auto classify = [&](const std::vector<int>& walk) {
            std::set<int> vs(walk.begin(), walk.end());
            if (vs == std::set<int>(lu.outer.begin(), lu.outer.end())) return -1;
            for (auto& [label, circ] : lu.holes)
                if (vs == std::set<int>(circ.begin(), circ.end())) return label;
            fail(errc::internal, "unlabeled boundary circle");
        };
        for (auto& w : walks) walk_of[classify(w)] = rotate_to_min(w);
        if (static_cast<int>(walk_of.size()) != static_cast<int>(lu.holes.size()) + 1)
            fail(errc::internal, "boundary circle count mismatch");

        // map local ids to global ids, aligning labeled circles walk-to-walk
        std::vector<int> to_global(static_cast<size_t>(lu.nverts), -1);
        bool flip = false;
        for (auto& [label, walk] : walk_of) {
            auto it = canonical.find(label);
            if (it == canonical.end()) {
                std::vector<int> gw;
                for (int lv : walk) {
                    to_global[static_cast<size_t>(lv)] = next_global;
                    gw.push_back(next_global++);
                }
                canonical.emplace(label, std::move(gw));
            } else {
                const std::vector<int>& gw = it->second;
                for (size_t i = 0; i < walk.size(); ++i)
                    to_global[static_cast<size_t>(walk[i])] = gw[i];
            }
        }
        (void)flip;
        for (int lv = 0; lv < lu.nverts; ++lv)
            if (to_global[static_cast<size_t>(lv)] < 0)
                to_global[static_cast<size_t>(lv)] = next_global++;

        std::vector<Simplex> tri_simplices;
        for (const auto& t : lu.triangles) {
            std::array<int, 3> gt{to_global[static_cast<size_t>(t[0])],
                                  to_global[static_cast<size_t>(t[1])],
                                  to_global[static_cast<size_t>(t[2])]};
            global_tris.push_back(gt);
            std::vector<int> vs{gt[0], gt[1], gt[2]};
            std::sort(vs.begin(), vs.end());
            tri_simplices.emplace_back(vs);
        }
        std::sort(tri_simplices.begin(), tri_simplices.end());
        g.per_u_triangles.emplace(u, std::move(tri_simplices));
    }

    std::vector<std::vector<int>> gens;
    for (const auto& t : global_tris) gens.push_back({t[0], t[1], t[2]});
    g.complex = build_complex(gens);

    g.outer_cycle = closed_walk_chain(canonical.at(-1));
    g.gamma = g.outer_cycle;
    for (const auto& [label, walk] : canonical)
        if (label >= 0) g.set_cycles.emplace(label, closed_walk_chain(walk));

    // fundamental chains in global ids with the sign that exposes the outer
    // circle positively
    for (int u : inst.universe) {
        SimplicialComplex sub = per_u_subcomplex(g, u);
        Chain<Rat> F = coherent_chain(sub);
        Chain<Rat> dF = boundary(F);
        const Simplex& probe = g.outer_cycle.terms().begin()->first;
        if (dF.coeff(probe) != g.outer_cycle.coeff(probe)) F = F * Rat(-1);
        g.fundamental.emplace(u, std::move(F));
    }
    return g;
}

SimplicialComplex per_u_subcomplex(const GadgetComplex& g, int u) {
    auto it = g.per_u_triangles.find(u);
    if (it == g.per_u_triangles.end()) fail(errc::domain, "unknown element");
    std::vector<std::vector<int>> gens;
    for (const Simplex& t : it->second) gens.push_back(t.vertices());
    return build_complex(gens);
}

} // namespace homcut

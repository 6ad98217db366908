#include "homcut/persistence.hpp"
#include "homcut/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace homcut {

std::vector<Bar> Barcode::in_dim(int p) const {
    std::vector<Bar> out;
    for (const Bar& b : bars)
        if (b.dim == p) out.push_back(b);
    return out;
}

const Bar* Barcode::bar_born_at(int birth_index) const {
    for (const Bar& b : bars)
        if (b.birth_index == birth_index) return &b;
    return nullptr;
}

const Bar* Barcode::bar_dying_at(int death_index) const {
    for (const Bar& b : bars)
        if (b.death_index == death_index) return &b;
    return nullptr;
}

namespace {

// Sparse reduction column, entries sorted by row; the pivot is the largest
// row index.
template <class K>
struct SparseCol {
    std::vector<std::pair<int, K>> e;

    int low() const { return e.empty() ? -1 : e.back().first; }
    K low_coeff() const { return e.back().second; }

    // this += other * factor
    void axpy(const SparseCol& other, const K& factor) {
        std::vector<std::pair<int, K>> merged;
        merged.reserve(e.size() + other.e.size());
        size_t i = 0, j = 0;
        while (i < e.size() || j < other.e.size()) {
            if (j == other.e.size() || (i < e.size() && e[i].first < other.e[j].first)) {
                merged.push_back(e[i++]);
            } else if (i == e.size() || other.e[j].first < e[i].first) {
                merged.emplace_back(other.e[j].first, other.e[j].second * factor);
                ++j;
            } else {
                K c = e[i].second + other.e[j].second * factor;
                if (!field_traits<K>::is_zero(c)) merged.emplace_back(e[i].first, c);
                ++i;
                ++j;
            }
        }
        e = std::move(merged);
    }
};

} // namespace

template <class K>
Barcode reduce_t(const Filtration& f) {
    auto check = validate_filtration(f);
    if (!check.ok) fail(errc::filtration, "invalid filtration: " + check.reason);

    const size_t m = f.order.size();
    std::map<Simplex, int> pos;
    for (size_t i = 0; i < m; ++i) pos.emplace(f.order[i], static_cast<int>(i));

    std::vector<SparseCol<K>> cols(m);
    for (size_t j = 0; j < m; ++j) {
        const Simplex& s = f.order[j];
        if (s.dim() == 0) continue;
        Chain<K> b = boundary<K>(s);
        for (const auto& [face, c] : b.terms())
            cols[j].e.emplace_back(pos.at(face), c);
        std::sort(cols[j].e.begin(), cols[j].e.end(),
                  [](const auto& a, const auto& b2) { return a.first < b2.first; });
    }

    std::vector<int> low_owner(m, -1);
    std::vector<int> death_of(m, INF_INDEX);
    for (size_t j = 0; j < m; ++j) {
        auto& col = cols[j];
        while (!col.e.empty() && low_owner[static_cast<size_t>(col.low())] >= 0) {
            const auto& other = cols[static_cast<size_t>(low_owner[static_cast<size_t>(col.low())])];
            K factor = field_traits<K>::neg(col.low_coeff() * field_traits<K>::inv(other.low_coeff()));
            col.axpy(other, factor);
        }
        if (!col.e.empty()) {
            low_owner[static_cast<size_t>(col.low())] = static_cast<int>(j);
            death_of[static_cast<size_t>(col.low())] = static_cast<int>(j);
        }
    }

    Barcode bc;
    for (size_t i = 0; i < m; ++i) {
        if (!cols[i].e.empty()) continue; // i is a death column
        Bar bar;
        bar.dim = f.order[i].dim();
        bar.birth_index = static_cast<int>(i);
        bar.birth_simplex = f.order[i];
        bar.death_index = death_of[i];
        if (bar.finite()) bar.death_simplex = f.order[static_cast<size_t>(bar.death_index)];
        if (f.grades) {
            bar.birth_grade = (*f.grades)[i];
            if (bar.finite()) bar.death_grade = (*f.grades)[static_cast<size_t>(bar.death_index)];
        }
        bc.bars.push_back(std::move(bar));
    }
    std::sort(bc.bars.begin(), bc.bars.end(), [](const Bar& a, const Bar& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.birth_index < b.birth_index;
    });
    return bc;
}

Barcode reduce(const Filtration& f, FieldTag field) {
    return field == FieldTag::GF2 ? reduce_t<F2>(f) : reduce_t<Rat>(f);
}

template <class K>
static std::vector<K> chain_to_vector(const Chain<K>& z, const SimplicialComplex& K_, int p) {
    std::vector<K> v(K_.skeleton(p).size(), field_traits<K>::zero());
    for (const auto& [s, c] : z.terms()) {
        int idx = K_.index_of(s);
        if (idx < 0) fail(errc::domain, "chain not supported on the complex");
        v[static_cast<size_t>(idx)] = c;
    }
    return v;
}

// Cycle basis of Z_p(L) as coefficient vectors over K's p-simplices.
template <class K>
static std::vector<std::vector<K>> cycle_basis_in(const SimplicialComplex& K_,
                                                  const SimplicialComplex& L, int p) {
    std::vector<std::vector<K>> out;
    const auto& Lp = L.skeleton(p);
    const size_t nK = K_.skeleton(p).size();
    if (p == 0) {
        for (const Simplex& v : Lp) {
            std::vector<K> unit(nK, field_traits<K>::zero());
            unit[static_cast<size_t>(K_.index_of(v))] = field_traits<K>::one();
            out.push_back(std::move(unit));
        }
        return out;
    }
    Eliminator<K> elim(static_cast<int>(L.skeleton(p - 1).size()), true);
    for (const Simplex& s : Lp) {
        Chain<K> b = boundary<K>(s);
        std::vector<K> col(L.skeleton(p - 1).size(), field_traits<K>::zero());
        for (const auto& [face, c] : b.terms())
            col[static_cast<size_t>(L.index_of(face))] = c;
        elim.add(std::move(col));
    }
    for (const auto& combo : elim.kernel_combos()) {
        std::vector<K> cyc(nK, field_traits<K>::zero());
        for (size_t t = 0; t < combo.size(); ++t) {
            if (field_traits<K>::is_zero(combo[t])) continue;
            cyc[static_cast<size_t>(K_.index_of(Lp[t]))] = combo[t];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

template <class K>
bool image_membership(const SimplicialComplex& K_, const SimplicialComplex& L,
                      const Chain<K>& z, int p) {
    for (const Simplex& s : L.all_simplices())
        if (!K_.contains(s)) fail(errc::domain, "L is not a subcomplex of K");
    if (z.dim() != p) fail(errc::domain, "cycle dimension mismatch");
    if (!supported_on(z, K_)) fail(errc::domain, "z not supported on K");
    if (!is_cycle(z)) fail(errc::domain, "z is not a cycle");

    const size_t nK = K_.skeleton(p).size();
    Eliminator<K> span(static_cast<int>(nK));
    for (auto& cyc : cycle_basis_in<K>(K_, L, p)) span.add(std::move(cyc));
    for (const Simplex& t : K_.skeleton(p + 1))
        span.add(chain_to_vector(boundary<K>(t), K_, p));
    return span.contains(chain_to_vector(z, K_, p));
}

bool image_membership(const SimplicialComplex& K_, const SimplicialComplex& L,
                      const Chain<F2>& z, int p, FieldTag) {
    return image_membership<F2>(K_, L, z, p);
}
bool image_membership(const SimplicialComplex& K_, const SimplicialComplex& L,
                      const Chain<Rat>& z, int p, FieldTag) {
    return image_membership<Rat>(K_, L, z, p);
}

namespace {

// Vector/eliminator representation per field; GF(2) work is bit-packed.
template <class K>
struct VecOps {
    using Vec = std::vector<K>;
    using Elim = Eliminator<K>;
    static Elim make(int rows) { return Elim(rows, false); }
    static Vec pack(const std::vector<K>& dense) { return dense; }
};

template <>
struct VecOps<F2> {
    using Vec = std::vector<uint64_t>;
    using Elim = BitEliminator;
    static Elim make(int rows) { return Elim(rows, false); }
    static Vec pack(const std::vector<F2>& dense) {
        Vec v((dense.size() + 63) / 64, 0);
        for (size_t i = 0; i < dense.size(); ++i)
            if (dense[i].v) v[i >> 6] |= (uint64_t(1) << (i & 63));
        return v;
    }
};

// Rank function of the image module of an inclusion of simplex-wise
// filtrations. rank(i, j) = rank of H_p(L_i) -> H_p(K_j), where L_i is the
// part of L inserted within the first i+1 steps of fK. Computed by one
// elimination sweep per distinct i (cycles of L_i joined with boundaries of
// K_j as j grows).
template <class K>
class ImageRankOracle {
public:
    ImageRankOracle(const Filtration& fL, const Filtration& fK, int p)
        : p_(p), m_(static_cast<int>(fK.order.size())), K_(fK.full_complex()) {
        std::map<Simplex, int> posK;
        for (int i = 0; i < m_; ++i) posK.emplace(fK.order[static_cast<size_t>(i)], i);

        // L's p-cycles tagged with the K-position where they first exist
        {
            int last = -1;
            for (const Simplex& s : fL.order) {
                auto it = posK.find(s);
                if (it == posK.end()) fail(errc::domain, "fL is not a restriction of fK");
                if (it->second <= last) fail(errc::domain, "fL does not preserve the order of fK");
                last = it->second;
            }
            int rows = 0;
            std::map<Simplex, int> rowof;
            for (const Simplex& s : fL.order)
                if (s.dim() == p_ - 1) rowof.emplace(s, rows++);
            Eliminator<K> elim(rows, true);
            std::vector<const Simplex*> Lp;
            size_t kernel_seen = 0;
            for (const Simplex& s : fL.order) {
                if (s.dim() != p_) continue;
                std::vector<K> col(static_cast<size_t>(rows), field_traits<K>::zero());
                if (p_ > 0) {
                    Chain<K> b = boundary<K>(s);
                    for (const auto& [face, c] : b.terms())
                        col[static_cast<size_t>(rowof.at(face))] = c;
                }
                Lp.push_back(&s);
                elim.add(std::move(col));
                for (; kernel_seen < elim.kernel_combos().size(); ++kernel_seen) {
                    const auto& combo = elim.kernel_combos()[kernel_seen];
                    std::vector<K> cyc(K_.skeleton(p_).size(), field_traits<K>::zero());
                    for (size_t t = 0; t < combo.size(); ++t)
                        if (!field_traits<K>::is_zero(combo[t]))
                            cyc[static_cast<size_t>(K_.index_of(*Lp[t]))] = combo[t];
                    cycles_.emplace_back(posK.at(s), VecOps<K>::pack(cyc));
                }
            }
        }
        for (int i = 0; i < m_; ++i) {
            const Simplex& s = fK.order[static_cast<size_t>(i)];
            if (s.dim() != p_ + 1) continue;
            bnd_.emplace_back(i, VecOps<K>::pack(chain_to_vector(boundary<K>(s), K_, p_)));
        }
        // boundary-only ranks, one shared sweep
        auto elim = VecOps<K>::make(static_cast<int>(K_.skeleton(p_).size()));
        bnd_rank_.assign(static_cast<size_t>(m_) + 1, 0);
        size_t bi = 0;
        for (int j = 0; j < m_; ++j) {
            while (bi < bnd_.size() && bnd_[bi].first == j) elim.add(bnd_[bi++].second);
            bnd_rank_[static_cast<size_t>(j) + 1] = elim.rank();
        }
    }

    int rank(int i, int j) {
        if (i < 0 || j < 0) return 0;
        return joint_row(i)[static_cast<size_t>(j) + 1] - bnd_rank_[static_cast<size_t>(j) + 1];
    }

    int last_index() const { return m_ - 1; }

private:
    const std::vector<int>& joint_row(int i) {
        auto it = rows_.find(i);
        if (it != rows_.end()) return it->second;
        auto elim = VecOps<K>::make(static_cast<int>(K_.skeleton(p_).size()));
        for (const auto& [pos, cyc] : cycles_)
            if (pos <= i) elim.add(cyc);
        std::vector<int> row(static_cast<size_t>(m_) + 1, 0);
        row[0] = 0;
        size_t bi = 0;
        int base = elim.rank();
        for (int j = 0; j < m_; ++j) {
            while (bi < bnd_.size() && bnd_[bi].first == j) elim.add(bnd_[bi++].second);
            row[static_cast<size_t>(j) + 1] = elim.rank();
        }
        row[0] = base; // unused; ranks at j<0 are handled by rank()
        return rows_.emplace(i, std::move(row)).first->second;
    }

    int p_;
    int m_;
    SimplicialComplex K_;
    std::vector<std::pair<int, typename VecOps<K>::Vec>> cycles_;
    std::vector<std::pair<int, typename VecOps<K>::Vec>> bnd_;
    std::vector<int> bnd_rank_;
    std::map<int, std::vector<int>> rows_;
};

template <class K>
InducedMatchingResult induced_matching_t(const Filtration& fL, const Filtration& fK, int p) {
    InducedMatchingResult res;
    res.source = reduce_t<K>(fL);
    res.target = reduce_t<K>(fK);

    std::map<Simplex, int> posK;
    for (size_t i = 0; i < fK.order.size(); ++i) posK.emplace(fK.order[i], static_cast<int>(i));

    ImageRankOracle<K> oracle(fL, fK, p);
    const int last = oracle.last_index();

    struct SrcBar {
        size_t idx;
        int birth_k;
    };
    std::vector<SrcBar> sources;
    for (size_t i = 0; i < res.source.bars.size(); ++i) {
        const Bar& b = res.source.bars[i];
        if (b.dim == p) sources.push_back({i, posK.at(b.birth_simplex)});
    }
    std::sort(sources.begin(), sources.end(),
              [](const SrcBar& a, const SrcBar& b) { return a.birth_k < b.birth_k; });

    std::vector<size_t> target_inf; // essential target bars sorted by birth
    std::map<int, size_t> target_by_death;
    for (size_t i = 0; i < res.target.bars.size(); ++i) {
        const Bar& b = res.target.bars[i];
        if (b.dim != p) continue;
        if (b.finite())
            target_by_death.emplace(b.death_index, i);
        else
            target_inf.push_back(i);
    }
    std::sort(target_inf.begin(), target_inf.end(), [&](size_t a, size_t b) {
        return res.target.bars[a].birth_index < res.target.bars[b].birth_index;
    });

    std::vector<std::pair<int, size_t>> essential_images; // (birth, source bar idx)
    for (const SrcBar& src : sources) {
        const int b = src.birth_k;
        // lifetime of the image-module bar born at b (if any)
        auto alive = [&](int j) { return oracle.rank(b, j) - oracle.rank(b - 1, j); };
        if (alive(b) == 0) continue; // class dies in K instantly; no image bar
        if (alive(last) > 0) {
            essential_images.emplace_back(b, src.idx);
            continue;
        }
        // binary search the death: smallest j with alive(j) == 0
        int lo = b, hi = last; // alive(lo) = 1, alive(hi) = 0
        while (lo + 1 < hi) {
            int mid = lo + (hi - lo) / 2;
            (alive(mid) > 0 ? lo : hi) = mid;
        }
        int d = hi;
        auto it = target_by_death.find(d);
        if (it == target_by_death.end())
            fail(errc::internal, "image-module death is not a death of the target barcode");
        res.matching.pairs.emplace_back(src.idx, it->second);
    }
    std::sort(essential_images.begin(), essential_images.end());
    for (size_t t = 0; t < essential_images.size() && t < target_inf.size(); ++t)
        res.matching.pairs.emplace_back(essential_images[t].second, target_inf[t]);

    return res;
}

} // namespace

InducedMatchingResult induced_matching(const Filtration& fL, const Filtration& fK, int p,
                                       FieldTag field) {
    return field == FieldTag::GF2 ? induced_matching_t<F2>(fL, fK, p)
                                  : induced_matching_t<Rat>(fL, fK, p);
}

template <class K>
int persistent_rank(const Filtration& f, int p, int i, int j) {
    if (i < 0 || j < 0) return 0;
    if (i > j) fail(errc::domain, "persistent_rank needs i <= j");
    SimplicialComplex Ki = f.prefix(static_cast<size_t>(i) + 1);
    SimplicialComplex Kj = f.prefix(static_cast<size_t>(j) + 1);
    Eliminator<K> joint(static_cast<int>(Kj.skeleton(p).size()));
    Eliminator<K> bonly(static_cast<int>(Kj.skeleton(p).size()));
    for (auto& cyc : cycle_basis_in<K>(Kj, Ki, p)) joint.add(std::move(cyc));
    for (const Simplex& t : Kj.skeleton(p + 1)) {
        auto col = chain_to_vector(boundary<K>(t), Kj, p);
        joint.add(col);
        bonly.add(col);
    }
    return joint.rank() - bonly.rank();
}

template <class K>
std::vector<std::pair<int, int>> barcode_via_ranks(const Filtration& f, int p) {
    const int m = static_cast<int>(f.order.size());
    auto r = [&](int i, int j) { return persistent_rank<K>(f, p, i, j); };
    std::vector<std::pair<int, int>> bars;
    for (int b = 0; b < m; ++b) {
        if (f.order[static_cast<size_t>(b)].dim() != p) continue;
        for (int d = b + 1; d < m; ++d) {
            if (f.order[static_cast<size_t>(d)].dim() != p + 1) continue;
            int mu = r(b, d - 1) - r(b - 1, d - 1) - r(b, d) + r(b - 1, d);
            for (int t = 0; t < mu; ++t) bars.emplace_back(b, d);
        }
        int ess = r(b, m - 1) - r(b - 1, m - 1);
        for (int t = 0; t < ess; ++t) bars.emplace_back(b, INF_INDEX);
    }
    std::sort(bars.begin(), bars.end());
    return bars;
}

template Barcode reduce_t<F2>(const Filtration&);
template Barcode reduce_t<Rat>(const Filtration&);
template bool image_membership<F2>(const SimplicialComplex&, const SimplicialComplex&,
                                   const Chain<F2>&, int);
template bool image_membership<Rat>(const SimplicialComplex&, const SimplicialComplex&,
                                    const Chain<Rat>&, int);
template int persistent_rank<F2>(const Filtration&, int, int, int);
template int persistent_rank<Rat>(const Filtration&, int, int, int);
template std::vector<std::pair<int, int>> barcode_via_ranks<F2>(const Filtration&, int);
template std::vector<std::pair<int, int>> barcode_via_ranks<Rat>(const Filtration&, int);

} // namespace homcut

#pragma once

#include <map>

#include "homcut/field.hpp"
#include "homcut/simplex.hpp"

namespace homcut {

// Sparse chain with coefficients in K; zero coefficients are never stored.
template <class K>
class Chain {
public:
    using Terms = std::map<Simplex, K>;

    Chain() = default;
    explicit Chain(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t support_size() const { return terms_.size(); }

    K coeff(const Simplex& s) const {
        auto it = terms_.find(s);
        return it == terms_.end() ? field_traits<K>::zero() : it->second;
    }

    void add(const Simplex& s, const K& c) {
        if (field_traits<K>::is_zero(c)) return;
        if (s.dim() != dim_) fail(errc::domain, "chain term of wrong dimension");
        auto [it, fresh] = terms_.emplace(s, c);
        if (!fresh) {
            it->second += c;
            if (field_traits<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    Chain& operator+=(const Chain& o) {
        for (const auto& [s, c] : o.terms_) add(s, c);
        return *this;
    }
    Chain& operator-=(const Chain& o) {
        for (const auto& [s, c] : o.terms_) add(s, field_traits<K>::neg(c));
        return *this;
    }
    Chain operator+(const Chain& o) const { Chain r = *this; r += o; return r; }
    Chain operator-(const Chain& o) const { Chain r = *this; r -= o; return r; }
    Chain operator*(const K& c) const {
        Chain r(dim_);
        if (field_traits<K>::is_zero(c)) return r;
        for (const auto& [s, a] : terms_) r.add(s, a * c);
        return r;
    }
    friend bool operator==(const Chain& a, const Chain& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    int dim_ = 0;
    Terms terms_;
};

// Boundary of a single simplex: i-th face carries sign (-1)^i over the
// rationals, 1 over GF(2).
template <class K>
Chain<K> boundary(const Simplex& s) {
    Chain<K> out(s.dim() - 1);
    if (s.dim() == 0) return out;
    K sign = field_traits<K>::one();
    for (int i = 0; i <= s.dim(); ++i) {
        out.add(s.face(i), sign);
        sign = field_traits<K>::neg(sign);
    }
    return out;
}

template <class K>
Chain<K> boundary(const Chain<K>& z) {
    Chain<K> out(z.dim() - 1);
    for (const auto& [s, c] : z.terms()) out += boundary<K>(s) * c;
    return out;
}

template <class K>
bool is_cycle(const Chain<K>& z) {
    return z.dim() == 0 || boundary(z).empty();
}

// Does every simplex in the support belong to K?
template <class K>
bool supported_on(const Chain<K>& z, const SimplicialComplex& complex) {
    for (const auto& [s, c] : z.terms())
        if (!complex.contains(s)) return false;
    return true;
}

// Sparse boundary matrix of K in degree p: one column per p-simplex,
// rows indexed by (p-1)-simplices of K, both in skeleton order.
template <class K>
struct BoundaryMatrix {
    int rows = 0;
    // per column: sorted (row, coeff) pairs
    std::vector<std::vector<std::pair<int, K>>> cols;
};

template <class K>
BoundaryMatrix<K> boundary_matrix(const SimplicialComplex& complex, int p) {
    if (p < 1) fail(errc::domain, "boundary_matrix requires p >= 1");
    BoundaryMatrix<K> m;
    m.rows = static_cast<int>(complex.skeleton(p - 1).size());
    for (const Simplex& s : complex.skeleton(p)) {
        std::vector<std::pair<int, K>> col;
        K sign = field_traits<K>::one();
        for (int i = 0; i <= p; ++i) {
            int r = complex.index_of(s.face(i));
            if (r < 0) fail(errc::domain, "complex is not face-closed");
            col.emplace_back(r, sign);
            sign = field_traits<K>::neg(sign);
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        m.cols.push_back(std::move(col));
    }
    return m;
}

} // namespace homcut

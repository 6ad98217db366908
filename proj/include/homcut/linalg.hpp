#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "homcut/field.hpp"

namespace homcut {

// Incremental Gaussian elimination over an exact field. Columns are added
// one at a time; the structure maintains an echelon basis of their span and
// (optionally) the expression of each basis/kernel element as a combination
// of the added columns.
template <class K>
class Eliminator {
public:
    explicit Eliminator(int rows, bool track_combinations = false)
        : rows_(rows), track_(track_combinations) {}

    int rank() const { return static_cast<int>(basis_.size()); }
    int added() const { return n_added_; }
    bool spans_everything() const { return rank() == rows_; }

    // Returns true if the column increased the rank.
    bool add(std::vector<K> col) {
        std::vector<K> comb;
        if (track_) {
            comb.assign(static_cast<size_t>(n_added_) + 1, field_traits<K>::zero());
            comb.back() = field_traits<K>::one();
        }
        ++n_added_;
        reduce(col, track_ ? &comb : nullptr);
        int p = pivot_of(col);
        if (p < 0) {
            if (track_) kernel_combos_.push_back(std::move(comb));
            return false;
        }
        normalize(col, comb, p);
        basis_.push_back({std::move(col), p, std::move(comb)});
        return true;
    }

    bool contains(std::vector<K> col) const {
        reduce(col, nullptr);
        return pivot_of(col) < 0;
    }

    // Coefficients expressing col over the added columns, if col is in the span.
    std::optional<std::vector<K>> express(std::vector<K> col) const {
        if (!track_) throw std::logic_error("express() needs combination tracking");
        std::vector<K> comb(static_cast<size_t>(n_added_), field_traits<K>::zero());
        if (!reduce_with_comb(col, comb)) return std::nullopt;
        return comb;
    }

    // Combinations of the added columns that vanish (kernel of the column map).
    const std::vector<std::vector<K>>& kernel_combos() const { return kernel_combos_; }

private:
    struct BasisCol {
        std::vector<K> col;
        int pivot;
        std::vector<K> comb;
    };

    int pivot_of(const std::vector<K>& col) const {
        for (int i = 0; i < rows_; ++i)
            if (!field_traits<K>::is_zero(col[static_cast<size_t>(i)])) return i;
        return -1;
    }

    void normalize(std::vector<K>& col, std::vector<K>& comb, int p) {
        K inv = field_traits<K>::inv(col[static_cast<size_t>(p)]);
        for (K& x : col) x = x * inv;
        for (K& x : comb) x = x * inv;
    }

    void reduce(std::vector<K>& col, std::vector<K>* comb) const {
        for (const BasisCol& b : basis_) {
            const K& c = col[static_cast<size_t>(b.pivot)];
            if (field_traits<K>::is_zero(c)) continue;
            K f = c; // basis pivots are normalized to one
            for (int i = b.pivot; i < rows_; ++i) {
                const K& bv = b.col[static_cast<size_t>(i)];
                if (!field_traits<K>::is_zero(bv))
                    col[static_cast<size_t>(i)] -= f * bv;
            }
            if (comb) {
                comb->resize(std::max(comb->size(), b.comb.size()), field_traits<K>::zero());
                for (size_t i = 0; i < b.comb.size(); ++i)
                    (*comb)[i] -= f * b.comb[i];
            }
        }
    }

    // Reduces col and accumulates the expressing combination; true iff col
    // reduced to zero.
    bool reduce_with_comb(std::vector<K>& col, std::vector<K>& comb) const {
        for (const BasisCol& b : basis_) {
            const K& c = col[static_cast<size_t>(b.pivot)];
            if (field_traits<K>::is_zero(c)) continue;
            K f = c;
            for (int i = b.pivot; i < rows_; ++i) {
                const K& bv = b.col[static_cast<size_t>(i)];
                if (!field_traits<K>::is_zero(bv))
                    col[static_cast<size_t>(i)] -= f * bv;
            }
            for (size_t i = 0; i < b.comb.size(); ++i)
                comb[i] += f * b.comb[i];
        }
        return pivot_of(col) < 0;
    }

    int rows_;
    bool track_;
    int n_added_ = 0;
    std::vector<BasisCol> basis_;
    std::vector<std::vector<K>> kernel_combos_;
};

// Bit-packed variant of the same structure over GF(2).
class BitEliminator {
public:
    explicit BitEliminator(int rows, bool track_combinations = false)
        : rows_(rows), words_((rows + 63) / 64), track_(track_combinations) {}

    int rank() const { return static_cast<int>(basis_.size()); }
    int added() const { return n_added_; }
    bool spans_everything() const { return rank() == rows_; }

    static void set_bit(std::vector<uint64_t>& v, int i) {
        v[static_cast<size_t>(i >> 6)] ^= (uint64_t(1) << (i & 63));
    }
    static bool get_bit(const std::vector<uint64_t>& v, int i) {
        return (v[static_cast<size_t>(i >> 6)] >> (i & 63)) & 1;
    }

    std::vector<uint64_t> zero_vec() const { return std::vector<uint64_t>(words_, 0); }

    bool add(std::vector<uint64_t> col) {
        std::vector<uint64_t> comb;
        if (track_) {
            comb.assign(static_cast<size_t>((n_added_ + 64) / 64) + 1, 0);
            set_bit(comb, n_added_);
        }
        ++n_added_;
        reduce(col, track_ ? &comb : nullptr);
        int p = pivot_of(col);
        if (p < 0) {
            if (track_) kernel_combos_.push_back(std::move(comb));
            return false;
        }
        basis_.push_back({std::move(col), p, std::move(comb)});
        return true;
    }

    bool contains(std::vector<uint64_t> col) const {
        reduce(col, nullptr);
        return pivot_of(col) < 0;
    }

    const std::vector<std::vector<uint64_t>>& kernel_combos() const { return kernel_combos_; }

    int pivot_of(const std::vector<uint64_t>& col) const {
        for (size_t w = 0; w < col.size(); ++w)
            if (col[w]) return static_cast<int>(w * 64 + static_cast<size_t>(__builtin_ctzll(col[w])));
        return -1;
    }

private:
    struct BasisCol {
        std::vector<uint64_t> col;
        int pivot;
        std::vector<uint64_t> comb;
    };

    static void xor_into(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
        if (dst.size() < src.size()) dst.resize(src.size(), 0);
        for (size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
    }

    void reduce(std::vector<uint64_t>& col, std::vector<uint64_t>* comb) const {
        for (const BasisCol& b : basis_) {
            if (!get_bit(col, b.pivot)) continue;
            xor_into(col, b.col);
            if (comb) xor_into(*comb, b.comb);
        }
    }

    int rows_;
    int words_;
    bool track_;
    int n_added_ = 0;
    std::vector<BasisCol> basis_;
    std::vector<std::vector<uint64_t>> kernel_combos_;
};

} // namespace homcut

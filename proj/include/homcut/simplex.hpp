#pragma once

#include <vector>
#include <map>
#include <set>
#include <optional>
#include <cstdint>

#include "homcut/errors.hpp"

namespace homcut {

// An abstract simplex: strictly increasing, non-empty vertex id list.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<int> vertices);
    Simplex(std::initializer_list<int> vertices);

    const std::vector<int>& vertices() const { return v_; }
    int dim() const { return static_cast<int>(v_.size()) - 1; }
    int operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    // i-th face: drop the i-th vertex. Only valid for dim() >= 1.
    Simplex face(int i) const;

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Simplex& a, const Simplex& b) { return a.v_ != b.v_; }
    // Order: by dimension, then lexicographic on vertex lists.
    friend bool operator<(const Simplex& a, const Simplex& b) {
        if (a.v_.size() != b.v_.size()) return a.v_.size() < b.v_.size();
        return a.v_ < b.v_;
    }

    std::string to_string() const;

private:
    std::vector<int> v_;
};

// Finite abstract simplicial complex. Simplices grouped by dimension,
// each group kept sorted; face-closure is the caller's responsibility
// unless built through build_complex.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Inserts a single simplex (not its faces).
    void insert(const Simplex& s);
    bool contains(const Simplex& s) const;

    // K^(s): all simplices of dimension s, sorted.
    const std::vector<Simplex>& skeleton(int s) const;
    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    size_t size() const;
    int vertex_count() const;
    // Largest vertex id + 1 (0 when empty).
    int vertex_id_bound() const { return max_vertex_ + 1; }

    // Position of s within skeleton(s.dim()), or -1.
    int index_of(const Simplex& s) const;

    std::vector<Simplex> all_simplices() const; // sorted by (dim, lex)

    bool is_face_closed() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.by_dim_ == b.by_dim_;
    }

private:
    std::vector<std::vector<Simplex>> by_dim_;
    int max_vertex_ = -1;
};

// Face closure of the given vertex lists. Duplicate vertices inside one
// list are a malformed-input error; duplicate simplices collapse.
SimplicialComplex build_complex(const std::vector<std::vector<int>>& simplices);

// K - A: largest subcomplex of K disjoint from A (drops every simplex
// with a face in A). A must be a subset of K.
SimplicialComplex delete_set(const SimplicialComplex& K, const std::vector<Simplex>& A);

// All non-empty proper subsets of s's vertex set, as simplices.
std::vector<Simplex> proper_faces(const Simplex& s);

} // namespace homcut

#include "homcut/simplex.hpp"
#include "homcut/filtration.hpp"
#include "homcut/field.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace homcut {

Simplex::Simplex(std::vector<int> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) fail(errc::malformed_input, "empty simplex");
    for (size_t i = 0; i + 1 < v_.size(); ++i) {
        if (v_[i] >= v_[i + 1])
            fail(errc::malformed_input, "simplex vertices must be strictly increasing");
    }
    if (v_.front() < 0) fail(errc::malformed_input, "negative vertex id");
}

Simplex::Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

Simplex Simplex::face(int i) const {
    std::vector<int> f;
    f.reserve(v_.size() - 1);
    for (size_t j = 0; j < v_.size(); ++j)
        if (static_cast<int>(j) != i) f.push_back(v_[j]);
    return Simplex(std::move(f));
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
    os << ']';
    return os.str();
}

void SimplicialComplex::insert(const Simplex& s) {
    int d = s.dim();
    if (d >= static_cast<int>(by_dim_.size())) by_dim_.resize(static_cast<size_t>(d) + 1);
    auto& v = by_dim_[static_cast<size_t>(d)];
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it != v.end() && *it == s) return;
    v.insert(it, s);
    max_vertex_ = std::max(max_vertex_, s.vertices().back());
}

bool SimplicialComplex::contains(const Simplex& s) const {
    int d = s.dim();
    if (d >= static_cast<int>(by_dim_.size())) return false;
    const auto& v = by_dim_[static_cast<size_t>(d)];
    auto it = std::lower_bound(v.begin(), v.end(), s);
    return it != v.end() && *it == s;
}

const std::vector<Simplex>& SimplicialComplex::skeleton(int s) const {
    static const std::vector<Simplex> empty;
    if (s < 0 || s >= static_cast<int>(by_dim_.size())) return empty;
    return by_dim_[static_cast<size_t>(s)];
}

size_t SimplicialComplex::size() const {
    size_t n = 0;
    for (const auto& v : by_dim_) n += v.size();
    return n;
}

int SimplicialComplex::vertex_count() const {
    return by_dim_.empty() ? 0 : static_cast<int>(by_dim_[0].size());
}

int SimplicialComplex::index_of(const Simplex& s) const {
    int d = s.dim();
    if (d >= static_cast<int>(by_dim_.size())) return -1;
    const auto& v = by_dim_[static_cast<size_t>(d)];
    auto it = std::lower_bound(v.begin(), v.end(), s);
    if (it == v.end() || !(*it == s)) return -1;
    return static_cast<int>(it - v.begin());
}

std::vector<Simplex> SimplicialComplex::all_simplices() const {
    std::vector<Simplex> out;
    out.reserve(size());
    for (const auto& v : by_dim_) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Simplex> proper_faces(const Simplex& s) {
    const auto& v = s.vertices();
    std::vector<Simplex> out;
    int n = static_cast<int>(v.size());
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        std::vector<int> sub;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) sub.push_back(v[static_cast<size_t>(i)]);
        out.emplace_back(std::move(sub));
    }
    return out;
}

bool SimplicialComplex::is_face_closed() const {
    for (int d = 1; d <= dim(); ++d)
        for (const Simplex& s : skeleton(d))
            for (int i = 0; i <= d; ++i)
                if (!contains(s.face(i))) return false;
    return true;
}

SimplicialComplex build_complex(const std::vector<std::vector<int>>& simplices) {
    SimplicialComplex K;
    for (const auto& raw : simplices) {
        std::vector<int> sorted = raw;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i + 1 < sorted.size(); ++i)
            if (sorted[i] == sorted[i + 1])
                fail(errc::malformed_input, "duplicate vertex within a simplex");
        Simplex s(std::move(sorted));
        K.insert(s);
        for (const Simplex& f : proper_faces(s)) K.insert(f);
    }
    return K;
}

SimplicialComplex delete_set(const SimplicialComplex& K, const std::vector<Simplex>& A) {
    std::set<Simplex> removed(A.begin(), A.end());
    for (const Simplex& a : removed)
        if (!K.contains(a)) fail(errc::domain, "delete_set: A is not a subset of K");
    SimplicialComplex out;
    for (int d = 0; d <= K.dim(); ++d) {
        for (const Simplex& s : K.skeleton(d)) {
            bool keep = removed.find(s) == removed.end();
            if (keep && d > 0) {
                for (const Simplex& f : proper_faces(s)) {
                    if (removed.count(f)) { keep = false; break; }
                }
            }
            if (keep) out.insert(s);
        }
    }
    return out;
}

SimplicialComplex Filtration::prefix(size_t count) const {
    SimplicialComplex K;
    for (size_t i = 0; i < count && i < order.size(); ++i) K.insert(order[i]);
    return K;
}

int Filtration::position_of(const Simplex& s) const {
    for (size_t i = 0; i < order.size(); ++i)
        if (order[i] == s) return static_cast<int>(i);
    return -1;
}

FiltrationCheck validate_filtration(const Filtration& f) {
    FiltrationCheck res;
    if (f.grades && f.grades->size() != f.order.size()) {
        res.ok = false;
        res.violating_index = 0;
        res.reason = "grade list length mismatch";
        return res;
    }
    std::set<Simplex> seen;
    for (size_t i = 0; i < f.order.size(); ++i) {
        const Simplex& s = f.order[i];
        if (seen.count(s)) {
            res.ok = false;
            res.violating_index = static_cast<int>(i);
            res.reason = "duplicate simplex " + s.to_string();
            return res;
        }
        if (s.dim() > 0) {
            for (int j = 0; j <= s.dim(); ++j) {
                if (!seen.count(s.face(j))) {
                    res.ok = false;
                    res.violating_index = static_cast<int>(i);
                    res.reason = "face " + s.face(j).to_string() + " missing before " + s.to_string();
                    return res;
                }
            }
        }
        if (f.grades && i > 0 && (*f.grades)[i] < (*f.grades)[i - 1]) {
            res.ok = false;
            res.violating_index = static_cast<int>(i);
            res.reason = "grades decrease at index " + std::to_string(i);
            return res;
        }
        seen.insert(s);
    }
    return res;
}

Filtration restrict_filtration(const Filtration& f, const std::vector<Simplex>& A) {
    std::set<Simplex> removed(A.begin(), A.end());
    auto killed = [&](const Simplex& s) {
        if (removed.count(s)) return true;
        if (s.dim() == 0) return false;
        for (const Simplex& face : proper_faces(s))
            if (removed.count(face)) return true;
        return false;
    };
    Filtration out;
    if (f.grades) out.grades.emplace();
    for (size_t i = 0; i < f.order.size(); ++i) {
        if (killed(f.order[i])) continue;
        out.order.push_back(f.order[i]);
        if (f.grades) out.grades->push_back((*f.grades)[i]);
    }
    return out;
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) fail(errc::malformed_input, "empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) fail(errc::malformed_input, "bad rational: " + s);
        q.canonicalize();
        if (sgn(q.get_den()) == 0) fail(errc::malformed_input, "zero denominator: " + s);
        return q;
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rat q;
        if (q.set_str(s, 10) != 0) fail(errc::malformed_input, "bad integer: " + s);
        return q;
    }
    // decimal: sign? digits . digits
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        fail(errc::malformed_input, "bad decimal: " + s);
    mpz_class num;
    if (num.set_str(digits, 10) != 0) fail(errc::malformed_input, "bad decimal: " + s);
    mpz_class den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string rational_to_string(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace homcut

#include "homcut/rips.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcut {

MetricData MetricData::from_matrix(std::vector<std::vector<double>> d) {
    MetricData X;
    X.n = static_cast<int>(d.size());
    for (const auto& row : d)
        if (static_cast<int>(row.size()) != X.n)
            fail(errc::malformed_input, "distance matrix is not square");
    for (int i = 0; i < X.n; ++i) {
        if (d[static_cast<size_t>(i)][static_cast<size_t>(i)] != 0)
            fail(errc::malformed_input, "distance matrix has a nonzero diagonal");
        for (int j = 0; j < X.n; ++j) {
            if (d[static_cast<size_t>(i)][static_cast<size_t>(j)] < 0)
                fail(errc::malformed_input, "negative dissimilarity");
            if (d[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                d[static_cast<size_t>(j)][static_cast<size_t>(i)])
                fail(errc::malformed_input, "distance matrix is not symmetric");
        }
    }
    X.dist = std::move(d);
    X.rank.resize(static_cast<size_t>(X.n));
    for (int i = 0; i < X.n; ++i) X.rank[static_cast<size_t>(i)] = i;
    return X;
}

MetricData MetricData::from_points(const std::vector<std::vector<double>>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<double>> d(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        if (pts[static_cast<size_t>(i)].size() != pts[0].size())
            fail(errc::malformed_input, "points of mixed dimension");
        for (int j = i + 1; j < n; ++j) {
            double s = 0;
            for (size_t t = 0; t < pts[static_cast<size_t>(i)].size(); ++t) {
                double diff = pts[static_cast<size_t>(i)][t] - pts[static_cast<size_t>(j)][t];
                s += diff * diff;
            }
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                d[static_cast<size_t>(j)][static_cast<size_t>(i)] = std::sqrt(s);
        }
    }
    return from_matrix(std::move(d));
}

int MetricData::triangle_violations() const {
    int bad = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (d(a, b) > d(a, c) + d(c, b)) ++bad;
    return bad;
}

Filtration rips_filtration(const MetricData& X, int max_dim) {
    if (max_dim < 0) fail(errc::domain, "max_dim must be non-negative");
    if (static_cast<int>(X.rank.size()) != X.n) fail(errc::malformed_input, "bad precedence order");

    struct Entry {
        double diam;
        std::vector<int> by_rank;
        std::vector<int> by_id;
    };
    std::vector<Entry> entries;
    std::vector<int> subset;
    auto emit = [&](const std::vector<int>& vs) {
        double diam = 0;
        for (size_t i = 0; i < vs.size(); ++i)
            for (size_t j = i + 1; j < vs.size(); ++j)
                diam = std::max(diam, X.d(vs[i], vs[j]));
        Entry e;
        e.diam = diam;
        e.by_id = vs;
        e.by_rank.reserve(vs.size());
        for (int v : vs) e.by_rank.push_back(X.rank[static_cast<size_t>(v)]);
        std::sort(e.by_rank.begin(), e.by_rank.end());
        entries.push_back(std::move(e));
    };
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (!subset.empty()) emit(subset);
        if (left == 0) return;
        for (int v = start; v < X.n; ++v) {
            subset.push_back(v);
            rec(v + 1, left - 1);
            subset.pop_back();
        }
    };
    rec(0, max_dim + 1);

    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.diam != b.diam) return a.diam < b.diam;
        if (a.by_rank.size() != b.by_rank.size()) return a.by_rank.size() < b.by_rank.size();
        return a.by_rank < b.by_rank;
    });

    Filtration f;
    f.grades.emplace();
    for (const Entry& e : entries) {
        f.order.push_back(Simplex(e.by_id));
        f.grades->push_back(e.diam);
    }
    return f;
}

double hausdorff_removal_distance(const MetricData& X, const std::vector<int>& A) {
    std::vector<char> removed(static_cast<size_t>(X.n), 0);
    int nrem = 0;
    for (int a : A) {
        if (a < 0 || a >= X.n) fail(errc::domain, "point index out of range");
        if (!removed[static_cast<size_t>(a)]) ++nrem;
        removed[static_cast<size_t>(a)] = 1;
    }
    if (nrem == X.n) fail(errc::domain, "cannot remove every point");
    double h = 0;
    for (int a = 0; a < X.n; ++a) {
        if (!removed[static_cast<size_t>(a)]) continue;
        double nearest = std::numeric_limits<double>::infinity();
        for (int x = 0; x < X.n; ++x)
            if (!removed[static_cast<size_t>(x)]) nearest = std::min(nearest, X.d(a, x));
        h = std::max(h, nearest);
    }
    return h;
}

namespace {

HeuristicResult heuristic_impl(const MetricData& X, int k, bool parallel) {
    if (k < 1 || k >= X.n) fail(errc::domain, "need 1 <= k < n");
    std::vector<double> kth(static_cast<size_t>(X.n));
    std::vector<std::vector<int>> knn(static_cast<size_t>(X.n));
    (void)parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (int x = 0; x < X.n; ++x) {
        std::vector<int> idx;
        idx.reserve(static_cast<size_t>(X.n) - 1);
        for (int y = 0; y < X.n; ++y)
            if (y != x) idx.push_back(y);
        std::sort(idx.begin(), idx.end(), [&](int a, int b) {
            if (X.d(x, a) != X.d(x, b)) return X.d(x, a) < X.d(x, b);
            return a < b;
        });
        kth[static_cast<size_t>(x)] = X.d(x, idx[static_cast<size_t>(k - 1)]);
        idx.resize(static_cast<size_t>(k));
        knn[static_cast<size_t>(x)] = std::move(idx);
    }
    HeuristicResult r;
    r.x_star = 0;
    for (int x = 1; x < X.n; ++x)
        if (kth[static_cast<size_t>(x)] > kth[static_cast<size_t>(r.x_star)]) r.x_star = x;
    r.H = kth[static_cast<size_t>(r.x_star)];
    r.neighbors = knn[static_cast<size_t>(r.x_star)];
    r.witness_k.push_back(r.x_star);
    for (int i = 0; i + 1 < k; ++i) r.witness_k.push_back(r.neighbors[static_cast<size_t>(i)]);
    r.witness_k_plus_1 = r.witness_k;
    r.witness_k_plus_1.push_back(r.neighbors[static_cast<size_t>(k - 1)]);
    return r;
}

} // namespace

HeuristicResult hausdorff_heuristic(const MetricData& X, int k) {
    return heuristic_impl(X, k, true);
}
HeuristicResult hausdorff_heuristic_serial(const MetricData& X, int k) {
    return heuristic_impl(X, k, false);
}

CertifiedBars certify_bars(const Barcode& bc, double H) {
    CertifiedBars out;
    for (size_t i = 0; i < bc.bars.size(); ++i) {
        double len = bc.bars[i].grade_length();
        if (len > H) {
            out.certified.push_back(i);
        } else {
            out.uncertified.push_back(i);
            if (len == H) out.boundary_cases.push_back(i);
        }
    }
    return out;
}

} // namespace homcut

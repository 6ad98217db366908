#include <doctest.h>

#include "homcut/cut.hpp"
#include "homcut/rips.hpp"
#include "test_helpers.hpp"

using namespace homcut;
using namespace testutil;

namespace {

MetricData line_points(const std::vector<double>& xs) {
    std::vector<std::vector<double>> pts;
    for (double x : xs) pts.push_back({x});
    return MetricData::from_points(pts);
}

MetricData circle_points(int n, double radius = 1.0) {
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * M_PI * i / n;
        pts.push_back({radius * std::cos(a), radius * std::sin(a)});
    }
    return MetricData::from_points(pts);
}

MetricData random_cloud(std::mt19937& rng, int n) {
    std::uniform_real_distribution<double> U(0, 10);
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < n; ++i) pts.push_back({U(rng), U(rng)});
    return MetricData::from_points(pts);
}

// exhaustive max over |A| <= k of the removal distance
double exhaustive_heuristic(const MetricData& X, int k) {
    double best = 0;
    std::vector<int> A;
    std::function<void(int, int)> rec = [&](int start, int left) {
        if (!A.empty() && static_cast<int>(A.size()) < X.n)
            best = std::max(best, hausdorff_removal_distance(X, A));
        if (left == 0) return;
        for (int v = start; v < X.n; ++v) {
            A.push_back(v);
            rec(v + 1, left - 1);
            A.pop_back();
        }
    };
    rec(0, k);
    return best;
}

} // namespace

TEST_SUITE_BEGIN("rips");

TEST_CASE("rips filtration orders by diameter, dimension, precedence") {
    MetricData two = line_points({0, 1});
    Filtration f = rips_filtration(two, 1);
    REQUIRE(f.order.size() == 3);
    CHECK(f.order[0] == Simplex{0});
    CHECK(f.order[1] == Simplex{1});
    CHECK(f.order[2] == (Simplex{0, 1}));
    CHECK((*f.grades)[2] == 1.0);

    MetricData tri = MetricData::from_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    Filtration ft = rips_filtration(tri, 2);
    REQUIRE(ft.order.size() == 7);
    CHECK(ft.order[3] == (Simplex{0, 1}));
    CHECK(ft.order[4] == (Simplex{0, 2}));
    CHECK(ft.order[5] == (Simplex{1, 2}));
    CHECK(ft.order[6].dim() == 2);
    for (size_t i = 3; i < 7; ++i) CHECK((*ft.grades)[i] == 1.0);
    CHECK(validate_filtration(ft).ok);

    MetricData sq = MetricData::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    Filtration fs = rips_filtration(sq, 1);
    for (size_t i = 4; i < 8; ++i) CHECK((*fs.grades)[i] == 1.0);
    CHECK((*fs.grades)[8] == doctest::Approx(std::sqrt(2.0)));
    CHECK((*fs.grades)[9] == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("rips filtration is permutation-independent up to relabeling") {
    std::mt19937 rng(301);
    MetricData X = random_cloud(rng, 6);
    Filtration f = rips_filtration(X, 2);
    Barcode bc = reduce(f, FieldTag::GF2);

    std::vector<int> perm{3, 1, 5, 0, 2, 4};
    MetricData Y;
    Y.n = X.n;
    Y.dist.assign(static_cast<size_t>(X.n), std::vector<double>(static_cast<size_t>(X.n), 0));
    Y.rank.assign(static_cast<size_t>(X.n), 0);
    for (int i = 0; i < X.n; ++i) {
        Y.rank[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
        for (int j = 0; j < X.n; ++j)
            Y.dist[static_cast<size_t>(perm[static_cast<size_t>(i)])]
                  [static_cast<size_t>(perm[static_cast<size_t>(j)])] = X.d(i, j);
    }
    Filtration g = rips_filtration(Y, 2);
    Barcode bd = reduce(g, FieldTag::GF2);
    REQUIRE(f.order.size() == g.order.size());
    for (size_t i = 0; i < f.order.size(); ++i) {
        std::vector<int> mapped;
        for (int v : f.order[i].vertices()) mapped.push_back(perm[static_cast<size_t>(v)]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(g.order[i] == Simplex(mapped));
        CHECK((*f.grades)[i] == (*g.grades)[i]);
    }
    REQUIRE(bc.bars.size() == bd.bars.size());
    for (size_t i = 0; i < bc.bars.size(); ++i) {
        CHECK(bc.bars[i].birth_index == bd.bars[i].birth_index);
        CHECK(bc.bars[i].death_index == bd.bars[i].death_index);
    }
}

TEST_CASE("hausdorff removal distance") {
    MetricData X = line_points({0, 1, 10});
    CHECK(hausdorff_removal_distance(X, {}) == 0.0);
    CHECK(hausdorff_removal_distance(X, {2}) == 9.0);
    MetricData Y = line_points({0, 1, 2, 3});
    CHECK(hausdorff_removal_distance(Y, {1, 2}) == 1.0);
    CHECK_THROWS_AS(hausdorff_removal_distance(X, {0, 1, 2}), error);
}

TEST_CASE("heuristic equals its definition") {
    MetricData X = line_points({0, 1, 2, 3});
    auto r = hausdorff_heuristic(X, 1);
    CHECK(r.H == 1.0);

    MetricData Y = line_points({0, 1, 10});
    auto ry = hausdorff_heuristic(Y, 1);
    CHECK(ry.H == 9.0);
    CHECK(ry.x_star == 2);
    CHECK(exhaustive_heuristic(Y, 1) == 9.0);

    std::mt19937 rng(307);
    MetricData Z = random_cloud(rng, 6);
    auto rz = hausdorff_heuristic(Z, Z.n - 1);
    double diam = 0;
    for (int a = 0; a < Z.n; ++a)
        for (int b = 0; b < Z.n; ++b) diam = std::max(diam, Z.d(a, b));
    CHECK(rz.H == diam);

    CHECK_THROWS_AS(hausdorff_heuristic(Z, Z.n), error);
    CHECK_THROWS_AS(hausdorff_heuristic(Z, 0), error);
}

TEST_CASE("heuristic identity against exhaustive enumeration") {
    std::mt19937 rng(311);
    for (int it = 0; it < 30; ++it) {
        std::uniform_int_distribution<int> nd(3, 9);
        int n = nd(rng);
        MetricData X = random_cloud(rng, n);
        for (int k = 1; k <= std::min(3, n - 1); ++k) {
            auto r = hausdorff_heuristic(X, k);
            double ex = exhaustive_heuristic(X, k);
            CHECK(r.H == ex); // identical float path
            CHECK(hausdorff_removal_distance(X, r.witness_k) == r.H);
            CHECK(hausdorff_heuristic_serial(X, k).H == r.H);
        }
    }
}

TEST_CASE("certify_bars is strict at the boundary") {
    Barcode bc;
    Bar b;
    b.dim = 1;
    b.birth_index = 0;
    b.death_index = 1;
    b.birth_grade = 0.0;
    b.death_grade = 10.0;
    bc.bars.push_back(b);
    b.death_grade = 9.0;
    bc.bars.push_back(b);
    auto part = certify_bars(bc, 9.0);
    REQUIRE(part.certified.size() == 1);
    CHECK(part.certified[0] == 0);
    REQUIRE(part.uncertified.size() == 1);
    REQUIRE(part.boundary_cases.size() == 1);
    CHECK(part.boundary_cases[0] == 1);
}

TEST_CASE("dense circle: the certified loop survives every single removal") {
    MetricData X = circle_points(12);
    Filtration f = rips_filtration(X, 2);
    Barcode bc = reduce(f, FieldTag::GF2);
    auto r = hausdorff_heuristic(X, 1);
    auto part = certify_bars(bc, r.H);
    bool h1_certified = false;
    for (size_t i : part.certified)
        if (bc.bars[i].dim == 1) h1_certified = true;
    CHECK(h1_certified);

    for (int p = 0; p < X.n; ++p) {
        Filtration fsub = restrict_filtration(f, {Simplex{p}});
        for (int dim = 0; dim <= 1; ++dim) {
            auto m = induced_matching(fsub, f, dim);
            for (size_t i : part.certified) {
                if (bc.bars[i].dim != dim) continue;
                bool matched = false;
                for (auto [l, k] : m.matching.pairs) {
                    const Bar& t = m.target.bars[k];
                    if (t.birth_index == bc.bars[i].birth_index &&
                        t.death_index == bc.bars[i].death_index)
                        matched = true;
                }
                CHECK(matched);
            }
        }
    }
}

TEST_CASE("the exact test recognizes short bars the heuristic cannot") {
    // dense circle plus two far-away points: the heuristic value is driven by
    // the outliers while the loop itself tolerates any single removal
    std::vector<std::vector<double>> pts;
    for (int i = 0; i < 12; ++i) {
        double a = 2.0 * M_PI * i / 12;
        pts.push_back({std::cos(a), std::sin(a)});
    }
    pts.push_back({10, 0});
    pts.push_back({14, 0});
    MetricData X = MetricData::from_points(pts);
    auto r = hausdorff_heuristic(X, 1);
    CHECK(r.H == doctest::Approx(4.0));

    Filtration f = rips_filtration(X, 2);
    Barcode bc = reduce(f, FieldTag::GF2);
    int loop = -1;
    for (size_t i = 0; i < bc.bars.size(); ++i) {
        const Bar& b = bc.bars[i];
        if (b.dim != 1 || !b.finite()) continue;
        if (loop < 0 || b.grade_length() > bc.bars[static_cast<size_t>(loop)].grade_length())
            loop = static_cast<int>(i);
    }
    REQUIRE(loop >= 0);
    const Bar bar = bc.bars[static_cast<size_t>(loop)];
    CHECK(bar.grade_length() < r.H); // the heuristic cannot certify it

    auto verdict = robustness(f, bar, 0, 1, FieldTag::GF2, CutStrategy::Bruteforce);
    CHECK(verdict.robust); // the exact test proves 1-robustness anyway
}

TEST_SUITE_END();

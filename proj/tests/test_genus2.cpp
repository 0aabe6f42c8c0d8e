#include <gtest/gtest.h>

#include <algorithm>

#include "x0plus/genus2.hpp"

using namespace x0plus;

namespace {

const Database& db() {
    static Database d = Database::load_dir(X0PLUS_TEST_DATA_DIR);
    return d;
}

const std::vector<i64> kThreePoint = {42, 46, 52, 57, 67, 68, 69, 72, 73, 74, 77, 80, 91, 103, 107, 111, 121, 125, 143, 167, 191};

}  // namespace

TEST(PointSearch, QuinticExample) {
    auto pts = search_rational_points(QPoly::from_ints({1, 0, 0, 0, 0, 1}), 10);
    auto has = [&](long x, long y) { return std::count(pts.begin(), pts.end(), RationalPoint{x, y}) == 1; };
    EXPECT_TRUE(has(0, 1));
    EXPECT_TRUE(has(0, -1));
    EXPECT_TRUE(has(-1, 0));
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), [](auto& a, auto& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }));
}

TEST(PointSearch, SixtySeven) {
    auto* m = db().model(67);
    ASSERT_TRUE(m);
    EXPECT_GE(search_rational_points(m->f, 20).size(), 3u);
}

TEST(PointSearch, SexticPlusThree) {
    // x = +-1 gives y^2 = 4
    auto pts = search_rational_points(QPoly::from_ints({3, 0, 0, 0, 0, 0, 1}), 5);
    EXPECT_EQ(pts, (std::vector<RationalPoint>{{-1, -2}, {-1, 2}, {1, -2}, {1, 2}}));
}

TEST(PointSearch, NoPoints) {
    // 2a^6 + 3b^6 = Y^2 has no solution with gcd(a, b) = 1 (reduce mod 3)
    EXPECT_TRUE(search_rational_points(QPoly::from_ints({3, 0, 0, 0, 0, 0, 2}), 30).empty());
}

TEST(PointSearch, ExhaustiveAgainstDirectScan) {
    QPoly f = QPoly::from_ints({4, -4, 1, 2, 0, 1});
    auto pts = search_rational_points(f, 6);
    size_t expected = 0;
    for (long b = 1; b <= 6; ++b)
        for (long a = -6; a <= 6; ++a) {
            if (gcd(std::abs(a), b) != 1) continue;
            mpq_class v = f(mpq_class(a, b));
            if (is_rational_square(v)) expected += v == 0 ? 1 : 2;
        }
    EXPECT_EQ(pts.size(), expected);
}

TEST(Infinity, Examples) {
    for (i64 n : {62, 87}) {
        auto r = infinity_points(db().model(n)->f);
        EXPECT_EQ(r.count_rational, 2) << n;
        EXPECT_TRUE(r.swapped) << n;
    }
    auto q = infinity_points(QPoly::from_ints({1, 0, 0, 0, 0, 1}));
    EXPECT_EQ(q.count_rational, 1);
    EXPECT_FALSE(q.swapped);
    auto s = infinity_points(QPoly::from_ints({1, 0, 0, 0, 0, 0, 2}));
    EXPECT_EQ(s.count_rational, 0);
}

TEST(Slice, NinetyEight) {
    auto r = slice_divisor_search(db().model(98)->f);
    ASSERT_TRUE(r);
    EXPECT_EQ(r->c, 1);
    EXPECT_EQ(r->cubic, QPoly::from_ints({-9, 15, -11, 4}));
}

TEST(Slice, Rejections) {
    EXPECT_FALSE(slice_divisor_search(QPoly::from_ints({0, 0, 0, 0, 0, 1}), {mpq_class(0)}));
    EXPECT_FALSE(slice_divisor_search(QPoly::from_ints({3, 0, 0, 0, 0, 1}), {mpq_class(1)}));
}

TEST(Slice, DefaultRange) {
    auto r = default_slice_range();
    EXPECT_EQ(r.front(), 0);
    EXPECT_TRUE(std::count(r.begin(), r.end(), mpq_class(1)));
    EXPECT_TRUE(std::count(r.begin(), r.end(), mpq_class(2, 3)));
    std::set<mpq_class> u(r.begin(), r.end());
    EXPECT_EQ(u.size(), r.size());
}

TEST(Slice, CubicDividesSlice) {
    for (auto f : {QPoly::from_ints({-8, 24, -35, 30, -15, 4}), QPoly::from_ints({1, 1, 0, 0, 0, 1}), QPoly::from_ints({5, 1, 0, -1, 0, 1})}) {
        auto r = slice_divisor_search(f);
        if (!r) continue;
        EXPECT_EQ(r->cubic.degree(), 3);
        EXPECT_TRUE(is_irreducible(r->cubic));
        EXPECT_TRUE(divmod(f - QPoly({r->c * r->c}), r->cubic).second.is_zero());
    }
}

TEST(Verdict, PublishedLevels) {
    EXPECT_EQ(genus2_cubic_verdict(*db().model(42)).criterion, Genus2Criterion::ThreeRationalPoints);
    EXPECT_EQ(genus2_cubic_verdict(*db().model(62)).criterion, Genus2Criterion::SwappedInfinityPair);
    EXPECT_EQ(genus2_cubic_verdict(*db().model(87)).criterion, Genus2Criterion::SwappedInfinityPair);
    auto v98 = genus2_cubic_verdict(*db().model(98));
    EXPECT_EQ(v98.criterion, Genus2Criterion::SliceDivisor);
    ASSERT_TRUE(v98.slice);
    for (i64 n : kThreePoint) EXPECT_EQ(genus2_cubic_verdict(*db().model(n)).criterion, Genus2Criterion::ThreeRationalPoints) << n;
}

TEST(Verdict, NoneIsReportedHonestly) {
    // x^6 + 3 has no small points, no rational infinity points, and no slice cubics
    auto v = genus2_cubic_verdict(0, QPoly::from_ints({3, 0, 0, 0, 0, 0, 2}), 5);
    EXPECT_EQ(v.criterion, Genus2Criterion::None);
    EXPECT_EQ(to_string(v.criterion), "None");
}

TEST(Verdict, WitnessesSatisfyEquation) {
    int n = 0;
    for (auto& [level, m] : db().models()) {
        if (m.kind != ModelKind::Hyperelliptic) continue;
        ++n;
        auto v = genus2_cubic_verdict(m);
        EXPECT_NE(v.criterion, Genus2Criterion::None) << level;
        for (auto& p : v.points) EXPECT_EQ(p.y * p.y, m.f(p.x)) << level;
        if (v.criterion == Genus2Criterion::ThreeRationalPoints) {
            size_t inf = static_cast<size_t>(v.infinity.count_rational);
            EXPECT_GE(v.points.size() + inf, 3u) << level;
        }
    }
    EXPECT_EQ(n, 24);
}

#include <gtest/gtest.h>

#include <sstream>

#include "x0plus/dataset.hpp"

using namespace x0plus;

namespace {

const Database& db() {
    static Database d = Database::load_dir(X0PLUS_TEST_DATA_DIR);
    return d;
}

// #E(F_p) by direct enumeration, including the point at infinity
i64 brute_count(const std::array<i64, 5>& a, i64 p) {
    i64 c = 1;
    for (i64 x = 0; x < p; ++x)
        for (i64 y = 0; y < p; ++y) {
            i64 l = y * y + a[0] * x * y + a[2] * y;
            i64 r = x * x * x + a[1] * x * x + a[3] * x + a[4];
            if (((l - r) % p + p) % p == 0) ++c;
        }
    return c;
}

const std::string k37 = "37\ta\t1\t37:+1\t2:-2,4,-8,16;3:-3,9,-27,81;5:-2,4,-8,16;7:-1,1,-1,1;11:-5,25\n";

}  // namespace

TEST(LoadNewforms, ParsesOrbit) {
    std::istringstream in(k37);
    auto v = load_newforms(in);
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].level, 37);
    EXPECT_EQ(v[0].orbit_id, "a");
    EXPECT_EQ(v[0].dim, 1);
    EXPECT_EQ(v[0].al_signs.at(37), 1);
    EXPECT_EQ(v[0].hecke.at(2), (std::vector<i64>{-2, 4, -8, 16}));
    EXPECT_EQ(v[0].prime_bound(), 11);
}

TEST(LoadNewforms, EmptyStream) {
    std::istringstream in("");
    EXPECT_TRUE(load_newforms(in).empty());
}

TEST(LoadNewforms, ZeroSignIsParseError) {
    std::istringstream in("# header\n37\ta\t1\t37:0\t2:-2,4,-8,16\n");
    try {
        load_newforms(in);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 2);
    }
}

TEST(LoadNewforms, DeligneViolation) {
    std::istringstream in("11\ta\t1\t11:-1\t2:3,9,27,81;3:-1,1,-1,1;5:1,1,1,1;7:-2,4,-8,16\n");
    EXPECT_THROW(load_newforms(in), IntegrityError);
}

TEST(LoadNewforms, DuplicateOrbit) {
    std::istringstream in(k37 + k37);
    EXPECT_THROW(load_newforms(in), IntegrityError);
}

TEST(LoadNewforms, SignsMustCoverLevelPrimes) {
    std::istringstream in("37\ta\t1\t\t2:-2,4,-8,16;3:-3,9,-27,81;5:-2,4,-8,16;7:-1,1,-1,1\n");
    EXPECT_THROW(load_newforms(in), IntegrityError);
}

TEST(LoadNewforms, RoundTrip) {
    std::ostringstream out;
    write_newforms(out, db().newforms());
    std::istringstream in(out.str());
    EXPECT_EQ(load_newforms(in), db().newforms());
}

TEST(LoadCurves, KnownRecords) {
    auto* e92 = db().curve("92b");
    ASSERT_TRUE(e92);
    EXPECT_EQ(e92->modular_degree, 6);
    EXPECT_EQ(e92->rank, 1);
    ASSERT_TRUE(db().curve("82a"));
    EXPECT_EQ(db().curve("82a")->modular_degree, 4);
    ASSERT_TRUE(db().curve("65a"));
    EXPECT_FALSE(db().curve("65a")->has_rational_3_isogeny);
}

TEST(LoadCurves, TwoTorsionFlagChecked) {
    // 11a has torsion 5 and no 2-torsion; claim otherwise
    std::istringstream in("11a,11,0,5,1,0,1,11:-1,0,-1,1,-10,-20\n");
    EXPECT_THROW(load_elliptic_curves(in), IntegrityError);
    std::istringstream ok("11a,11,0,5,0,0,1,11:-1,0,-1,1,-10,-20\n");
    EXPECT_EQ(load_elliptic_curves(ok).size(), 1u);
}

TEST(LoadCurves, MalformedLine) {
    std::istringstream in("11a,11,0,5\n");
    EXPECT_THROW(load_elliptic_curves(in), ParseError);
}

TEST(LoadCurves, RoundTrip) {
    std::ostringstream out;
    write_elliptic_curves(out, db().curves());
    std::istringstream in(out.str());
    EXPECT_EQ(load_elliptic_curves(in), db().curves());
}

TEST(CurvesDividing, Examples) {
    EXPECT_TRUE(db().curves_with_conductor_dividing(60, 1).empty());
    auto v = db().curves_with_conductor_dividing(130, 1);
    bool has65a = false;
    for (auto* e : v) has65a |= e->label == "65a";
    EXPECT_TRUE(has65a);
    EXPECT_TRUE(db().curves_with_conductor_dividing(1, 0).empty());
}

TEST(CurvesDividing, SortedAndFiltered) {
    auto v = db().curves_with_conductor_dividing(420, 0);
    for (size_t i = 0; i < v.size(); ++i) {
        EXPECT_EQ(420 % v[i]->conductor, 0);
        if (i) EXPECT_TRUE(v[i - 1]->conductor < v[i]->conductor ||
                           (v[i - 1]->conductor == v[i]->conductor && v[i - 1]->label < v[i]->label));
    }
}

TEST(Curves, FrickePlusMeansOddRank) {
    for (auto& e : db().curves())
        if (e.sign_of(e.conductor) == 1) EXPECT_EQ(e.rank % 2, 1) << e.label;
}

TEST(Curves, WeierstrassCountsMatchNewformOrbits) {
    for (auto& e : db().curves()) {
        auto* o = db().orbit_for_curve(e);
        ASSERT_TRUE(o) << e.label;
        int checked = 0;
        for (auto& [p, s] : o->hecke) {
            if (checked == 5) break;
            EXPECT_EQ(brute_count(e.weierstrass, p), p + 1 - s[0]) << e.label << " p=" << p;
            ++checked;
        }
        EXPECT_EQ(checked, 5);
    }
}

TEST(Curves, AtkinLehnerSignsMatchOrbit) {
    for (auto& e : db().curves()) {
        auto* o = db().orbit_for_curve(e);
        ASSERT_TRUE(o);
        EXPECT_EQ(o->al_signs, e.al_signs) << e.label;
    }
}

TEST(KnownLists, ParsedAndConsistent) {
    auto& k = db().known();
    EXPECT_EQ(k.genus0.size(), 38u);
    EXPECT_EQ(k.genus1.size(), 30u);
    EXPECT_TRUE(k.genus0.count(71));
    EXPECT_TRUE(k.genus1.count(37));
    for (auto n : k.genus0) EXPECT_FALSE(k.hyperelliptic.count(n));
    EXPECT_TRUE(k.gonality3.count(311));
}

TEST(Models, Shipped) {
    int hyp = 0, petri = 0;
    for (auto& [n, m] : db().models()) (m.kind == ModelKind::Hyperelliptic ? hyp : petri)++;
    EXPECT_EQ(hyp, 24);
    EXPECT_EQ(petri, 22);
    auto* m98 = db().model(98);
    ASSERT_TRUE(m98);
    EXPECT_EQ(m98->f, QPoly::from_ints({-8, 24, -35, 30, -15, 4}));
    for (auto& [n, m] : db().models())
        if (m.kind == ModelKind::Petri)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) EXPECT_EQ(m.quadric[i][j], m.quadric[j][i]);
}

TEST(Models, RejectsNonSquarefree) {
    std::istringstream in("99\thyperelliptic\t2\t1,2,1,0,0,1\n");
    EXPECT_NO_THROW(load_models(in));
    std::istringstream bad("99\thyperelliptic\t2\t0,0,1,2,1,1\n");  // x^2 (x^3 + x^2 + 2x + 1)
    EXPECT_THROW(load_models(bad), IntegrityError);
}

TEST(Database, Coverage) {
    EXPECT_EQ(db().newform_level_bound(), 623);
    EXPECT_TRUE(db().covers(623));
    EXPECT_FALSE(db().covers(624));
}

TEST(Database, MissingDirectoryIsDataError) {
    EXPECT_THROW(Database::load_dir("/nonexistent/x0plus"), DataError);
}

TEST(ParseRanges, Basic) {
    EXPECT_EQ(parse_int_ranges("1-3,7, 9"), (std::set<i64>{1, 2, 3, 7, 9}));
}

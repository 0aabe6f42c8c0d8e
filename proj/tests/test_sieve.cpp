#include <gtest/gtest.h>

#include "x0plus/sieve.hpp"

using namespace x0plus;

namespace {

const Database& db() {
    static Database d = Database::load_dir(X0PLUS_TEST_DATA_DIR);
    return d;
}

const EllipticCurveRecord& E(const std::string& label) {
    auto* e = db().curve(label);
    if (!e) throw std::runtime_error("missing curve " + label);
    return *e;
}

const AdmissiblePairCandidate* find(const std::vector<AdmissiblePairCandidate>& v, const std::string& label) {
    for (auto& c : v)
        if (c.curve->label == label) return &c;
    return nullptr;
}

}  // namespace

TEST(PsiBound, Examples) {
    auto r = psi_bound_filter(625);
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(r.prime, 2);
    EXPECT_FALSE(psi_bound_filter(106).failed());
    // the literal inequality holds for 126 at p = 5, 11, 13
    EXPECT_FALSE(psi_bound_filter(126).failed());
    EXPECT_THROW(psi_bound_filter(0), DomainError);
}

TEST(PsiBound, MatchesRationalInequality) {
    for (i64 n = 1; n <= 3000; ++n) {
        bool fail = false;
        for (auto p : primes_up_to(13)) {
            if (n % p == 0) continue;
            mpq_class lhs = mpq_class(p - 1) / 12 * dedekind_psi(n) + (i64(1) << factorize(n).omega());
            if (lhs > 6 * (p + 1) * (p + 1)) fail = true;
        }
        EXPECT_EQ(psi_bound_filter(n).failed(), fail) << n;
    }
}

TEST(PointCount, PublishedEliminations) {
    auto s = default_schedule();
    auto r = point_count_filter(148, E("37a"), s, db());
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(*r.pp, PrimePower(3, 2));
    r = point_count_filter(246, E("82a"), s, db());
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(*r.pp, PrimePower(7, 2));
    r = point_count_filter(305, E("61a"), s, db());
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(*r.pp, PrimePower(7, 1));
    EXPECT_TRUE(r.count_x0_plus > 3 * r.count_e || r.count_x0 > 6 * r.count_e);
}

TEST(PointCount, BadPowersSkipped) {
    auto r = point_count_filter(148, E("37a"), {PrimePower(2, 1), PrimePower(2, 2)}, db());
    EXPECT_FALSE(r.failed());
    EXPECT_EQ(r.notes.size(), 2u);
    EXPECT_THROW(point_count_filter(150, E("37a"), {PrimePower(7, 1)}, db()), DomainError);
}

TEST(PointCount, OutsideCoverage) {
    auto r = point_count_filter(37 * 20, E("37a"), default_schedule(), db());
    EXPECT_EQ(r.outcome, FilterOutcome::Inapplicable);
}

TEST(ModularDegree, Examples) {
    auto r = modular_degree_filter(82, E("82a"));
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(r.degree, 4);
    EXPECT_FALSE(modular_degree_filter(124, E("124a")).failed());
    EXPECT_FALSE(modular_degree_filter(92, E("92b")).failed());
    EXPECT_EQ(modular_degree_filter(148, E("37a")).outcome, FilterOutcome::Inapplicable);
}

TEST(Descent, Examples) {
    auto r = descent_filter(106, E("53a"), db());
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(r.divisor, 53);
    r = descent_filter(130, E("65a"), db());
    EXPECT_TRUE(r.failed());
    EXPECT_EQ(r.divisor, 0);
    EXPECT_EQ(descent_filter(163, E("163a"), db()).outcome, FilterOutcome::Certify);
    EXPECT_EQ(descent_filter(124, E("124a"), db()).outcome, FilterOutcome::Certify);
}

TEST(Castelnuovo, LevelFilter) {
    auto r = castelnuovo_level_filter(222, db());
    EXPECT_TRUE(r.failed());
    EXPECT_TRUE(is_exact_divisor(r.divisor, 222));
    EXPECT_FALSE(castelnuovo_level_filter(163, db()).failed());
}

TEST(Enumerate, Level182) {
    auto v = enumerate_admissible_pairs(182, db());
    auto* a = find(v, "91a");
    auto* b = find(v, "91b");
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->status, PairStatus::Eliminated);
    EXPECT_EQ(b->status, PairStatus::Eliminated);
    EXPECT_EQ(b->trace.back().filter, "descent");
    EXPECT_EQ(b->trace.back().divisor, 91);
}

TEST(Enumerate, Level171) {
    auto v = enumerate_admissible_pairs(171, db());
    auto* b = find(v, "171b");
    auto* a = find(v, "57a");
    ASSERT_TRUE(a && b);
    EXPECT_EQ(b->status, PairStatus::Eliminated);
    EXPECT_EQ(b->trace[2].degree, 8);
    EXPECT_TRUE(b->trace[2].failed());
    EXPECT_EQ(a->status, PairStatus::Eliminated);
    EXPECT_EQ(a->trace.back().divisor, 19);
}

TEST(Enumerate, Level236) {
    auto v = enumerate_admissible_pairs(236, db());
    auto* e118 = find(v, "118a");
    auto* e236 = find(v, "236a");
    ASSERT_TRUE(e118 && e236);
    EXPECT_EQ(e118->status, PairStatus::Eliminated);
    EXPECT_EQ(e118->decisive()->filter, "descent");
    EXPECT_EQ(e236->status, PairStatus::CertifiedAdmissible);
}

TEST(Enumerate, TraceShape) {
    for (i64 n : {106, 130, 185, 236}) {
        for (auto& c : enumerate_admissible_pairs(n, db())) {
            ASSERT_EQ(c.trace.size(), 5u);
            EXPECT_EQ(c.trace[0].filter, "psi-bound");
            EXPECT_EQ(c.trace[1].filter, "point-count");
            EXPECT_EQ(c.trace[2].filter, "modular-degree");
            EXPECT_EQ(c.trace[3].filter, "castelnuovo");
            EXPECT_EQ(c.trace[4].filter, "descent");
            if (c.status == PairStatus::Eliminated) EXPECT_TRUE(c.decisive()->failed());
        }
    }
    EXPECT_TRUE(enumerate_admissible_pairs(126, db()).empty());
}

TEST(Enumerate, Level185Path) {
    auto v = enumerate_admissible_pairs(185, db());
    auto* e37 = find(v, "37a");
    auto* c = find(v, "185c");
    ASSERT_TRUE(e37 && c);
    EXPECT_EQ(e37->status, PairStatus::Eliminated);
    EXPECT_EQ(e37->decisive()->filter, "point-count");
    EXPECT_TRUE(e37->trace.back().failed());
    EXPECT_EQ(c->status, PairStatus::CertifiedAdmissible);
}

TEST(Classify, Examples) {
    auto c = classify_level(62, db());
    EXPECT_EQ(c.verdict, Verdict::InfiniteCubic);
    EXPECT_EQ(c.reason, "SwappedInfinityPair");
    c = classify_level(85, db());
    EXPECT_EQ(c.verdict, Verdict::FiniteCubic);
    EXPECT_EQ(c.reason, "no-positive-rank-curve");
    c = classify_level(124, db());
    EXPECT_EQ(c.verdict, Verdict::InfiniteCubic);
    EXPECT_EQ(c.reason, "certified-pair");
    c = classify_level(311, db());
    EXPECT_EQ(c.verdict, Verdict::FiniteCubic);
    EXPECT_FALSE(c.witnesses.empty());
    c = classify_level(37, db());
    EXPECT_EQ(c.verdict, Verdict::BelowScope);
    c = classify_level(92, db());
    EXPECT_EQ(c.verdict, Verdict::InfiniteCubic);
    EXPECT_THROW(classify_level(0, db()), DomainError);
}

TEST(Classify, TrigonalBranches) {
    EXPECT_EQ(classify_level(97, db()).reason, "cusp-projection");
    EXPECT_EQ(classify_level(311, db()).genus_plus, 4);
    auto c = classify_level(84, db());
    EXPECT_EQ(c.verdict, Verdict::InfiniteCubic);
    ASSERT_TRUE(c.divergence);
    ASSERT_TRUE(c.published_verdict);
    EXPECT_EQ(*c.published_verdict, Verdict::FiniteCubic);
    c = classify_level(70, db());
    EXPECT_FALSE(c.divergence);
    c = classify_level(159, db());
    EXPECT_EQ(c.reason, "quadric-cone");
}

TEST(Classify, FiniteVerdictsCarryWitnesses) {
    for (i64 n = 5; n <= 350; ++n) {
        auto c = classify_level(n, db());
        EXPECT_NE(c.verdict, Verdict::Unresolved) << n;
        if (c.verdict == Verdict::FiniteCubic) EXPECT_FALSE(c.witnesses.empty()) << n;
    }
}

TEST(Table, Rows) {
    auto t = main_theorem_table(1, 350, db());
    EXPECT_EQ(t.rows.at(10), std::vector<i64>{236});
    EXPECT_EQ(t.rows.at(6), (std::vector<i64>{124, 163, 164, 269}));
    auto& r3 = t.rows.at(3);
    EXPECT_TRUE(std::count(r3.begin(), r3.end(), 58));
    EXPECT_TRUE(std::count(r3.begin(), r3.end(), 239));
    EXPECT_EQ(t.genus2.size(), 24u);
    EXPECT_TRUE(t.unresolved.empty());
}

TEST(Table, Deterministic) {
    auto a = main_theorem_table(100, 200, db());
    auto b = main_theorem_table(100, 200, db());
    EXPECT_EQ(a.rows, b.rows);
    EXPECT_EQ(a.genus2, b.genus2);
    ASSERT_EQ(a.discrepancies.size(), b.discrepancies.size());
    for (size_t i = 0; i < a.discrepancies.size(); ++i) EXPECT_EQ(a.discrepancies[i].detail, b.discrepancies[i].detail);
}

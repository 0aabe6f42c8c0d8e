#include <gtest/gtest.h>

#include <random>

#include "x0plus/quadform.hpp"

using namespace x0plus;

namespace {

const Database& db() {
    static Database d = Database::load_dir(X0PLUS_TEST_DATA_DIR);
    return d;
}

QMatrix4 diag_of(std::array<long, 4> d) {
    return diagonal_matrix({mpq_class(d[0]), mpq_class(d[1]), mpq_class(d[2]), mpq_class(d[3])});
}

std::array<mpz_class, 4> zdiag(std::array<long, 4> d) { return {d[0], d[1], d[2], d[3]}; }

bool is_diagonal(const QMatrix4& m) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j && m[i][j] != 0) return false;
    return true;
}

mpq_class det4(QMatrix4 m) {
    mpq_class d = 1;
    for (int c = 0; c < 4; ++c) {
        int piv = -1;
        for (int r = c; r < 4; ++r)
            if (m[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) std::swap(m[piv], m[c]), d = -d;
        d *= m[c][c];
        for (int r = c + 1; r < 4; ++r) {
            mpq_class f = m[r][c] / m[c][c];
            for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

void check_congruence(const QMatrix4& a) {
    auto d = diagonalize(a);
    auto t = matmul(matmul(transpose(d.transform), a), d.transform);
    ASSERT_TRUE(is_diagonal(t));
    for (int i = 0; i < 4; ++i) EXPECT_EQ(t[i][i], d.diagonal[i]);
    EXPECT_NE(det4(d.transform), 0);
}

}  // namespace

TEST(Diagonalize, Identity) {
    auto id = diag_of({1, 1, 1, 1});
    auto d = diagonalize(id);
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(d.diagonal[i], 1);
        for (int j = 0; j < 4; ++j) EXPECT_EQ(d.transform[i][j], i == j ? 1 : 0);
    }
}

TEST(Diagonalize, HyperbolicPrestep) {
    // xw - yz has zero diagonal
    QMatrix4 a{};
    a[0][3] = a[3][0] = mpq_class(1, 2);
    a[1][2] = a[2][1] = mpq_class(-1, 2);
    check_congruence(a);
    EXPECT_EQ(form_rank(a), 4);
    auto c = classify_quadric(a);
    EXPECT_EQ(c.disc_class, 1);
    EXPECT_EQ(c.verdict, QuadricVerdict::RuledOverQ);
}

TEST(Diagonalize, ZeroForm) {
    QMatrix4 z{};
    auto d = diagonalize(z);
    for (auto& v : d.diagonal) EXPECT_EQ(v, 0);
    EXPECT_EQ(form_rank(z), 0);
    EXPECT_EQ(classify_quadric(z).verdict, QuadricVerdict::Degenerate);
}

TEST(Classify, Seventy) {
    auto* m = db().model(70);
    ASSERT_TRUE(m);
    auto c = classify_quadric(m->quadric);
    EXPECT_EQ(c.rank, 4);
    std::multiset<mpz_class> got(c.classes.begin(), c.classes.end());
    EXPECT_EQ(got, (std::multiset<mpz_class>{-1, -1, 1, 7}));
    EXPECT_EQ(c.disc_class, 7);
    EXPECT_EQ(c.verdict, QuadricVerdict::RuledOverQuadratic);
    EXPECT_EQ(c.field, std::vector<i64>{7});
    EXPECT_EQ(c.verdict_str(), "Q(sqrt 7)");
    EXPECT_FALSE(trigonal_over_q(c));
}

TEST(Classify, ConeAt159) {
    auto* m = db().model(159);
    ASSERT_TRUE(m);
    auto c = classify_quadric(m->quadric);
    EXPECT_EQ(c.rank, 3);
    EXPECT_EQ(c.verdict, QuadricVerdict::Cone);
    EXPECT_EQ(c.verdict_str(), "cone");
    ASSERT_TRUE(c.isotropy_witness);
    EXPECT_EQ(evaluate_form(m->quadric, *c.isotropy_witness), 0);
    EXPECT_TRUE(trigonal_over_q(c));
}

TEST(Classify, EightyEight) {
    auto* m = db().model(88);
    ASSERT_TRUE(m);
    auto c = classify_quadric(m->quadric);
    EXPECT_EQ(c.verdict, QuadricVerdict::RuledOverQ);
    EXPECT_EQ(c.verdict_str(), "Q");
    ASSERT_TRUE(c.isotropy_witness);
    EXPECT_EQ(evaluate_form(m->quadric, *c.isotropy_witness), 0);
}

TEST(Classify, EightyFourDivergesFromPublished) {
    auto* m = db().model(84);
    ASSERT_TRUE(m);
    auto c = classify_quadric(m->quadric);
    EXPECT_EQ(c.disc_class, 1);
    EXPECT_EQ(c.verdict, QuadricVerdict::RuledOverQ);
    auto* pub = db().published_quadric(84);
    ASSERT_TRUE(pub);
    EXPECT_EQ(pub->ruling, "Q(sqrt 3)");
    // the published diagonal form has a rational zero
    EXPECT_EQ(evaluate_form(diag_of({2, -6, -3, 1}), {1, 1, 0, 2}), 0);
}

TEST(Classify, SyntheticBiquadratic) {
    auto c = classify_quadric(diag_of({1, 1, 1, 2}));
    EXPECT_EQ(c.disc_class, 2);
    EXPECT_EQ(c.verdict, QuadricVerdict::RuledOverBiquadratic);
    EXPECT_EQ(c.field, (std::vector<i64>{2, -1}));
    EXPECT_EQ(c.verdict_str(), "Q(sqrt 2,sqrt -1)");
    EXPECT_FALSE(c.isotropy_witness);
}

TEST(Classify, SquareDiscAnisotropic) {
    auto c = classify_quadric(diag_of({1, 1, 1, 1}));
    EXPECT_EQ(c.verdict, QuadricVerdict::RuledOverQuadratic);
    EXPECT_EQ(c.field, std::vector<i64>{-1});
    EXPECT_EQ(c.anisotropic, (std::vector<i64>{-1, 2}));
}

TEST(Classify, Degenerate) {
    auto c = classify_quadric(diag_of({1, -1, 0, 0}));
    EXPECT_EQ(c.rank, 2);
    EXPECT_EQ(c.verdict, QuadricVerdict::Degenerate);
}

TEST(Isotropy, Examples) {
    EXPECT_FALSE(isotropy_search(zdiag({1, 1, 1, 1}), 50));
    for (auto d : {std::array<long, 4>{5, 5, -5, -5}, {2, -6, -3, 1}, {1, -1, -1, 7}, {1, -2, -2, 9}, {7, -14, -2, 1}}) {
        auto w = isotropy_search(zdiag(d), 200);
        ASSERT_TRUE(w);
        mpz_class s = 0;
        bool nonzero = false;
        for (int i = 0; i < 4; ++i) s += d[i] * (*w)[i] * (*w)[i], nonzero |= (*w)[i] != 0;
        EXPECT_EQ(s, 0);
        EXPECT_TRUE(nonzero);
    }
    EXPECT_THROW(isotropy_search(zdiag({1, 1, 0, 1}), 5), DomainError);
}

TEST(Isotropy, LocalTheoryMatchesSearch) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> u(-12, 12);
    for (int it = 0; it < 300; ++it) {
        std::array<long, 4> d;
        for (auto& x : d)
            do x = u(rng);
            while (x == 0);
        bool local = isotropic_over_q(zdiag(d));
        bool found = isotropy_search(zdiag(d), 60).has_value();
        if (found) EXPECT_TRUE(local);
        if (local) EXPECT_TRUE(found) << d[0] << " " << d[1] << " " << d[2] << " " << d[3];
    }
}

TEST(Isotropy, QuadraticExtensions) {
    EXPECT_TRUE(isotropic_over_quadratic(zdiag({1, 1, 1, 1}), -1));
    EXPECT_FALSE(isotropic_over_quadratic(zdiag({1, 1, 1, 1}), 2));
    EXPECT_TRUE(isotropic_over_quadratic(zdiag({1, -1, -1, 7}), 7));
    EXPECT_THROW(isotropic_over_quadratic(zdiag({1, 1, 1, 1}), 4), DomainError);
    EXPECT_THROW(isotropic_over_quadratic(zdiag({1, 1, 1, 1}), 1), DomainError);
}

TEST(Hilbert, KnownValues) {
    EXPECT_EQ(hilbert_symbol(-1, -1, 2), -1);
    EXPECT_EQ(hilbert_symbol(-1, -1, -1), -1);
    EXPECT_EQ(hilbert_symbol(-1, -1, 3), 1);
    EXPECT_EQ(hilbert_symbol(2, 3, 3), -1);
    EXPECT_EQ(hilbert_symbol(5, 5, 5), 1);
    EXPECT_EQ(hilbert_symbol(7, 7, 7), -1);
    EXPECT_EQ(hilbert_symbol(2, 5, 2), -1);
    EXPECT_EQ(hilbert_symbol(3, 3, 2), -1);
    EXPECT_TRUE(is_local_square(17, 2));
    EXPECT_FALSE(is_local_square(5, 2));
    EXPECT_TRUE(is_local_square(7, 3));
    EXPECT_FALSE(is_local_square(-1, -1));
}

TEST(Hilbert, ProductFormula) {
    for (long a = -30; a <= 30; ++a)
        for (long b = -30; b <= 30; ++b) {
            if (!a || !b) continue;
            int prod = hilbert_symbol(a, b, -1);
            for (auto p : primes_up_to(31))
                if (p == 2 || a % p == 0 || b % p == 0) prod *= hilbert_symbol(a, b, p);
            EXPECT_EQ(prod, 1) << a << " " << b;
        }
}

TEST(QuadformProperties, RandomCongruence) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> u(-3, 3);
    for (int it = 0; it < 200; ++it) {
        QMatrix4 a{};
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) {
                long v = u(rng);
                a[i][j] = a[j][i] = (i == j) ? mpq_class(v) : mpq_class(mpq_class(v) / 2);
            }
        if (it % 5 == 0) a[0][0] = 0, a[1][1] = 0;
        check_congruence(a);
        QMatrix4 p{};
        do
            for (auto& r : p)
                for (auto& x : r) x = u(rng);
        while (det4(p) == 0);
        auto b = matmul(matmul(transpose(p), a), p);
        check_congruence(b);
        EXPECT_EQ(form_rank(a), form_rank(b));
        auto ca = classify_quadric(a, 30), cb = classify_quadric(b, 30);
        EXPECT_EQ(ca.rank, cb.rank);
        EXPECT_EQ(ca.disc_class, cb.disc_class);
        if (ca.rank == 4) {
            EXPECT_EQ(ca.disc_class, square_class(det4(a)).rep);
            EXPECT_EQ(ca.verdict, cb.verdict);
            EXPECT_EQ(ca.field, cb.field);
        }
        for (auto* c : {&ca, &cb})
            if (c->isotropy_witness) EXPECT_EQ(evaluate_form(c == &ca ? a : b, *c->isotropy_witness), 0);
    }
}

TEST(QuadformProperties, AllShippedQuadrics) {
    int n = 0;
    for (auto& [level, m] : db().models()) {
        if (m.kind != ModelKind::Petri) continue;
        ++n;
        check_congruence(m.quadric);
        auto c = classify_quadric(m.quadric);
        EXPECT_GE(c.rank, 3) << level;
        if (c.isotropy_witness) EXPECT_EQ(evaluate_form(m.quadric, *c.isotropy_witness), 0) << level;
    }
    EXPECT_EQ(n, 22);
}

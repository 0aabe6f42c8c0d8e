#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "x0plus/polynomial.hpp"
#include "x0plus/arith.hpp"

using namespace x0plus;

namespace {

QPoly P(std::vector<long> c) { return QPoly::from_ints(c); }

std::vector<std::string> factor_strings(const Factorization1& f) {
    std::vector<std::string> v;
    for (auto& fp : f.factors)
        for (int k = 0; k < fp.multiplicity; ++k) v.push_back(fp.factor.str());
    std::sort(v.begin(), v.end());
    return v;
}

// Eisenstein at p: p | all lower coefficients, p^2 does not divide the constant term, p does not divide the leading one
QPoly random_eisenstein(std::mt19937_64& rng, int deg) {
    static const long primes[] = {2, 3, 5};
    long p = primes[rng() % 3];
    std::uniform_int_distribution<long> small(-2, 2);
    std::vector<long> c(deg + 1);
    for (int i = 1; i < deg; ++i) c[i] = p * small(rng);
    long u;
    do u = small(rng); while (u % p == 0);
    c[0] = p * u;
    long lead;
    do lead = small(rng); while (lead <= 0 || lead % p == 0);
    c[deg] = lead;
    return P(c);
}

}  // namespace

TEST(QPoly, Arithmetic) {
    auto f = P({-1, 0, 1});
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f(mpq_class(3)), 8);
    EXPECT_EQ((f * P({1, 1})).str(), "x^3 + x^2 - x - 1");
    auto [q, r] = divmod(P({-1, 0, 0, 1}), P({-1, 1}));
    EXPECT_EQ(q, P({1, 1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(P({-1, 0, 1}), P({1, 2, 1})), P({1, 1}));
}

TEST(FactorRational, DifferenceOfSquares) {
    auto f = factor_rational_poly(P({-1, 0, 1}));
    EXPECT_EQ(factor_strings(f), (std::vector<std::string>{"x + 1", "x - 1"}));
    EXPECT_EQ(f.product(), P({-1, 0, 1}));
}

TEST(FactorRational, SliceOf98) {
    auto f = P({-9, 24, -35, 30, -15, 4});
    auto fac = factor_rational_poly(f);
    EXPECT_EQ(factor_strings(fac), (std::vector<std::string>{"4x^3 - 11x^2 + 15x - 9", "x^2 - x + 1"}));
    EXPECT_EQ(fac.product(), f);
}

TEST(FactorRational, IrreducibleCubic) {
    auto f = P({1, 1, 0, 1});
    EXPECT_TRUE(is_irreducible(f));
    EXPECT_TRUE(rational_roots(f).empty());
    EXPECT_EQ(factor_rational_poly(f).factors.size(), 1u);
}

TEST(FactorRational, Errors) {
    EXPECT_THROW(factor_rational_poly(QPoly()), DomainError);
    EXPECT_THROW(factor_rational_poly(QPoly::monomial(1, 7)), DomainError);
}

TEST(FactorRational, RationalCoefficientsAndPowers) {
    // (x/2 - 1/3)^2 (x^2 + 2)
    QPoly a({mpq_class(-1, 3), mpq_class(1, 2)});
    auto f = a * a * P({2, 0, 1});
    auto fac = factor_rational_poly(f);
    EXPECT_EQ(fac.product(), f);
    ASSERT_EQ(fac.factors.size(), 2u);
    int total = 0;
    for (auto& fp : fac.factors) total += fp.multiplicity * fp.factor.degree();
    EXPECT_EQ(total, 4);
}

TEST(FactorRational, RecoversEisensteinProducts) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
        std::vector<QPoly> parts;
        int deg = 0;
        while (deg < 6) {
            int d = 1 + static_cast<int>(rng() % 4);
            if (deg + d > 6) d = 6 - deg;
            parts.push_back(random_eisenstein(rng, d));
            deg += d;
        }
        QPoly f = P({1});
        std::vector<std::string> want;
        for (auto& q : parts) {
            f = f * q;
            want.push_back(q.primitive().str());
        }
        std::sort(want.begin(), want.end());
        auto fac = factor_rational_poly(f);
        EXPECT_EQ(fac.product(), f);
        EXPECT_EQ(factor_strings(fac), want) << f.str();
    }
}

TEST(RationalRoots, Examples) {
    auto r = rational_roots(P({-6, 1, 1}));  // (x + 3)(x - 2)
    std::sort(r.begin(), r.end());
    EXPECT_EQ(r, (std::vector<mpq_class>{-3, 2}));
    auto s = rational_roots(QPoly({mpq_class(-1), mpq_class(0), mpq_class(4)}));
    std::sort(s.begin(), s.end());
    EXPECT_EQ(s, (std::vector<mpq_class>{mpq_class(-1, 2), mpq_class(1, 2)}));
}

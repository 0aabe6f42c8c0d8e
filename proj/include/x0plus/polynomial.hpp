#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace x0plus {

// Dense univariate polynomial over Q, constant term first, no trailing zeros.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> c);
    static QPoly from_ints(const std::vector<long>& c);
    static QPoly monomial(const mpq_class& c, int deg);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    mpq_class coeff(int i) const;
    mpq_class lead() const;

    mpq_class operator()(const mpq_class& x) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const mpq_class& s) const;
    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    QPoly derivative() const;
    QPoly monic() const;
    // scaled to coprime integer coefficients with positive leading coefficient
    QPoly primitive() const;
    mpq_class content() const;  // f = content * primitive
    std::vector<mpz_class> int_coeffs() const;  // requires integral coefficients

    std::string str(char var = 'x') const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly gcd(QPoly a, QPoly b);

std::vector<mpq_class> rational_roots(const QPoly& f);

struct FactorPower {
    QPoly factor;  // primitive, irreducible over Q
    int multiplicity;
};

struct Factorization1 {
    mpq_class unit;
    std::vector<FactorPower> factors;
    QPoly product() const;
};

// Complete factorization over Q for degree <= 6 (Kronecker's method on the
// squarefree parts).
Factorization1 factor_rational_poly(const QPoly& f);
bool is_irreducible(const QPoly& f);

}  // namespace x0plus

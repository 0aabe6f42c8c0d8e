#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace x0plus {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed or inconsistent input data.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : DataError {
    ParseError(long line, const std::string& what)
        : DataError("line " + std::to_string(line) + ": " + what), line(line) {}
    long line;
};

struct IntegrityError : DataError {
    using DataError::DataError;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using i64 = std::int64_t;

struct Factorization {
    i64 n = 1;
    std::vector<std::pair<i64, int>> factors;

    int omega() const { return static_cast<int>(factors.size()); }
    i64 sigma0() const;
    int valuation(i64 p) const;
    bool is_square() const;
    std::vector<i64> primes() const;
    std::vector<i64> divisors() const;
    // d | n with gcd(d, n/d) = 1
    std::vector<i64> exact_divisors() const;
};

Factorization factorize(i64 n);

bool is_prime(i64 n);
std::vector<i64> primes_up_to(i64 bound);
i64 gcd(i64 a, i64 b);
i64 euler_phi(i64 n);
i64 sigma0(i64 n);
bool is_perfect_square(i64 n);
bool is_exact_divisor(i64 d, i64 n);

i64 dedekind_psi(i64 n);

struct SquareClass {
    mpz_class rep;  // squarefree, sign kept
    bool operator==(const SquareClass& o) const { return rep == o.rep; }
};

SquareClass square_class(const mpq_class& q);
mpz_class squarefree_part(const mpz_class& n);
bool is_rational_square(const mpq_class& q);
// exact square root of a nonnegative rational square
mpq_class rational_sqrt(const mpq_class& q);

i64 class_number(i64 D);

int kronecker_symbol(i64 a, i64 n);

i64 powmod(i64 b, i64 e, i64 m);

}  // namespace x0plus

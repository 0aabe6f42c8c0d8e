#include "x0plus/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace x0plus {

i64 Factorization::sigma0() const {
    i64 s = 1;
    for (auto& [p, e] : factors) s *= e + 1;
    return s;
}

int Factorization::valuation(i64 p) const {
    for (auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

bool Factorization::is_square() const {
    for (auto& f : factors)
        if (f.second % 2) return false;
    return true;
}

std::vector<i64> Factorization::primes() const {
    std::vector<i64> r;
    for (auto& f : factors) r.push_back(f.first);
    return r;
}

std::vector<i64> Factorization::divisors() const {
    std::vector<i64> d{1};
    for (auto& [p, e] : factors) {
        size_t m = d.size();
        i64 pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < m; ++i) d.push_back(d[i] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

std::vector<i64> Factorization::exact_divisors() const {
    std::vector<i64> d{1};
    for (auto& [p, e] : factors) {
        i64 pe = 1;
        for (int k = 0; k < e; ++k) pe *= p;
        size_t m = d.size();
        for (size_t i = 0; i < m; ++i) d.push_back(d[i] * pe);
    }
    std::sort(d.begin(), d.end());
    return d;
}

Factorization factorize(i64 n) {
    if (n <= 0) throw DomainError("factorize: n must be positive");
    Factorization f;
    f.n = n;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.factors.emplace_back(p, e);
    }
    if (n > 1) f.factors.emplace_back(n, 1);
    return f;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::vector<i64> primes_up_to(i64 bound) {
    std::vector<i64> r;
    if (bound < 2) return r;
    std::vector<bool> comp(bound + 1, false);
    for (i64 i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        r.push_back(i);
        for (i64 j = i * i; j <= bound; j += i) comp[j] = true;
    }
    return r;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 euler_phi(i64 n) {
    i64 r = n;
    for (auto p : factorize(n).primes()) r = r / p * (p - 1);
    return r;
}

i64 sigma0(i64 n) { return factorize(n).sigma0(); }

bool is_perfect_square(i64 n) {
    if (n < 0) return false;
    i64 r = static_cast<i64>(mpz_class(sqrt(mpz_class(static_cast<long>(n)))).get_si());
    return r * r == n;
}

bool is_exact_divisor(i64 d, i64 n) {
    return d > 0 && n % d == 0 && std::gcd(d, n / d) == 1;
}

i64 dedekind_psi(i64 n) {
    i64 r = n;
    for (auto p : factorize(n).primes()) r = r / p * (p + 1);
    return r;
}

mpz_class squarefree_part(const mpz_class& n) {
    if (n == 0) throw DomainError("squarefree_part of zero");
    mpz_class m = abs(n), r = 1;
    for (mpz_class p = 2; p * p <= m; ++p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e % 2) r *= p;
    }
    r *= m;
    return sgn(n) < 0 ? mpz_class(-r) : r;
}

SquareClass square_class(const mpq_class& q) {
    if (q == 0) throw DomainError("square_class of zero");
    mpz_class v = q.get_num() * q.get_den();
    return SquareClass{squarefree_part(v)};
}

bool is_rational_square(const mpq_class& q) {
    if (q < 0) return false;
    if (q == 0) return true;
    return mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

mpq_class rational_sqrt(const mpq_class& q) {
    if (!is_rational_square(q)) throw DomainError("rational_sqrt: not a square");
    mpq_class r(sqrt(q.get_num()), sqrt(q.get_den()));
    r.canonicalize();
    return r;
}

i64 class_number(i64 D) {
    if (D >= 0) throw DomainError("class_number: D must be negative");
    i64 m = ((D % 4) + 4) % 4;
    if (m != 0 && m != 1) throw DomainError("class_number: D must be 0 or 1 mod 4");
    i64 h = 0;
    for (i64 a = 1; 3 * a * a <= -D; ++a) {
        for (i64 b = -a + 1; b <= a; ++b) {
            i64 num = b * b - D;
            if (num % (4 * a)) continue;
            i64 c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;
            if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
            ++h;
        }
    }
    return h;
}

i64 powmod(i64 b, i64 e, i64 m) {
    i64 r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e > 0) {
        if (e & 1) r = static_cast<i64>((__int128)r * b % m);
        b = static_cast<i64>((__int128)b * b % m);
        e >>= 1;
    }
    return r;
}

int kronecker_symbol(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int s = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) s = -s;
    }
    int v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    if (v > 0) {
        if (a % 2 == 0) return 0;
        i64 r = ((a % 8) + 8) % 8;
        if ((v & 1) && (r == 3 || r == 5)) s = -s;
    }
    // Jacobi symbol (a/n), n odd positive
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 r = n % 8;
            if (r == 3 || r == 5) s = -s;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) s = -s;
        a %= n;
    }
    return n == 1 ? s : 0;
}

}  // namespace x0plus

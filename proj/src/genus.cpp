#include "x0plus/genus.hpp"

#include <set>

namespace x0plus {

namespace {

void require_coverage(i64 n, const Database& db) {
    if (!db.covers(n)) throw DataError("newform data does not cover level " + std::to_string(n));
}

// number of block divisors fixed by w_u on the oldspace of a level-M form, u || N
i64 block_fixed(const Factorization& quot, i64 u) {
    i64 c = 1;
    for (auto& [q, v] : quot.factors) {
        if (u % q == 0) {
            if (v % 2) return 0;
        } else {
            c *= v + 1;
        }
    }
    return c;
}

i64 al_product(i64 a, i64 b) {
    i64 g = gcd(a, b);
    return (a / g) * (b / g);
}

}  // namespace

i64 GenusReport::genus() const {
    if (genus_x0_plus_nf) return *genus_x0_plus_nf;
    if (genus_x0_plus_rh) return *genus_x0_plus_rh;
    throw IntegrityError("no integral genus for level " + std::to_string(level));
}

i64 genus_x0(i64 n) {
    if (n < 1) throw DomainError("genus_x0: N must be positive");
    auto f = factorize(n);
    i64 nu2 = 0, nu3 = 0;
    if (n % 4 != 0) {
        nu2 = 1;
        for (auto p : f.primes()) nu2 *= 1 + kronecker_symbol(-4, p);
    }
    if (n % 9 != 0) {
        nu3 = 1;
        for (auto p : f.primes()) nu3 *= 1 + kronecker_symbol(-3, p);
    }
    i64 cusps = 0;
    for (auto d : f.divisors()) cusps += euler_phi(gcd(d, n / d));
    i64 twelve_g = 12 + dedekind_psi(n) - 3 * nu2 - 4 * nu3 - 6 * cusps;
    if (twelve_g % 12 || twelve_g < 0) throw IntegrityError("non-integral genus of X0(" + std::to_string(n) + ")");
    return twelve_g / 12;
}

i64 fricke_fixed_points(i64 n) {
    if (n < 5) throw DomainError("fricke_fixed_points: N must be at least 5");
    i64 v = class_number(-4 * n);
    if (n % 4 == 3) v += class_number(-n);
    return v;
}

GenusReport genus_x0_plus(i64 n, const Database* db) {
    if (n < 1) throw DomainError("genus_x0_plus: N must be positive");
    GenusReport r;
    r.level = n;
    r.perfect_square = n > 1 && is_perfect_square(n);
    if (n <= 4) {
        r.genus_x0_plus_rh = 0;
        if (db && db->covers(n)) r.genus_x0_plus_nf = 0;
        return r;
    }
    r.genus_x0 = genus_x0(n);
    r.fricke_fixed_points = fricke_fixed_points(n);
    i64 num = 2 * r.genus_x0 + 2 - r.fricke_fixed_points;
    if (num >= 0 && num % 4 == 0) r.genus_x0_plus_rh = num / 4;
    if (db && db->covers(n)) {
        i64 g = (trace_al(n, 1, *db) + trace_al(n, n, *db));
        if (g % 2) throw IntegrityError("odd Fricke trace sum at level " + std::to_string(n));
        r.genus_x0_plus_nf = g / 2;
    }
    if (!r.genus_x0_plus_rh && !r.genus_x0_plus_nf)
        throw IntegrityError("non-integral Riemann-Hurwitz genus at level " + std::to_string(n));
    r.agreement = !r.genus_x0_plus_nf || !r.genus_x0_plus_rh || *r.genus_x0_plus_nf == *r.genus_x0_plus_rh;
    return r;
}

i64 trace_al(i64 n, i64 u, const Database& db) {
    if (!is_exact_divisor(u, n)) throw DomainError("trace_al: u must be an exact divisor of N");
    require_coverage(n, db);
    i64 t = 0;
    for (auto m : factorize(n).divisors()) {
        auto quot = factorize(n / m);
        i64 c = block_fixed(quot, u);
        if (c == 0) continue;
        for (auto* o : db.orbits_at(m)) t += o->dim * o->sign_of(gcd(u, m)) * c;
    }
    return t;
}

i64 al_group_genus(i64 n, const std::vector<i64>& generators, const Database& db) {
    std::set<i64> group{1};
    for (auto g : generators) {
        if (!is_exact_divisor(g, n)) throw DomainError("al_group_genus: generator is not an exact divisor");
        std::set<i64> next = group;
        for (auto h : group) next.insert(al_product(g, h));
        group = next;
    }
    i64 s = 0;
    for (auto u : group) s += trace_al(n, u, db);
    i64 k = static_cast<i64>(group.size());
    if (s % k || s < 0) throw IntegrityError("non-integral quotient genus at level " + std::to_string(n));
    return s / k;
}

i64 al_quotient_genus(i64 n, i64 r, const Database& db) {
    if (!is_exact_divisor(r, n) || r == 1 || r == n)
        throw DomainError("al_quotient_genus: r must be an exact divisor with 1 < r < N");
    return al_group_genus(n, {r, n}, db);
}

i64 genus_star(i64 n, const Database& db) {
    std::vector<i64> gens;
    for (auto& [p, e] : factorize(n).factors) {
        i64 pe = 1;
        for (int k = 0; k < e; ++k) pe *= p;
        gens.push_back(pe);
    }
    return al_group_genus(n, gens, db);
}

CastelnuovoResult castelnuovo_filter(i64 n, const Database& db) {
    CastelnuovoResult res;
    auto exact = factorize(n).exact_divisors();
    if (exact.size() <= 2) return res;
    res.genus_plus = genus_x0_plus(n, &db).genus();
    for (auto r : exact) {
        if (r == 1 || r == n) continue;
        i64 gq = al_quotient_genus(n, r, db);
        if (res.genus_plus > 2 * gq + 5) {
            res.pass = false;
            res.witness_r = r;
            res.quotient_genus = gq;
            return res;
        }
    }
    return res;
}

}  // namespace x0plus

#include "x0plus/ffcount.hpp"

#include <algorithm>

namespace x0plus {

namespace {

constexpr i64 kPetriFieldLimit = 10000;

void require_good(i64 level, const PrimePower& pp) {
    if (level % pp.p == 0) throw DomainError("bad reduction: p = " + std::to_string(pp.p) + " divides " + std::to_string(level));
}

// degree of gcd(f, f') over F_p, f given by coefficients in F_p
int gcd_degree_mod_p(std::vector<i64> a, std::vector<i64> b, i64 p) {
    auto trim = [](std::vector<i64>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        while (a.size() >= b.size() && !a.empty()) {
            i64 c = a.back() * powmod(b.back(), p - 2, p) % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
            trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

}  // namespace

PrimePower::PrimePower(i64 p_, int n_) : p(p_), n(n_) {
    if (!is_prime(p)) throw DomainError("prime power: " + std::to_string(p) + " is not prime");
    if (n < 1 || n > 4) throw DomainError("prime power: exponent must be 1..4");
    if (n >= 3 && p > 7) throw DomainError("prime power: exponents 3, 4 need p <= 7");
}

i64 PrimePower::q() const {
    i64 q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    return q;
}

std::string PrimePower::str() const { return n == 1 ? std::to_string(p) : std::to_string(p) + "^" + std::to_string(n); }

i64 frobenius_power_trace(const NewformOrbitRecord& orbit, const PrimePower& pp) {
    require_good(orbit.level, pp);
    auto it = orbit.hecke.find(pp.p);
    i64 need = pp.n <= 2 ? 2 : 4;
    if (it == orbit.hecke.end() || static_cast<i64>(it->second.size()) < need)
        throw DataError("missing power sums for " + orbit.label() + " at p = " + std::to_string(pp.p));
    const auto& s = it->second;
    i64 p = pp.p, d = orbit.dim;
    switch (pp.n) {
        case 1: return s[0];
        case 2: return s[1] - 2 * d * p;
        case 3: return s[2] - 3 * p * s[0];
        default: return s[3] - 4 * p * s[1] + 2 * d * p * p;
    }
}

i64 frobenius_trace_from_ap(i64 ap, const PrimePower& pp) {
    i64 prev = 2, cur = ap;
    for (int k = 1; k < pp.n; ++k) {
        i64 next = ap * cur - pp.p * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

CountReport count_x0(i64 n, const PrimePower& pp, const Database& db) {
    if (n < 1) throw DomainError("count_x0: N must be positive");
    require_good(n, pp);
    if (!db.covers(n)) throw DataError("newform data does not cover level " + std::to_string(n));
    i64 t = 0;
    for (auto m : factorize(n).divisors())
        for (auto* o : db.orbits_at(m)) t += sigma0(n / m) * frobenius_power_trace(*o, pp);
    return {"X0(" + std::to_string(n) + ")", pp, pp.q() + 1 - t, CountMethod::Eigenvalue};
}

CountReport count_x0_plus(i64 n, const PrimePower& pp, const Database& db) {
    if (n < 1) throw DomainError("count_x0_plus: N must be positive");
    require_good(n, pp);
    if (!db.covers(n)) throw DataError("newform data does not cover level " + std::to_string(n));
    i64 t2 = 0;
    for (auto m : factorize(n).divisors()) {
        i64 r = n / m;
        bool sq = is_perfect_square(r);
        for (auto* o : db.orbits_at(m)) t2 += (sigma0(r) + (sq ? o->fricke_sign() : 0)) * frobenius_power_trace(*o, pp);
    }
    if (t2 % 2) throw IntegrityError("odd plus-trace at level " + std::to_string(n));
    return {"X0+(" + std::to_string(n) + ")", pp, pp.q() + 1 - t2 / 2, CountMethod::Eigenvalue};
}

i64 count_weierstrass_brute(const std::array<i64, 5>& a, const PrimePower& pp) {
    GF F(pp.p, pp.n);
    auto a1 = F.from_int(a[0]), a2 = F.from_int(a[1]), a3 = F.from_int(a[2]), a4 = F.from_int(a[3]), a6 = F.from_int(a[4]);
    i64 count = 1;
    for (GF::Elt x = 0; x < static_cast<GF::Elt>(F.q()); ++x) {
        auto rhs = F.add(F.mul(F.add(F.mul(F.add(x, a2), x), a4), x), a6);
        auto lin = F.add(F.mul(a1, x), a3);
        if (pp.p != 2) {
            // (2y + lin)^2 = lin^2 + 4 rhs
            auto disc = F.add(F.mul(lin, lin), F.mul(F.from_int(4), rhs));
            count += 1 + F.chi(disc);
        } else {
            for (GF::Elt y = 0; y < static_cast<GF::Elt>(F.q()); ++y)
                if (F.add(F.mul(y, y), F.mul(lin, y)) == rhs) ++count;
        }
    }
    return count;
}

CountReport count_ec(const EllipticCurveRecord& e, const PrimePower& pp, const Database* db) {
    require_good(e.conductor, pp);
    i64 ap;
    const NewformOrbitRecord* o = db ? db->orbit_for_curve(e) : nullptr;
    if (o && o->hecke.count(pp.p)) {
        ap = o->hecke.at(pp.p)[0];
    } else {
        ap = weierstrass_ap(e.weierstrass, pp.p);
    }
    return {"E " + e.label, pp, pp.q() + 1 - frobenius_trace_from_ap(ap, pp), CountMethod::Eigenvalue};
}

CountReport count_hyperelliptic_model(const QPoly& f, const PrimePower& pp) {
    if (pp.p == 2) throw DomainError("hyperelliptic count: p = 2 unsupported");
    int deg = f.degree();
    if (deg < 1) throw DomainError("hyperelliptic count: nonconstant f required");
    std::vector<i64> fp;
    for (auto& c : f.coeffs()) {
        if (c.get_den() % pp.p == 0) throw DomainError("bad reduction: coefficient denominator divisible by p");
        mpz_class v = c.get_num() * mpz_class(powmod(mpz_class(c.get_den() % pp.p).get_si(), pp.p - 2, pp.p));
        v %= pp.p;
        if (v < 0) v += pp.p;
        fp.push_back(v.get_si());
    }
    if (fp.back() == 0) throw DomainError("bad reduction: leading coefficient vanishes mod p");
    std::vector<i64> dfp;
    for (int i = 1; i <= deg; ++i) dfp.push_back(fp[i] * i % pp.p);
    if (gcd_degree_mod_p(fp, dfp, pp.p) > 0) throw DomainError("bad reduction: f not squarefree mod p");
    GF F(pp.p, pp.n);
    std::vector<GF::Elt> c;
    for (auto v : fp) c.push_back(F.from_int(v));
    i64 count = 0;
    for (GF::Elt x = 0; x < static_cast<GF::Elt>(F.q()); ++x) {
        GF::Elt v = c[deg];
        for (int i = deg - 1; i >= 0; --i) v = F.add(F.mul(v, x), c[i]);
        count += 1 + F.chi(v);
    }
    if (deg % 2) count += 1;
    else count += 1 + F.chi(c[deg]);
    return {"y^2 = " + f.str(), pp, count, CountMethod::ModelBruteForce};
}

CountReport count_petri_model(const QMatrix4& A, const std::array<mpq_class, 20>& cubic, const PrimePower& pp) {
    if (pp.q() > kPetriFieldLimit) throw ResourceError("petri count: q exceeds " + std::to_string(kPetriFieldLimit));
    GF F(pp.p, pp.n);
    using E = GF::Elt;
    // quadric coefficients on monomials v_i v_j, i <= j
    E qc[4][4] = {};
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) qc[i][j] = F.from_rational(i == j ? A[i][i] : mpq_class(2 * A[i][j]));
    const auto& mons = cubic_monomials();
    std::array<E, 20> cc;
    for (int k = 0; k < 20; ++k) cc[k] = F.from_rational(cubic[k]);
    const E q = static_cast<E>(F.q());

    // points with coordinates (x, y, z, w), last nonzero coordinate among (y, z, w) normalized
    auto count_slice = [&](E y, E z, E w) {
        E v[4] = {0, y, z, w};
        // Q = a2 x^2 + a1 x + a0, C = b3 x^3 + b2 x^2 + b1 x + b0
        E a[3] = {0, 0, qc[0][0]};
        for (int j = 1; j < 4; ++j) a[1] = F.add(a[1], F.mul(qc[0][j], v[j]));
        for (int i = 1; i < 4; ++i)
            for (int j = i; j < 4; ++j) a[0] = F.add(a[0], F.mul(qc[i][j], F.mul(v[i], v[j])));
        E b[4] = {0, 0, 0, 0};
        for (int k = 0; k < 20; ++k) {
            if (cc[k] == 0) continue;
            E t = cc[k];
            for (int j = 1; j < 4; ++j) t = F.mul(t, F.pow(v[j], mons[k][j]));
            b[mons[k][0]] = F.add(b[mons[k][0]], t);
        }
        i64 c = 0;
        for (E x = 0; x < q; ++x) {
            E qv = F.add(F.mul(F.add(F.mul(a[2], x), a[1]), x), a[0]);
            if (qv != 0) continue;
            E cv = F.add(F.mul(F.add(F.mul(F.add(F.mul(b[3], x), b[2]), x), b[1]), x), b[0]);
            if (cv == 0) ++c;
        }
        return c;
    };
    i64 count = 0;
    for (E y = 0; y < q; ++y)
        for (E z = 0; z < q; ++z) count += count_slice(y, z, F.one());
    for (E y = 0; y < q; ++y) count += count_slice(y, F.one(), 0);
    count += count_slice(F.one(), 0, 0);
    // the point (1:0:0:0)
    if (qc[0][0] == 0 && cc[0] == 0) ++count;
    return {"petri model", pp, count, CountMethod::ModelBruteForce};
}

CountReport count_model(const CurveModel& m, const PrimePower& pp) {
    if (std::find(m.bad_primes.begin(), m.bad_primes.end(), pp.p) != m.bad_primes.end() || m.level % pp.p == 0)
        throw DomainError("bad reduction: p = " + std::to_string(pp.p) + " is a bad prime of the model for " + std::to_string(m.level));
    CountReport r = m.kind == ModelKind::Hyperelliptic ? count_hyperelliptic_model(m.f, pp)
                                                       : count_petri_model(m.quadric, m.cubic, pp);
    r.object = "model X0+(" + std::to_string(m.level) + ")";
    return r;
}

}  // namespace x0plus

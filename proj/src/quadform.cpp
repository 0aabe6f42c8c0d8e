#include "x0plus/quadform.hpp"

#include <algorithm>
#include <set>

namespace x0plus {

namespace {

QMatrix4 identity4() {
    QMatrix4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = i == j ? 1 : 0;
    return t;
}

// a = p^v * u with p not dividing u
int split_valuation(mpz_class a, i64 p, mpz_class& u) {
    int v = 0;
    mpz_class pp = p;
    while (a % pp == 0) {
        a /= pp;
        ++v;
    }
    u = a;
    return v;
}

int legendre(const mpz_class& u, i64 p) {
    mpz_class r = u % p;
    if (r < 0) r += p;
    return kronecker_symbol(r.get_si(), p);
}

i64 mod_small(const mpz_class& a, i64 m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r.get_si();
}

std::vector<i64> relevant_primes(const std::array<mpz_class, 4>& d) {
    std::set<i64> ps{2};
    for (auto& x : d) {
        mpz_class a = abs(x);
        for (mpz_class p = 2; p * p <= a; ++p) {
            if (a % p == 0) {
                ps.insert(p.get_si());
                while (a % p == 0) a /= p;
            }
        }
        if (a > 1) ps.insert(a.get_si());
    }
    return {ps.begin(), ps.end()};
}

bool nondegenerate(const std::array<mpz_class, 4>& d) {
    return std::all_of(d.begin(), d.end(), [](const mpz_class& x) { return x != 0; });
}

// squarefree e ordered by |e|, positive first, excluding 1
std::vector<i64> field_candidates(i64 bound) {
    std::vector<i64> out;
    for (i64 m = 1; m <= bound; ++m) {
        bool sf = true;
        for (i64 k = 2; k * k <= m; ++k)
            if (m % (k * k) == 0) sf = false;
        if (!sf) continue;
        if (m != 1) out.push_back(m);
        out.push_back(-m);
    }
    return out;
}

}  // namespace

QMatrix4 matmul(const QMatrix4& a, const QMatrix4& b) {
    QMatrix4 c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

QMatrix4 transpose(const QMatrix4& a) {
    QMatrix4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t[i][j] = a[j][i];
    return t;
}

mpq_class evaluate_form(const QMatrix4& a, const std::array<mpq_class, 4>& v) {
    mpq_class s = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s += a[i][j] * v[i] * v[j];
    return s;
}

QMatrix4 matrix_from_upper(const std::array<mpq_class, 10>& u) {
    QMatrix4 a;
    int k = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i; j < 4; ++j) {
            a[i][j] = u[k++];
            a[j][i] = a[i][j];
        }
    return a;
}

QMatrix4 diagonal_matrix(const std::array<mpq_class, 4>& d) {
    QMatrix4 a;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = i == j ? d[i] : mpq_class(0);
    return a;
}

Diagonalization diagonalize(const QMatrix4& a) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (a[i][j] != a[j][i]) throw DomainError("diagonalize: matrix not symmetric");
    QMatrix4 m = a, t = identity4();
    // basis change e_i <- e_i + c e_j, applied to rows, columns and transform
    auto add_multiple = [&](int i, int j, const mpq_class& c) {
        for (int k = 0; k < 4; ++k) m[i][k] += c * m[j][k];
        for (int k = 0; k < 4; ++k) m[k][i] += c * m[k][j];
        for (int k = 0; k < 4; ++k) t[k][i] += c * t[k][j];
    };
    auto swap_basis = [&](int i, int j) {
        if (i == j) return;
        std::swap(m[i], m[j]);
        for (int k = 0; k < 4; ++k) std::swap(m[k][i], m[k][j]);
        for (int k = 0; k < 4; ++k) std::swap(t[k][i], t[k][j]);
    };
    for (int k = 0; k < 4; ++k) {
        int piv = -1;
        for (int i = k; i < 4 && piv < 0; ++i)
            if (m[i][i] != 0) piv = i;
        if (piv < 0) {
            // hyperbolic pre-step: all remaining diagonal entries vanish
            int pi = -1, pj = -1;
            for (int i = k; i < 4 && pi < 0; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (m[i][j] != 0) {
                        pi = i;
                        pj = j;
                        break;
                    }
            if (pi < 0) break;
            add_multiple(pi, pj, 1);
            piv = pi;
        }
        swap_basis(k, piv);
        for (int j = k + 1; j < 4; ++j) {
            if (m[j][k] == 0) continue;
            mpq_class c = -m[j][k] / m[k][k];
            add_multiple(j, k, c);
        }
    }
    Diagonalization d;
    for (int i = 0; i < 4; ++i) d.diagonal[i] = m[i][i];
    d.transform = t;
    return d;
}

int form_rank(const QMatrix4& a) {
    auto d = diagonalize(a);
    return static_cast<int>(std::count_if(d.diagonal.begin(), d.diagonal.end(), [](const mpq_class& x) { return x != 0; }));
}

int hilbert_symbol(const mpz_class& a, const mpz_class& b, i64 p) {
    if (a == 0 || b == 0) throw DomainError("hilbert_symbol: zero argument");
    if (p == -1) return (a < 0 && b < 0) ? -1 : 1;
    mpz_class u, v;
    int alpha = split_valuation(a, p, u), beta = split_valuation(b, p, v);
    if (p != 2) {
        int s = 1;
        if ((alpha * beta) % 2 && (p % 4 == 3)) s = -s;
        if (beta % 2) s *= legendre(u, p);
        if (alpha % 2) s *= legendre(v, p);
        return s;
    }
    auto eps = [](const mpz_class& x) { return (mod_small(x, 4) == 3) ? 1 : 0; };
    auto omega = [](const mpz_class& x) {
        i64 r = mod_small(x, 8);
        return (r == 3 || r == 5) ? 1 : 0;
    };
    int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 ? -1 : 1;
}

bool is_local_square(const mpz_class& d, i64 p) {
    if (d == 0) return true;
    if (p == -1) return d > 0;
    mpz_class u;
    int v = split_valuation(d, p, u);
    if (v % 2) return false;
    if (p == 2) return mod_small(u, 8) == 1;
    return legendre(u, p) == 1;
}

std::vector<i64> anisotropic_places(const std::array<mpz_class, 4>& d) {
    if (!nondegenerate(d)) throw DomainError("anisotropic_places: degenerate form");
    std::vector<i64> out;
    bool pos = std::all_of(d.begin(), d.end(), [](auto& x) { return x > 0; });
    bool neg = std::all_of(d.begin(), d.end(), [](auto& x) { return x < 0; });
    if (pos || neg) out.push_back(-1);
    mpz_class disc = d[0] * d[1] * d[2] * d[3];
    for (auto p : relevant_primes(d)) {
        if (!is_local_square(disc, p)) continue;
        int c = 1;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) c *= hilbert_symbol(d[i], d[j], p);
        if (c == -hilbert_symbol(-1, -1, p)) out.push_back(p);
    }
    return out;
}

bool isotropic_over_q(const std::array<mpz_class, 4>& d) { return anisotropic_places(d).empty(); }

bool isotropic_over_quadratic(const std::array<mpz_class, 4>& d, i64 e) {
    if (e == 1 || squarefree_part(e) != e) throw DomainError("isotropic_over_quadratic: e must be squarefree and not 1");
    for (auto v : anisotropic_places(d))
        if (is_local_square(e, v)) return false;
    return true;
}

std::optional<std::array<mpz_class, 4>> isotropy_search(const std::array<mpz_class, 4>& d, i64 height_bound) {
    if (!nondegenerate(d)) throw DomainError("isotropy_search: degenerate form");
    if (height_bound < 1) throw DomainError("isotropy_search: height bound must be positive");
    for (i64 h = 1; h <= height_bound; ++h) {
        for (i64 a = 0; a <= h; ++a)
            for (i64 b = 0; b <= h; ++b)
                for (i64 c = 0; c <= h; ++c) {
                    if (a != h && b != h && c != h) continue;
                    mpz_class s = d[0] * a * a + d[1] * b * b + d[2] * c * c;
                    if (s % d[3] != 0) continue;
                    mpz_class t = -s / d[3];
                    if (t < 0 || !mpz_perfect_square_p(t.get_mpz_t())) continue;
                    mpz_class r = sqrt(t);
                    if (r > height_bound) continue;
                    return std::array<mpz_class, 4>{mpz_class(a), mpz_class(b), mpz_class(c), r};
                }
    }
    return std::nullopt;
}

std::string QuadricClassification::verdict_str() const {
    switch (verdict) {
        case QuadricVerdict::Degenerate: return "degenerate";
        case QuadricVerdict::Cone: return "cone";
        case QuadricVerdict::RuledOverQ: return "Q";
        case QuadricVerdict::RuledOverQuadratic: return "Q(sqrt " + std::to_string(field.at(0)) + ")";
        case QuadricVerdict::RuledOverBiquadratic:
            return "Q(sqrt " + std::to_string(field.at(0)) + ",sqrt " + std::to_string(field.at(1)) + ")";
    }
    return "";
}

QuadricClassification classify_quadric(const QMatrix4& a, i64 height_bound) {
    QuadricClassification c;
    auto dg = diagonalize(a);
    c.diagonal = dg.diagonal;
    mpq_class prod = 1;
    for (int i = 0; i < 4; ++i) {
        if (dg.diagonal[i] == 0) {
            c.classes[i] = 0;
            continue;
        }
        ++c.rank;
        c.classes[i] = square_class(dg.diagonal[i]).rep;
        prod *= dg.diagonal[i];
    }
    if (c.rank > 0) c.disc_class = square_class(prod).rep;
    if (c.rank <= 2) return c;
    if (c.rank == 3) {
        c.verdict = QuadricVerdict::Cone;
        std::array<mpq_class, 4> vertex;
        for (int i = 0; i < 4; ++i)
            if (dg.diagonal[i] == 0)
                for (int k = 0; k < 4; ++k) vertex[k] = dg.transform[k][i];
        c.isotropy_witness = vertex;
        return c;
    }
    c.anisotropic = anisotropic_places(c.classes);
    bool iso = c.anisotropic.empty();
    if (iso) {
        if (auto v = isotropy_search(c.classes, height_bound)) {
            // diagonal entry = class * r^2, so coordinate v_i / r_i
            std::array<mpq_class, 4> y;
            for (int i = 0; i < 4; ++i) {
                mpq_class r = rational_sqrt(dg.diagonal[i] / mpq_class(c.classes[i]));
                y[i] = mpq_class((*v)[i]) / r;
            }
            std::array<mpq_class, 4> x;
            for (int k = 0; k < 4; ++k) {
                x[k] = 0;
                for (int i = 0; i < 4; ++i) x[k] += dg.transform[k][i] * y[i];
            }
            c.isotropy_witness = x;
        }
    }
    auto splitting_field = [&](i64 skip) -> i64 {
        for (auto e : field_candidates(10000)) {
            if (e == skip) continue;
            if (isotropic_over_quadratic(c.classes, e)) return e;
        }
        throw ResourceError("no splitting quadratic field found");
    };
    if (c.disc_class == 1) {
        if (iso) {
            c.verdict = QuadricVerdict::RuledOverQ;
        } else {
            c.verdict = QuadricVerdict::RuledOverQuadratic;
            c.field = {splitting_field(1)};
        }
    } else {
        i64 d = c.disc_class.get_si();
        if (iso) {
            c.verdict = QuadricVerdict::RuledOverQuadratic;
            c.field = {d};
        } else {
            c.verdict = QuadricVerdict::RuledOverBiquadratic;
            c.field = {d, splitting_field(d)};
        }
    }
    return c;
}

bool trigonal_over_q(const QuadricClassification& c) {
    return c.verdict == QuadricVerdict::Cone || c.verdict == QuadricVerdict::RuledOverQ;
}

}  // namespace x0plus

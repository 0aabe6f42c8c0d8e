#include "x0plus/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "x0plus/arith.hpp"

namespace x0plus {

QPoly::QPoly(std::vector<mpq_class> c) : c_(std::move(c)) {
    for (auto& x : c_) x.canonicalize();
    trim();
}

QPoly QPoly::from_ints(const std::vector<long>& c) {
    std::vector<mpq_class> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(std::move(v));
}

QPoly QPoly::monomial(const mpq_class& c, int deg) {
    std::vector<mpq_class> v(deg + 1);
    v[deg] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

mpq_class QPoly::lead() const { return c_.empty() ? mpq_class(0) : c_.back(); }

mpq_class QPoly::operator()(const mpq_class& x) const {
    mpq_class r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<mpq_class> v(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<mpq_class> v(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const mpq_class& s) const {
    std::vector<mpq_class> v = c_;
    for (auto& x : v) x *= s;
    return QPoly(std::move(v));
}

QPoly QPoly::derivative() const {
    std::vector<mpq_class> v;
    for (size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * mpq_class(1 / lead());
}

mpq_class QPoly::content() const {
    if (is_zero()) return 0;
    mpz_class l = 1, g = 0;
    for (auto& x : c_) l = lcm(l, x.get_den());
    for (auto& x : c_) g = gcd(g, mpz_class(x.get_num() * (l / x.get_den())));
    mpq_class r(g, l);
    r.canonicalize();
    if (lead() < 0) r = -r;
    return r;
}

QPoly QPoly::primitive() const {
    if (is_zero()) return *this;
    return *this * mpq_class(1 / content());
}

std::vector<mpz_class> QPoly::int_coeffs() const {
    std::vector<mpz_class> r;
    for (auto& x : c_) {
        if (x.get_den() != 1) throw DomainError("int_coeffs: non-integral coefficient");
        r.push_back(x.get_num());
    }
    return r;
}

std::string QPoly::str(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpq_class& a = c_[i];
        if (a == 0) continue;
        mpq_class m = abs(a);
        if (!first) os << (a < 0 ? " - " : " + ");
        else if (a < 0) os << "-";
        first = false;
        if (i == 0 || m != 1) os << m.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<mpq_class> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {QPoly(), a};
    std::vector<mpq_class> q(dq + 1);
    mpq_class lb = b.lead();
    for (int k = dq; k >= 0; --k) {
        mpq_class t = r[k + db] / lb;
        q[k] = t;
        if (t == 0) continue;
        for (int j = 0; j <= db; ++j) r[k + j] -= t * b.coeffs()[j];
    }
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
    std::vector<std::pair<mpz_class, int>> fac;
    mpz_class m = abs(n);
    for (mpz_class p = 2; p * p <= m; ++p) {
        int e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) fac.emplace_back(p, e);
    }
    if (m > 1) fac.emplace_back(m, 1);
    std::vector<mpz_class> d{1};
    for (auto& [p, e] : fac) {
        size_t k = d.size();
        mpz_class pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < k; ++j) d.push_back(d[j] * pk);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

// Newton form on nodes x0, x0+1, ..., x0+k -> monomial coefficients
QPoly newton_to_poly(long x0, const std::vector<mpz_class>& dd) {
    QPoly r;
    QPoly basis = QPoly::from_ints({1});
    for (size_t j = 0; j < dd.size(); ++j) {
        r = r + basis * mpq_class(dd[j]);
        basis = basis * QPoly::from_ints({-(x0 + static_cast<long>(j)), 1});
    }
    return r;
}

// smallest-degree factor of degree exactly k of a primitive squarefree integer
// polynomial with no rational roots; empty if none
QPoly kronecker_factor(const QPoly& f, int k) {
    // pick the window of k+1 consecutive nodes with fewest divisor combinations
    long best_x0 = 0;
    mpz_class best_cost = -1;
    for (long x0 = -12; x0 <= 12 - k; ++x0) {
        mpz_class cost = 1;
        for (int i = 0; i <= k; ++i) {
            mpq_class v = f(mpq_class(x0 + i));
            cost *= 2 * static_cast<long>(positive_divisors(v.get_num()).size());
        }
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best_x0 = x0;
        }
    }
    std::vector<std::vector<mpz_class>> cand(k + 1);
    for (int i = 0; i <= k; ++i) {
        mpz_class v = f(mpq_class(best_x0 + i)).get_num();
        for (auto& d : positive_divisors(v)) {
            cand[i].push_back(d);
            if (i > 0) cand[i].push_back(-d);
        }
    }
    mpz_class lc = f.lead().get_num();
    mpz_class fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;

    // forward differences built incrementally; level j difference must be
    // divisible by j!
    std::vector<mpz_class> vals(k + 1);
    std::vector<std::vector<mpz_class>> diff(k + 1);
    QPoly found;
    std::function<bool(int)> rec = [&](int i) -> bool {
        for (auto& v : cand[i]) {
            vals[i] = v;
            diff[i].assign(i + 1, 0);
            diff[i][0] = v;
            bool ok = true;
            mpz_class jf = 1;
            for (int j = 1; j <= i; ++j) {
                jf *= j;
                diff[i][j] = diff[i][j - 1] - diff[i - 1][j - 1];
                if (j == i && !mpz_divisible_p(diff[i][j].get_mpz_t(), jf.get_mpz_t())) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            if (i < k) {
                if (rec(i + 1)) return true;
                continue;
            }
            mpz_class top = diff[k][k] / fact;
            if (top == 0 || !mpz_divisible_p(lc.get_mpz_t(), top.get_mpz_t())) continue;
            std::vector<mpz_class> dd(k + 1);
            mpz_class f2 = 1;
            for (int j = 0; j <= k; ++j) {
                if (j > 0) f2 *= j;
                dd[j] = diff[j][j] / f2;
            }
            QPoly g = newton_to_poly(best_x0, dd);
            if (g.degree() != k) continue;
            if (divmod(f, g).second.is_zero()) {
                found = g.primitive();
                return true;
            }
        }
        return false;
    };
    rec(0);
    return found;
}

void factor_squarefree(QPoly h, int mult, std::vector<FactorPower>& out) {
    h = h.primitive();
    for (auto& r : rational_roots(h)) {
        QPoly lin = QPoly({-r, 1}).primitive();
        h = divmod(h, lin).first.primitive();
        out.push_back({lin, mult});
    }
    while (h.degree() >= 1) {
        QPoly g;
        for (int k = 2; 2 * k <= h.degree(); ++k) {
            g = kronecker_factor(h, k);
            if (!g.is_zero()) break;
        }
        if (g.is_zero()) {
            out.push_back({h, mult});
            break;
        }
        out.push_back({g, mult});
        h = divmod(h, g).first.primitive();
    }
}

}  // namespace

std::vector<mpq_class> rational_roots(const QPoly& f) {
    if (f.is_zero()) throw DomainError("rational_roots of zero polynomial");
    std::vector<mpq_class> roots;
    QPoly g = f.primitive();
    if (g.coeff(0) == 0) {
        roots.push_back(0);
        while (g.coeff(0) == 0 && g.degree() > 0) g = divmod(g, QPoly::from_ints({0, 1})).first;
    }
    if (g.degree() <= 0) return roots;
    auto c = g.int_coeffs();
    auto ps = positive_divisors(c.front());
    auto qs = positive_divisors(c.back());
    std::vector<mpq_class> cands;
    for (auto& p : ps)
        for (auto& q : qs) {
            mpq_class r(p, q);
            r.canonicalize();
            cands.push_back(r);
            cands.push_back(-r);
        }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (auto& r : cands)
        if (g(r) == 0) roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    return roots;
}

QPoly Factorization1::product() const {
    QPoly r = QPoly({unit});
    for (auto& fp : factors)
        for (int i = 0; i < fp.multiplicity; ++i) r = r * fp.factor;
    return r;
}

Factorization1 factor_rational_poly(const QPoly& f) {
    if (f.is_zero()) throw DomainError("factor_rational_poly: zero polynomial");
    if (f.degree() > 6) throw DomainError("factor_rational_poly: degree above 6");
    Factorization1 res;
    QPoly p = f.primitive();
    res.unit = f.content();
    if (p.degree() == 0) return res;
    // Yun squarefree decomposition
    QPoly a = p.monic();
    QPoly b = a.derivative();
    QPoly c = gcd(a, b);
    QPoly w = divmod(a, c).first;
    QPoly y = divmod(b, c).first;
    QPoly z = y - w.derivative();
    int i = 1;
    while (w.degree() >= 1) {
        QPoly g = gcd(w, z);
        if (g.degree() >= 1) factor_squarefree(g, i, res.factors);
        w = divmod(w, g).first;
        y = divmod(z, g).first;
        z = y - w.derivative();
        ++i;
    }
    // product of primitive factors differs from p by a positive rational unit
    QPoly prod = QPoly::from_ints({1});
    for (auto& fp : res.factors)
        for (int k = 0; k < fp.multiplicity; ++k) prod = prod * fp.factor;
    res.unit = res.unit * (p.lead() / prod.lead());
    std::sort(res.factors.begin(), res.factors.end(), [](const FactorPower& x, const FactorPower& y) {
        if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
        return x.factor.coeffs() < y.factor.coeffs();
    });
    return res;
}

bool is_irreducible(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fa = factor_rational_poly(f);
    return fa.factors.size() == 1 && fa.factors[0].multiplicity == 1;
}

}  // namespace x0plus

#include "x0plus/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

namespace x0plus {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

i64 to_int(const std::string& s, long line, const char* what) {
    std::string t = strip(s);
    if (t.empty()) throw ParseError(line, std::string("empty ") + what);
    size_t pos = 0;
    if (t[0] == '+' || t[0] == '-') pos = 1;
    if (pos == t.size()) throw ParseError(line, std::string("bad ") + what + " '" + t + "'");
    for (size_t i = pos; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') throw ParseError(line, std::string("bad ") + what + " '" + t + "'");
    return std::stoll(t);
}

mpq_class to_rational(const std::string& s, long line) {
    std::string t = strip(s);
    mpq_class q;
    if (t.empty() || q.set_str(t, 10) != 0) throw ParseError(line, "bad rational '" + t + "'");
    if (q.get_den() == 0) throw ParseError(line, "zero denominator");
    q.canonicalize();
    return q;
}

SignMap parse_signs(const std::string& s, long line) {
    SignMap m;
    if (strip(s).empty() || strip(s) == "-") return m;
    for (auto& item : split(s, ';')) {
        auto kv = split(item, ':');
        if (kv.size() != 2) throw ParseError(line, "bad sign entry '" + item + "'");
        i64 q = to_int(kv[0], line, "prime");
        i64 v = to_int(kv[1], line, "sign");
        if (v != 1 && v != -1) throw ParseError(line, "sign must be +1 or -1");
        if (m.count(q)) throw ParseError(line, "repeated sign prime");
        m[q] = static_cast<int>(v);
    }
    return m;
}

std::string format_signs(const SignMap& m) {
    std::string s;
    for (auto& [q, v] : m) {
        if (!s.empty()) s += ";";
        s += std::to_string(q) + ":" + (v > 0 ? "+1" : "-1");
    }
    return s;
}

void check_sign_primes(const SignMap& m, i64 level, long line) {
    auto ps = factorize(level).primes();
    if (m.size() != ps.size()) throw IntegrityError("line " + std::to_string(line) + ": AL signs must cover exactly the primes of the level");
    for (auto p : ps)
        if (!m.count(p)) throw IntegrityError("line " + std::to_string(line) + ": missing AL sign at " + std::to_string(p));
}

template <class F>
void for_each_line(std::istream& in, F f) {
    std::string line;
    long no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (strip(line).empty() || line[0] == '#') continue;
        f(line, no);
    }
}

int sign_product(const SignMap& m, i64 d) {
    int s = 1;
    for (auto& [q, v] : m)
        if (d % q == 0) s *= v;
    return s;
}

}  // namespace

int NewformOrbitRecord::sign_of(i64 d) const { return sign_product(al_signs, d); }
int EllipticCurveRecord::sign_of(i64 d) const { return sign_product(al_signs, d); }

std::set<i64> parse_int_ranges(const std::string& s) {
    std::set<i64> out;
    for (auto& tok : split(s, ',')) {
        std::string t = strip(tok);
        if (t.empty()) continue;
        auto dash = t.find('-', 1);
        if (dash == std::string::npos) {
            out.insert(to_int(t, 0, "integer"));
        } else {
            i64 a = to_int(t.substr(0, dash), 0, "integer"), b = to_int(t.substr(dash + 1), 0, "integer");
            for (i64 i = a; i <= b; ++i) out.insert(i);
        }
    }
    return out;
}

std::vector<NewformOrbitRecord> load_newforms(std::istream& in) {
    std::vector<NewformOrbitRecord> out;
    std::set<std::pair<i64, std::string>> seen;
    for_each_line(in, [&](const std::string& line, long no) {
        auto f = split(line, '\t');
        if (f.size() != 5) throw ParseError(no, "expected 5 tab-separated fields");
        NewformOrbitRecord r;
        r.level = to_int(f[0], no, "level");
        if (r.level < 1) throw ParseError(no, "level must be positive");
        r.orbit_id = strip(f[1]);
        if (r.orbit_id.empty()) throw ParseError(no, "empty orbit id");
        r.dim = to_int(f[2], no, "dim");
        if (r.dim < 1) throw ParseError(no, "dim must be positive");
        r.al_signs = parse_signs(f[3], no);
        check_sign_primes(r.al_signs, r.level, no);
        for (auto& item : split(f[4], ';')) {
            auto kv = split(item, ':');
            if (kv.size() != 2) throw ParseError(no, "bad hecke entry '" + item + "'");
            i64 p = to_int(kv[0], no, "prime");
            if (!is_prime(p)) throw ParseError(no, "hecke key not prime");
            if (r.level % p == 0) throw IntegrityError("line " + std::to_string(no) + ": power sums at a bad prime");
            std::vector<i64> s;
            for (auto& x : split(kv[1], ',')) s.push_back(to_int(x, no, "power sum"));
            if (s.size() != 2 && s.size() != 4) throw ParseError(no, "need 2 or 4 power sums");
            // Deligne: |a| <= 2 sqrt p per embedding
            if (s[0] * s[0] > 4 * p * r.dim * r.dim || std::abs(s[1]) > 4 * p * r.dim || s[1] < 0)
                throw IntegrityError("line " + std::to_string(no) + ": power sums violate the Deligne bound");
            if (s.size() == 4 && (std::abs(s[2]) > 8 * p * r.dim * static_cast<i64>(std::sqrt(static_cast<long double>(p)) + 1) ||
                                  s[3] < 0 || s[3] > 16 * p * p * r.dim))
                throw IntegrityError("line " + std::to_string(no) + ": power sums violate the Deligne bound");
            if (r.hecke.count(p)) throw ParseError(no, "repeated hecke prime");
            r.hecke[p] = s;
        }
        for (i64 p : {2, 3, 5, 7})
            if (r.level % p != 0 && (!r.hecke.count(p) || r.hecke[p].size() < 4))
                throw IntegrityError("line " + std::to_string(no) + ": s3, s4 required at p = " + std::to_string(p));
        if (!seen.insert({r.level, r.orbit_id}).second)
            throw IntegrityError("line " + std::to_string(no) + ": duplicate orbit " + r.label());
        out.push_back(std::move(r));
    });
    return out;
}

void write_newforms(std::ostream& out, const std::vector<NewformOrbitRecord>& v) {
    for (auto& r : v) {
        out << r.level << '\t' << r.orbit_id << '\t' << r.dim << '\t' << format_signs(r.al_signs) << '\t';
        bool first = true;
        for (auto& [p, s] : r.hecke) {
            if (!first) out << ';';
            first = false;
            out << p << ':';
            for (size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
        }
        out << '\n';
    }
}

mpz_class weierstrass_discriminant(const std::array<i64, 5>& a) {
    mpz_class a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    mpz_class b2 = a1 * a1 + 4 * a2, b4 = 2 * a4 + a1 * a3, b6 = a3 * a3 + 4 * a6;
    mpz_class b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

bool weierstrass_has_rational_2_torsion(const std::array<i64, 5>& a) {
    i64 a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
    QPoly psi2 = QPoly({mpq_class(a3 * a3 + 4 * a6), mpq_class(2 * (2 * a4 + a1 * a3)), mpq_class(a1 * a1 + 4 * a2), mpq_class(4)});
    return !rational_roots(psi2).empty();
}

i64 weierstrass_ap(const std::array<i64, 5>& a, i64 p) {
    auto m = [p](i64 v) { v %= p; return v < 0 ? v + p : v; };
    i64 a1 = m(a[0]), a2 = m(a[1]), a3 = m(a[2]), a4 = m(a[3]), a6 = m(a[4]);
    i64 count = 1;
    for (i64 x = 0; x < p; ++x) {
        i64 rhs = m(((x * x % p) * x + a2 * x % p * x + a4 * x + a6));
        for (i64 y = 0; y < p; ++y)
            if (m(y * y + a1 * x % p * y + a3 * y) == rhs) ++count;
    }
    return p + 1 - count;
}

std::vector<EllipticCurveRecord> load_elliptic_curves(std::istream& in) {
    std::vector<EllipticCurveRecord> out;
    std::set<std::string> seen;
    for_each_line(in, [&](const std::string& line, long no) {
        auto f = split(line, ',');
        if (f.size() != 13) throw ParseError(no, "expected 13 comma-separated fields");
        EllipticCurveRecord e;
        e.label = strip(f[0]);
        if (e.label.empty()) throw ParseError(no, "empty label");
        e.conductor = to_int(f[1], no, "conductor");
        e.rank = static_cast<int>(to_int(f[2], no, "rank"));
        e.torsion_order = static_cast<int>(to_int(f[3], no, "torsion"));
        i64 two = to_int(f[4], no, "two_torsion"), three = to_int(f[5], no, "three_isogeny");
        if ((two != 0 && two != 1) || (three != 0 && three != 1)) throw ParseError(no, "flags must be 0 or 1");
        e.two_torsion_nontrivial = two == 1;
        e.has_rational_3_isogeny = three == 1;
        e.modular_degree = to_int(f[6], no, "modular degree");
        if (e.conductor < 1 || e.rank < 0 || e.torsion_order < 1 || e.modular_degree < 1)
            throw ParseError(no, "nonpositive field");
        e.al_signs = parse_signs(f[7], no);
        check_sign_primes(e.al_signs, e.conductor, no);
        for (int i = 0; i < 5; ++i) e.weierstrass[i] = to_int(f[8 + i], no, "coefficient");
        if (weierstrass_discriminant(e.weierstrass) == 0) throw IntegrityError("line " + std::to_string(no) + ": singular model");
        bool model2 = weierstrass_has_rational_2_torsion(e.weierstrass);
        if (e.two_torsion_nontrivial != model2 || e.two_torsion_nontrivial != (e.torsion_order % 2 == 0))
            throw IntegrityError("line " + std::to_string(no) + ": 2-torsion flag inconsistent with model for " + e.label);
        if (!seen.insert(e.label).second) throw IntegrityError("line " + std::to_string(no) + ": duplicate label " + e.label);
        out.push_back(std::move(e));
    });
    return out;
}

void write_elliptic_curves(std::ostream& out, const std::vector<EllipticCurveRecord>& v) {
    for (auto& e : v) {
        out << e.label << ',' << e.conductor << ',' << e.rank << ',' << e.torsion_order << ','
            << (e.two_torsion_nontrivial ? 1 : 0) << ',' << (e.has_rational_3_isogeny ? 1 : 0) << ','
            << e.modular_degree << ',' << format_signs(e.al_signs);
        for (auto a : e.weierstrass) out << ',' << a;
        out << '\n';
    }
}

const std::array<std::array<int, 4>, 20>& cubic_monomials() {
    static const std::array<std::array<int, 4>, 20> m = [] {
        std::array<std::array<int, 4>, 20> r{};
        int k = 0;
        // lexicographic in (x, y, z, w) exponents, descending
        for (int a = 3; a >= 0; --a)
            for (int b = 3 - a; b >= 0; --b)
                for (int c = 3 - a - b; c >= 0; --c) r[k++] = {a, b, c, 3 - a - b - c};
        return r;
    }();
    return m;
}

std::vector<CurveModel> load_models(std::istream& in) {
    std::vector<CurveModel> out;
    std::set<i64> seen;
    for_each_line(in, [&](const std::string& line, long no) {
        auto f = split(line, '\t');
        if (f.size() < 4) throw ParseError(no, "too few fields");
        CurveModel m;
        m.level = to_int(f[0], no, "level");
        std::string kind = strip(f[1]);
        if (!strip(f[2]).empty())
            for (auto& p : split(f[2], ',')) m.bad_primes.push_back(to_int(p, no, "bad prime"));
        if (kind == "hyperelliptic") {
            if (f.size() != 4) throw ParseError(no, "hyperelliptic: expected 4 fields");
            m.kind = ModelKind::Hyperelliptic;
            std::vector<mpq_class> c;
            for (auto& x : split(f[3], ',')) c.push_back(to_rational(x, no));
            m.f = QPoly(c);
            if (m.f.degree() < 5 || m.f.degree() > 6) throw IntegrityError("line " + std::to_string(no) + ": degree must be 5 or 6");
            if (gcd(m.f, m.f.derivative()).degree() > 0) throw IntegrityError("line " + std::to_string(no) + ": f not squarefree");
        } else if (kind == "petri") {
            if (f.size() != 5) throw ParseError(no, "petri: expected 5 fields");
            m.kind = ModelKind::Petri;
            auto q = split(f[3], ',');
            auto c = split(f[4], ',');
            if (q.size() != 10 || c.size() != 20) throw ParseError(no, "petri: need 10 quadric and 20 cubic coefficients");
            int k = 0;
            for (int i = 0; i < 4; ++i)
                for (int j = i; j < 4; ++j) {
                    m.quadric[i][j] = to_rational(q[k++], no);
                    m.quadric[j][i] = m.quadric[i][j];
                }
            for (int i = 0; i < 20; ++i) m.cubic[i] = to_rational(c[i], no);
        } else {
            throw ParseError(no, "unknown model kind '" + kind + "'");
        }
        if (!seen.insert(m.level).second) throw IntegrityError("line " + std::to_string(no) + ": duplicate model level");
        out.push_back(std::move(m));
    });
    return out;
}

bool KnownLists::listed(i64 n) const {
    return genus0.count(n) || genus1.count(n) || hyperelliptic.count(n) || bielliptic.count(n) || gonality3.count(n);
}

KnownLists load_known_lists(std::istream& in) {
    KnownLists k;
    for_each_line(in, [&](const std::string& line, long no) {
        auto f = split(line, '\t');
        if (f.size() != 2) throw ParseError(no, "expected key<TAB>ranges");
        std::set<i64> s;
        try {
            s = parse_int_ranges(f[1]);
        } catch (const ParseError&) {
            throw ParseError(no, "bad integer range");
        }
        std::string key = strip(f[0]);
        if (key == "genus0") k.genus0 = s;
        else if (key == "genus1") k.genus1 = s;
        else if (key == "hyperelliptic") k.hyperelliptic = s;
        else if (key == "bielliptic") k.bielliptic = s;
        else if (key == "gonality3") k.gonality3 = s;
        else throw ParseError(no, "unknown list '" + key + "'");
    });
    auto disjoint = [](const std::set<i64>& a, const std::set<i64>& b) {
        for (auto x : a)
            if (b.count(x)) return false;
        return true;
    };
    if (!disjoint(k.genus0, k.genus1) || !disjoint(k.genus0, k.hyperelliptic) || !disjoint(k.genus1, k.hyperelliptic) ||
        !disjoint(k.genus0, k.gonality3) || !disjoint(k.genus1, k.gonality3))
        throw IntegrityError("known lists overlap");
    return k;
}

std::vector<PublishedQuadric> load_published_quadrics(std::istream& in) {
    std::vector<PublishedQuadric> out;
    for_each_line(in, [&](const std::string& line, long no) {
        auto f = split(line, '\t');
        if (f.size() != 3) throw ParseError(no, "expected level, diagonal, ruling");
        PublishedQuadric q;
        q.level = to_int(f[0], no, "level");
        auto d = split(f[1], ',');
        if (d.size() != 4) throw ParseError(no, "diagonal needs 4 entries");
        for (int i = 0; i < 4; ++i) q.diagonal[i] = to_int(d[i], no, "diagonal entry");
        q.ruling = strip(f[2]);
        static const std::regex field(R"(Q\(sqrt\s*(-?\d+)(?:\s*,\s*sqrt\s*(-?\d+))?\))");
        std::smatch m;
        if (q.ruling == "Q" || q.ruling == "cone") {
        } else if (std::regex_match(q.ruling, m, field)) {
            q.ruling_field.push_back(std::stoll(m[1]));
            if (m[2].matched) q.ruling_field.push_back(std::stoll(m[2]));
        } else {
            throw ParseError(no, "bad ruling field '" + q.ruling + "'");
        }
        out.push_back(q);
    });
    return out;
}

std::set<i64> PublishedTable::levels() const {
    std::set<i64> s;
    for (auto& [g, v] : rows) s.insert(v.begin(), v.end());
    return s;
}

PublishedTable load_published_table(std::istream& in) {
    PublishedTable t;
    for_each_line(in, [&](const std::string& line, long no) {
        auto f = split(line, '\t');
        if (f.size() != 2) throw ParseError(no, "expected genus<TAB>levels");
        int g = static_cast<int>(to_int(f[0], no, "genus"));
        auto s = parse_int_ranges(f[1]);
        t.rows[g] = std::vector<i64>(s.begin(), s.end());
    });
    return t;
}

void Database::set_newforms(std::vector<NewformOrbitRecord> v) {
    newforms_ = std::move(v);
    by_level_.clear();
    nf_bound_ = 0;
    for (size_t i = 0; i < newforms_.size(); ++i) {
        by_level_[newforms_[i].level].push_back(i);
        nf_bound_ = std::max(nf_bound_, newforms_[i].level);
    }
}

void Database::set_curves(std::vector<EllipticCurveRecord> v) {
    curves_ = std::move(v);
    std::sort(curves_.begin(), curves_.end(), [](auto& a, auto& b) {
        return a.conductor != b.conductor ? a.conductor < b.conductor : a.label < b.label;
    });
}

void Database::set_models(std::vector<CurveModel> v) {
    models_.clear();
    for (auto& m : v) models_[m.level] = std::move(m);
}

void Database::set_published_quadrics(std::vector<PublishedQuadric> v) {
    pub_quadrics_.clear();
    for (auto& q : v) pub_quadrics_[q.level] = std::move(q);
}

bool Database::covers(i64 n) const { return n >= 1 && n <= nf_bound_; }

std::vector<const NewformOrbitRecord*> Database::orbits_at(i64 level) const {
    std::vector<const NewformOrbitRecord*> r;
    auto it = by_level_.find(level);
    if (it != by_level_.end())
        for (auto i : it->second) r.push_back(&newforms_[i]);
    return r;
}

const NewformOrbitRecord* Database::orbit(i64 level, const std::string& id) const {
    for (auto* o : orbits_at(level))
        if (o->orbit_id == id) return o;
    return nullptr;
}

const EllipticCurveRecord* Database::curve(const std::string& label) const {
    for (auto& e : curves_)
        if (e.label == label) return &e;
    return nullptr;
}

const CurveModel* Database::model(i64 level) const {
    auto it = models_.find(level);
    return it == models_.end() ? nullptr : &it->second;
}

const PublishedQuadric* Database::published_quadric(i64 level) const {
    auto it = pub_quadrics_.find(level);
    return it == pub_quadrics_.end() ? nullptr : &it->second;
}

std::vector<const EllipticCurveRecord*> Database::curves_with_conductor_dividing(i64 n, int min_rank) const {
    std::vector<const EllipticCurveRecord*> r;
    for (auto& e : curves_)
        if (n % e.conductor == 0 && e.rank >= min_rank) r.push_back(&e);
    return r;
}

const NewformOrbitRecord* Database::orbit_for_curve(const EllipticCurveRecord& e) const {
    const NewformOrbitRecord* hit = nullptr;
    for (auto* o : orbits_at(e.conductor)) {
        if (o->dim != 1 || o->al_signs != e.al_signs) continue;
        bool ok = true;
        int checked = 0;
        for (auto& [p, s] : o->hecke) {
            if (weierstrass_ap(e.weierstrass, p) != s[0]) {
                ok = false;
                break;
            }
            ++checked;
        }
        if (ok && checked > 0) {
            if (hit) throw IntegrityError("curve " + e.label + " matches two orbits");
            hit = o;
        }
    }
    return hit;
}

Database Database::load_dir(const std::filesystem::path& dir) {
    auto open = [&](const char* name) {
        std::ifstream f(dir / name);
        if (!f) throw DataError("cannot open " + (dir / name).string());
        return f;
    };
    Database db;
    auto ctx = [&](const char* name, auto fn) {
        try {
            auto f = open(name);
            fn(f);
        } catch (const ParseError& e) {
            throw ParseError(e.line, std::string(name) + ": " + e.what());
        } catch (const IntegrityError& e) {
            throw IntegrityError(std::string(name) + ": " + e.what());
        }
    };
    ctx("newforms.tsv", [&](std::istream& f) { db.set_newforms(load_newforms(f)); });
    ctx("curves.csv", [&](std::istream& f) { db.set_curves(load_elliptic_curves(f)); });
    ctx("models.tsv", [&](std::istream& f) { db.set_models(load_models(f)); });
    ctx("known_lists.tsv", [&](std::istream& f) { db.set_known(load_known_lists(f)); });
    if (std::filesystem::exists(dir / "reference_quadrics.tsv"))
        ctx("reference_quadrics.tsv", [&](std::istream& f) { db.set_published_quadrics(load_published_quadrics(f)); });
    if (std::filesystem::exists(dir / "reference_table.tsv"))
        ctx("reference_table.tsv", [&](std::istream& f) { db.set_published_table(load_published_table(f)); });
    return db;
}

std::filesystem::path resolve_data_dir(const std::string& override_path) {
    if (!override_path.empty()) return override_path;
    if (const char* env = std::getenv("X0PLUS_DATA_DIR"); env && *env) return env;
#ifdef X0PLUS_DEFAULT_DATA_DIR
    return X0PLUS_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

}  // namespace x0plus

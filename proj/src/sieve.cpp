#include "x0plus/sieve.hpp"

#include <algorithm>
#include <sstream>

namespace x0plus {

namespace {

std::string signs_str(const SignMap& m) {
    std::string s;
    for (auto& [q, v] : m) s += (s.empty() ? "" : ",") + std::string("w") + std::to_string(q) + (v > 0 ? "=+" : "=-");
    return s;
}

// exact divisors d > 1 of the conductor with gcd(d, N/d) = 1 and sign +1
std::vector<i64> plus_descent_divisors(i64 n, const EllipticCurveRecord& e) {
    std::vector<i64> out;
    for (auto d : factorize(e.conductor).exact_divisors())
        if (d > 1 && d < n && gcd(d, n / d) == 1 && e.sign_of(d) == 1) out.push_back(d);
    return out;
}

std::set<i64> al_group(const std::vector<i64>& gens) {
    std::set<i64> g{1};
    for (auto x : gens) {
        std::set<i64> next = g;
        for (auto h : g) {
            i64 c = gcd(x, h);
            next.insert((x / c) * (h / c));
        }
        g = next;
    }
    return g;
}

struct LevelCounts {
    std::map<std::pair<i64, int>, std::pair<i64, i64>> by_pp;  // (p, n) -> (#X0, #X0+)
};

std::pair<i64, i64> level_counts(i64 n, const PrimePower& pp, const Database& db, LevelCounts* cache) {
    if (cache) {
        auto it = cache->by_pp.find({pp.p, pp.n});
        if (it != cache->by_pp.end()) return it->second;
    }
    std::pair<i64, i64> v{count_x0(n, pp, db).count, count_x0_plus(n, pp, db).count};
    if (cache) cache->by_pp[{pp.p, pp.n}] = v;
    return v;
}

FilterResult point_count_impl(i64 n, const EllipticCurveRecord& e, const std::vector<PrimePower>& powers, const Database& db,
                              LevelCounts* cache) {
    FilterResult r;
    r.filter = "point-count";
    if (n % e.conductor != 0) throw DomainError("point_count_filter: conductor must divide N");
    if (!db.covers(n)) {
        r.outcome = FilterOutcome::Inapplicable;
        r.detail = "newform data does not cover level " + std::to_string(n);
        return r;
    }
    for (auto& pp : powers) {
        if (n % pp.p == 0) {
            r.notes.push_back("skipped " + pp.str() + ": bad reduction");
            continue;
        }
        auto [c0, cp] = level_counts(n, pp, db, cache);
        i64 ce = count_ec(e, pp).count;
        bool plus_fail = cp > 3 * ce, x0_fail = c0 > 6 * ce;
        if (plus_fail || x0_fail) {
            r.outcome = FilterOutcome::Fail;
            r.pp = pp;
            r.count_x0 = c0;
            r.count_x0_plus = cp;
            r.count_e = ce;
            std::ostringstream os;
            os << "at " << pp.str() << ": ";
            if (plus_fail) os << "#X0+ = " << cp << " > 3*#E = " << 3 * ce;
            else os << "#X0 = " << c0 << " > 6*#E = " << 6 * ce;
            r.detail = os.str();
            return r;
        }
    }
    r.detail = "all bounds hold";
    return r;
}

}  // namespace

std::string to_string(FilterOutcome o) {
    switch (o) {
        case FilterOutcome::Pass: return "pass";
        case FilterOutcome::Fail: return "fail";
        case FilterOutcome::Certify: return "certify";
        case FilterOutcome::Inapplicable: return "n/a";
    }
    return "";
}

std::string to_string(PairStatus s) {
    switch (s) {
        case PairStatus::Surviving: return "Surviving";
        case PairStatus::Eliminated: return "Eliminated";
        case PairStatus::CertifiedAdmissible: return "CertifiedAdmissible";
    }
    return "";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::InfiniteCubic: return "InfiniteCubic";
        case Verdict::FiniteCubic: return "FiniteCubic";
        case Verdict::BelowScope: return "BelowScope";
        case Verdict::Unresolved: return "Unresolved";
    }
    return "";
}

std::vector<PrimePower> default_schedule() {
    return {{2, 1}, {3, 1}, {5, 1}, {7, 1}, {2, 2}, {3, 2}, {5, 2}, {7, 2}, {2, 4}};
}

FilterResult psi_bound_filter(i64 n) {
    if (n < 1) throw DomainError("psi_bound_filter: N must be positive");
    FilterResult r;
    r.filter = "psi-bound";
    i64 psi = dedekind_psi(n);
    i64 two_omega = i64(1) << factorize(n).omega();
    for (auto p : primes_up_to(13)) {
        if (n % p == 0) continue;
        // (p-1)/12 psi + 2^omega <= 6 (p+1)^2, scaled by 12
        i64 lhs = (p - 1) * psi + 12 * two_omega, rhs = 72 * (p + 1) * (p + 1);
        if (lhs > rhs) {
            r.outcome = FilterOutcome::Fail;
            r.prime = p;
            r.detail = "p = " + std::to_string(p) + ": (p-1)psi(N) + 12*2^w = " + std::to_string(lhs) + " > 72(p+1)^2 = " + std::to_string(rhs);
            return r;
        }
    }
    r.detail = "psi(N) = " + std::to_string(psi);
    return r;
}

FilterResult point_count_filter(i64 n, const EllipticCurveRecord& e, const std::vector<PrimePower>& powers, const Database& db) {
    return point_count_impl(n, e, powers, db, nullptr);
}

FilterResult modular_degree_filter(i64 n, const EllipticCurveRecord& e) {
    FilterResult r;
    r.filter = "modular-degree";
    r.degree = e.modular_degree;
    if (e.conductor != n) {
        r.outcome = FilterOutcome::Inapplicable;
        r.detail = "conductor " + std::to_string(e.conductor) + " != N";
        return r;
    }
    if (6 % e.modular_degree != 0) {
        r.outcome = FilterOutcome::Fail;
        r.detail = "degree " + std::to_string(e.modular_degree) + " does not divide 6";
    } else {
        r.detail = "degree " + std::to_string(e.modular_degree) + " divides 6";
    }
    return r;
}

FilterResult castelnuovo_level_filter(i64 n, const Database& db) {
    FilterResult r;
    r.filter = "castelnuovo";
    if (!db.covers(n)) {
        r.outcome = FilterOutcome::Inapplicable;
        r.detail = "newform data does not cover level " + std::to_string(n);
        return r;
    }
    auto c = castelnuovo_filter(n, db);
    if (!c.pass) {
        r.outcome = FilterOutcome::Fail;
        r.divisor = c.witness_r;
        r.detail = "r = " + std::to_string(c.witness_r) + ": g+ = " + std::to_string(c.genus_plus) + " > 2*" +
                   std::to_string(c.quotient_genus) + " + 5";
    } else {
        r.detail = "holds for every exact divisor";
    }
    return r;
}

FilterResult descent_filter(i64 n, const EllipticCurveRecord& e, const Database& db) {
    FilterResult r;
    r.filter = "descent";
    if (n % e.conductor != 0) throw DomainError("descent_filter: conductor must divide N");
    if (e.al_signs.size() != factorize(e.conductor).primes().size()) throw DataError("missing AL signs for " + e.label);
    auto plus = plus_descent_divisors(n, e);
    if (e.conductor != n && !plus.empty()) {
        if (!e.two_torsion_nontrivial) {
            r.outcome = FilterOutcome::Fail;
            r.divisor = plus.front();
            r.detail = "w" + std::to_string(r.divisor) + " = +1 on f_E and no rational 2-torsion";
            return r;
        }
        r.notes.push_back("w" + std::to_string(plus.front()) + " = +1 but E has rational 2-torsion: descent gives an isogenous curve");
    }
    if (!plus.empty() && db.covers(n)) {
        auto gens = plus;
        gens.push_back(n);
        i64 full = i64(1) << factorize(n).omega();
        if (static_cast<i64>(al_group(gens).size()) == full) {
            i64 gs = genus_star(n, db);
            bool three = e.has_rational_3_isogeny || e.torsion_order % 3 == 0;
            if (gs == 1 && !three) {
                r.outcome = FilterOutcome::Fail;
                r.divisor = 0;
                r.detail = "descent to X0*(N) of genus 1; E has no rational 3-isogeny or 3-torsion";
                return r;
            }
            r.notes.push_back("star quotient genus " + std::to_string(gs) + (three ? ", E has a 3-isogeny" : ""));
        }
    }
    if (e.conductor == n && e.sign_of(n) == 1 && e.modular_degree == 6) {
        r.outcome = FilterOutcome::Certify;
        r.detail = "w" + std::to_string(n) + " = +1 and strong Weil degree 6: degree-3 map X0+(N) -> E";
        return r;
    }
    r.detail = signs_str(e.al_signs);
    return r;
}

const FilterResult* AdmissiblePairCandidate::decisive() const {
    for (auto& f : trace)
        if (f.outcome == FilterOutcome::Fail || f.outcome == FilterOutcome::Certify) return &f;
    return nullptr;
}

std::vector<AdmissiblePairCandidate> enumerate_admissible_pairs(i64 n, const Database& db, const std::vector<PrimePower>& schedule) {
    if (n < 1) throw DomainError("enumerate_admissible_pairs: N must be positive");
    std::vector<AdmissiblePairCandidate> out;
    auto curves = db.curves_with_conductor_dividing(n, 1);
    if (curves.empty()) return out;
    LevelCounts cache;
    FilterResult psi = psi_bound_filter(n);
    FilterResult cast = castelnuovo_level_filter(n, db);
    for (auto* e : curves) {
        AdmissiblePairCandidate c;
        c.n = n;
        c.curve = e;
        c.trace.push_back(psi);
        c.trace.push_back(point_count_impl(n, *e, schedule, db, &cache));
        c.trace.push_back(modular_degree_filter(n, *e));
        c.trace.push_back(cast);
        c.trace.push_back(descent_filter(n, *e, db));
        auto* d = c.decisive();
        if (!d) c.status = PairStatus::Surviving;
        else c.status = d->outcome == FilterOutcome::Certify ? PairStatus::CertifiedAdmissible : PairStatus::Eliminated;
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

void pair_search(Classification& c, const Database& db) {
    if (!db.covers(c.n) && !psi_bound_filter(c.n).failed()) {
        c.verdict = Verdict::Unresolved;
        c.reason = "data-missing";
        c.witnesses.push_back("newform data does not cover level " + std::to_string(c.n));
        return;
    }
    auto cands = enumerate_admissible_pairs(c.n, db);
    if (cands.empty()) {
        c.verdict = Verdict::FiniteCubic;
        c.reason = "no-positive-rank-curve";
        c.witnesses.push_back("no curve of positive rank with conductor dividing " + std::to_string(c.n));
        return;
    }
    std::vector<std::string> certified, surviving, eliminated;
    for (auto& p : cands) {
        std::string label = "(" + std::to_string(c.n) + "," + p.curve->label + ")";
        auto* d = p.decisive();
        if (p.status == PairStatus::CertifiedAdmissible) certified.push_back(label + " " + d->detail);
        else if (p.status == PairStatus::Surviving) surviving.push_back(label + " survives all filters");
        else eliminated.push_back(label + " " + d->filter + ": " + d->detail);
    }
    if (!certified.empty()) {
        c.verdict = Verdict::InfiniteCubic;
        c.reason = "certified-pair";
        c.witnesses = certified;
    } else if (surviving.empty()) {
        c.verdict = Verdict::FiniteCubic;
        c.reason = "all-pairs-eliminated";
        c.witnesses = eliminated;
    } else {
        c.verdict = Verdict::Unresolved;
        c.reason = "survivors-uncertified";
        c.witnesses = surviving;
    }
}

std::string classes_str(const QuadricClassification& q) {
    std::string s = "<";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + q.classes[i].get_str();
    return s + ">";
}

void trigonal_genus4(Classification& c, const Database& db) {
    const CurveModel* m = db.model(c.n);
    if (!m || m->kind != ModelKind::Petri) {
        c.verdict = Verdict::Unresolved;
        c.reason = "data-missing";
        c.witnesses.push_back("no Petri model for level " + std::to_string(c.n));
        return;
    }
    auto q = classify_quadric(m->quadric);
    bool trig = trigonal_over_q(q);
    std::string desc = "quadric rank " + std::to_string(q.rank) + ", classes " + classes_str(q) + ", ruling " + q.verdict_str();
    if (trig) {
        c.verdict = Verdict::InfiniteCubic;
        c.reason = q.verdict == QuadricVerdict::Cone ? "quadric-cone" : "quadric-ruled-Q";
        c.witnesses.push_back(desc);
        if (q.isotropy_witness) {
            std::string v = "isotropic vector (";
            for (int i = 0; i < 4; ++i) v += (i ? "," : "") + (*q.isotropy_witness)[i].get_str();
            c.witnesses.push_back(v + ")");
        }
    } else {
        pair_search(c, db);
        c.witnesses.insert(c.witnesses.begin(), desc);
    }
    if (auto* pub = db.published_quadric(c.n)) {
        bool pub_trig = pub->cone() || pub->ruling == "Q";
        if (pub_trig != trig) {
            Classification alt;
            alt.n = c.n;
            if (pub_trig) {
                alt.verdict = Verdict::InfiniteCubic;
            } else {
                pair_search(alt, db);
            }
            c.published_verdict = alt.verdict;
            c.divergence = "published ruling " + pub->ruling + " (" + (pub_trig ? "trigonal" : "not trigonal") + " over Q), computed " +
                           q.verdict_str() + "; published outcome " + to_string(alt.verdict) + " via " +
                           (pub_trig ? "trigonal map" : alt.reason);
        } else if (!trig && pub->ruling != q.verdict_str()) {
            c.witnesses.push_back("published ruling field " + pub->ruling);
        }
    }
}

}  // namespace

Classification classify_level(i64 n, const Database& db) {
    if (n < 1) throw DomainError("classify_level: N must be positive");
    Classification c;
    c.n = n;
    try {
        c.genus_plus = genus_x0_plus(n, &db).genus();
    } catch (const IntegrityError&) {
        c.verdict = Verdict::Unresolved;
        c.reason = "data-missing";
        c.witnesses.push_back("genus of X0+(N) not determined without newform data");
        return c;
    }
    i64 g = *c.genus_plus;
    const auto& known = db.known();
    if (g <= 1) {
        c.verdict = Verdict::BelowScope;
        c.reason = "genus<=1";
        c.witnesses.push_back("g+ = " + std::to_string(g));
        return c;
    }
    if (g == 2) {
        const CurveModel* m = db.model(n);
        if (!m || m->kind != ModelKind::Hyperelliptic) {
            c.verdict = Verdict::Unresolved;
            c.reason = "data-missing";
            c.witnesses.push_back("no hyperelliptic model for level " + std::to_string(n));
            return c;
        }
        auto v = genus2_cubic_verdict(*m);
        if (v.criterion == Genus2Criterion::None) {
            c.verdict = Verdict::Unresolved;
            c.reason = "genus2-no-criterion";
            c.witnesses.push_back(std::to_string(v.points.size()) + " affine rational points up to height " + std::to_string(kDefaultPointHeight));
            return c;
        }
        c.verdict = Verdict::InfiniteCubic;
        c.reason = to_string(v.criterion);
        if (v.criterion == Genus2Criterion::ThreeRationalPoints) {
            for (auto& p : v.points) c.witnesses.push_back("(" + p.x.get_str() + "," + p.y.get_str() + ")");
            if (v.infinity.count_rational) c.witnesses.push_back(std::to_string(v.infinity.count_rational) + " rational point(s) at infinity");
        } else if (v.criterion == Genus2Criterion::SwappedInfinityPair) {
            c.witnesses.push_back("two rational points at infinity swapped by the hyperelliptic involution");
        } else {
            c.witnesses.push_back("y = " + v.slice->c.get_str() + ": cubic factor " + v.slice->cubic.str());
        }
        return c;
    }
    if (known.hyperelliptic.count(n)) {
        pair_search(c, db);
        return c;
    }
    if (known.gonality3.count(n)) {
        if (g == 3) {
            c.verdict = Verdict::InfiniteCubic;
            c.reason = "cusp-projection";
            c.witnesses.push_back("trigonal genus 3: projection from a rational cusp");
        } else if (g >= 5) {
            c.verdict = Verdict::InfiniteCubic;
            c.reason = "trigonal-genus>=5";
            c.witnesses.push_back("trigonal genus " + std::to_string(g) + ": the g^1_3 is unique and defined over Q");
        } else {
            trigonal_genus4(c, db);
        }
        return c;
    }
    pair_search(c, db);
    return c;
}

MainTable main_theorem_table(i64 lo, i64 hi, const Database& db) {
    MainTable t;
    std::set<i64> computed;
    for (i64 n = std::max<i64>(lo, 1); n <= hi; ++n) {
        auto c = classify_level(n, db);
        if (c.verdict == Verdict::Unresolved) t.unresolved.push_back(n);
        if (c.divergence) t.discrepancies.push_back({n, "divergence", *c.divergence});
        if (c.verdict != Verdict::InfiniteCubic || !c.genus_plus) continue;
        if (*c.genus_plus == 2) {
            t.genus2.push_back(n);
        } else {
            t.rows[static_cast<int>(*c.genus_plus)].push_back(n);
            computed.insert(n);
        }
    }
    std::set<i64> published;
    for (auto n : db.published_table().levels())
        if (n >= lo && n <= hi) published.insert(n);
    if (!published.empty()) {
        for (auto n : computed)
            if (!published.count(n)) t.discrepancies.push_back({n, "computed-only", "InfiniteCubic but not in the published table"});
        for (auto n : published)
            if (!computed.count(n)) t.discrepancies.push_back({n, "published-only", "in the published table but not computed InfiniteCubic"});
    }
    std::stable_sort(t.discrepancies.begin(), t.discrepancies.end(), [](auto& a, auto& b) { return a.n < b.n; });
    return t;
}

}  // namespace x0plus

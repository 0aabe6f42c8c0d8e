#include "x0plus/report.hpp"

#include <sstream>

namespace x0plus {

namespace {

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

std::string join_levels(const std::vector<i64>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json rational_vec(const std::array<mpq_class, 4>& v) {
    Json a = Json::array();
    for (auto& x : v) a.push_back(x.get_str());
    return a;
}

}  // namespace

Json to_json(const Classification& c) {
    Json j;
    j["N"] = c.n;
    j["genus"] = c.genus_plus ? Json(*c.genus_plus) : Json(nullptr);
    j["verdict"] = to_string(c.verdict);
    j["reason"] = c.reason;
    j["witnesses"] = c.witnesses;
    j["divergence"] = c.divergence ? Json(*c.divergence) : Json(nullptr);
    j["published_verdict"] = c.published_verdict ? Json(to_string(*c.published_verdict)) : Json(nullptr);
    return j;
}

Json to_json(const GenusReport& g) {
    Json j;
    j["N"] = g.level;
    j["genus_x0"] = g.genus_x0;
    j["fricke_fixed_points"] = g.fricke_fixed_points;
    j["genus_x0_plus_rh"] = g.genus_x0_plus_rh ? Json(*g.genus_x0_plus_rh) : Json(nullptr);
    j["genus_x0_plus_nf"] = g.genus_x0_plus_nf ? Json(*g.genus_x0_plus_nf) : Json(nullptr);
    j["agreement"] = g.agreement;
    j["perfect_square"] = g.perfect_square;
    return j;
}

Json to_json(const CountReport& c) {
    Json j;
    j["object"] = c.object;
    j["p"] = c.pp.p;
    j["n"] = c.pp.n;
    j["q"] = c.pp.q();
    j["count"] = c.count;
    j["method"] = c.method == CountMethod::Eigenvalue ? "Eigenvalue" : "ModelBruteForce";
    return j;
}

Json to_json(const QuadricClassification& q) {
    Json j;
    j["rank"] = q.rank;
    j["diagonal"] = rational_vec(q.diagonal);
    Json cl = Json::array();
    for (auto& c : q.classes) cl.push_back(c.get_str());
    j["classes"] = cl;
    j["disc_class"] = q.disc_class.get_str();
    j["verdict"] = q.verdict_str();
    j["anisotropic_places"] = q.anisotropic;
    j["isotropy_witness"] = q.isotropy_witness ? rational_vec(*q.isotropy_witness) : Json(nullptr);
    j["trigonal_over_Q"] = trigonal_over_q(q);
    return j;
}

Json to_json(const Genus2Verdict& v) {
    Json j;
    j["N"] = v.level;
    j["criterion"] = to_string(v.criterion);
    Json pts = Json::array();
    for (auto& p : v.points) pts.push_back(Json::array({p.x.get_str(), p.y.get_str()}));
    j["points"] = pts;
    j["infinity_rational"] = v.infinity.count_rational;
    j["infinity_swapped"] = v.infinity.swapped;
    if (v.slice) {
        j["slice_c"] = v.slice->c.get_str();
        j["slice_cubic"] = v.slice->cubic.str();
    } else {
        j["slice_c"] = nullptr;
        j["slice_cubic"] = nullptr;
    }
    return j;
}

Json to_json(const AdmissiblePairCandidate& p) {
    Json j;
    j["N"] = p.n;
    j["curve"] = p.curve->label;
    j["status"] = to_string(p.status);
    Json tr = Json::array();
    for (auto& f : p.trace) {
        Json s;
        s["filter"] = f.filter;
        s["outcome"] = to_string(f.outcome);
        s["detail"] = f.detail;
        s["notes"] = f.notes;
        tr.push_back(s);
    }
    j["trace"] = tr;
    return j;
}

Json to_json(const MainTable& t) {
    Json j;
    Json rows = Json::object();
    for (auto& [g, v] : t.rows) rows[std::to_string(g)] = v;
    j["rows"] = rows;
    j["genus2"] = t.genus2;
    j["unresolved"] = t.unresolved;
    Json d = Json::array();
    for (auto& x : t.discrepancies) d.push_back(Json{{"N", x.n}, {"kind", x.kind}, {"detail", x.detail}});
    j["discrepancies"] = d;
    return j;
}

std::string render_classifications(const std::vector<Classification>& v, Format f) {
    if (f == Format::Json) {
        Json a = Json::array();
        for (auto& c : v) a.push_back(to_json(c));
        return dump(a);
    }
    std::ostringstream os;
    os << "N\tgenus\tverdict\treason\twitnesses\tdivergence\n";
    for (auto& c : v)
        os << c.n << '\t' << (c.genus_plus ? std::to_string(*c.genus_plus) : "-") << '\t' << to_string(c.verdict) << '\t' << c.reason
           << '\t' << join(c.witnesses, "; ") << '\t' << (c.divergence ? *c.divergence : "-") << '\n';
    return os.str();
}

std::string render_genus(const GenusReport& g, Format f) {
    if (f == Format::Json) return dump(to_json(g));
    auto opt = [](const std::optional<i64>& x) { return x ? std::to_string(*x) : std::string("-"); };
    std::ostringstream os;
    os << "N\tgenus_x0\tfricke_fixed_points\tgenus_x0_plus_rh\tgenus_x0_plus_nf\tagreement\n";
    os << g.level << '\t' << g.genus_x0 << '\t' << g.fricke_fixed_points << '\t' << opt(g.genus_x0_plus_rh) << '\t'
       << opt(g.genus_x0_plus_nf) << '\t' << (g.agreement ? "yes" : "no") << '\n';
    return os.str();
}

std::string render_count(const CountReport& c, Format f) {
    if (f == Format::Json) return dump(to_json(c));
    std::ostringstream os;
    os << "object\tq\tcount\tmethod\n";
    os << c.object << '\t' << c.pp.str() << '\t' << c.count << '\t'
       << (c.method == CountMethod::Eigenvalue ? "Eigenvalue" : "ModelBruteForce") << '\n';
    return os.str();
}

std::string render_quadric(const QuadricClassification& q, Format f) {
    if (f == Format::Json) return dump(to_json(q));
    std::ostringstream os;
    std::vector<std::string> cl, wit;
    for (auto& c : q.classes) cl.push_back(c.get_str());
    if (q.isotropy_witness)
        for (auto& x : *q.isotropy_witness) wit.push_back(x.get_str());
    os << "rank\tclasses\tdisc_class\truling\ttrigonal_over_Q\tisotropy_witness\n";
    os << q.rank << '\t' << join(cl, ",") << '\t' << q.disc_class.get_str() << '\t' << q.verdict_str() << '\t'
       << (trigonal_over_q(q) ? "yes" : "no") << '\t' << (wit.empty() ? "-" : join(wit, ",")) << '\n';
    return os.str();
}

std::string render_genus2(const Genus2Verdict& v, Format f) {
    if (f == Format::Json) return dump(to_json(v));
    std::ostringstream os;
    std::vector<std::string> pts;
    for (auto& p : v.points) pts.push_back("(" + p.x.get_str() + "," + p.y.get_str() + ")");
    os << "N\tcriterion\tpoints\tinfinity\tslice\n";
    os << v.level << '\t' << to_string(v.criterion) << '\t' << (pts.empty() ? "-" : join(pts, ",")) << '\t'
       << v.infinity.count_rational << (v.infinity.swapped ? " swapped" : "") << '\t'
       << (v.slice ? "c=" + v.slice->c.get_str() + " " + v.slice->cubic.str() : "-") << '\n';
    return os.str();
}

std::string render_sieve(i64 n, const std::vector<AdmissiblePairCandidate>& v, Format f) {
    if (f == Format::Json) {
        Json j;
        j["N"] = n;
        Json a = Json::array();
        for (auto& p : v) a.push_back(to_json(p));
        j["candidates"] = a;
        return dump(j);
    }
    std::ostringstream os;
    os << "N\tcurve\tfilter\toutcome\tdetail\n";
    for (auto& p : v) {
        for (auto& s : p.trace) {
            os << n << '\t' << p.curve->label << '\t' << s.filter << '\t' << to_string(s.outcome) << '\t' << s.detail;
            if (!s.notes.empty()) os << " [" << join(s.notes, "; ") << "]";
            os << '\n';
        }
        os << n << '\t' << p.curve->label << "\tstatus\t" << to_string(p.status) << "\t-\n";
    }
    return os.str();
}

std::string render_table(const MainTable& t, Format f) {
    if (f == Format::Json) return dump(to_json(t));
    std::ostringstream os;
    os << "genus\tlevels\n";
    for (auto& [g, v] : t.rows) os << g << '\t' << join_levels(v) << '\n';
    os << '\n';
    os << "genus2\t" << join_levels(t.genus2) << '\n';
    os << "unresolved\t" << (t.unresolved.empty() ? "-" : join_levels(t.unresolved)) << '\n';
    os << '\n';
    os << "discrepancy\tN\tdetail\n";
    for (auto& d : t.discrepancies) os << d.kind << '\t' << d.n << '\t' << d.detail << '\n';
    return os.str();
}

}  // namespace x0plus

#include "x0plus/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>

#include "x0plus/report.hpp"

namespace x0plus {

namespace {

constexpr int kExitData = 2;
constexpr int kExitDomain = 3;
constexpr int kExitUsage = 64;

// "2,3,5,7,2^2,3^2" style prime-power lists
std::vector<PrimePower> parse_schedule(const std::string& s) {
    std::vector<PrimePower> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto caret = tok.find('^');
        try {
            i64 p = std::stoll(tok.substr(0, caret));
            int n = caret == std::string::npos ? 1 : std::stoi(tok.substr(caret + 1));
            out.emplace_back(p, n);
        } catch (const std::logic_error&) {
            throw DomainError("bad prime power '" + tok + "'");
        }
    }
    if (out.empty()) throw DomainError("empty prime-power schedule");
    return out;
}

std::vector<mpq_class> parse_rationals(const std::string& s) {
    std::vector<mpq_class> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        mpq_class q;
        if (q.set_str(tok, 10) != 0 || q.get_den() == 0) throw DomainError("bad rational '" + tok + "'");
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"x0plus: cubic points on X0+(N)"};
    app.require_subcommand(1);
    std::string data_dir, format = "tsv";
    app.add_option("--data-dir", data_dir, "fixture directory (default: $X0PLUS_DATA_DIR or build default)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"tsv", "json"}));

    i64 level = 0, to = 0, lo = 1, hi = 350, p = 0, height = 0;
    int n_exp = 1;
    std::string schedule, object = "x0plus", curve, coeffs, poly;

    auto* classify = app.add_subcommand("classify", "classify a level (or a range with --to)");
    classify->add_option("N", level)->required();
    classify->add_option("--to", to, "last level of a range");

    auto* table = app.add_subcommand("table", "main theorem table");
    table->add_option("--from", lo);
    table->add_option("--to", hi);

    auto* sieve = app.add_subcommand("sieve", "filter trace for every candidate pair");
    sieve->add_option("N", level)->required();
    sieve->add_option("--schedule", schedule, "prime powers, e.g. 2,3,5,7,2^2");

    auto* genus = app.add_subcommand("genus", "genus report for X0+(N)");
    genus->add_option("N", level)->required();

    auto* count = app.add_subcommand("count", "point count over GF(p^n)");
    count->add_option("N", level)->required();
    count->add_option("-p,--prime", p)->required();
    count->add_option("-n,--degree", n_exp);
    count->add_option("--object", object)->check(CLI::IsMember({"x0", "x0plus", "curve", "model"}));
    count->add_option("--curve", curve, "elliptic curve label for --object curve");

    auto* quadric = app.add_subcommand("quadric", "classify the Petri quadric of a level or 10 coefficients");
    quadric->add_option("N", level);
    quadric->add_option("--coeffs", coeffs, "a11,a12,a13,a14,a22,a23,a24,a33,a34,a44");
    quadric->add_option("--height", height, "isotropy search height");

    auto* genus2 = app.add_subcommand("genus2", "degree-3 map criteria for a genus-2 level or polynomial");
    genus2->add_option("N", level);
    genus2->add_option("--poly", poly, "coefficients of f, constant term first");
    genus2->add_option("--height", height, "point search height");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    Format fmt = format == "json" ? Format::Json : Format::Tsv;
    try {
        auto load = [&] { return Database::load_dir(resolve_data_dir(data_dir)); };
        if (*classify) {
            auto db = load();
            std::vector<Classification> v;
            i64 last = to ? to : level;
            if (last < level) throw DomainError("classify: --to must not be below N");
            for (i64 k = level; k <= last; ++k) v.push_back(classify_level(k, db));
            out << render_classifications(v, fmt);
        } else if (*table) {
            auto db = load();
            out << render_table(main_theorem_table(lo, hi, db), fmt);
        } else if (*sieve) {
            auto db = load();
            auto sched = schedule.empty() ? default_schedule() : parse_schedule(schedule);
            out << render_sieve(level, enumerate_admissible_pairs(level, db, sched), fmt);
        } else if (*genus) {
            auto db = load();
            out << render_genus(genus_x0_plus(level, &db), fmt);
        } else if (*count) {
            auto db = load();
            PrimePower pp(p, n_exp);
            CountReport r;
            if (object == "x0") {
                r = count_x0(level, pp, db);
            } else if (object == "x0plus") {
                r = count_x0_plus(level, pp, db);
            } else if (object == "curve") {
                const EllipticCurveRecord* e = db.curve(curve);
                if (!e) throw DomainError("unknown curve '" + curve + "'");
                r = count_ec(*e, pp, &db);
            } else {
                const CurveModel* m = db.model(level);
                if (!m) throw DataError("no model for level " + std::to_string(level));
                r = count_model(*m, pp);
            }
            out << render_count(r, fmt);
        } else if (*quadric) {
            QMatrix4 a;
            if (!coeffs.empty()) {
                auto c = parse_rationals(coeffs);
                if (c.size() != 10) throw DomainError("--coeffs needs 10 rationals");
                std::array<mpq_class, 10> u;
                std::copy(c.begin(), c.end(), u.begin());
                a = matrix_from_upper(u);
            } else {
                if (level < 1) throw DomainError("quadric: give N or --coeffs");
                auto db = load();
                const CurveModel* m = db.model(level);
                if (!m || m->kind != ModelKind::Petri) throw DataError("no Petri model for level " + std::to_string(level));
                a = m->quadric;
            }
            out << render_quadric(classify_quadric(a, height > 0 ? height : kDefaultIsotropyHeight), fmt);
        } else if (*genus2) {
            i64 h = height > 0 ? height : kDefaultPointHeight;
            if (!poly.empty()) {
                out << render_genus2(genus2_cubic_verdict(level, QPoly(parse_rationals(poly)), h), fmt);
            } else {
                if (level < 1) throw DomainError("genus2: give N or --poly");
                auto db = load();
                const CurveModel* m = db.model(level);
                if (!m || m->kind != ModelKind::Hyperelliptic) throw DataError("no hyperelliptic model for level " + std::to_string(level));
                out << render_genus2(genus2_cubic_verdict(*m, h), fmt);
            }
        }
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return kExitData;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ResourceError& e) {
        err << "resource limit: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}

}  // namespace x0plus

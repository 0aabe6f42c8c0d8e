#include "x0plus/genus2.hpp"

#include <algorithm>

namespace x0plus {

std::vector<RationalPoint> search_rational_points(const QPoly& f, i64 height_bound) {
    std::vector<RationalPoint> pts;
    for (i64 b = 1; b <= height_bound; ++b)
        for (i64 a = -height_bound; a <= height_bound; ++a) {
            if (gcd(a, b) != 1) continue;
            mpq_class x(a, b);
            x.canonicalize();
            mpq_class v = f(x);
            if (!is_rational_square(v)) continue;
            mpq_class y = rational_sqrt(v);
            pts.push_back({x, y});
            if (y != 0) pts.push_back({x, -y});
        }
    std::sort(pts.begin(), pts.end(), [](auto& l, auto& r) { return l.x != r.x ? l.x < r.x : l.y < r.y; });
    return pts;
}

InfinityReport infinity_points(const QPoly& f) {
    if (f.degree() % 2) return {1, false};
    bool sq = is_rational_square(f.lead());
    return {sq ? 2 : 0, true};
}

std::vector<mpq_class> default_slice_range() {
    std::vector<mpq_class> out;
    for (i64 b = 1; b <= 3; ++b)
        for (i64 a = 0; a <= 3; ++a) {
            if (gcd(a, b) != 1) continue;
            mpq_class c(a, b);
            c.canonicalize();
            out.push_back(c);
        }
    return out;
}

std::optional<SliceDivisor> slice_divisor_search(const QPoly& f, const std::vector<mpq_class>& c_range) {
    for (auto& c : c_range) {
        QPoly g = f - QPoly({mpq_class(c * c)});
        if (g.is_zero()) continue;
        auto fac = factor_rational_poly(g);
        for (auto& fp : fac.factors)
            if (fp.factor.degree() == 3) return SliceDivisor{c, fp.factor};
    }
    return std::nullopt;
}

std::string to_string(Genus2Criterion c) {
    switch (c) {
        case Genus2Criterion::None: return "None";
        case Genus2Criterion::ThreeRationalPoints: return "ThreeRationalPoints";
        case Genus2Criterion::SwappedInfinityPair: return "SwappedInfinityPair";
        case Genus2Criterion::SliceDivisor: return "SliceDivisor";
    }
    return "";
}

Genus2Verdict genus2_cubic_verdict(i64 level, const QPoly& f, i64 height_bound) {
    if (f.degree() < 5 || f.degree() > 6) throw DomainError("genus-2 verdict: f must have degree 5 or 6");
    Genus2Verdict v;
    v.level = level;
    v.points = search_rational_points(f, height_bound);
    v.infinity = infinity_points(f);
    if (static_cast<i64>(v.points.size()) + v.infinity.count_rational >= 3) {
        v.criterion = Genus2Criterion::ThreeRationalPoints;
        return v;
    }
    if (v.infinity.count_rational == 2 && v.infinity.swapped) {
        v.criterion = Genus2Criterion::SwappedInfinityPair;
        return v;
    }
    v.slice = slice_divisor_search(f);
    if (v.slice) v.criterion = Genus2Criterion::SliceDivisor;
    return v;
}

Genus2Verdict genus2_cubic_verdict(const CurveModel& m, i64 height_bound) {
    if (m.kind != ModelKind::Hyperelliptic) throw DomainError("genus-2 verdict needs a hyperelliptic model");
    return genus2_cubic_verdict(m.level, m.f, height_bound);
}

}  // namespace x0plus

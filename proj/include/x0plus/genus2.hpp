#pragma once

#include <optional>
#include <string>
#include <vector>

#include "x0plus/dataset.hpp"
#include "x0plus/polynomial.hpp"

namespace x0plus {

struct RationalPoint {
    mpq_class x, y;
    bool operator==(const RationalPoint&) const = default;
};

constexpr i64 kDefaultPointHeight = 100;

// affine points with x = a/b, |a|, b <= height_bound, sorted by (x, y)
std::vector<RationalPoint> search_rational_points(const QPoly& f, i64 height_bound = kDefaultPointHeight);

struct InfinityReport {
    int count_rational = 0;
    bool swapped = false;  // by the hyperelliptic involution
};

InfinityReport infinity_points(const QPoly& f);

struct SliceDivisor {
    mpq_class c;
    QPoly cubic;  // primitive irreducible cubic factor of f - c^2
};

// c = a/b with 0 <= a <= 3, 1 <= b <= 3, in that order
std::vector<mpq_class> default_slice_range();
std::optional<SliceDivisor> slice_divisor_search(const QPoly& f, const std::vector<mpq_class>& c_range = default_slice_range());

enum class Genus2Criterion { None, ThreeRationalPoints, SwappedInfinityPair, SliceDivisor };

std::string to_string(Genus2Criterion c);

struct Genus2Verdict {
    i64 level = 0;
    Genus2Criterion criterion = Genus2Criterion::None;
    std::vector<RationalPoint> points;
    InfinityReport infinity;
    std::optional<SliceDivisor> slice;
};

Genus2Verdict genus2_cubic_verdict(i64 level, const QPoly& f, i64 height_bound = kDefaultPointHeight);
Genus2Verdict genus2_cubic_verdict(const CurveModel& m, i64 height_bound = kDefaultPointHeight);

}  // namespace x0plus

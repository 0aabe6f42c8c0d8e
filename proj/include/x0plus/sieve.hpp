#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "x0plus/dataset.hpp"
#include "x0plus/ffcount.hpp"
#include "x0plus/genus.hpp"
#include "x0plus/genus2.hpp"
#include "x0plus/quadform.hpp"

namespace x0plus {

enum class FilterOutcome { Pass, Fail, Certify, Inapplicable };

std::string to_string(FilterOutcome o);

struct FilterResult {
    std::string filter;  // psi-bound, point-count, modular-degree, castelnuovo, descent
    FilterOutcome outcome = FilterOutcome::Pass;
    std::string detail;

    // witnesses, set according to the filter
    i64 prime = 0;                  // psi-bound
    std::optional<PrimePower> pp;   // point-count
    i64 count_x0 = 0, count_x0_plus = 0, count_e = 0;
    i64 degree = 0;                 // modular-degree
    i64 divisor = 0;                // descent d, castelnuovo r
    std::vector<std::string> notes;

    bool failed() const { return outcome == FilterOutcome::Fail; }
};

std::vector<PrimePower> default_schedule();

FilterResult psi_bound_filter(i64 n);
FilterResult point_count_filter(i64 n, const EllipticCurveRecord& e, const std::vector<PrimePower>& powers, const Database& db);
FilterResult modular_degree_filter(i64 n, const EllipticCurveRecord& e);
FilterResult castelnuovo_level_filter(i64 n, const Database& db);
FilterResult descent_filter(i64 n, const EllipticCurveRecord& e, const Database& db);

enum class PairStatus { Surviving, Eliminated, CertifiedAdmissible };

std::string to_string(PairStatus s);

struct AdmissiblePairCandidate {
    i64 n = 0;
    const EllipticCurveRecord* curve = nullptr;
    PairStatus status = PairStatus::Surviving;
    std::vector<FilterResult> trace;  // every filter, in order
    const FilterResult* decisive() const;  // first Fail or Certify, null if surviving
};

std::vector<AdmissiblePairCandidate> enumerate_admissible_pairs(i64 n, const Database& db,
                                                                const std::vector<PrimePower>& schedule = default_schedule());

enum class Verdict { InfiniteCubic, FiniteCubic, BelowScope, Unresolved };

std::string to_string(Verdict v);

struct Classification {
    i64 n = 0;
    std::optional<i64> genus_plus;
    Verdict verdict = Verdict::Unresolved;
    std::string reason;  // tag of the firing criterion
    std::vector<std::string> witnesses;
    // set when the computed outcome differs from the published one
    std::optional<std::string> divergence;
    std::optional<Verdict> published_verdict;
};

Classification classify_level(i64 n, const Database& db);

struct MainTable {
    std::map<int, std::vector<i64>> rows;  // genus >= 3 -> InfiniteCubic levels
    std::vector<i64> genus2;               // InfiniteCubic levels of genus 2
    std::vector<i64> unresolved;
    struct Discrepancy {
        i64 n;
        std::string kind;  // computed-only, published-only, divergence
        std::string detail;
    };
    std::vector<Discrepancy> discrepancies;
};

MainTable main_theorem_table(i64 lo, i64 hi, const Database& db);

}  // namespace x0plus

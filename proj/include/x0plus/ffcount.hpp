#pragma once

#include <string>

#include "x0plus/dataset.hpp"
#include "x0plus/finite_field.hpp"

namespace x0plus {

struct PrimePower {
    i64 p = 2;
    int n = 1;

    PrimePower() = default;
    PrimePower(i64 p, int n);  // validates
    i64 q() const;
    std::string str() const;  // "7" or "3^2"
    bool operator==(const PrimePower&) const = default;
};

enum class CountMethod { Eigenvalue, ModelBruteForce };

struct CountReport {
    std::string object;
    PrimePower pp;
    i64 count = 0;
    CountMethod method = CountMethod::Eigenvalue;
};

// sum over the embedded forms of alpha^n + beta^n
i64 frobenius_power_trace(const NewformOrbitRecord& orbit, const PrimePower& pp);

// alpha^n + beta^n for x^2 - a x + p
i64 frobenius_trace_from_ap(i64 ap, const PrimePower& pp);

CountReport count_x0(i64 n, const PrimePower& pp, const Database& db);
CountReport count_x0_plus(i64 n, const PrimePower& pp, const Database& db);

// a_p from the matching newform orbit when db is given, else from the model
CountReport count_ec(const EllipticCurveRecord& e, const PrimePower& pp, const Database* db = nullptr);
// enumeration of the Weierstrass model over GF(q), including the point at infinity
i64 count_weierstrass_brute(const std::array<i64, 5>& a, const PrimePower& pp);

CountReport count_hyperelliptic_model(const QPoly& f, const PrimePower& pp);
CountReport count_petri_model(const QMatrix4& quadric, const std::array<mpq_class, 20>& cubic, const PrimePower& pp);
// dispatches on kind; rejects the model's stored bad primes
CountReport count_model(const CurveModel& m, const PrimePower& pp);

}  // namespace x0plus

#pragma once

#include <optional>
#include <vector>

#include "x0plus/arith.hpp"
#include "x0plus/dataset.hpp"

namespace x0plus {

struct GenusReport {
    i64 level = 0;
    i64 genus_x0 = 0;
    i64 fricke_fixed_points = 0;
    std::optional<i64> genus_x0_plus_rh;  // empty when (2g+2-v)/4 is not integral
    std::optional<i64> genus_x0_plus_nf;
    bool agreement = true;
    bool perfect_square = false;

    // newform value when present, else Riemann-Hurwitz
    i64 genus() const;
};

i64 genus_x0(i64 n);
i64 fricke_fixed_points(i64 n);
GenusReport genus_x0_plus(i64 n, const Database* db = nullptr);

// trace of w_u (u || N) on S_2(Gamma_0(N)); u = 1 gives genus_x0
i64 trace_al(i64 n, i64 u, const Database& db);

// genus of X0(N)/<w_r, w_N>, 1 < r < N exact
i64 al_quotient_genus(i64 n, i64 r, const Database& db);

// genus of X0*(N) = X0(N)/B(N)
i64 genus_star(i64 n, const Database& db);

// genus of X0(N)/H for H generated by the listed exact divisors
i64 al_group_genus(i64 n, const std::vector<i64>& generators, const Database& db);

struct CastelnuovoResult {
    bool pass = true;
    i64 witness_r = 0;
    i64 genus_plus = 0;
    i64 quotient_genus = 0;
};

CastelnuovoResult castelnuovo_filter(i64 n, const Database& db);

}  // namespace x0plus

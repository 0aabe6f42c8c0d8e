#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "x0plus/arith.hpp"

namespace x0plus {

// GF(p^n) by Zech logarithms. Element k encodes 0 when k = 0, else g^(k-1)
// for a fixed generator g.
class GF {
public:
    using Elt = std::uint32_t;

    GF(i64 p, int n);

    i64 p() const { return p_; }
    int n() const { return n_; }
    i64 q() const { return q_; }
    // defining primitive polynomial, constant term first, monic
    const std::vector<i64>& modulus() const { return modulus_; }

    Elt zero() const { return 0; }
    Elt one() const { return 1; }

    Elt add(Elt a, Elt b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint32_t k = b >= a ? b - a : b + order_ - a;
        std::int32_t z = zech_[k];
        if (z < 0) return 0;
        std::uint32_t r = (a - 1) + static_cast<std::uint32_t>(z);
        if (r >= order_) r -= order_;
        return r + 1;
    }
    Elt neg(Elt a) const {
        if (a == 0) return 0;
        std::uint32_t r = (a - 1) + half_;
        if (r >= order_) r -= order_;
        return r + 1;
    }
    Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t r = (a - 1) + (b - 1);
        if (r >= order_) r -= order_;
        return r + 1;
    }
    Elt inv(Elt a) const;
    Elt pow(Elt a, i64 e) const;

    // quadratic character; p = 2 gives 1 on nonzero elements
    int chi(Elt a) const {
        if (a == 0) return 0;
        if (p_ == 2) return 1;
        return ((a - 1) & 1u) ? -1 : 1;
    }

    Elt from_int(i64 v) const;
    Elt from_rational(const mpq_class& v) const;  // denominator prime to p

    // coefficient vector (length n, constant first) of an element
    std::vector<i64> to_vector(Elt a) const;
    Elt from_vector(const std::vector<i64>& v) const;

private:
    i64 p_;
    int n_;
    i64 q_;
    std::uint32_t order_;  // q - 1
    std::uint32_t half_;   // log of -1
    std::vector<i64> modulus_;
    std::vector<std::int32_t> zech_;       // log(1 + g^k) or -1
    std::vector<std::uint32_t> vec_to_elt_;  // base-p coded vector -> element
    std::vector<std::uint32_t> elt_to_vec_;
};

}  // namespace x0plus

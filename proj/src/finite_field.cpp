#include "x0plus/finite_field.hpp"

namespace x0plus {

namespace {

// powers of x modulo a monic polynomial, each coded as a base-p integer;
// empty when x does not have order p^n - 1
std::vector<std::uint32_t> power_table(i64 p, int n, const std::vector<i64>& mod) {
    i64 q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    std::vector<i64> cur(n, 0);
    if (n == 1) {
        cur[0] = ((-mod[0]) % p + p) % p;
    } else {
        cur[1] = 1;
    }
    auto code = [&](const std::vector<i64>& v) {
        std::uint32_t c = 0;
        for (int i = n - 1; i >= 0; --i) c = c * static_cast<std::uint32_t>(p) + static_cast<std::uint32_t>(v[i]);
        return c;
    };
    std::vector<std::uint32_t> out{1};
    std::vector<bool> seen(q, false);
    seen[1] = true;
    std::vector<i64> x = cur;
    for (i64 k = 1; k < q - 1; ++k) {
        std::uint32_t c = code(cur);
        if (c == 0 || seen[c]) return {};
        seen[c] = true;
        out.push_back(c);
        if (n == 1) {
            cur[0] = cur[0] * x[0] % p;
        } else {
            // multiply by x and reduce by the monic modulus
            i64 top = cur[n - 1];
            for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
            cur[0] = 0;
            for (int i = 0; i < n; ++i) cur[i] = ((cur[i] - top * mod[i]) % p + p) % p;
        }
    }
    if (code(cur) != 1) return {};
    return out;
}

}  // namespace

GF::GF(i64 p, int n) : p_(p), n_(n) {
    if (!is_prime(p) || n < 1 || n > 4) throw DomainError("GF: need p prime and 1 <= n <= 4");
    q_ = 1;
    for (int i = 0; i < n; ++i) q_ *= p;
    if (q_ > (i64(1) << 24)) throw ResourceError("GF: field too large");
    order_ = static_cast<std::uint32_t>(q_ - 1);
    std::vector<std::uint32_t> powers;
    // search monic polynomials of degree n in lexicographic order of coefficients
    for (i64 c = 0; c < q_ && powers.empty(); ++c) {
        std::vector<i64> m(n + 1, 0);
        i64 t = c;
        for (int i = 0; i < n; ++i) {
            m[i] = t % p;
            t /= p;
        }
        m[n] = 1;
        if (m[0] == 0 && q_ > 2) continue;
        if (q_ == 2) {
            modulus_ = {1, 1};
            powers = {1};
            break;
        }
        powers = power_table(p, n, m);
        if (!powers.empty()) modulus_ = m;
    }
    if (powers.empty()) throw IntegrityError("GF: no primitive polynomial found");
    vec_to_elt_.assign(q_, 0);
    elt_to_vec_.assign(q_, 0);
    for (std::uint32_t k = 0; k < order_; ++k) {
        vec_to_elt_[powers[k]] = k + 1;
        elt_to_vec_[k + 1] = powers[k];
    }
    half_ = p == 2 ? 0 : order_ / 2;
    // 1 + g^k: add 1 to the constant coordinate
    zech_.assign(order_, -1);
    for (std::uint32_t k = 0; k < order_; ++k) {
        std::uint32_t v = powers[k];
        std::uint32_t c0 = v % static_cast<std::uint32_t>(p);
        std::uint32_t w = v - c0 + static_cast<std::uint32_t>((c0 + 1) % p);
        zech_[k] = w == 0 ? -1 : static_cast<std::int32_t>(vec_to_elt_[w] - 1);
    }
}

GF::Elt GF::inv(Elt a) const {
    if (a == 0) throw DomainError("GF: inverse of zero");
    std::uint32_t k = a - 1;
    return (k == 0 ? 0 : order_ - k) + 1;
}

GF::Elt GF::pow(Elt a, i64 e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    i64 k = (static_cast<i64>(a - 1) * (e % order_)) % order_;
    if (k < 0) k += order_;
    return static_cast<Elt>(k) + 1;
}

GF::Elt GF::from_int(i64 v) const {
    v %= p_;
    if (v < 0) v += p_;
    return vec_to_elt_[static_cast<std::size_t>(v)];
}

GF::Elt GF::from_rational(const mpq_class& v) const {
    mpz_class den = v.get_den() % p_;
    if (den == 0) throw DomainError("GF: denominator divisible by p");
    mpz_class num = v.get_num() % p_;
    return mul(from_int(num.get_si()), inv(from_int(den.get_si())));
}

std::vector<i64> GF::to_vector(Elt a) const {
    std::vector<i64> v(n_, 0);
    std::uint32_t c = elt_to_vec_[a];
    for (int i = 0; i < n_; ++i) {
        v[i] = c % p_;
        c /= static_cast<std::uint32_t>(p_);
    }
    return v;
}

GF::Elt GF::from_vector(const std::vector<i64>& v) const {
    std::uint32_t c = 0;
    for (int i = n_ - 1; i >= 0; --i) c = c * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(((v[i] % p_) + p_) % p_);
    return vec_to_elt_[c];
}

}  // namespace x0plus

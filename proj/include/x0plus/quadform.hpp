#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "x0plus/arith.hpp"
#include "x0plus/dataset.hpp"

namespace x0plus {

struct Diagonalization {
    std::array<mpq_class, 4> diagonal;
    QMatrix4 transform;  // transform^T * A * transform = diag
};

Diagonalization diagonalize(const QMatrix4& a);
int form_rank(const QMatrix4& a);

QMatrix4 matmul(const QMatrix4& a, const QMatrix4& b);
QMatrix4 transpose(const QMatrix4& a);
mpq_class evaluate_form(const QMatrix4& a, const std::array<mpq_class, 4>& v);

// Hilbert symbol (a, b)_p; p = -1 is the real place
int hilbert_symbol(const mpz_class& a, const mpz_class& b, i64 p);
bool is_local_square(const mpz_class& d, i64 p);

// places where the nondegenerate diagonal form is anisotropic (-1 = real)
std::vector<i64> anisotropic_places(const std::array<mpz_class, 4>& diag);
bool isotropic_over_q(const std::array<mpz_class, 4>& diag);
// isotropic over Q(sqrt e), e a squarefree integer, not 1
bool isotropic_over_quadratic(const std::array<mpz_class, 4>& diag, i64 e);

constexpr i64 kDefaultIsotropyHeight = 10000;

// nonzero integer v with sum d_i v_i^2 = 0 and max |v_i| <= height_bound
std::optional<std::array<mpz_class, 4>> isotropy_search(const std::array<mpz_class, 4>& diag, i64 height_bound = kDefaultIsotropyHeight);

enum class QuadricVerdict { Degenerate, Cone, RuledOverQ, RuledOverQuadratic, RuledOverBiquadratic };

struct QuadricClassification {
    int rank = 0;
    std::array<mpq_class, 4> diagonal;
    std::array<mpz_class, 4> classes;  // square classes, 0 for zero entries
    mpz_class disc_class = 0;          // class of the product of nonzero entries
    QuadricVerdict verdict = QuadricVerdict::Degenerate;
    std::vector<i64> field;            // quadratic generators of the ruling field
    std::vector<i64> anisotropic;      // places where the form is anisotropic over Q
    std::optional<std::array<mpq_class, 4>> isotropy_witness;  // original coordinates

    std::string verdict_str() const;  // "cone", "Q", "Q(sqrt 7)", "Q(sqrt 3,sqrt -1)"
};

QuadricClassification classify_quadric(const QMatrix4& a, i64 height_bound = kDefaultIsotropyHeight);

bool trigonal_over_q(const QuadricClassification& c);

// upper triangle a11,a12,a13,a14,a22,a23,a24,a33,a34,a44
QMatrix4 matrix_from_upper(const std::array<mpq_class, 10>& u);
QMatrix4 diagonal_matrix(const std::array<mpq_class, 4>& d);

}  // namespace x0plus

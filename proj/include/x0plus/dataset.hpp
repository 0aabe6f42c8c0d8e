#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "x0plus/arith.hpp"
#include "x0plus/polynomial.hpp"

namespace x0plus {

using SignMap = std::map<i64, int>;

struct NewformOrbitRecord {
    i64 level = 0;
    std::string orbit_id;
    i64 dim = 0;
    SignMap al_signs;
    std::map<i64, std::vector<i64>> hecke;  // p -> (s1, s2[, s3, s4])

    i64 prime_bound() const { return hecke.empty() ? 0 : hecke.rbegin()->first; }
    // product of w_q signs over primes q | d
    int sign_of(i64 d) const;
    int fricke_sign() const { return sign_of(level); }
    std::string label() const { return std::to_string(level) + orbit_id; }
    bool operator==(const NewformOrbitRecord&) const = default;
};

struct EllipticCurveRecord {
    std::string label;
    i64 conductor = 0;
    int rank = 0;
    int torsion_order = 1;
    bool two_torsion_nontrivial = false;
    bool has_rational_3_isogeny = false;
    i64 modular_degree = 0;
    SignMap al_signs;
    std::array<i64, 5> weierstrass{};  // a1 a2 a3 a4 a6

    int sign_of(i64 d) const;
    bool operator==(const EllipticCurveRecord&) const = default;
};

enum class ModelKind { Hyperelliptic, Petri };

using QMatrix4 = std::array<std::array<mpq_class, 4>, 4>;

struct CurveModel {
    i64 level = 0;
    ModelKind kind = ModelKind::Hyperelliptic;
    std::vector<i64> bad_primes;
    QPoly f;                       // y^2 = f(x)
    QMatrix4 quadric{};            // Gram matrix, x^T A x
    std::array<mpq_class, 20> cubic{};  // see cubic_monomials()
};

// exponent vectors of the 20 cubic monomials in (x,y,z,w), storage order
const std::array<std::array<int, 4>, 20>& cubic_monomials();

struct KnownLists {
    std::set<i64> genus0, genus1, hyperelliptic, bielliptic, gonality3;
    bool listed(i64 n) const;
};

// published genus-4 quadric data, used only for divergence reporting
struct PublishedQuadric {
    i64 level = 0;
    std::array<i64, 4> diagonal{};
    std::string ruling;  // "cone", "Q", "Q(sqrt d)", "Q(sqrt a,sqrt b)"
    std::vector<i64> ruling_field;  // quadratic generators, empty for Q or cone
    bool cone() const { return ruling == "cone"; }
};

struct PublishedTable {
    std::map<int, std::vector<i64>> rows;  // genus -> levels
    std::set<i64> levels() const;
};

std::vector<NewformOrbitRecord> load_newforms(std::istream& in);
std::vector<EllipticCurveRecord> load_elliptic_curves(std::istream& in);
std::vector<CurveModel> load_models(std::istream& in);
KnownLists load_known_lists(std::istream& in);
std::vector<PublishedQuadric> load_published_quadrics(std::istream& in);
PublishedTable load_published_table(std::istream& in);

void write_newforms(std::ostream& out, const std::vector<NewformOrbitRecord>& v);
void write_elliptic_curves(std::ostream& out, const std::vector<EllipticCurveRecord>& v);

// "1-21,23,25" style integer sets
std::set<i64> parse_int_ranges(const std::string& s);

// 2-torsion point on the model: rational root of 4x^3 + b2 x^2 + 2 b4 x + b6
bool weierstrass_has_rational_2_torsion(const std::array<i64, 5>& a);
// p + 1 - #E(F_p) by enumeration of the Weierstrass model, p prime
i64 weierstrass_ap(const std::array<i64, 5>& a, i64 p);
mpz_class weierstrass_discriminant(const std::array<i64, 5>& a);

class Database {
public:
    Database() = default;
    static Database load_dir(const std::filesystem::path& dir);

    void set_newforms(std::vector<NewformOrbitRecord> v);
    void set_curves(std::vector<EllipticCurveRecord> v);
    void set_models(std::vector<CurveModel> v);
    void set_known(KnownLists k) { known_ = std::move(k); }
    void set_published_quadrics(std::vector<PublishedQuadric> v);
    void set_published_table(PublishedTable t) { table_ = std::move(t); }

    const std::vector<NewformOrbitRecord>& newforms() const { return newforms_; }
    const std::vector<EllipticCurveRecord>& curves() const { return curves_; }
    const KnownLists& known() const { return known_; }
    const PublishedTable& published_table() const { return table_; }
    const std::map<i64, CurveModel>& models() const { return models_; }

    // newform levels covered: every M <= newform_level_bound() has been tabulated
    i64 newform_level_bound() const { return nf_bound_; }
    bool covers(i64 n) const;  // all M | n tabulated

    std::vector<const NewformOrbitRecord*> orbits_at(i64 level) const;
    const NewformOrbitRecord* orbit(i64 level, const std::string& id) const;
    const EllipticCurveRecord* curve(const std::string& label) const;
    const CurveModel* model(i64 level) const;
    const PublishedQuadric* published_quadric(i64 level) const;

    std::vector<const EllipticCurveRecord*> curves_with_conductor_dividing(i64 n, int min_rank) const;

    // dimension-1 orbit at the conductor whose a_p match the model at good p
    const NewformOrbitRecord* orbit_for_curve(const EllipticCurveRecord& e) const;

private:
    std::vector<NewformOrbitRecord> newforms_;
    std::map<i64, std::vector<size_t>> by_level_;
    i64 nf_bound_ = 0;
    std::vector<EllipticCurveRecord> curves_;
    std::map<i64, CurveModel> models_;
    KnownLists known_;
    std::map<i64, PublishedQuadric> pub_quadrics_;
    PublishedTable table_;
};

// data directory: explicit path, else $X0PLUS_DATA_DIR, else build default
std::filesystem::path resolve_data_dir(const std::string& override_path = "");

}  // namespace x0plus

/** Affine Cartan data for the nonexceptional families. */

#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcbij {

enum class Family { A1, B1, C1, D1, A2, A2dag, A2odd, D2 };

struct AffineType {
    Family family;
    int n;
    auto operator<=>(const AffineType &) const = default;
};

class TypeError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/** Smallest rank for which the family's diagram is the generic one. */
int min_rank(Family f);

/** Validates the rank unless `relax` is set (rank >= 1 is always required). */
AffineType make_type(Family f, int n, bool relax = false);

Family parse_family(std::string_view name);
std::string family_name(Family f);
/** Kac notation, e.g. "C_3^(1)", "A_4^(2)dag". */
std::string kac_name(AffineType t);

/// t, t^vee and upsilon have denominators dividing 2 and are kept doubled.
struct KacData {
    std::vector<int> a;      ///< a_0..a_n
    std::vector<int> a_vee;  ///< a_0^vee..a_n^vee
    int r = 1;               ///< twist order
    std::vector<int> t2;     ///< 2*t_i, i = 0..n
    std::vector<int> t_vee2; ///< 2*t_i^vee, i = 0..n
    std::vector<int> ups2;   ///< 2*upsilon_a, index a-1 for a = 1..n
    std::vector<int> eps;    ///< epsilon_a, index a-1

    int t(int a) const { return t2[a] / 2; }
    int t_vee(int a) const { return t_vee2[a] / 2; }
    /** Lattice step of node a in doubled length units. */
    int step2(int a) const { return ups2[a - 1]; }
};

KacData kac_data(AffineType t);

/// The normalized form ((alpha~_a | alpha~_b)) on the simple roots of the
/// classical subalgebra g_0bar, doubled; indices 0..n-1 for nodes 1..n.
using FormMatrix = std::vector<std::vector<int>>;
FormMatrix form_matrix2(AffineType t);

/** Dimension of the weight lattice used for paths (n+1 for A1, else n). */
int weight_dim(AffineType t);

/// Simple roots of gbar in the epsilon basis (rows are nodes 1..n).
std::vector<std::vector<int>> classical_roots(AffineType t);

bool is_dominant(AffineType t, const std::vector<int> &lambda);

/// Rational with small denominators, used for Cartan-level linear algebra.
struct Frac {
    long long num = 0;
    long long den = 1;
    Frac() = default;
    Frac(long long v) : num(v) {}
    Frac(long long p, long long q);
    bool operator==(const Frac &o) const { return num == o.num && den == o.den; }
    Frac operator+(const Frac &o) const { return {num * o.den + o.num * den, den * o.den}; }
    Frac operator-(const Frac &o) const { return {num * o.den - o.num * den, den * o.den}; }
    Frac operator*(const Frac &o) const { return {num * o.num, den * o.den}; }
    Frac operator/(const Frac &o) const;
    bool is_integer() const { return den == 1; }
};

/// Coefficients of iota(L*Lambda_1 - lambda) in the alpha~ basis.
/// For A1 the classical part is taken in gl_{n+1} coordinates.
std::vector<Frac> iota_image(AffineType t, const std::vector<int> &lambda, int L);

/** All dominant weights with every |lambda_a| <= L (A1: partitions of L). */
std::vector<std::vector<int>> dominant_weights(AffineType t, int L);

} // namespace rcbij

/** Rigged configurations, vacancy numbers and the fermionic formula. */

#pragma once

#include "rcbij/cartan.hpp"
#include "rcbij/qpoly.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace rcbij {

/// One row of nu^(a) with its rigging; both values doubled.
struct RcString {
    int len2 = 0;
    int rig2 = 0;
    auto operator<=>(const RcString &) const = default;
};

/// nu[a-1] holds the strings of node a in descending (len2, rig2) order.
struct RiggedConfig {
    std::vector<std::vector<RcString>> nu;

    explicit RiggedConfig(int n = 0) : nu(n) {}
    void normalize();
    bool empty() const;
    auto operator<=>(const RiggedConfig &) const = default;
};

/// Doubled string lengths per node, descending.
using Configuration = std::vector<std::vector<int>>;

Configuration shape(const RiggedConfig &rc);
std::string to_string(const RiggedConfig &rc);

/// Vacancy numbers and enumeration for B^{1,1} tensor powers of length L.
class RcSpace {
  public:
    RcSpace(AffineType t, int L);

    AffineType type() const { return type_; }
    int n() const { return type_.n; }
    int L() const { return L_; }
    const KacData &kac() const { return kac_; }
    /** Doubled lattice step upsilon_a of node a. */
    int step2(int a) const { return kac_.step2(a); }
    /** Odd strings of the last node of A_{2n}^(2)dag carry half-odd riggings. */
    bool half_odd(int a, int len2) const;

    /** 2 * P_i^(a) from the closed per-type formula; i2 must lie on the node's lattice. */
    int P2(const Configuration &nu, int a, int i2) const;
    /** The same number from the general quadratic expression. */
    int P2_general(const Configuration &nu, int a, int i2) const;

    /** Doubled |nu^(a)| forced by lambda, or nullopt if no configuration exists. */
    std::optional<std::vector<int>> sizes2(const std::vector<int> &lambda) const;

    /** P >= 0 everywhere (plus the odd-string rule for A_{2n}^(2)dag). */
    bool admissible(const Configuration &nu) const;
    /** The same test restricted to lengths that occur in nu. */
    bool admissible_at_strings(const Configuration &nu) const;
    /** Admissible and every rigging inside its box with the right parity. */
    bool is_valid(const RiggedConfig &rc) const;

    /** 2 * cc(nu). */
    int cc2(const Configuration &nu) const;
    /** 2 * (cc(nu) + |J|). */
    int cc_total2(const RiggedConfig &rc) const;

    RiggedConfig complement(const RiggedConfig &rc) const;

    /** Configurations with the sizes forced by lambda; admissible ones only unless told otherwise. */
    std::vector<Configuration> configurations(const std::vector<int> &lambda, bool admissible_only = true) const;
    std::vector<RiggedConfig> enumerate(const std::vector<int> &lambda) const;

    /** Sum over admissible configurations of q^cc times q-binomials. */
    QPoly fermionic_m(const std::vector<int> &lambda) const;
    /** Sum of q^cc over all rigged configurations. */
    QPoly rc_genfun(const std::vector<int> &lambda) const;

  private:
    int Q2(const Configuration &nu, int b, int i2) const;

    AffineType type_;
    int L_;
    KacData kac_;
    FormMatrix form2_;
};

} // namespace rcbij

/** The rank map, box removal delta, its inverse, and the bijections Phi, Phi~. */

#pragma once

#include "rcbij/energy.hpp"
#include "rcbij/rc.hpp"

#include <string>
#include <vector>

namespace rcbij {

/// Selections never made by delta; larger than every doubled length.
inline constexpr int kInf = 1 << 28;

enum class DeltaCase { None, S, Q, P, QS };
std::string to_string(DeltaCase c);

/// Selected lengths (doubled, kInf if unset) of one delta step.
struct DeltaTrace {
    std::vector<int> ell;    ///< index a-1
    std::vector<int> ellbar; ///< index a-1
    std::vector<DeltaCase> cases;
    Letter rank;
};

std::string to_string(const DeltaTrace &t);

struct DeltaStep {
    Letter b;
    RiggedConfig rc; ///< lives at length L-1 and weight lambda - wt(b)
    DeltaTrace trace;
};

/// Per-step quantities compared by the statistic identities (cc doubled).
struct DeltaIdentities {
    Letter bL, bL1;
    int dcc2 = 0;          ///< cc(rc) - cc(delta'(rc))
    int dcc2_formula = 0;  ///< per-type closed form
    int dcc2_generic = 0;  ///< (t_1^vee / a_0^vee) alpha - chi(b_L = phi)
    int hbar = 0;          ///< from the local energy table
    int hbar_formula = 0;  ///< per-type closed form in the selected lengths
    int hbar2_generic = 0; ///< doubled generic second difference
};

class Bijection {
  public:
    explicit Bijection(AffineType t);

    AffineType type() const { return type_; }
    const Crystal &crystal() const { return C_; }
    const LocalEnergy &energy() const { return H_; }

    /** rk and delta on an element of RC(lambda, B^{tensor L}), L >= 1. */
    DeltaStep rank_and_delta(const RiggedConfig &rc, int L) const;

    /// Reversed scan: the rc of length L with rank b and delta(rc) = rc1, where
    /// rc1 has length L-1 and weight rho.
    RiggedConfig delta_inverse(Letter b, const RiggedConfig &rc1, int L, const std::vector<int> &rho) const;
    /** All preimages found by enumerating RC(rho + wt b, L). */
    std::vector<RiggedConfig> delta_inverse_bruteforce(Letter b, const RiggedConfig &rc1, int L,
                                                       const std::vector<int> &rho) const;

    Path phi(const RiggedConfig &rc, int L) const;
    Path phi_tilde(const RiggedConfig &rc, int L) const;
    RiggedConfig phi_inverse(const Path &p) const;
    RiggedConfig phi_tilde_inverse(const Path &p) const;

    /** Disagreements between the vacancy-change formula and recomputed values. */
    std::vector<std::string> check_vacancy_change(const RiggedConfig &rc, int L, const DeltaStep &step) const;
    /** Violations of the ordering of selected lengths. */
    std::vector<std::string> check_trace(const DeltaTrace &t) const;
    /** Quantities of delta' = comp . delta . comp on rc; requires L >= 2. */
    DeltaIdentities delta_identities(const RiggedConfig &rc, int L) const;

  private:
    AffineType type_;
    Crystal C_;
    LocalEnergy H_;
};

} // namespace rcbij

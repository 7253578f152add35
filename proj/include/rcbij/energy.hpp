/** Local energy H, intrinsic energy D and one-dimensional sums. */

#pragma once

#include "rcbij/crystal.hpp"
#include "rcbij/qpoly.hpp"

#include <string>
#include <vector>

namespace rcbij {

/// H on B (x) B, normalized by H(1 (x) 1) = 0 and computed by propagating
/// the affine increment rule over the crystal graph of B (x) B.
class LocalEnergy {
  public:
    explicit LocalEnergy(const Crystal &C);

    const Crystal &crystal() const { return C_; }
    int H(Letter b, Letter b2) const { return h_[C_.index(b)][C_.index(b2)]; }
    int Hbar(Letter b, Letter b2) const { return -H(b, b2); }
    /** The unique b with phi(b) = Lambda_0. */
    Letter b_natural() const { return natural_; }

    int E(const Path &p) const;
    /** D(p) = E(p) - E(1 (x) ... (x) 1); zero for the empty path. */
    int D(const Path &p) const;
    int Dbar(const Path &p) const { return -D(p); }

    /** Tab-separated table "b  b'  H  Hbar". */
    std::string dump_tsv() const;

  private:
    Crystal C_;
    std::vector<std::vector<int>> h_;
    Letter natural_;
};

/** X(lambda, B^{tensor L}; q) = sum of q^{D(b)} over classically highest paths. */
QPoly one_dim_sum(const LocalEnergy &H, const std::vector<int> &lambda, int L);

} // namespace rcbij

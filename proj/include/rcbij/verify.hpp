/** Exhaustive per-cell verification and the structural vacancy identities. */

#pragma once

#include "rcbij/bijection.hpp"

#include <string>
#include <vector>

namespace rcbij {

// --- structural identities on a single configuration ----------------------

/// Second differences of P against multiplicities. With `literal` the rows
/// a = n-1, n of B_n^(1) and D_n^(1) use the uncorrected coefficients instead of
/// the recomputed ones; returns the number of failing (a, i).
int pm_failures(const RcSpace &S, const Configuration &nu, bool literal = false);
/** Failures of 2 P_i >= P_{i-u} + P_{i+u} where m_i = 0. */
int convexity_failures(const RcSpace &S, const Configuration &nu);
/** Failures of the large-i limit of P against lambda. */
int asymptotic_failures(const RcSpace &S, const Configuration &nu, const std::vector<int> &lambda);

// --- cells ----------------------------------------------------------------

struct Cell {
    AffineType type;
    int L = 0;
    std::vector<int> lambda;
};

std::string to_string(const Cell &c);

/// Failure counters of one cell; all zero means the cell passes.
struct CellReport {
    Cell cell;
    std::size_t n_rc = 0, n_paths = 0;
    QPoly X, F, M;
    bool m_defined = true;

    // X = M
    int x_neq_f = 0, x_neq_m = 0;
    // bijection and statistic
    int card = 0, not_path = 0, non_injective = 0, cc_fail = 0, well_defined = 0;
    // round trips
    int delta_roundtrip = 0, phi_roundtrip = 0, bruteforce = 0;
    // structural
    int pm = 0, pm_literal = 0, convex = 0, asym = 0, equiv = 0, cv = 0, trace = 0, dcc = 0, hbar = 0;
    int dcc_generic = 0; ///< informational; known to differ for A_{2n}^(2)dag
    int errors = 0;      ///< exceptions thrown by delta or its inverse

    double seconds = 0;
    std::vector<std::string> counterexamples;

    bool x_ok() const { return x_neq_f == 0 && x_neq_m == 0; }
    bool bijection_ok() const {
        return card == 0 && not_path == 0 && non_injective == 0 && cc_fail == 0 && well_defined == 0;
    }
    bool roundtrip_ok() const { return delta_roundtrip == 0 && phi_roundtrip == 0 && bruteforce == 0; }
    bool structural_ok() const {
        return pm == 0 && convex == 0 && asym == 0 && equiv == 0 && cv == 0 && trace == 0 && dcc == 0 &&
               hbar == 0;
    }
    bool ok() const { return errors == 0 && x_ok() && bijection_ok() && roundtrip_ok() && structural_ok(); }
};

struct CellOptions {
    bool bruteforce = true;
    bool structural = true;
    std::size_t max_counterexamples = 3;
};

CellReport verify_cell(const Bijection &B, const Cell &cell, const CellOptions &opt = {});

/** All dominant weights with |lambda_a| <= L for L = 0..max_len. */
std::vector<Cell> grid_cells(AffineType t, int max_len);

/// Runs cells on `jobs` threads; results come back in input order.
std::vector<CellReport> verify_cells(const std::vector<Cell> &cells, int jobs, const CellOptions &opt = {});

std::string tsv_header();
std::string to_tsv(const CellReport &r);

} // namespace rcbij

#include "rcbij/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace rcbij {

namespace {

int mult(const Configuration &nu, int b, int i2) {
    if (b < 1 || b > (int)nu.size()) return 0;
    return (int)std::count(nu[b - 1].begin(), nu[b - 1].end(), i2);
}

int longest(const Configuration &nu) {
    int top = 0;
    for (const auto &p : nu)
        for (int x : p) top = std::max(top, x);
    return top;
}

// Right-hand side of the second-difference identity (real units, times 1).
int pm_rhs(const RcSpace &S, const Configuration &nu, int a, int i2, bool literal) {
    const int n = S.n();
    const Family f = S.type().family;
    auto m = [&](int b, int j2) { return mult(nu, b, j2); };
    int r = (a == 1 && i2 == 2) ? S.L() : 0;
    auto generic = [&] { return m(a - 1, i2) - 2 * m(a, i2) + m(a + 1, i2); };
    switch (f) {
    case Family::A1: return r + generic();
    case Family::D1:
        if (a == n - 2) return r + m(a - 1, i2) - 2 * m(a, i2) + m(n - 1, i2) + m(n, i2);
        if (a >= n - 1) return r + m(n - 2, i2) - 2 * m(literal ? n : a, i2);
        return r + generic();
    case Family::B1:
        if (a == n - 1) {
            int tail = 2 * m(n, i2) + m(n, i2 - 1) + m(n, i2 + 1);
            return r + m(a - 1, i2) - 2 * m(a, i2) + (literal ? 2 * tail : tail);
        }
        if (a == n) return r + (literal ? 2 : 1) * (m(n - 1, i2) - 2 * m(n, i2));
        return r + generic();
    case Family::C1:
        if (a == n) return r + m(n - 1, i2 - 2) + 2 * m(n - 1, i2) + m(n - 1, i2 + 2) - 2 * m(n, i2);
        return r + generic();
    case Family::A2:
    case Family::A2dag:
        if (a == n) return r + m(n - 1, i2) - m(n, i2);
        return r + generic();
    case Family::A2odd:
        if (a == n - 1) return r + m(a - 1, i2) - 2 * m(a, i2) + 2 * m(n, i2);
        if (a == n) return r + m(n - 1, i2) - 2 * m(n, i2);
        return r + generic();
    case Family::D2:
        if (a == n) return r + 2 * m(n - 1, i2) - 2 * m(n, i2);
        return r + generic();
    }
    return r;
}

std::vector<int> sizes_of(const Configuration &nu) {
    std::vector<int> s;
    for (const auto &p : nu) {
        int tot = 0;
        for (int x : p) tot += x;
        s.push_back(tot);
    }
    return s;
}

int P2z(const RcSpace &S, const Configuration &nu, int a, int i2) { return i2 <= 0 ? 0 : S.P2(nu, a, i2); }

} // namespace

int pm_failures(const RcSpace &S, const Configuration &nu, bool literal) {
    int bad = 0;
    const int top = longest(nu);
    for (int a = 1; a <= S.n(); ++a) {
        const int u = S.step2(a);
        for (int i = u; i <= top + 2 * u; i += u) {
            int lhs2 = -P2z(S, nu, a, i - u) + 2 * S.P2(nu, a, i) - S.P2(nu, a, i + u);
            if (lhs2 != 2 * pm_rhs(S, nu, a, i, literal)) ++bad;
        }
    }
    return bad;
}

int convexity_failures(const RcSpace &S, const Configuration &nu) {
    int bad = 0;
    const int top = longest(nu);
    for (int a = 1; a <= S.n(); ++a) {
        const int u = S.step2(a);
        for (int i = u; i <= top + 2 * u; i += u)
            if (mult(nu, a, i) == 0 && 2 * S.P2(nu, a, i) < P2z(S, nu, a, i - u) + S.P2(nu, a, i + u)) ++bad;
    }
    return bad;
}

int asymptotic_failures(const RcSpace &S, const Configuration &nu, const std::vector<int> &lambda) {
    const int n = S.n();
    const Family f = S.type().family;
    auto lam = [&](int a) { return a <= (int)lambda.size() ? lambda[a - 1] : 0; };
    int bad = 0;
    const int top = longest(nu);
    for (int a = 1; a <= n; ++a) {
        const int u = S.step2(a);
        const int i = (top / u + 2) * u;
        int want = lam(a) - lam(a + 1);
        if (a == n && f != Family::A1) {
            switch (f) {
            case Family::B1:
            case Family::D2: want = 2 * lam(n); break;
            case Family::D1: want = lam(n - 1) + lam(n); break;
            default: want = lam(n); break;
            }
        }
        if (S.P2(nu, a, i) != 2 * want) ++bad;
    }
    return bad;
}

std::string to_string(const Cell &c) {
    std::ostringstream os;
    os << family_name(c.type.family) << " n=" << c.type.n << " L=" << c.L << " lambda=";
    for (std::size_t j = 0; j < c.lambda.size(); ++j) os << (j ? "," : "") << c.lambda[j];
    return os.str();
}

CellReport verify_cell(const Bijection &B, const Cell &cell, const CellOptions &opt) {
    const auto t0 = std::chrono::steady_clock::now();
    CellReport r;
    r.cell = cell;
    const AffineType ty = B.type();
    const int L = cell.L;
    const int n = ty.n;
    const auto &lam = cell.lambda;
    const Crystal &C = B.crystal();
    const LocalEnergy &H = B.energy();
    RcSpace S(ty, L);

    auto note = [&](const std::string &what) {
        if (r.counterexamples.size() < opt.max_counterexamples) r.counterexamples.push_back(what);
    };

    const auto rcs = S.enumerate(lam);
    const auto paths = C.enumerate_highest(lam, L);
    r.n_rc = rcs.size();
    r.n_paths = paths.size();
    r.X = one_dim_sum(H, lam, L).invert_q();
    r.F = S.rc_genfun(lam);
    r.m_defined = ty.family != Family::A2dag;
    r.M = S.fermionic_m(lam);
    if (r.X != r.F) {
        ++r.x_neq_f;
        note("Xbar " + r.X.to_string() + " vs rc sum " + r.F.to_string());
    }
    if (r.m_defined && r.X != r.M) {
        ++r.x_neq_m;
        note("Xbar " + r.X.to_string() + " vs M " + r.M.to_string());
    }
    if (rcs.size() != paths.size()) ++r.card;

    const std::set<Path> pset(paths.begin(), paths.end());
    std::set<Path> images;
    for (const auto &rc : rcs) {
        try {
            const Path p = B.phi(rc, L);
            if (!pset.count(p)) {
                ++r.not_path;
                note("Phi(" + to_string(rc) + ") = " + to_string(p) + " is not highest of this weight");
            }
            images.insert(p);
            const Path pt = B.phi_tilde(rc, L);
            if (S.cc_total2(rc) != 2 * H.Dbar(pt)) {
                ++r.cc_fail;
                note("cc(" + to_string(rc) + ") != Dbar(" + to_string(pt) + ")");
            }
            if (B.phi_inverse(p) != rc) {
                ++r.phi_roundtrip;
                note("phi_inverse(phi(" + to_string(rc) + ")) differs");
            }
            if (L >= 1) {
                const auto st = B.rank_and_delta(rc, L);
                auto rho = lam;
                const auto w = C.wt(st.b);
                for (std::size_t j = 0; j < rho.size(); ++j) rho[j] -= w[j];
                RcSpace S1(ty, L - 1);
                if (!is_dominant(ty, rho) || (st.b.is_zero() && lam[n - 1] <= 0) || !S1.is_valid(st.rc) ||
                    S1.sizes2(rho) != std::optional(sizes_of(shape(st.rc)))) {
                    ++r.well_defined;
                    note("delta(" + to_string(rc) + ") leaves RC: " + to_string(st.rc));
                }
                const auto inv = B.delta_inverse(st.b, st.rc, L, rho);
                if (inv != rc) {
                    ++r.delta_roundtrip;
                    note("delta_inverse(delta(" + to_string(rc) + ")) = " + to_string(inv));
                }
                if (opt.bruteforce) {
                    const auto all = B.delta_inverse_bruteforce(st.b, st.rc, L, rho);
                    if (all.size() != 1 || all.front() != inv) {
                        ++r.bruteforce;
                        note("brute-force preimages of delta(" + to_string(rc) + "): " +
                             std::to_string(all.size()));
                    }
                }
                if (opt.structural) {
                    const auto cv = B.check_vacancy_change(rc, L, st);
                    if (!cv.empty()) {
                        ++r.cv;
                        note("vacancy change on " + to_string(rc) + ": " + cv.front());
                    }
                    const auto tr = B.check_trace(st.trace);
                    if (!tr.empty()) {
                        ++r.trace;
                        note("trace " + to_string(st.trace) + ": " + tr.front());
                    }
                }
            }
            if (opt.structural && L >= 2) {
                const auto d = B.delta_identities(rc, L);
                if (d.dcc2 != d.dcc2_formula) {
                    ++r.dcc;
                    note("Delta cc on " + to_string(rc));
                }
                if (d.dcc2 != d.dcc2_generic) ++r.dcc_generic;
                if (d.hbar != d.hbar_formula) {
                    ++r.hbar;
                    note("Hbar(" + to_string(d.bL) + "," + to_string(d.bL1) + ") = " + std::to_string(d.hbar) +
                         " vs " + std::to_string(d.hbar_formula) + " on " + to_string(rc));
                }
            }
        } catch (const std::exception &e) {
            ++r.errors;
            note(std::string("error on ") + to_string(rc) + ": " + e.what());
        }
    }
    if (images.size() != rcs.size()) ++r.non_injective;

    if (opt.structural) {
        for (const auto &nu : S.configurations(lam, false)) {
            const bool adm = S.admissible(nu);
            if (adm != S.admissible_at_strings(nu)) ++r.equiv;
            if (!adm) continue;
            r.pm += pm_failures(S, nu);
            r.pm_literal += pm_failures(S, nu, true);
            r.convex += convexity_failures(S, nu);
            r.asym += asymptotic_failures(S, nu, lam);
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<Cell> grid_cells(AffineType t, int max_len) {
    std::vector<Cell> out;
    for (int L = 0; L <= max_len; ++L)
        for (auto &lam : dominant_weights(t, L)) out.push_back({t, L, lam});
    return out;
}

std::vector<CellReport> verify_cells(const std::vector<Cell> &cells, int jobs, const CellOptions &opt) {
    std::vector<CellReport> out(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < cells.size();) {
            Bijection B(cells[k].type);
            out[k] = verify_cell(B, cells[k], opt);
        }
    };
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto &th : pool) th.join();
    return out;
}

std::string tsv_header() { return "cell\t|RC|\t|P|\tXbar\tMbar\tequal\truntime_s"; }

std::string to_tsv(const CellReport &r) {
    std::ostringstream os;
    os << to_string(r.cell) << '\t' << r.n_rc << '\t' << r.n_paths << '\t' << r.X.to_string() << '\t'
       << (r.m_defined ? r.M.to_string() : r.F.to_string()) << '\t' << (r.ok() ? "yes" : "no") << '\t';
    os.setf(std::ios::fixed);
    os.precision(4);
    os << r.seconds;
    return os.str();
}

} // namespace rcbij

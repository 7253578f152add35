#include "rcbij/cartan.hpp"

#include <algorithm>
#include <numeric>

namespace rcbij {

namespace {

constexpr struct {
    Family f;
    const char *name;
    int min_rank;
} kFamilies[] = {
    {Family::A1, "A1", 1},    {Family::B1, "B1", 3},    {Family::C1, "C1", 2},
    {Family::D1, "D1", 4},    {Family::A2, "A2", 1},    {Family::A2dag, "A2dag", 1},
    {Family::A2odd, "A2odd", 2}, {Family::D2, "D2", 2},
};

// Labels read off delta = sum a_i alpha_i; the dual labels are those of
// the arrow-reversed diagram.
std::vector<int> labels(Family f, int n, bool dual) {
    std::vector<int> v(n + 1, 1);
    auto fill2 = [&](int from, int to) {
        for (int i = from; i <= to; ++i)
            v[i] = 2;
    };
    switch (f) {
    case Family::A1:
        break;
    case Family::B1: // dual: A_{2n-1}^(2)
        fill2(2, dual ? n - 1 : n);
        break;
    case Family::A2odd: // dual: B_n^(1)
        fill2(2, dual ? n : n - 1);
        break;
    case Family::C1: // dual: D_{n+1}^(2)
        if (!dual)
            fill2(1, n - 1);
        break;
    case Family::D2: // dual: C_n^(1)
        if (dual)
            fill2(1, n - 1);
        break;
    case Family::D1:
        fill2(2, n - 2);
        break;
    case Family::A2: // dual: A_{2n}^(2)dag
        if (dual)
            fill2(1, n);
        else
            fill2(0, n - 1);
        break;
    case Family::A2dag: // dual: A_{2n}^(2)
        if (dual)
            fill2(0, n - 1);
        else
            fill2(1, n);
        break;
    }
    return v;
}

int twist(Family f) {
    switch (f) {
    case Family::A2:
    case Family::A2dag:
    case Family::A2odd:
    case Family::D2:
        return 2;
    default:
        return 1;
    }
}

} // namespace

int min_rank(Family f) {
    for (auto &e : kFamilies)
        if (e.f == f)
            return e.min_rank;
    return 1;
}

AffineType make_type(Family f, int n, bool relax) {
    if (n < 1)
        throw TypeError("rank must be positive");
    // Relaxed ranks still need enough nodes for the end-of-diagram formulas.
    int floor = min_rank(f);
    if (relax && f == Family::D1)
        floor = 3;
    if (relax && f == Family::B1)
        floor = 2;
    if (n < floor)
        throw TypeError("rank " + std::to_string(n) + " out of range for " + family_name(f) +
                        " (need n >= " + std::to_string(floor) + ")");
    return {f, n};
}

Family parse_family(std::string_view name) {
    for (auto &e : kFamilies)
        if (name == e.name)
            return e.f;
    throw TypeError("unknown type '" + std::string(name) + "'");
}

std::string family_name(Family f) {
    for (auto &e : kFamilies)
        if (e.f == f)
            return e.name;
    return "?";
}

std::string kac_name(AffineType t) {
    const auto n = std::to_string(t.n);
    switch (t.family) {
    case Family::A1:
        return "A_" + n + "^(1)";
    case Family::B1:
        return "B_" + n + "^(1)";
    case Family::C1:
        return "C_" + n + "^(1)";
    case Family::D1:
        return "D_" + n + "^(1)";
    case Family::A2:
        return "A_" + std::to_string(2 * t.n) + "^(2)";
    case Family::A2dag:
        return "A_" + std::to_string(2 * t.n) + "^(2)dag";
    case Family::A2odd:
        return "A_" + std::to_string(2 * t.n - 1) + "^(2)";
    case Family::D2:
        return "D_" + std::to_string(t.n + 1) + "^(2)";
    }
    return "?";
}

KacData kac_data(AffineType t) {
    KacData d;
    const int n = t.n;
    d.a = labels(t.family, n, false);
    d.a_vee = labels(t.family, n, true);
    d.r = twist(t.family);
    d.t2.resize(n + 1);
    d.t_vee2.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        // max(a_i / a_i^vee, a_0^vee) and max(a_i^vee / a_i, a_0), doubled
        d.t2[i] = std::max(2 * d.a[i] / d.a_vee[i], 2 * d.a_vee[0]);
        d.t_vee2[i] = std::max(2 * d.a_vee[i] / d.a[i], 2 * d.a[0]);
    }
    d.ups2.assign(n, 2);
    d.eps.assign(n, 1);
    if (t.family == Family::C1)
        d.ups2[n - 1] = 4;
    if (t.family == Family::B1)
        d.ups2[n - 1] = 1;
    if (t.family == Family::A2)
        d.eps[n - 1] = 2;
    return d;
}

namespace {

enum class Realization { A, B, C, D };

Realization gbar(Family f) {
    switch (f) {
    case Family::A1:
        return Realization::A;
    case Family::B1:
    case Family::A2dag:
    case Family::D2:
        return Realization::B;
    case Family::C1:
    case Family::A2:
    case Family::A2odd:
        return Realization::C;
    case Family::D1:
        return Realization::D;
    }
    return Realization::A;
}

// g_0bar equals gbar except for A_{2n}^(2), where it is B_n.
Realization g0bar(Family f) { return f == Family::A2 ? Realization::B : gbar(f); }

std::vector<std::vector<int>> roots_of(Realization r, int n) {
    const int dim = r == Realization::A ? n + 1 : n;
    std::vector<std::vector<int>> R(n, std::vector<int>(dim, 0));
    for (int a = 0; a < n; ++a) {
        if (a + 1 < n || r == Realization::A) {
            R[a][a] = 1;
            R[a][a + 1] = -1;
        }
    }
    switch (r) {
    case Realization::A:
        break;
    case Realization::B:
        R[n - 1][n - 1] = 1;
        break;
    case Realization::C:
        R[n - 1][n - 1] = 2;
        break;
    case Realization::D:
        R[n - 1][n - 2] = 1;
        R[n - 1][n - 1] = 1;
        break;
    }
    return R;
}

int dot(const std::vector<int> &x, const std::vector<int> &y) {
    return std::inner_product(x.begin(), x.end(), y.begin(), 0);
}

} // namespace

int weight_dim(AffineType t) { return t.family == Family::A1 ? t.n + 1 : t.n; }

std::vector<std::vector<int>> classical_roots(AffineType t) { return roots_of(gbar(t.family), t.n); }

FormMatrix form_matrix2(AffineType t) {
    const int n = t.n;
    const auto R = roots_of(g0bar(t.family), n);
    int longest = 0;
    for (auto &x : R)
        longest = std::max(longest, dot(x, x));
    const auto kd = kac_data(t);
    // Long roots of g_0bar get squared length 2r/a_0^vee; doubled: 4r/a_0^vee.
    int target2 = 4 * kd.r / kd.a_vee[0];
    if (g0bar(t.family) == Realization::B && n == 1)
        longest *= 2; // the unique root of B_1 counts as short
    FormMatrix M(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            M[a][b] = dot(R[a], R[b]) * target2 / longest;
    return M;
}

bool is_dominant(AffineType t, const std::vector<int> &lambda) {
    if ((int)lambda.size() != weight_dim(t))
        throw TypeError("weight has wrong length");
    const int n = t.n;
    for (int a = 0; a + 1 < (int)lambda.size(); ++a)
        if (lambda[a] < lambda[a + 1])
            return false;
    switch (gbar(t.family)) {
    case Realization::A:
        return true;
    case Realization::B:
    case Realization::C:
        return lambda[n - 1] >= 0;
    case Realization::D:
        return lambda[n - 2] + lambda[n - 1] >= 0;
    }
    return false;
}

Frac::Frac(long long p, long long q) : num(p), den(q) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Frac Frac::operator/(const Frac &o) const { return {num * o.den, den * o.num}; }

std::vector<Frac> iota_image(AffineType t, const std::vector<int> &lambda, int L) {
    if (!is_dominant(t, lambda))
        throw TypeError("weight is not dominant");
    const int n = t.n;
    const auto R = roots_of(gbar(t.family), n);
    const auto kd = kac_data(t);
    std::vector<int> mu(lambda.size());
    for (size_t i = 0; i < mu.size(); ++i)
        mu[i] = (i == 0 ? L : 0) - lambda[i];
    // x_a = eps_a <mu, alpha_a^vee>: coordinates of iota(mu) on Lambda~_a.
    std::vector<Frac> x(n);
    for (int a = 0; a < n; ++a)
        x[a] = Frac(2LL * dot(mu, R[a]) * kd.eps[a], dot(R[a], R[a]));
    // Solve sum_b <alpha~_b, alpha~_a^vee> c_b = x_a.
    const auto F = form_matrix2(t);
    std::vector<std::vector<Frac>> M(n, std::vector<Frac>(n + 1));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            M[a][b] = Frac(2LL * F[a][b], F[a][a]);
        M[a][n] = x[a];
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (M[p][c].num == 0)
            ++p;
        std::swap(M[p], M[c]);
        for (int r = 0; r < n; ++r) {
            if (r == c || M[r][c].num == 0)
                continue;
            Frac f = M[r][c] / M[c][c];
            for (int k = c; k <= n; ++k)
                M[r][k] = M[r][k] - f * M[c][k];
        }
    }
    std::vector<Frac> out(n);
    for (int a = 0; a < n; ++a)
        out[a] = M[a][n] / M[a][a];
    return out;
}

std::vector<std::vector<int>> dominant_weights(AffineType t, int L) {
    std::vector<std::vector<int>> out;
    const int dim = weight_dim(t);
    std::vector<int> cur(dim);
    // Weakly decreasing sequences in [-L, L] (type A: partitions of L).
    auto rec = [&](auto &&self, int pos, int hi) -> void {
        if (pos == dim) {
            if (t.family == Family::A1) {
                int s = 0;
                for (int v : cur)
                    s += v;
                if (s != L)
                    return;
            }
            if (is_dominant(t, cur))
                out.push_back(cur);
            return;
        }
        int lo = t.family == Family::A1 ? 0 : -L;
        for (int v = hi; v >= lo; --v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, L);
    return out;
}

} // namespace rcbij

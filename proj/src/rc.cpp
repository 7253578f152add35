#include "rcbij/rc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace rcbij {

void RiggedConfig::normalize() {
    for (auto &s : nu)
        std::sort(s.begin(), s.end(), std::greater<>());
}

bool RiggedConfig::empty() const {
    for (auto &s : nu)
        if (!s.empty())
            return false;
    return true;
}

Configuration shape(const RiggedConfig &rc) {
    Configuration c(rc.nu.size());
    for (size_t a = 0; a < rc.nu.size(); ++a) {
        for (auto &s : rc.nu[a])
            c[a].push_back(s.len2);
        std::sort(c[a].begin(), c[a].end(), std::greater<>());
    }
    return c;
}

namespace {

std::string half(int v2) {
    if (v2 % 2 == 0)
        return std::to_string(v2 / 2);
    return std::to_string(v2) + "/2";
}

} // namespace

std::string to_string(const RiggedConfig &rc) {
    std::ostringstream out;
    for (size_t a = 0; a < rc.nu.size(); ++a) {
        if (a)
            out << " | ";
        out << a + 1 << ":";
        for (auto &s : rc.nu[a])
            out << " " << half(s.len2) << "[" << half(s.rig2) << "]";
    }
    return out.str();
}

RcSpace::RcSpace(AffineType t, int L) : type_(t), L_(L), kac_(kac_data(t)), form2_(form_matrix2(t)) {
    if (L < 0)
        throw std::invalid_argument("negative path length");
}

bool RcSpace::half_odd(int a, int len2) const {
    return type_.family == Family::A2dag && a == n() && len2 % 4 == 2;
}

int RcSpace::Q2(const Configuration &nu, int b, int i2) const {
    if (b < 1 || b > n())
        return 0;
    int s = 0;
    for (int x : nu[b - 1])
        s += std::min(x, i2);
    return s;
}

int RcSpace::P2(const Configuration &nu, int a, int i2) const {
    if (a < 1 || a > n() || i2 < 0 || i2 % step2(a) != 0)
        throw std::invalid_argument("vacancy index off the lattice of node " + std::to_string(a));
    if (i2 == 0)
        return 0;
    const int N = n();
    auto Q = [&](int b) { return Q2(nu, b, i2); };
    const int Lterm = a == 1 ? 2 * L_ : 0;
    const int generic = Q(a - 1) - 2 * Q(a) + Q(a + 1) + Lterm;
    switch (type_.family) {
    case Family::A1:
        return generic;
    case Family::D1:
        if (a == N - 2)
            return generic + Q(N);
        if (a == N - 1)
            return Q(N - 2) - 2 * Q(N - 1) + Lterm;
        if (a == N)
            return Q(N - 2) - 2 * Q(N) + Lterm;
        return generic;
    case Family::B1:
        if (a == N - 1)
            return Q(N - 2) - 2 * Q(N - 1) + 2 * Q(N) + Lterm;
        if (a == N)
            return 2 * Q(N - 1) - 4 * Q(N) + Lterm;
        return generic;
    case Family::C1:
    case Family::A2:
    case Family::A2dag:
        if (a == N)
            return Q(N - 1) - Q(N) + Lterm;
        return generic;
    case Family::A2odd:
        if (a == N - 1)
            return Q(N - 2) - 2 * Q(N - 1) + 2 * Q(N) + Lterm;
        if (a == N)
            return Q(N - 1) - 2 * Q(N) + Lterm;
        return generic;
    case Family::D2:
        if (a == N)
            return 2 * Q(N - 1) - 2 * Q(N) + Lterm;
        return generic;
    }
    return generic;
}

// For A_{2n}^(2)dag the quadratic part is divided by a_0^vee = 2; without
// that factor the general expression is twice the closed formula.
int RcSpace::P2_general(const Configuration &nu, int a, int i2) const {
    if (i2 % step2(a) != 0)
        throw std::invalid_argument("vacancy index off the lattice");
    const long j = i2 / step2(a);
    const int s = kac_.a_vee[0];
    long N = 0;
    for (int b = 1; b <= n(); ++b) {
        for (int len2 : nu[b - 1]) {
            const long k = len2 / step2(b);
            N += (long)form2_[a - 1][b - 1] * std::min(kac_.t2[b] * j, kac_.t2[a] * k);
        }
    }
    const long den = (long)kac_.t_vee2[a] * s;
    if (N % den != 0)
        throw std::logic_error("general vacancy number is not a half-integer");
    return (a == 1 && j > 0 ? 2 * L_ : 0) - (int)(N / den);
}

std::optional<std::vector<int>> RcSpace::sizes2(const std::vector<int> &lambda) const {
    const int N = n();
    if ((int)lambda.size() != weight_dim(type_))
        throw TypeError("weight has wrong length");
    std::vector<int> S(lambda.size() + 1, 0);
    for (size_t b = 0; b < lambda.size(); ++b)
        S[b + 1] = S[b] + lambda[b];
    std::vector<int> out(N);
    for (int a = 1; a <= N; ++a)
        out[a - 1] = 2 * (L_ - S[a]);
    switch (type_.family) {
    case Family::A1:
        if (S[N + 1] != L_)
            return std::nullopt;
        break;
    case Family::B1:
    case Family::A2odd:
        out[N - 1] = L_ - S[N];
        break;
    case Family::D1:
        out[N - 2] = L_ - S[N - 1] + lambda[N - 1];
        out[N - 1] = L_ - S[N];
        break;
    default:
        break;
    }
    for (int a = 1; a <= N; ++a)
        if (out[a - 1] < 0 || out[a - 1] % step2(a) != 0)
            return std::nullopt;
    return out;
}

bool RcSpace::admissible(const Configuration &nu) const {
    int longest = 0;
    for (auto &p : nu)
        for (int x : p)
            longest = std::max(longest, x);
    for (int a = 1; a <= n(); ++a) {
        const int st = step2(a);
        for (int i2 = st; i2 <= longest + 2 * st; i2 += st)
            if (P2(nu, a, i2) < 0)
                return false;
    }
    return admissible_at_strings(nu);
}

bool RcSpace::admissible_at_strings(const Configuration &nu) const {
    for (int a = 1; a <= n(); ++a)
        for (int x : nu[a - 1]) {
            const int p = P2(nu, a, x);
            if (p < 0 || (half_odd(a, x) && p < 2))
                return false;
        }
    return true;
}

bool RcSpace::is_valid(const RiggedConfig &rc) const {
    if ((int)rc.nu.size() != n())
        return false;
    const auto nu = shape(rc);
    for (int a = 1; a <= n(); ++a)
        for (int x : nu[a - 1])
            if (x <= 0 || x % step2(a) != 0)
                return false;
    if (!admissible(nu))
        return false;
    for (int a = 1; a <= n(); ++a)
        for (auto &s : rc.nu[a - 1]) {
            const int p = P2(nu, a, s.len2);
            const bool odd = half_odd(a, s.len2);
            if (s.rig2 % 2 != (odd ? 1 : 0))
                return false;
            if (odd ? (s.rig2 < 1 || s.rig2 > p - 1) : (s.rig2 < 0 || s.rig2 > p))
                return false;
        }
    return true;
}

int RcSpace::cc2(const Configuration &nu) const {
    // sum_{a,b} (2 form) * min(2 t_b j, 2 t_a k) over pairs of strings = 8 a_0^vee cc
    long N = 0;
    for (int a = 1; a <= n(); ++a)
        for (int x : nu[a - 1]) {
            const long j = x / step2(a);
            for (int b = 1; b <= n(); ++b)
                for (int y : nu[b - 1]) {
                    const long k = y / step2(b);
                    N += (long)form2_[a - 1][b - 1] * std::min(kac_.t2[b] * j, kac_.t2[a] * k);
                }
        }
    const long den = 4L * kac_.a_vee[0];
    if (N % den != 0)
        throw std::logic_error("cc is not a half-integer");
    return (int)(N / den);
}

int RcSpace::cc_total2(const RiggedConfig &rc) const {
    long s = cc2(shape(rc));
    for (int a = 1; a <= n(); ++a)
        for (auto &str : rc.nu[a - 1])
            s += (long)kac_.t_vee2[a] * str.rig2 / 2;
    return (int)s;
}

RiggedConfig RcSpace::complement(const RiggedConfig &rc) const {
    const auto nu = shape(rc);
    RiggedConfig out = rc;
    for (int a = 1; a <= n(); ++a)
        for (auto &s : out.nu[a - 1])
            s.rig2 = P2(nu, a, s.len2) - s.rig2;
    out.normalize();
    return out;
}

namespace {

// Partitions of area2 into parts that are positive multiples of step2.
void partitions(int area2, int step2, int max_part, std::vector<int> &cur,
                std::vector<std::vector<int>> &out) {
    if (area2 == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(area2, max_part) / step2 * step2; p >= step2; p -= step2) {
        cur.push_back(p);
        partitions(area2 - p, step2, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Configuration> RcSpace::configurations(const std::vector<int> &lambda, bool admissible_only) const {
    if (!is_dominant(type_, lambda))
        throw TypeError("weight is not dominant");
    std::vector<Configuration> out;
    const auto sz = sizes2(lambda);
    if (!sz)
        return out;
    std::vector<std::vector<std::vector<int>>> per(n());
    for (int a = 1; a <= n(); ++a) {
        std::vector<int> cur;
        partitions((*sz)[a - 1], step2(a), (*sz)[a - 1], cur, per[a - 1]);
    }
    Configuration c(n());
    std::function<void(int)> rec = [&](int a) {
        if (a > n()) {
            if (!admissible_only || admissible(c))
                out.push_back(c);
            return;
        }
        for (auto &p : per[a - 1]) {
            c[a - 1] = p;
            rec(a + 1);
        }
    };
    rec(1);
    return out;
}

std::vector<RiggedConfig> RcSpace::enumerate(const std::vector<int> &lambda) const {
    std::vector<RiggedConfig> out;
    for (const auto &nu : configurations(lambda)) {
        // One block per (node, length): m strings, rigging values allowed.
        struct Block {
            int a, len2, m;
            std::vector<int> values; // ascending doubled riggings
        };
        std::vector<Block> blocks;
        for (int a = 1; a <= n(); ++a) {
            const auto &p = nu[a - 1];
            for (size_t i = 0; i < p.size();) {
                size_t j = i;
                while (j < p.size() && p[j] == p[i])
                    ++j;
                Block b{a, p[i], (int)(j - i), {}};
                const int P = P2(nu, a, p[i]);
                if (half_odd(a, p[i]))
                    for (int v = 1; v <= P - 1; v += 2)
                        b.values.push_back(v);
                else
                    for (int v = 0; v <= P; v += 2)
                        b.values.push_back(v);
                blocks.push_back(std::move(b));
                i = j;
            }
        }
        RiggedConfig rc(n());
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == blocks.size()) {
                RiggedConfig r = rc;
                r.normalize();
                out.push_back(std::move(r));
                return;
            }
            const auto &b = blocks[k];
            auto &row = rc.nu[b.a - 1];
            // weakly decreasing rigging sequences of length m
            std::function<void(int, int)> fill = [&](int left, int hi) {
                if (left == 0) {
                    rec(k + 1);
                    return;
                }
                for (int idx = hi; idx >= 0; --idx) {
                    row.push_back({b.len2, b.values[idx]});
                    fill(left - 1, idx);
                    row.pop_back();
                }
            };
            fill(b.m, (int)b.values.size() - 1);
        };
        rec(0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

QPoly RcSpace::fermionic_m(const std::vector<int> &lambda) const {
    if (type_.family == Family::A2dag)
        return rc_genfun(lambda);
    QPoly total;
    for (const auto &nu : configurations(lambda)) {
        QPoly term = QPoly::monomial(cc2(nu));
        for (int a = 1; a <= n(); ++a) {
            const auto &p = nu[a - 1];
            for (size_t i = 0; i < p.size();) {
                size_t j = i;
                while (j < p.size() && p[j] == p[i])
                    ++j;
                term = term * qbinom(P2(nu, a, p[i]) / 2, (int)(j - i), kac_.t_vee(a));
                i = j;
            }
        }
        total += term;
    }
    return total;
}

QPoly RcSpace::rc_genfun(const std::vector<int> &lambda) const {
    QPoly total;
    for (const auto &rc : enumerate(lambda))
        total.add_term(cc_total2(rc), 1);
    return total;
}

} // namespace rcbij

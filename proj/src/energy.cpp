#include "rcbij/energy.hpp"

#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace rcbij {

namespace {

// Side on which e_i acts on b (x) b2: 0 = left, 1 = right, -1 = undefined.
int e_side(const Crystal &C, int i, Letter b, Letter b2) {
    if (C.eps(i, b) > C.phi(i, b2))
        return 0;
    return C.eps(i, b2) > 0 ? 1 : -1;
}

// Increment of H along e_0. With the tensor rule used here (e acts on the
// left factor when eps(b) > phi(b2)) the sign that makes Hbar = -H
// nonnegative is +1 for an action on the right factor.
int zero_step(int side) { return side == 0 ? -1 : 1; }

} // namespace

LocalEnergy::LocalEnergy(const Crystal &C) : C_(C) {
    const int N = C_.size();
    const auto &B = C_.letters();
    std::vector<std::vector<std::optional<int>>> h(N, std::vector<std::optional<int>>(N));
    const int one = C_.index(Letter::K(1));
    h[one][one] = 0;
    std::deque<std::pair<int, int>> queue{{one, one}};
    auto assign = [&](int x, int y, int v) {
        if (!h[x][y]) {
            h[x][y] = v;
            queue.emplace_back(x, y);
        } else if (*h[x][y] != v) {
            throw std::logic_error("local energy propagation conflict at " + to_string(B[x]) + " (x) " +
                                   to_string(B[y]));
        }
    };
    while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        const int hv = *h[x][y];
        for (int i = 0; i <= C_.n(); ++i) {
            // forward: e_i(b (x) b2)
            int side = e_side(C_, i, B[x], B[y]);
            if (side >= 0) {
                int d = i == 0 ? zero_step(side) : 0;
                if (side == 0)
                    assign(C_.index(*C_.e(i, B[x])), y, hv + d);
                else
                    assign(x, C_.index(*C_.e(i, B[y])), hv + d);
            }
            // backward: z with e_i(z) = b (x) b2, i.e. z = f_i(b (x) b2)
            auto z = C_.tensor_f(i, {B[x], B[y]});
            if (z) {
                int zx = C_.index((*z)[0]), zy = C_.index((*z)[1]);
                int s2 = e_side(C_, i, (*z)[0], (*z)[1]);
                int d = i == 0 ? zero_step(s2) : 0;
                assign(zx, zy, hv - d);
            }
        }
    }
    h_.assign(N, std::vector<int>(N));
    for (int x = 0; x < N; ++x)
        for (int y = 0; y < N; ++y) {
            if (!h[x][y])
                throw std::logic_error("B (x) B is not connected; arrow table is broken");
            h_[x][y] = *h[x][y];
        }

    std::vector<Letter> nat;
    for (Letter b : B) {
        bool ok = C_.phi(0, b) == 1;
        for (int i = 1; i <= C_.n() && ok; ++i)
            ok = C_.phi(i, b) == 0;
        if (ok)
            nat.push_back(b);
    }
    if (nat.size() != 1)
        throw std::logic_error("b_natural is not unique");
    natural_ = nat[0];
}

int LocalEnergy::E(const Path &p) const {
    const int L = (int)p.size();
    if (L == 0)
        return 0;
    // p[L-j] is b_j
    int e = L * H(p[L - 1], natural_);
    for (int j = 1; j <= L - 1; ++j)
        e += (L - j) * H(p[L - j - 1], p[L - j]);
    return e;
}

int LocalEnergy::D(const Path &p) const { return E(p) - E(Path(p.size(), Letter::K(1))); }

std::string LocalEnergy::dump_tsv() const {
    std::ostringstream os;
    os << "b\tb'\tH\tHbar\n";
    for (Letter b : C_.letters())
        for (Letter b2 : C_.letters())
            os << to_string(b) << '\t' << to_string(b2) << '\t' << H(b, b2) << '\t' << Hbar(b, b2) << '\n';
    return os.str();
}

QPoly one_dim_sum(const LocalEnergy &H, const std::vector<int> &lambda, int L) {
    QPoly x;
    for (const Path &p : H.crystal().enumerate_highest(lambda, L))
        x.add_term(2 * H.D(p), 1);
    return x;
}

} // namespace rcbij

#include "rcbij/qpoly.hpp"

#include <stdexcept>

namespace rcbij {

QPoly QPoly::constant(Coeff c) { return monomial(0, c); }

QPoly QPoly::monomial(int e2, Coeff c) {
    QPoly p;
    p.add_term(e2, c);
    return p;
}

QPoly::Coeff QPoly::coeff2(int e2) const {
    auto it = terms_.find(e2);
    return it == terms_.end() ? 0 : it->second;
}

QPoly::Coeff QPoly::at_one() const {
    Coeff s = 0;
    for (auto &[e, c] : terms_)
        s += c;
    return s;
}

void QPoly::add_term(int e2, Coeff c) {
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(e2, c);
    if (!fresh && (it->second += c) == 0)
        terms_.erase(it);
}

QPoly &QPoly::operator+=(const QPoly &o) {
    for (auto &[e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

QPoly &QPoly::operator-=(const QPoly &o) {
    for (auto &[e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

QPoly QPoly::operator+(const QPoly &o) const {
    QPoly r = *this;
    return r += o;
}

QPoly QPoly::operator-(const QPoly &o) const {
    QPoly r = *this;
    return r -= o;
}

QPoly QPoly::operator*(const QPoly &o) const {
    QPoly r;
    for (auto &[e1, c1] : terms_)
        for (auto &[e2, c2] : o.terms_)
            r.add_term(e1 + e2, c1 * c2);
    return r;
}

QPoly QPoly::invert_q() const {
    QPoly r;
    for (auto &[e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

std::string QPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto &[e, c] : terms_) {
        Coeff mag = c < 0 ? -c : c;
        if (out.empty())
            out = c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string qpart;
        if (e != 0) {
            std::string ex = e % 2 == 0 ? std::to_string(e / 2) : std::to_string(e) + "/2";
            if (e == 2)
                qpart = "q";
            else if (e % 2 == 0 && e > 0)
                qpart = "q^" + ex;
            else
                qpart = "q^(" + ex + ")";
        }
        if (qpart.empty())
            out += std::to_string(mag);
        else if (mag == 1)
            out += qpart;
        else
            out += std::to_string(mag) + "*" + qpart;
    }
    return out;
}

std::vector<std::pair<int, QPoly::Coeff>> QPoly::to_pairs() const {
    return {terms_.begin(), terms_.end()};
}

QPoly QPoly::from_pairs(const std::vector<std::pair<int, Coeff>> &pairs) {
    QPoly p;
    for (auto &[e, c] : pairs)
        p.add_term(e, c);
    return p;
}

QPoly qbinom(int p, int m, int t) {
    if (p < 0 || m < 0 || t <= 0)
        throw std::invalid_argument("qbinom: need p, m >= 0 and t > 0");
    // Pascal recursion [k choose j] = [k-1 choose j-1] + x^j [k-1 choose j]
    // with x = q^t, on plain coefficient vectors.
    const int k = p + m;
    const int j = std::min(p, m);
    std::vector<std::vector<QPoly::Coeff>> row(j + 1);
    row[0] = {1};
    for (int kk = 1; kk <= k; ++kk) {
        for (int jj = std::min(kk, j); jj >= 1; --jj) {
            auto &cur = row[jj];
            const auto &prev = row[jj - 1];
            std::vector<QPoly::Coeff> next(std::max(prev.size(), cur.size() + jj), 0);
            for (size_t i = 0; i < prev.size(); ++i)
                next[i] += prev[i];
            for (size_t i = 0; i < cur.size(); ++i)
                next[i + jj] += cur[i];
            cur = std::move(next);
        }
    }
    QPoly out;
    for (size_t i = 0; i < row[j].size(); ++i)
        out.add_term(2 * t * (int)i, row[j][i]);
    return out;
}

} // namespace rcbij

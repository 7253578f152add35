#include "rcbij/crystal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rcbij {

std::string to_string(Letter b) {
    if (b.is_empty())
        return "E";
    return std::to_string(b.v);
}

Letter parse_letter(const std::string &s) {
    if (s == "E")
        return Letter::Empty();
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != s.size() || s.empty())
        throw std::invalid_argument("bad letter '" + s + "'");
    return Letter{v};
}

std::string to_string(const Path &p) {
    std::string out;
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (j)
            out += " ";
        out += to_string(p[j]);
    }
    return out;
}

Crystal::Crystal(AffineType t) : type_(t) {
    const int n = t.n;
    const Family F = t.family;
    if (F == Family::A1) {
        for (int k = 1; k <= n + 1; ++k)
            letters_.push_back(Letter::K(k));
    } else {
        for (int k = 1; k <= n; ++k)
            letters_.push_back(Letter::K(k));
        const bool zero = F == Family::B1 || F == Family::A2dag || F == Family::D2;
        if (zero)
            letters_.push_back(Letter::Zero());
        for (int k = n; k >= 1; --k)
            letters_.push_back(Letter::Kbar(k));
        if (F == Family::A2 || F == Family::D2)
            letters_.push_back(Letter::Empty());
    }
    f_.assign(n + 1, std::vector<int>(letters_.size(), -1));
    e_ = f_;

    if (F == Family::A1) {
        for (int i = 1; i <= n; ++i)
            arrow(i, Letter::K(i), Letter::K(i + 1));
        arrow(0, Letter::K(n + 1), Letter::K(1));
        return;
    }

    // Common part of the classical chain 1 -> ... -> n and nbar -> ... -> 1bar.
    const int top = F == Family::D1 ? n - 1 : n;
    for (int i = 1; i < top; ++i) {
        arrow(i, Letter::K(i), Letter::K(i + 1));
        arrow(i, Letter::Kbar(i + 1), Letter::Kbar(i));
    }
    switch (F) {
    case Family::B1:
    case Family::A2dag:
    case Family::D2:
        arrow(n, Letter::K(n), Letter::Zero());
        arrow(n, Letter::Zero(), Letter::Kbar(n));
        break;
    case Family::C1:
    case Family::A2:
    case Family::A2odd:
        arrow(n, Letter::K(n), Letter::Kbar(n));
        break;
    case Family::D1:
        // fork at n-1
        arrow(n - 1, Letter::K(n - 1), Letter::K(n));
        arrow(n - 1, Letter::Kbar(n), Letter::Kbar(n - 1));
        arrow(n, Letter::K(n - 1), Letter::Kbar(n));
        arrow(n, Letter::K(n), Letter::Kbar(n - 1));
        break;
    case Family::A1:
        break;
    }

    // 0-arrows
    switch (F) {
    case Family::B1:
    case Family::D1:
    case Family::A2odd:
        arrow(0, Letter::Kbar(1), Letter::K(2));
        arrow(0, Letter::Kbar(2), Letter::K(1));
        break;
    case Family::C1:
    case Family::A2dag:
        arrow(0, Letter::Kbar(1), Letter::K(1));
        break;
    case Family::A2:
    case Family::D2:
        arrow(0, Letter::Kbar(1), Letter::Empty());
        arrow(0, Letter::Empty(), Letter::K(1));
        break;
    case Family::A1:
        break;
    }
}

void Crystal::arrow(int i, Letter from, Letter to) {
    int a = index(from), b = index(to);
    if (f_[i][a] != -1 || e_[i][b] != -1)
        throw std::logic_error("crystal arrow table is not a partial bijection");
    f_[i][a] = b;
    e_[i][b] = a;
}

int Crystal::index(Letter b) const {
    auto it = std::find(letters_.begin(), letters_.end(), b);
    if (it == letters_.end())
        throw std::invalid_argument("letter " + to_string(b) + " not in crystal of " + kac_name(type_));
    return (int)(it - letters_.begin());
}

bool Crystal::contains(Letter b) const { return std::find(letters_.begin(), letters_.end(), b) != letters_.end(); }

std::optional<Letter> Crystal::f(int i, Letter b) const {
    if (i < 0 || i > n())
        throw std::out_of_range("node index out of range");
    int j = f_[i][index(b)];
    if (j < 0)
        return std::nullopt;
    return letters_[j];
}

std::optional<Letter> Crystal::e(int i, Letter b) const {
    if (i < 0 || i > n())
        throw std::out_of_range("node index out of range");
    int j = e_[i][index(b)];
    if (j < 0)
        return std::nullopt;
    return letters_[j];
}

int Crystal::eps(int i, Letter b) const {
    int k = 0;
    for (int j = index(b); (j = e_[i][j]) >= 0;)
        ++k;
    return k;
}

int Crystal::phi(int i, Letter b) const {
    int k = 0;
    for (int j = index(b); (j = f_[i][j]) >= 0;)
        ++k;
    return k;
}

std::vector<int> Crystal::wt(Letter b) const {
    std::vector<int> w(weight_dim(type_), 0);
    if (b.is_unbarred())
        w[b.v - 1] = 1;
    else if (b.is_barred())
        w[-b.v - 1] = -1;
    return w;
}

std::vector<int> Crystal::wt(const Path &p) const {
    std::vector<int> w(weight_dim(type_), 0);
    for (Letter b : p) {
        auto x = wt(b);
        for (std::size_t k = 0; k < w.size(); ++k)
            w[k] += x[k];
    }
    return w;
}

namespace {

// phi of every suffix p[j..], with phi(empty) = 0.
std::vector<int> suffix_phi(const Crystal &C, int i, const Path &p) {
    std::vector<int> s(p.size() + 1, 0);
    for (int j = (int)p.size() - 1; j >= 0; --j)
        s[j] = C.phi(i, p[j]) + std::max(0, s[j + 1] - C.eps(i, p[j]));
    return s;
}

} // namespace

int Crystal::tensor_phi(int i, const Path &p) const { return suffix_phi(*this, i, p)[0]; }

int Crystal::tensor_eps(int i, const Path &p) const {
    // eps(b (x) R) = eps(R) + max(0, eps(b) - phi(R))
    auto sp = suffix_phi(*this, i, p);
    int s = 0;
    for (int j = (int)p.size() - 1; j >= 0; --j)
        s += std::max(0, eps(i, p[j]) - sp[j + 1]);
    return s;
}

std::optional<Path> Crystal::tensor_e(int i, const Path &p) const {
    auto sp = suffix_phi(*this, i, p);
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (eps(i, p[j]) > sp[j + 1]) {
            Path q = p;
            q[j] = *e(i, p[j]);
            return q;
        }
    }
    return std::nullopt;
}

std::optional<Path> Crystal::tensor_f(int i, const Path &p) const {
    // f(b (x) R) = f(b) (x) R if eps(b) >= phi(R), else b (x) f(R)
    auto sp = suffix_phi(*this, i, p);
    for (std::size_t j = 0; j < p.size(); ++j) {
        if (eps(i, p[j]) >= sp[j + 1]) {
            auto x = f(i, p[j]);
            if (!x)
                return std::nullopt;
            Path q = p;
            q[j] = *x;
            return q;
        }
    }
    return std::nullopt;
}

bool Crystal::is_classically_highest(const Path &p) const {
    for (int i = 1; i <= n(); ++i)
        if (tensor_e(i, p))
            return false;
    return true;
}

std::vector<Path> Crystal::enumerate_highest(const std::vector<int> &lambda, int L) const {
    if (!is_dominant(type_, lambda))
        throw TypeError("weight is not dominant");
    std::map<std::pair<std::vector<int>, int>, std::vector<Path>> memo;
    auto rec = [&](auto &&self, const std::vector<int> &lam, int len) -> const std::vector<Path> & {
        auto key = std::make_pair(lam, len);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        std::vector<Path> out;
        if (len == 0) {
            if (std::all_of(lam.begin(), lam.end(), [](int v) { return v == 0; }))
                out.push_back({});
        } else {
            for (Letter b : letters_) {
                auto w = wt(b);
                std::vector<int> rho(lam.size());
                for (std::size_t k = 0; k < rho.size(); ++k)
                    rho[k] = lam[k] - w[k];
                if (!is_dominant(type_, rho))
                    continue;
                if (b.is_zero() && lam[n() - 1] <= 0)
                    continue;
                for (const Path &rest : self(self, rho, len - 1)) {
                    Path p;
                    p.reserve(len);
                    p.push_back(b);
                    p.insert(p.end(), rest.begin(), rest.end());
                    out.push_back(std::move(p));
                }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };
    return rec(rec, lambda, L);
}

std::string Crystal::to_dot() const {
    std::ostringstream os;
    os << "digraph \"B11 " << kac_name(type_) << "\" {\n";
    for (Letter b : letters_)
        os << "  \"" << to_string(b) << "\";\n";
    for (int i = 0; i <= n(); ++i)
        for (std::size_t j = 0; j < letters_.size(); ++j)
            if (f_[i][j] >= 0)
                os << "  \"" << to_string(letters_[j]) << "\" -> \"" << to_string(letters_[f_[i][j]])
                   << "\" [label=\"" << i << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace rcbij

/** The crystal B^{1,1}, tensor powers, and classically highest paths. */

#pragma once

#include "rcbij/cartan.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rcbij {

/// A letter of B^{1,1}: k (k > 0), kbar (stored as -k), 0, or the empty letter phi.
struct Letter {
    int v = 1;

    static constexpr int kEmptyCode = 1000;
    static Letter K(int k) { return {k}; }
    static Letter Kbar(int k) { return {-k}; }
    static Letter Zero() { return {0}; }
    static Letter Empty() { return {kEmptyCode}; }

    bool is_empty() const { return v == kEmptyCode; }
    bool is_zero() const { return v == 0; }
    bool is_unbarred() const { return v > 0 && v != kEmptyCode; }
    bool is_barred() const { return v < 0; }

    auto operator<=>(const Letter &) const = default;
};

/** "1", "-1", "0", "E". */
std::string to_string(Letter b);
Letter parse_letter(const std::string &s);

/// Leftmost factor b_L first; the last entry is b_1.
using Path = std::vector<Letter>;

std::string to_string(const Path &p);

class Crystal {
  public:
    explicit Crystal(AffineType t);

    AffineType type() const { return type_; }
    int n() const { return type_.n; }
    /** Letters in chain order. */
    const std::vector<Letter> &letters() const { return letters_; }
    int size() const { return (int)letters_.size(); }
    int index(Letter b) const;
    bool contains(Letter b) const;

    std::optional<Letter> f(int i, Letter b) const;
    std::optional<Letter> e(int i, Letter b) const;
    int eps(int i, Letter b) const;
    int phi(int i, Letter b) const;
    std::vector<int> wt(Letter b) const;
    std::vector<int> wt(const Path &p) const;

    /** Two-factor rule extended to words by right-nested bracketing. */
    std::optional<Path> tensor_e(int i, const Path &p) const;
    std::optional<Path> tensor_f(int i, const Path &p) const;
    int tensor_eps(int i, const Path &p) const;
    int tensor_phi(int i, const Path &p) const;

    bool is_classically_highest(const Path &p) const;

    /** P(lambda, B^{tensor L}) in lexicographic order of letter indices. */
    std::vector<Path> enumerate_highest(const std::vector<int> &lambda, int L) const;

    /** Graphviz export of the arrow table. */
    std::string to_dot() const;

  private:
    void arrow(int i, Letter from, Letter to);

    AffineType type_;
    std::vector<Letter> letters_;
    std::vector<std::vector<int>> f_, e_; // [i][index] -> index or -1
};

} // namespace rcbij

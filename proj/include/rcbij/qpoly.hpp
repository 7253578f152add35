/** Polynomials in q with half-integer exponents and integer coefficients. */

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rcbij {

class QPoly {
  public:
    using Coeff = std::int64_t;

    QPoly() = default;
    /** The constant c. */
    static QPoly constant(Coeff c);
    /** c * q^(e2/2). */
    static QPoly monomial(int e2, Coeff c = 1);

    const std::map<int, Coeff> &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Coeff coeff2(int e2) const;
    /** Value at q = 1. */
    Coeff at_one() const;

    QPoly &operator+=(const QPoly &o);
    QPoly &operator-=(const QPoly &o);
    QPoly operator+(const QPoly &o) const;
    QPoly operator-(const QPoly &o) const;
    QPoly operator*(const QPoly &o) const;
    bool operator==(const QPoly &o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly &o) const { return !(*this == o); }

    /** Adds c * q^(e2/2) in place. */
    void add_term(int e2, Coeff c);

    /** Substitutes q -> q^{-1}. */
    QPoly invert_q() const;

    /** e.g. "1 + 2*q + q^2", "q^(1/2)", "0". */
    std::string to_string() const;
    /** Sorted [doubled_exponent, coeff] pairs. */
    std::vector<std::pair<int, Coeff>> to_pairs() const;
    static QPoly from_pairs(const std::vector<std::pair<int, Coeff>> &pairs);

  private:
    std::map<int, Coeff> terms_;
};

/** Gaussian binomial [p+m choose m] evaluated at q^t. */
QPoly qbinom(int p, int m, int t);

} // namespace rcbij

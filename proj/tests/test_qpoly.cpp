#include "rcbij/qpoly.hpp"

#include <doctest.h>

#include <random>

using namespace rcbij;

namespace {

// [p+m choose m]_{q^t} by the q-Pascal rule, independent of qbinom.
QPoly pascal(int p, int m, int t) {
    if (m == 0 || p == 0) return QPoly::constant(1);
    // [N, m] = [N-1, m-1] + q^{t m} [N-1, m] with N = p + m
    return pascal(p, m - 1, t) + QPoly::monomial(2 * t * m) * pascal(p - 1, m, t);
}

QPoly random_poly(std::mt19937 &rng) {
    std::uniform_int_distribution<int> e(-6, 12), c(-3, 3), k(0, 4);
    QPoly p;
    for (int j = k(rng); j > 0; --j) p.add_term(e(rng), c(rng));
    return p;
}

} // namespace

TEST_CASE("pinned q-binomial") {
    // 1 + q^2 + 2 q^4 + q^6 + q^8
    QPoly want;
    for (auto [e, c] : std::vector<std::pair<int, int>>{{0, 1}, {4, 1}, {8, 2}, {12, 1}, {16, 1}}) want.add_term(e, c);
    CHECK(qbinom(2, 2, 2) == want);
    CHECK(qbinom(2, 2, 2).to_string() == "1 + q^2 + 2*q^4 + q^6 + q^8");
}

TEST_CASE("q-binomials: Pascal, symmetry, palindromic, value at 1") {
    for (int t = 1; t <= 2; ++t)
        for (int p = 0; p <= 7; ++p)
            for (int m = 0; m <= 7; ++m) {
                CAPTURE(p);
                CAPTURE(m);
                const auto b = qbinom(p, m, t);
                CHECK(b == pascal(p, m, t));
                CHECK(b == qbinom(m, p, t));
                // palindromic of degree t p m
                CHECK(b.invert_q() * QPoly::monomial(2 * t * p * m) == b);
                long long binom = 1;
                for (int j = 1; j <= m; ++j) binom = binom * (p + j) / j;
                CHECK(b.at_one() == binom);
            }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20261018);
    for (int trial = 0; trial < 2000; ++trial) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a.invert_q().invert_q() == a);
        CHECK((a * b).invert_q() == a.invert_q() * b.invert_q());
        CHECK(QPoly::from_pairs(a.to_pairs()) == a);
    }
}

TEST_CASE("canonical strings") {
    CHECK(QPoly().to_string() == "0");
    CHECK(QPoly::constant(1).to_string() == "1");
    CHECK(QPoly::monomial(1).to_string() == "q^(1/2)");
    QPoly p = QPoly::constant(1) + QPoly::monomial(2, 2) + QPoly::monomial(4);
    CHECK(p.to_string() == "1 + 2*q + q^2");
    CHECK(QPoly::monomial(-3, -1).to_string() == "-q^(-3/2)");
    CHECK(p.coeff2(2) == 2);
    CHECK(p.coeff2(3) == 0);
}

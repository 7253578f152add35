#include "rcbij/io.hpp"

#include <doctest.h>

using namespace rcbij;

TEST_CASE("rigged configuration documents round trip") {
    const AffineType t{Family::C1, 2};
    RcSpace S(t, 3);
    for (const auto &lam : dominant_weights(t, 3))
        for (const auto &rc : S.enumerate(lam)) {
            const json j = to_json(RcDocument{t, 3, lam, rc});
            const auto d = rc_document(json::parse(j.dump()));
            CHECK(d.type.family == t.family);
            CHECK(d.type.n == 2);
            CHECK(d.L == 3);
            CHECK(d.lambda == lam);
            CHECK(d.rc == rc);
        }
}

TEST_CASE("rigged configuration document layout") {
    const auto d = rc_document(json::parse(
        R"({"type":"C1","n":2,"L":3,"lambda":[1,0],"nu":[{"a":1,"strings":[{"len2":2,"rig2":0}]}]})"));
    CHECK(d.rc.nu[0] == std::vector<RcString>{{2, 0}});
    CHECK(d.rc.nu[1].empty());
    CHECK_THROWS_AS(rc_document(json::parse(R"({"type":"C1","n":2,"L":3,"lambda":[1],"nu":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        rc_document(json::parse(R"({"type":"C1","n":2,"L":3,"lambda":[1,0],"nu":[{"a":3,"strings":[]}]})")),
        std::invalid_argument);
    CHECK_THROWS(rc_document(json::parse(R"({"type":"C1","n":2})")));
}

TEST_CASE("path documents round trip") {
    const AffineType t{Family::D2, 2};
    const Path p{Letter::K(1), Letter::Zero(), Letter::Empty(), Letter::Kbar(2)};
    const json j = to_json(PathDocument{t, p});
    CHECK(j.dump() == R"({"n":2,"path":["1","0","E","-2"],"type":"D2"})");
    CHECK(path_document(j).path == p);
    CHECK_THROWS_AS(path_document(json::parse(R"({"type":"C1","n":2,"path":["0"]})")), std::invalid_argument);
}

TEST_CASE("polynomials") {
    const QPoly p = QPoly::monomial(1) + QPoly::monomial(4, 3) - QPoly::constant(2);
    const json j = to_json(p);
    CHECK(j.dump() == "[[0,-2],[1,1],[4,3]]");
    CHECK(qpoly_from_json(j) == p);
}

TEST_CASE("weights") {
    CHECK(parse_weight("2,0,1") == std::vector<int>{2, 0, 1});
    CHECK(parse_weight("-1") == std::vector<int>{-1});
    CHECK_THROWS_AS(parse_weight(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("2,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("2,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_weight("1.5"), std::invalid_argument);
}

/** JSON forms of rigged configurations, paths and polynomials. */

#pragma once

#include "rcbij/crystal.hpp"
#include "rcbij/qpoly.hpp"
#include "rcbij/rc.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rcbij {

using json = nlohmann::json;

/// A rigged configuration together with the data that fixes its RC set.
struct RcDocument {
    AffineType type;
    int L = 0;
    std::vector<int> lambda;
    RiggedConfig rc;
};

struct PathDocument {
    AffineType type;
    Path path;
};

json to_json(const RcDocument &d);
RcDocument rc_document(const json &j, bool relax_rank = false);

json to_json(const PathDocument &d);
PathDocument path_document(const json &j, bool relax_rank = false);

/** Sorted [[doubled_exponent, coeff], ...]. */
json to_json(const QPoly &p);
QPoly qpoly_from_json(const json &j);

/** "2,0,1" -> {2, 0, 1}; throws std::invalid_argument on junk. */
std::vector<int> parse_weight(const std::string &s);

} // namespace rcbij

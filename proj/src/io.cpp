#include "rcbij/io.hpp"

#include <sstream>
#include <stdexcept>

namespace rcbij {

namespace {

AffineType read_type(const json &j, bool relax) {
    return make_type(parse_family(j.at("type").get<std::string>()), j.at("n").get<int>(), relax);
}

} // namespace

json to_json(const RcDocument &d) {
    json nu = json::array();
    for (int a = 1; a <= (int)d.rc.nu.size(); ++a) {
        json strings = json::array();
        for (const auto &s : d.rc.nu[a - 1]) strings.push_back({{"len2", s.len2}, {"rig2", s.rig2}});
        nu.push_back({{"a", a}, {"strings", strings}});
    }
    return {{"type", family_name(d.type.family)}, {"n", d.type.n}, {"L", d.L}, {"lambda", d.lambda}, {"nu", nu}};
}

RcDocument rc_document(const json &j, bool relax_rank) {
    RcDocument d;
    d.type = read_type(j, relax_rank);
    d.L = j.at("L").get<int>();
    d.lambda = j.at("lambda").get<std::vector<int>>();
    if ((int)d.lambda.size() != weight_dim(d.type))
        throw std::invalid_argument("lambda has " + std::to_string(d.lambda.size()) + " entries, expected " +
                                    std::to_string(weight_dim(d.type)));
    d.rc = RiggedConfig(d.type.n);
    for (const auto &node : j.at("nu")) {
        int a = node.at("a").get<int>();
        if (a < 1 || a > d.type.n) throw std::invalid_argument("node index " + std::to_string(a) + " out of range");
        for (const auto &s : node.at("strings"))
            d.rc.nu[a - 1].push_back({s.at("len2").get<int>(), s.at("rig2").get<int>()});
    }
    d.rc.normalize();
    return d;
}

json to_json(const PathDocument &d) {
    json p = json::array();
    for (auto b : d.path) p.push_back(to_string(b));
    return {{"type", family_name(d.type.family)}, {"n", d.type.n}, {"path", p}};
}

PathDocument path_document(const json &j, bool relax_rank) {
    PathDocument d;
    d.type = read_type(j, relax_rank);
    Crystal C(d.type);
    for (const auto &s : j.at("path")) {
        Letter b = parse_letter(s.get<std::string>());
        if (!C.contains(b)) throw std::invalid_argument("letter " + s.get<std::string>() + " not in B");
        d.path.push_back(b);
    }
    return d;
}

json to_json(const QPoly &p) {
    json out = json::array();
    for (auto [e2, c] : p.to_pairs()) out.push_back({e2, c});
    return out;
}

QPoly qpoly_from_json(const json &j) {
    std::vector<std::pair<int, QPoly::Coeff>> pairs;
    for (const auto &t : j) pairs.push_back({t.at(0).get<int>(), t.at(1).get<QPoly::Coeff>()});
    return QPoly::from_pairs(pairs);
}

std::vector<int> parse_weight(const std::string &s) {
    std::vector<int> out;
    if (!s.empty() && s.back() == ',') throw std::invalid_argument("trailing comma in weight");
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != tok.size()) throw std::invalid_argument("bad weight entry '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty weight");
    return out;
}

} // namespace rcbij

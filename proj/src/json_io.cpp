#include "nilharm/json_io.hpp"

#include <fstream>

namespace nilharm {

LieAlgebra algebra_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim")) throw ParseError("algebra JSON must be an object with 'dim'");
    int n = j.at("dim").get<int>();
    std::vector<std::string> names;
    if (j.contains("basis")) names = j.at("basis").get<std::vector<std::string>>();
    std::vector<BracketSpec> brackets;
    if (j.contains("brackets")) {
        for (const auto& b : j.at("brackets")) {
            BracketSpec spec;
            spec.i = b.at("i").get<int>();
            spec.j = b.at("j").get<int>();
            for (const auto& [key, val] : b.at("coeffs").items())
                spec.coeffs.push_back({std::stoi(key), rat_parse(val.get<std::string>())});
            brackets.push_back(std::move(spec));
        }
    }
    return build_algebra(n, std::move(names), brackets);
}

Json algebra_to_json(const LieAlgebra& g) {
    Json j;
    j["dim"] = g.n;
    j["basis"] = g.names;
    Json brackets = Json::array();
    for (const auto& [ij, v] : g.table) {
        Json b;
        b["i"] = ij.first + 1;
        b["j"] = ij.second + 1;
        Json coeffs = Json::object();
        for (int k = 0; k < g.n; ++k)
            if (v[k] != 0) coeffs[std::to_string(k + 1)] = rat_str(v[k]);
        b["coeffs"] = coeffs;
        brackets.push_back(b);
    }
    j["brackets"] = brackets;
    return j;
}

LieAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("JSON parse error in '" + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

Json group_element_to_json(const GroupElement& g) {
    Json j;
    j["t"] = rat_str(g.t);
    Json x = Json::array();
    for (const auto& c : g.x) x.push_back(rat_str(c));
    j["x"] = x;
    return j;
}

GroupElement group_element_from_json(const Json& j, int n) {
    GroupElement g;
    g.t = rat_parse(j.at("t").get<std::string>());
    for (const auto& c : j.at("x")) g.x.push_back(rat_parse(c.get<std::string>()));
    if (int(g.x.size()) != n - 1) throw ParseError("group element has wrong coordinate count");
    return g;
}

Json rat_vec_to_json(const RatVec& v) {
    Json j = Json::array();
    for (const auto& c : v) j.push_back(rat_str(c));
    return j;
}

Json int_vec_to_json(const ZVec& v) {
    Json j = Json::array();
    for (const auto& c : v) j.push_back(c.get_si());
    return j;
}

Json matrix_to_json(const RatMatrix& m) {
    Json j = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m.at(i, c)));
        j.push_back(row);
    }
    return j;
}

Json spectrum_to_json(const std::vector<SpectrumEntry>& entries) {
    Json j = Json::array();
    for (const auto& e : entries) {
        Json one;
        one["l"] = int_vec_to_json(e.l);
        one["kind"] = e.induced ? "induced" : "character";
        one["mult"] = e.mult.get_si();
        one["orbit_constant"] = int_vec_to_json(e.orbit_constant);
        j.push_back(one);
    }
    return j;
}

}  // namespace nilharm

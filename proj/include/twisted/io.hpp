#ifndef TWISTED_IO_HPP
#define TWISTED_IO_HPP

#include <json.hpp>

#include <string>

#include "twisted/betti.hpp"
#include "twisted/enumerate.hpp"
#include "twisted/theorems.hpp"

namespace twisted {

using json = nlohmann::json;

inline json to_json(const SectorDatum& y) {
    return json{{"g", y.g},         {"n", y.n}, {"g_prime", y.g_prime},
                {"order", y.order}, {"d", y.d}, {"a", y.a}};
}

inline SectorDatum datum_from_json(const json& j) {
    SectorDatum y;
    y.g = j.at("g").get<long>();
    y.n = j.at("n").get<long>();
    y.g_prime = j.at("g_prime").get<long>();
    y.order = j.at("order").get<long>();
    y.d = j.at("d").get<std::vector<long>>();
    y.a = j.at("a").get<std::vector<long>>();
    return y;
}

inline json to_json(const SectorRecord& r) {
    json j = to_json(r.datum);
    j["age"] = r.age.str();
    j["codim"] = r.codim;
    j["dim"] = r.dim;
    j["multiplicity"] = r.multiplicity.get_str();
    j["hyperelliptic"] = r.hyperelliptic;
    j["twin_key"] = r.twin_index;
    return j;
}

inline json to_json(const EnumerationResult& res) {
    json records = json::array();
    for (const auto& r : res.records) records.push_back(to_json(r));
    return json{{"g", res.g}, {"n", res.n}, {"total", res.total()}, {"records", records}};
}

inline json to_json(const AgeBreakdown& b) {
    json per_sigma = json::object();
    for (const auto& [sigma, v] : b.per_sigma) per_sigma[std::to_string(sigma)] = v.str();
    return json{{"base", b.base.str()},
                {"mark", b.mark.str()},
                {"per_sigma", per_sigma},
                {"total", b.total.str()}};
}

inline json to_json(const VerificationReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    return json{{"scope", rep.scope}, {"passed", rep.passed()}, {"checks", checks}};
}

inline json to_json(const BettiTable& t) {
    json dims = json::array();
    for (const auto& v : t.dims) dims.push_back(v.get_str());
    return json{{"n", t.n}, {"dims", dims}};
}

inline std::string join_semicolons(const std::vector<long>& v) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ";";
        out += std::to_string(v[i]);
    }
    return out;
}

inline std::string csv_header() {
    return "g,n,g_prime,order,d,a,age,codim,dim,multiplicity,hyperelliptic,twin_key";
}

inline std::string to_csv_row(const SectorRecord& r) {
    const auto& y = r.datum;
    std::string row;
    row += std::to_string(y.g) + "," + std::to_string(y.n) + ",";
    row += std::to_string(y.g_prime) + "," + std::to_string(y.order) + ",";
    row += join_semicolons(y.d) + "," + join_semicolons(y.a) + ",";
    row += r.age.str() + "," + std::to_string(r.codim) + "," + std::to_string(r.dim) + ",";
    row += r.multiplicity.get_str() + ",";
    row += (r.hyperelliptic ? "true" : "false");
    row += "," + std::to_string(r.twin_index);
    return row;
}

}  // namespace twisted

#endif

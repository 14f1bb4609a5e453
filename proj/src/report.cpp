#include "thetakit/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace thetakit {

Json number_json(double x) {
    if (!std::isfinite(x)) return nullptr;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    if (r == 0) r = 0;  // drop negative zero
    return r;
}

Json to_json(const BoundReport& r) {
    Json j;
    j["name"] = r.name;
    j["lhs"] = number_json(r.lhs);
    j["rhs"] = number_json(r.rhs);
    j["relation"] = relation_symbol(r.relation);
    j["slack"] = number_json(r.slack);
    j["applicable"] = r.applicable;
    if (!r.applicable) j["reason"] = r.reason;
    if (r.applicable) j["equality"] = r.equality;
    return j;
}

BoundReport bound_report_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("bound report: expected an object");
    for (const char* key : {"name", "lhs", "rhs", "relation", "slack", "applicable"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("bound report: missing field ") + key);
    BoundReport r;
    auto num = [&](const char* key) {
        const auto& v = j.at(key);
        if (v.is_null()) return std::nan("");
        if (!v.is_number()) throw std::invalid_argument(std::string("bound report: non-numeric ") + key);
        return v.get<double>();
    };
    r.name = j.at("name").get<std::string>();
    r.lhs = num("lhs");
    r.rhs = num("rhs");
    r.slack = num("slack");
    const auto rel = parse_relation(j.at("relation").get<std::string>());
    if (!rel) throw std::invalid_argument("bound report: unknown relation");
    r.relation = *rel;
    r.applicable = j.at("applicable").get<bool>();
    if (j.contains("reason")) r.reason = j.at("reason").get<std::string>();
    if (j.contains("equality")) r.equality = j.at("equality").get<bool>();
    return r;
}

}  // namespace thetakit

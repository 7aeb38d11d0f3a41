#ifndef POLYBERN_SERIALIZE_HPP
#define POLYBERN_SERIALIZE_HPP

#include <json.hpp>

#include "polybern/catalog.hpp"

namespace polybern {

// Deterministic JSON rendering. ordered_json preserves insertion order and
// MPoly terms are already canonically sorted, so identical inputs always
// produce identical bytes.
using Json = nlohmann::ordered_json;

inline Json to_json(const Rat& r) { return Json(r.str()); }

inline Json to_json(const MPoly& p) {
    Json j;
    j["vars"] = p.vars();
    j["terms"] = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = c.str();
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline Json to_json(const SuiteReport& rep) {
    Json j;
    j["summary"] = {{"passed", rep.passed}, {"failed", rep.failed}};
    j["results"] = Json::array();
    for (const auto& r : rep.results) {
        Json e;
        e["name"] = r.name;
        e["params"] = r.params;
        e["pass"] = r.pass;
        if (!r.pass) {
            e["lhs"] = r.lhs;
            e["rhs"] = r.rhs;
        }
        j["results"].push_back(std::move(e));
    }
    return j;
}

}  // namespace polybern

#endif

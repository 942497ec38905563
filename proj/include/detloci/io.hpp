#pragma once
#include <json.hpp>

#include <string>
#include <vector>

#include "degree_data.hpp"
#include "dimension.hpp"
#include "errors.hpp"
#include "hilbert.hpp"
#include "hypotheses.hpp"
#include "matrix_factory.hpp"
#include "resolutions.hpp"

namespace detloci {

using json = nlohmann::ordered_json;

namespace detail {

inline std::vector<Degree> int_array(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InputError(std::string("field \"") + key + "\" must be an integer array");
    std::vector<Degree> out;
    for (const auto& x : j[key]) {
        if (!x.is_number_integer())
            throw InputError(std::string("field \"") + key + "\" must hold integers");
        out.push_back(x.get<Degree>());
    }
    return out;
}

inline json big_array(const std::vector<BigInt>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

}  // namespace detail

// {"b": [...], "a": [...], "n": int, "char": int}; "char" defaults to 0.
inline DegreeData degree_data_from_json(const json& j) {
    if (!j.is_object()) throw InputError("degree data must be a JSON object");
    auto b = detail::int_array(j, "b");
    auto a = detail::int_array(j, "a");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("field \"n\" must be an integer");
    int charK = 0;
    if (j.contains("char")) {
        if (!j["char"].is_number_integer()) throw InputError("field \"char\" must be an integer");
        charK = j["char"].get<int>();
    }
    return validate(std::move(b), std::move(a), j["n"].get<int>(), charK);
}

inline DegreeData degree_data_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return degree_data_from_json(j);
}

inline json to_json(const DegreeData& d) {
    return json{{"b", d.b}, {"a", d.a}, {"n", d.n}, {"char", d.charK}};
}

inline json to_json(const GradedComplex& cx) {
    json a = json::array();
    for (const auto& term : cx.terms) a.push_back(term.sorted_twists());
    return a;
}

inline json to_json(const HilbertSummary& h) {
    json j;
    j["poly"] = h.polynomial.to_strings();
    j["dim"] = h.dimensionOfScheme;
    j["degree"] = h.degreeOfScheme.get_str();
    if (h.genus)
        j["genus"] = h.genus->get_si();
    else
        j["genus"] = nullptr;
    return j;
}

inline json to_json(const DimensionReport& r) {
    if (r.empty) return json{{"empty", true}};
    json j;
    j["empty"] = false;
    j["ell"] = r.ell;
    j["h"] = r.hValues;
    j["lambda"] = r.lambdaC.get_str();
    j["K"] = detail::big_array(r.kValues);
    j["autB"] = r.autB.get_str();
    j["stable"] = r.stable;
    j["dimW"] = r.dimW_viaK.get_str();
    j["dimWBound"] = r.dimW_viaBound.get_str();
    j["m"] = detail::big_array(r.mValues);
    j["crossCheckOK"] = r.crossCheckOK;
    return j;
}

inline json to_json(const Verdict& v) {
    json j;
    j["nonempty"] = v.nonempty;
    j["dim"] = {{"status", to_string(v.dimStatus)},
                {"value", v.dimValue ? json(v.dimValue->get_str()) : json(nullptr)},
                {"rule", v.dimRule.empty() ? json(nullptr) : json(v.dimRule)}};
    j["component"] = {{"status", to_string(v.componentStatus)},
                      {"rule", v.componentRule.empty() ? json(nullptr) : json(v.componentRule)}};
    if (!v.missing.empty()) j["component"]["missing"] = v.missing;
    json checks = json::array();
    for (const auto& c : v.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = checks;
    j["rules"] = v.appliedRules;
    j["annotations"] = v.annotations;
    return j;
}

inline json to_json(const PolyMatrix& m) {
    json j;
    j["t"] = m.t;
    j["columns"] = m.columns;
    j["nvars"] = m.nvars;
    j["p"] = m.p;
    j["seed"] = m.seed;
    j["displayRows"] = m.displayRows;
    j["displayColumns"] = m.displayColumns;
    json entries = json::array();
    for (int i = 0; i < m.t; ++i)
        for (int k = 0; k < m.columns; ++k) {
            json terms = json::array();
            for (const auto& [e, c] : m.at(i, k).terms()) terms.push_back({{"c", c}, {"e", e}});
            entries.push_back({{"i", i + 1}, {"j", k}, {"terms", terms}});
        }
    j["entries"] = entries;
    return j;
}

}  // namespace detloci

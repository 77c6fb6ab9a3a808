#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "lpsem/atom_set.hpp"
#include "lpsem/ground.hpp"
#include "lpsem/interp.hpp"

namespace lpsem {

using Json = nlohmann::ordered_json;

inline Json atom_list_json(const GroundProgram& g, const AtomSet& s) {
    Json arr = Json::array();
    for (AtomId a : s) arr.push_back(g.name(a));
    return arr;
}

/// {"true":[...],"false":[...],"undefined":[...]}, each sorted.
inline Json interpretation_json(const GroundProgram& g, const PartialInterpretation& i) {
    Json j;
    j["true"] = atom_list_json(g, i.pos());
    j["false"] = atom_list_json(g, i.neg());
    j["undefined"] = atom_list_json(g, i.undefined());
    return j;
}

/// {"models":[[...],...],"count":n}
inline Json model_set_json(const GroundProgram& g, const std::vector<AtomSet>& models) {
    Json arr = Json::array();
    for (const auto& m : models) arr.push_back(atom_list_json(g, m));
    Json j;
    j["models"] = std::move(arr);
    j["count"] = models.size();
    return j;
}

inline AtomSet atom_set_from_json(const GroundProgram& g, const Json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected an array of atoms");
    AtomSet s(g.size());
    for (const auto& v : arr) s.insert(g.id_of(v.get<std::string>()));
    return s;
}

/// Inverse of interpretation_json. The "undefined" list must be exactly the
/// atoms in neither of the other two.
inline PartialInterpretation interpretation_from_json(const GroundProgram& g, const Json& j) {
    auto i = PartialInterpretation::checked(atom_set_from_json(g, j.at("true")), atom_set_from_json(g, j.at("false")));
    if (atom_set_from_json(g, j.at("undefined")) != i.undefined()) {
        throw std::invalid_argument("\"undefined\" does not complement \"true\" and \"false\"");
    }
    return i;
}

inline std::vector<AtomSet> model_set_from_json(const GroundProgram& g, const Json& j) {
    std::vector<AtomSet> out;
    for (const auto& m : j.at("models")) out.push_back(atom_set_from_json(g, m));
    if (j.at("count").get<std::size_t>() != out.size()) throw std::invalid_argument("model count mismatch");
    return out;
}

/// {a, b}
inline std::string format_atom_set(const GroundProgram& g, const AtomSet& s) {
    std::string out = "{";
    bool first = true;
    for (AtomId a : s) {
        if (!first) out += ", ";
        out += g.name(a);
        first = false;
    }
    return out + "}";
}

/// {q, not p}: true atoms, then false ones.
inline std::string format_interpretation(const GroundProgram& g, const PartialInterpretation& i) {
    std::string out = "{";
    bool first = true;
    for (AtomId a : i.pos()) {
        if (!first) out += ", ";
        out += g.name(a);
        first = false;
    }
    for (AtomId a : i.neg()) {
        if (!first) out += ", ";
        out += "not " + g.name(a);
        first = false;
    }
    return out + "}";
}

}  // namespace lpsem

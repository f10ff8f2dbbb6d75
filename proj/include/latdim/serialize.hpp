#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latdim/dimensions.hpp"
#include "latdim/lattice.hpp"

namespace latdim {

// On-disk form of a lattice:
//   {"name": str, "elements": [str...], "covers": [[lower, upper]...]}
// Pairs are label strings; bottom and top are inferred, never stored.
// nlohmann keeps object keys sorted, so dump output is byte-deterministic.

inline nlohmann::json to_json(const Lattice& l) {
    nlohmann::json j;
    j["name"] = l.name();
    j["elements"] = l.labels();
    auto covers = nlohmann::json::array();
    for (auto [a, b] : l.hasse())
        covers.push_back(nlohmann::json::array({l.label(a), l.label(b)}));
    j["covers"] = std::move(covers);
    return j;
}

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline Lattice lattice_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.contains("covers"))
        throw NotALattice("lattice JSON must be an object with 'elements' and 'covers'");
    std::string name = j.value("name", "");
    std::vector<std::string> labels;
    for (const auto& e : j.at("elements")) {
        if (!e.is_string()) throw NotALattice("'elements' must be an array of strings");
        labels.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> covers;
    for (const auto& c : j.at("covers")) {
        if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
            throw NotALattice("'covers' must be an array of [lower, upper] label pairs");
        covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
    return build_lattice(labels, covers, name);
}

inline Lattice lattice_from_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, true, /*ignore_comments=*/false);
    return lattice_from_json(j);
}

inline std::string quote_dot(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

// Hasse diagram as graphviz input, covers drawn upward
inline std::string to_dot(const Lattice& l) {
    std::string out = "digraph " + quote_dot(l.name().empty() ? std::string("lattice") : l.name()) + " {\n";
    out += "  rankdir=BT;\n  node [shape=plaintext];\n";
    for (int i = 0; i < l.n(); ++i)
        out += "  n" + std::to_string(i) + " [label=" + quote_dot(l.label(i)) + "];\n";
    for (auto [a, b] : l.hasse())
        out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + " [arrowhead=none];\n";
    out += "}\n";
    return out;
}

// element sets rendered as sorted label arrays; families sorted by the
// underlying index sequences so output order never depends on search order
inline nlohmann::json set_to_json(const ElementSet& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& lbl : s.labels()) arr.push_back(lbl);
    return arr;
}

inline nlohmann::json report_to_json(const DimensionReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["ind_large"] = r.ind_large;
    j["ind_small"] = r.ind_small;
    j["dim_covering"] = r.dim_covering;
    if (r.kdim)
        j["kdim"] = *r.kdim;
    else
        j["kdim"] = nullptr;
    j["height"] = r.height;
    nlohmann::json w;
    if (r.ind_witness)
        w["ind_large"] = {{"a", r.ind_witness->first}, {"u", r.ind_witness->second}};
    else
        w["ind_large"] = nullptr;
    w["dim_covering"] = r.dim_witness ? nlohmann::json(*r.dim_witness) : nlohmann::json(nullptr);
    w["kdim"] = r.kdim_witness ? nlohmann::json(*r.kdim_witness) : nlohmann::json(nullptr);
    w["height"] = r.height_witness;
    j["witnesses"] = std::move(w);
    return j;
}

inline std::vector<std::vector<std::size_t>> sorted_index_families(const std::vector<Bits>& family) {
    std::vector<std::vector<std::size_t>> idx;
    idx.reserve(family.size());
    for (const auto& b : family) idx.push_back(b.indices());
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace latdim

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "latdim/catalog.hpp"
#include "latdim/dimensions.hpp"
#include "latdim/errors.hpp"
#include "latdim/oracle.hpp"
#include "latdim/serialize.hpp"


namespace latdim {

// Sweep the bundled catalog plus a seeded batch of random lattices, tracking
// how far the invariants spread apart and flagging any lattice that breaks
// the order ind_small <= ind_large < height.

struct SearchConfig {
    std::uint64_t seed = 0;
    int max_n = 7;     // size bound for the random batch
    int samples = 0;   // 0 scans the catalog only
    int catalog_limit = 64;
};

struct GapRecord {
    int value = 0;
    std::string witness;  // first lattice attaining the maximum
    bool set = false;
};

struct Violation {
    std::string rule;
    nlohmann::json lattice;
    nlohmann::json values;
};

struct SearchReport {
    std::uint64_t seed = 0;
    int max_n = 0;
    int samples = 0;
    int scanned = 0;
    GapRecord large_minus_small;
    GapRecord dim_minus_large;
    GapRecord large_minus_dim;
    std::vector<Violation> violations;
};

namespace detail {

inline void record_gap(GapRecord& rec, int value, const std::string& name) {
    if (!rec.set || value > rec.value) {
        rec.value = value;
        rec.witness = name;
        rec.set = true;
    }
}

inline void scan_one(SearchReport& rep, const Lattice& l, int limit) {
    DimensionReport r = full_report(l, limit);
    ++rep.scanned;
    record_gap(rep.large_minus_small, r.ind_large - r.ind_small, r.name);
    record_gap(rep.dim_minus_large, r.dim_covering - r.ind_large, r.name);
    record_gap(rep.large_minus_dim, r.ind_large - r.dim_covering, r.name);
    auto values = [&] {
        nlohmann::json v;
        v["ind_small"] = r.ind_small;
        v["ind_large"] = r.ind_large;
        v["dim_covering"] = r.dim_covering;
        v["height"] = r.height;
        return v;
    };
    if (r.ind_small > r.ind_large)
        rep.violations.push_back({"ind_small <= ind_large", to_json(l), values()});
    if (r.ind_large >= r.height)
        rep.violations.push_back({"ind_large < height", to_json(l), values()});
}

} // namespace detail

inline SearchReport search_gaps(const SearchConfig& cfg) {
    if (cfg.samples > 0 && cfg.max_n > 32)
        throw SizeLimit("random generation handles at most 32 elements");
    SearchReport rep;
    rep.seed = cfg.seed;
    rep.max_n = cfg.max_n;
    rep.samples = cfg.samples;
    for (const Fixture& f : fixtures())
        detail::scan_one(rep, f.lattice, cfg.catalog_limit);
    if (cfg.samples > 0) {
        oracle::GeneratorConfig gen;
        gen.mode = oracle::GeneratorConfig::Mode::random;
        gen.max_n = cfg.max_n;
        gen.seed = cfg.seed;
        gen.sample_count = cfg.samples;
        int limit = std::max(kDefaultEnumLimit, cfg.max_n);
        for (const Lattice& l : oracle::enumerate_lattices(gen))
            detail::scan_one(rep, l, limit);
    }
    return rep;
}

inline nlohmann::json report_to_json(const SearchReport& r) {
    auto gap = [](const GapRecord& g) {
        nlohmann::json j;
        j["value"] = g.value;
        j["witness"] = g.witness;
        return j;
    };
    nlohmann::json j;
    j["seed"] = r.seed;
    j["max_n"] = r.max_n;
    j["samples"] = r.samples;
    j["scanned"] = r.scanned;
    nlohmann::json gaps;
    gaps["ind_large_minus_ind_small"] = gap(r.large_minus_small);
    gaps["dim_covering_minus_ind_large"] = gap(r.dim_minus_large);
    gaps["ind_large_minus_dim_covering"] = gap(r.large_minus_dim);
    j["gaps"] = std::move(gaps);
    auto viol = nlohmann::json::array();
    for (const Violation& v : r.violations) {
        nlohmann::json e;
        e["rule"] = v.rule;
        e["lattice"] = v.lattice;
        e["values"] = v.values;
        viol.push_back(std::move(e));
    }
    j["violations"] = std::move(viol);
    return j;
}

} // namespace latdim

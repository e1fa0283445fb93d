#pragma once

// Reference data shipped in data/: printed resolvent factorizations, the
// known cubic field coincidences, and spot values of F_m.

#include "sextic/family.hpp"
#include "sextic/resolvent.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#ifndef SEXTIC_DEFAULT_DATA_DIR
#define SEXTIC_DEFAULT_DATA_DIR "data"
#endif

namespace sextic::golden {

/// $SEXTIC_DATA_DIR, else the directory configured at build time.
inline std::string data_dir()
{
    if (const char* env = std::getenv("SEXTIC_DATA_DIR"); env && *env)
        return env;
    return SEXTIC_DEFAULT_DATA_DIR;
}

inline nlohmann::json load_json(const std::string& name)
{
    const std::string path = data_dir() + "/" + name;
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open data file " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("malformed data file " + path + ": " + e.what());
    }
}

inline std::vector<resolvent::Table2Row> load_table2()
{
    const auto doc = load_json("table2.json");
    std::vector<resolvent::Table2Row> rows;
    for (const auto& r : doc.at("rows"))
        rows.push_back({r.at("m").get<long>(), r.at("n").get<long>(), r.at("i").get<int>(),
                        r.at("factors").get<std::vector<std::string>>()});
    return rows;
}

struct CubicPairs {
    long verified_lo = 0, verified_hi = 0;
    std::vector<std::pair<long, long>> pairs;

    /// Listed pairs with both entries in [lo, hi], sorted.
    std::vector<std::pair<long, long>> within(long lo, long hi) const
    {
        std::vector<std::pair<long, long>> v;
        for (const auto& p : pairs)
            if (p.first >= lo && p.second <= hi)
                v.push_back(p);
        std::sort(v.begin(), v.end());
        return v;
    }
};

inline CubicPairs load_cubic_pairs()
{
    const auto j = load_json("cubic_pairs.json");
    CubicPairs c;
    c.verified_lo = j.at("verified_range").at(0).get<long>();
    c.verified_hi = j.at("verified_range").at(1).get<long>();
    for (const auto& p : j.at("pairs"))
        c.pairs.emplace_back(p.at(0).get<long>(), p.at(1).get<long>());
    return c;
}

inline std::vector<family::SpotValue> load_spot_values()
{
    const auto doc = load_json("spot_values.json");
    std::vector<family::SpotValue> v;
    for (const auto& s : doc.at("values"))
        v.push_back({s.at("x").get<long>(), s.at("y").get<long>(), s.at("m_coeff").get<long>(),
                     s.at("constant").get<long>(), s.at("scaled").get<bool>()});
    return v;
}

} // namespace sextic::golden

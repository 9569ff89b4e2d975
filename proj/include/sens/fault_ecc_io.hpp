#pragma once

#include <json.hpp>

#include "sens/fault_ecc_oracle.hpp"

namespace sens {

/*
 * JSON form of a built oracle:
 *
 *   {"eps": "p/q", "F": k, "n": .., "m": .., "directed": bool,
 *    "edges": [[u, v], ...],
 *    "ecc_default": ["num/den" | "inf", ...],
 *    "static_diameter": .., "static_radius": ..,
 *    "per_source": {"v": {"edge id": "num/den" | "inf"}},
 *    "diameter": {"edge id": ...}, "radius": {"edge id": ...}}
 *
 * Keys inside the tables are decimal strings, written in increasing order.
 */
class FaultEccCodec {
public:
    static nlohmann::ordered_json to_json(const FaultEccOracle& o) {
        nlohmann::ordered_json j;
        j["eps"] = o.eps_.to_string();
        j["F"] = o.F_;
        j["n"] = o.n();
        j["m"] = o.m();
        j["directed"] = o.directed_;
        auto edges = nlohmann::ordered_json::array();
        for (const auto& [u, v] : o.endpoints_) {
            edges.push_back({u, v});
        }
        j["edges"] = std::move(edges);
        auto ecc = nlohmann::ordered_json::array();
        for (const auto& e : o.ecc_) {
            ecc.push_back(e.to_string());
        }
        j["ecc_default"] = std::move(ecc);
        j["static_diameter"] = o.static_diameter_.to_string();
        j["static_radius"] = o.static_radius_.to_string();
        auto per = nlohmann::ordered_json::object();
        for (Vertex v = 0; v < o.per_source_.size(); ++v) {
            per[std::to_string(v)] = table_json(o.per_source_[v]);
        }
        j["per_source"] = std::move(per);
        j["diameter"] = table_json(o.diameter_);
        j["radius"] = table_json(o.radius_);
        return j;
    }

    static FaultEccOracle from_json(const nlohmann::json& j) {
        try {
            FaultEccOracle o(RationalEps::parse(j.at("eps").get<std::string>()), j.at("F").get<std::int64_t>());
            o.directed_ = j.at("directed").get<bool>();
            for (const auto& e : j.at("edges")) {
                o.endpoints_.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
            }
            for (const auto& e : j.at("ecc_default")) {
                o.ecc_.push_back(EccEstimate::parse(e.get<std::string>()));
            }
            o.static_diameter_ = EccEstimate::parse(j.at("static_diameter").get<std::string>());
            o.static_radius_ = EccEstimate::parse(j.at("static_radius").get<std::string>());
            o.per_source_.assign(o.ecc_.size(), {});
            for (const auto& [key, table] : j.at("per_source").items()) {
                const auto v = std::stoul(key);
                if (v >= o.per_source_.size()) {
                    throw Error("per_source vertex " + key + " out of range");
                }
                o.per_source_[v] = read_table(table);
            }
            o.diameter_ = read_table(j.at("diameter"));
            o.radius_ = read_table(j.at("radius"));
            return o;
        } catch (const nlohmann::json::exception& e) {
            throw Error(std::string("malformed oracle file: ") + e.what());
        }
    }

private:
    static nlohmann::ordered_json table_json(const FaultEccOracle::Table& t) {
        std::vector<std::pair<EdgeId, EccEstimate>> rows(t.begin(), t.end());
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        auto out = nlohmann::ordered_json::object();
        for (const auto& [id, est] : rows) {
            out[std::to_string(id)] = est.to_string();
        }
        return out;
    }

    static FaultEccOracle::Table read_table(const nlohmann::json& j) {
        FaultEccOracle::Table t;
        for (const auto& [key, val] : j.items()) {
            t.emplace(static_cast<EdgeId>(std::stoul(key)), EccEstimate::parse(val.get<std::string>()));
        }
        return t;
    }
};

inline std::string fault_ecc_to_string(const FaultEccOracle& o) { return FaultEccCodec::to_json(o).dump(1); }

inline FaultEccOracle fault_ecc_from_string(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed oracle file: ") + e.what());
    }
    return FaultEccCodec::from_json(j);
}

}  // namespace sens

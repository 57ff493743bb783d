#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "polya/sweep.hpp"

namespace polya {

/// Parses a sweep configuration document (JSON dialect, schema_version 1).
///
/// {
///   "schema_version": 1,
///   "n_list": [2, 3, 5],
///   "x_list": [0.1, "1/2", 0.9],          // "p/q" strings are exact
///   "c_spec": {"auto": 6, "max": 5.0},     // or {"list": [-0.5, 0, 0.5]}
///   "functions": ["sq", "abshalf"],
///   "checks": ["convex-order", "claim1"],
///   "tolerances": {"kozniewska": 1e-12}    // optional overrides
/// }
inline SweepConfig parse_sweep_config(const nlohmann::json& doc) {
    SweepConfig cfg;
    try {
        if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer())
            throw config_error("config requires an integer schema_version");
        cfg.schema_version = doc["schema_version"].get<int>();
        if (cfg.schema_version != 1)
            throw config_error("unsupported schema_version " +
                               std::to_string(cfg.schema_version));

        for (const auto& v : doc.value("n_list", nlohmann::json::array()))
            cfg.n_list.push_back(v.get<int>());
        for (const auto& v : doc.value("x_list", nlohmann::json::array())) {
            if (v.is_string())
                cfg.x_list.push_back(XValue::from_rational(parse_rational(v.get<std::string>())));
            else
                cfg.x_list.push_back(XValue::from_double(v.get<double>()));
        }

        if (doc.contains("c_spec")) {
            const auto& cs = doc["c_spec"];
            if (cs.contains("list")) {
                cfg.c_spec.automatic = false;
                for (const auto& v : cs["list"]) cfg.c_spec.values.push_back(v.get<double>());
            } else {
                cfg.c_spec.automatic = true;
                if (cs.contains("auto")) cfg.c_spec.count = cs["auto"].get<int>();
                if (cs.contains("count")) cfg.c_spec.count = cs["count"].get<int>();
                cfg.c_spec.max_c = cs.value("max", 5.0);
            }
        }

        for (const auto& v : doc.value("functions", nlohmann::json::array()))
            cfg.function_ids.push_back(v.get<std::string>());
        for (const auto& v : doc.value("checks", nlohmann::json::array()))
            cfg.checks.push_back(parse_check(v.get<std::string>()));

        if (doc.contains("tolerances")) {
            const auto& t = doc["tolerances"];
            cfg.tol.convex_order = t.value("convex_order", cfg.tol.convex_order);
            cfg.tol.partial_sum = t.value("partial_sum", cfg.tol.partial_sum);
            cfg.tol.partial_sum_strict =
                t.value("partial_sum_strict", cfg.tol.partial_sum_strict);
            cfg.tol.error_monotone = t.value("error_monotone", cfg.tol.error_monotone);
            cfg.tol.kozniewska = t.value("kozniewska", cfg.tol.kozniewska);
            cfg.tol.claim1 = t.value("claim1", cfg.tol.claim1);
        }
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config parse error: ") + e.what());
    }

    for (const auto& id : cfg.function_ids)
        if (!find_function(id)) throw config_error("unknown function id '" + id + "'");
    for (const auto& x : cfg.x_list)
        if (!(x.value >= 0.0 && x.value <= 1.0))
            throw config_error("x_list entry " + std::to_string(x.value) + " outside [0,1]");
    return cfg;
}

inline SweepConfig parse_sweep_config(std::istream& is) {
    nlohmann::json doc;
    try {
        is >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw config_error(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_sweep_config(doc);
}

}  // namespace polya

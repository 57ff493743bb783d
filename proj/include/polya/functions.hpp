#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "polya/params.hpp"

namespace polya {

/// A function on [0,1] used as approximation target.
struct TestFunction {
    std::string id;
    std::function<double(double)> eval;
    bool is_convex = false;
};

/// Built-in targets: six convex shapes (smooth, kinked, flat-piece), the
/// identity (linear, hence a fixed point of every operator), and one
/// deliberately non-convex function for negative tests.
inline const std::vector<TestFunction>& function_registry() {
    static const std::vector<TestFunction> registry = {
        {"sq", [](double t) { return t * t; }, true},
        {"abshalf", [](double t) { return std::abs(t - 0.5); }, true},
        {"exp", [](double t) { return std::exp(t); }, true},
        {"neglog", [](double t) { return -std::log(t + 0.1); }, true},
        {"relu", [](double t) { return std::max(0.0, t - 0.3); }, true},
        {"cube", [](double t) { return t * t * t; }, true},
        {"id", [](double t) { return t; }, true},
        {"sin2pi", [](double t) { return std::sin(2.0 * M_PI * t); }, false},
    };
    return registry;
}

/// The convex targets exercised by the verification sweeps (excludes the
/// linear identity, which is covered by its own zero-error assertions).
inline std::vector<std::string> convex_function_ids() {
    return {"sq", "abshalf", "exp", "neglog", "relu", "cube"};
}

inline const TestFunction* find_function(const std::string& id) {
    for (const auto& f : function_registry())
        if (f.id == id) return &f;
    return nullptr;
}

inline const TestFunction& require_function(const std::string& id) {
    const TestFunction* f = find_function(id);
    if (!f) throw config_error("unknown function id '" + id + "'");
    return *f;
}

}  // namespace polya

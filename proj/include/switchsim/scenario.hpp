#pragma once

#include <string>
#include <vector>

#include "switchsim/model.hpp"
#include "switchsim/montecarlo.hpp"

namespace switchsim {

enum class GridSpacing { Linear, Log };

struct UGrid {
    double u_min = 10.0;
    double u_max = 1000.0;
    int n_points = 25;
    GridSpacing spacing = GridSpacing::Log;

    std::vector<double> points() const;
};

struct OutputSpec {
    std::string csv_path;
    std::string svg_path;  // empty: no plot requested
};

struct Scenario {
    std::string name;
    ModelParams params;
    UGrid grid;
    McConfig mc;
    std::vector<OutputSpec> outputs;
};

// Parses a scenario from JSON text; parse errors carry the offending field
// path. The model is NOT validated here (net profit is checked when the
// Model is built).
Scenario scenario_from_json(const std::string& json_text);
Scenario load_scenario(const std::string& path);

// Serializes with all defaults materialized; re-importing runs identically.
std::string scenario_to_json(const Scenario& scenario);

const std::vector<std::string>& builtin_names();
Scenario builtin_scenario(const std::string& name);

// The mean-matched four-switch comparison behind the last figure.
std::vector<Scenario> fig7_comparison();

}  // namespace switchsim

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uuvplan/current_field.hpp"
#include "uuvplan/grid_map.hpp"
#include "uuvplan/kinematics.hpp"

namespace uuvplan {

/// Where a scenario's map comes from: a map file, or seeded random
/// generation (ratio 0 gives an obstacle-free map).
struct MapSource {
    std::string file;                 // non-empty wins over random generation
    std::vector<int> extent{10, 10};
    double ratio = 0.0;
    std::uint64_t seed = 1;
    ObstacleStyle style = ObstacleStyle::cells;

    GridMap build(const std::vector<Cell>& protected_cells) const;
    int dims() const { return static_cast<int>(extent.size()); }
};

enum class VariantChoice { bnnp, cbnnp, both };

/// One experiment cell: map, endpoints, current, algorithm variant and
/// simulation parameters. Defaults are the standard 10x10 scenario:
/// origin (2,1), destination (9,9), k_g = 0.5, 1 m/s desired speed,
/// 0.05 m/s current at 0 degrees.
struct ScenarioConfig {
    std::string id = "scenario";
    MapSource map;
    Cell origin{2, 1};
    Cell destination{9, 9};
    double gain = 0.5;
    double desired_speed = 1.0;
    CurrentSpec current = CurrentSpec::static_2d(0.05, 0.0);
    VariantChoice variant = VariantChoice::both;
    SimParams sim;
    std::string out_dir = "out";
    int ratio_sweep_seeds = 50;

    int dims() const { return map.dims(); }
    void validate() const;
    std::vector<Variant> variants() const;

    /// Defaults for a given dimensionality (3D: origin (2,1,1),
    /// destination (9,9,9), 10x10x10 extent).
    static ScenarioConfig defaults(int dims);

    static ScenarioConfig from_json_text(const std::string& text);
    static ScenarioConfig from_json_file(const std::string& path);
    std::string to_json_text() const;
};

/// Result of one planning + simulation run.
struct RunRecord {
    std::string scenario_id;
    Variant variant = Variant::cbnnp;
    PlanStatus plan_status = PlanStatus::reached;
    double planned_length = 0.0;
    double traveled_length = 0.0;
    bool reached = false;
    bool collision = false;
    bool fail = false;
    double deviation_max = 0.0;
    int saturated_steps = 0;
    double wall_ms = 0.0; // informational; excluded from deterministic exports

    /// Table cell: the traveled length at 4 decimals when the run reached
    /// the destination, otherwise the C / F flags.
    std::string table_cell() const;
};

}  // namespace uuvplan

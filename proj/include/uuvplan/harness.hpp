#pragma once

#include <string>
#include <vector>

#include "uuvplan/guidance.hpp"
#include "uuvplan/oracle.hpp"
#include "uuvplan/scenario.hpp"

namespace uuvplan {

/// Full result of one scenario evaluation. Trajectories are retained only
/// when requested; batch sweeps keep just the records.
struct ScenarioResult {
    ScenarioConfig config;
    PlanPath plan;
    std::vector<VelocityTriple> schedule; // cbnnp per-segment schedule
    std::vector<RunRecord> records;       // one per executed variant
    std::vector<Trajectory> trajectories; // parallel to records when kept
};

/// Plans and simulates one scenario. Pure up to wall-clock measurement:
/// identical configs give identical plans, trajectories and records.
ScenarioResult evaluate_scenario(const ScenarioConfig& config,
                                 bool keep_trajectories = false);

/// Evaluates and writes the per-run trajectory CSVs (plus the cbnnp
/// velocity schedule CSV) into config.out_dir.
ScenarioResult run_scenario(const ScenarioConfig& config);

enum class ExecMode { serial, parallel };

/// Evaluates independent scenario cells, serially or with an OpenMP
/// parallel-for. Results are identical between modes; output order always
/// matches input order.
std::vector<ScenarioResult> run_batch(const std::vector<ScenarioConfig>& cells,
                                      ExecMode mode, bool keep_trajectories = false);

/// A paper-shaped sweep table: one row per algorithm, one column per
/// condition; cells hold the traveled length or C/F flags.
struct SweepTable {
    std::string name;
    std::string condition_label;
    std::vector<std::string> conditions;
    std::vector<std::string> row_labels;
    std::vector<std::vector<std::string>> cells;

    std::string to_csv() const;
    std::string to_json_text() const;
};

struct SweepOutput {
    SweepTable table;
    std::vector<RunRecord> records;
};

/// Reach/collision statistics of one (ratio, variant) family of seeded maps.
struct RatioStats {
    double ratio = 0.0;
    Variant variant = Variant::cbnnp;
    int seeds = 0;
    int reached = 0;
    int collisions = 0;
    int fails = 0;
    int plan_failures = 0;

    double reach_rate() const { return seeds ? double(reached) / seeds : 0.0; }
};

struct RatioSweepOutput {
    std::vector<RatioStats> stats;
    std::vector<RunRecord> records;

    std::string summary_csv() const;
};

/// Both variants at 0.05 m/s over directions {0,45,90,135,180} degrees.
SweepOutput sweep_directions_2d(const ScenarioConfig& base, ExecMode mode);

/// Both variants over speeds {0.05,0.1,...,0.9} m/s at the fixed direction
/// (2D: 0 degrees; 3D: 0 degrees to X-Y, 45 degrees to X-Z).
SweepOutput sweep_speeds(const ScenarioConfig& base, int dims, ExecMode mode);

/// Both variants at 0.05 m/s over the nine 3D direction pairs.
SweepOutput sweep_directions_3d(const ScenarioConfig& base, ExecMode mode);

/// Both variants over obstacle ratios {0.2,0.4,0.6} on seeded random maps,
/// current 0.05 m/s at 135 degrees.
RatioSweepOutput sweep_obstacle_ratio(const ScenarioConfig& base, ExecMode mode);

/// Both variants under the dynamic current; returns results with retained
/// trajectories for export.
std::vector<ScenarioResult> dynamic_current_demo(const ScenarioConfig& base);

/// Record export with stable column order; floats at full precision.
/// Timing is excluded so identical runs produce identical bytes.
std::string records_to_csv(const std::vector<RunRecord>& records,
                           bool include_timing = false);
std::string records_to_json_text(const std::vector<RunRecord>& records,
                                 bool include_timing = false);

std::string trajectory_to_csv(const Trajectory& traj, Variant variant, int dims);
std::string schedule_to_csv(const std::vector<VelocityTriple>& schedule,
                            const PlanPath& plan, double speed);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace uuvplan

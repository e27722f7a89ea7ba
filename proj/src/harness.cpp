#include "uuvplan/harness.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uuvplan {

namespace {

std::string fmt(double value, const char* spec = "%.17g") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, value);
    return buf;
}

std::string fmt4(double value) { return fmt(value, "%.4f"); }

// Compact condition label: 0.05 -> "0.05", 45 -> "45".
std::string num_label(double value) {
    std::string s = fmt(value, "%g");
    return s;
}

}  // namespace

ScenarioResult evaluate_scenario(const ScenarioConfig& config, bool keep_trajectories) {
    config.validate();
    ScenarioResult result;
    result.config = config;

    const GridMap map = config.map.build({config.origin, config.destination});

    const auto plan_started = std::chrono::steady_clock::now();
    CbnnpPlan planned = plan_cbnnp(map, config.origin, config.destination, config.gain,
                                   config.current, config.desired_speed);
    result.plan = planned.path;
    result.schedule = std::move(planned.schedule);
    const double planned_length =
        result.plan.waypoints.size() >= 2 ? result.plan.length() : 0.0;

    for (Variant variant : config.variants()) {
        RunRecord rec;
        rec.scenario_id = config.id;
        rec.variant = variant;
        rec.plan_status = result.plan.status;
        rec.planned_length = planned_length;

        const auto run_started = std::chrono::steady_clock::now();
        if (result.plan.reached()) {
            Trajectory traj = simulate(map, result.plan, variant, config.current, config.sim);
            rec.traveled_length = traj.traveled_length;
            rec.deviation_max = traj.deviation_max;
            rec.saturated_steps = traj.saturated_steps;
            rec.reached = traj.outcome == Outcome::reached;
            rec.collision = traj.outcome == Outcome::collision;
            rec.fail = traj.outcome == Outcome::fail;
            if (keep_trajectories) result.trajectories.push_back(std::move(traj));
        } else {
            // No executable plan: counts as a failure to reach.
            rec.fail = true;
            if (keep_trajectories) result.trajectories.emplace_back();
        }
        const auto done = std::chrono::steady_clock::now();
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(done - run_started).count() +
            std::chrono::duration<double, std::milli>(run_started - plan_started).count() /
                static_cast<double>(config.variants().size());
        result.records.push_back(std::move(rec));
    }
    return result;
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
    ScenarioResult result = evaluate_scenario(config, true);
    std::filesystem::create_directories(config.out_dir);
    if (config.map.file.empty()) {
        const GridMap map = config.map.build({config.origin, config.destination});
        write_text_file(config.out_dir + "/" + config.id + ".map.json", map.to_json());
    }
    for (std::size_t i = 0; i < result.records.size(); ++i) {
        const RunRecord& rec = result.records[i];
        const std::string stem =
            config.out_dir + "/" + config.id + "_" + to_string(rec.variant);
        if (i < result.trajectories.size() && !result.trajectories[i].times.empty())
            write_text_file(stem + ".trajectory.csv",
                            trajectory_to_csv(result.trajectories[i], rec.variant,
                                              config.dims()));
        if (rec.variant == Variant::cbnnp && !result.schedule.empty())
            write_text_file(stem + ".schedule.csv",
                            schedule_to_csv(result.schedule, result.plan,
                                            config.desired_speed));
    }
    write_text_file(config.out_dir + "/" + config.id + ".records.csv",
                    records_to_csv(result.records));
    return result;
}

std::vector<ScenarioResult> run_batch(const std::vector<ScenarioConfig>& cells,
                                      ExecMode mode, bool keep_trajectories) {
    std::vector<ScenarioResult> results(cells.size());
#ifdef _OPENMP
    if (mode == ExecMode::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(cells.size()); ++i)
            results[static_cast<std::size_t>(i)] =
                evaluate_scenario(cells[static_cast<std::size_t>(i)], keep_trajectories);
        return results;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < cells.size(); ++i)
        results[i] = evaluate_scenario(cells[i], keep_trajectories);
    return results;
}

std::string SweepTable::to_csv() const {
    std::string out = "algorithm";
    for (const auto& c : conditions) out += "," + c;
    out += "\n";
    for (std::size_t r = 0; r < row_labels.size(); ++r) {
        out += row_labels[r];
        for (const auto& cell : cells[r]) out += "," + cell;
        out += "\n";
    }
    return out;
}

std::string SweepTable::to_json_text() const {
    nlohmann::json j;
    j["name"] = name;
    j["condition_label"] = condition_label;
    j["conditions"] = conditions;
    j["rows"] = nlohmann::json::object();
    for (std::size_t r = 0; r < row_labels.size(); ++r) j["rows"][row_labels[r]] = cells[r];
    return j.dump(2) + "\n";
}

namespace {

// Runs one config per condition for both variants and shapes the records
// into the 2 x N table (CBNNP row first, matching the reference layout).
SweepOutput tabulate(const std::string& name, const std::string& condition_label,
                     const std::vector<std::string>& conditions,
                     const std::vector<ScenarioConfig>& cells, ExecMode mode) {
    SweepOutput out;
    out.table.name = name;
    out.table.condition_label = condition_label;
    out.table.conditions = conditions;
    out.table.row_labels = {"CBNNP", "BNNP"};
    out.table.cells.assign(2, std::vector<std::string>(conditions.size(), ""));

    const std::vector<ScenarioResult> results = run_batch(cells, mode);
    for (std::size_t i = 0; i < results.size(); ++i) {
        for (const RunRecord& rec : results[i].records) {
            const std::size_t row = rec.variant == Variant::cbnnp ? 0 : 1;
            out.table.cells[row][i] = rec.table_cell();
            out.records.push_back(rec);
        }
    }
    return out;
}

ScenarioConfig with_id(ScenarioConfig cfg, const std::string& id) {
    cfg.id = id;
    return cfg;
}

}  // namespace

SweepOutput sweep_directions_2d(const ScenarioConfig& base, ExecMode mode) {
    const std::vector<double> directions{0, 45, 90, 135, 180};
    std::vector<ScenarioConfig> cells;
    std::vector<std::string> labels;
    for (double theta : directions) {
        ScenarioConfig cfg = base;
        cfg.variant = VariantChoice::both;
        cfg.current = CurrentSpec::static_2d(0.05, theta);
        cells.push_back(with_id(cfg, "dir2d_" + num_label(theta)));
        labels.push_back(num_label(theta));
    }
    return tabulate("directions2d", "current direction (deg)", labels, cells, mode);
}

SweepOutput sweep_speeds(const ScenarioConfig& base, int dims, ExecMode mode) {
    const std::vector<double> speeds{0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::vector<ScenarioConfig> cells;
    std::vector<std::string> labels;
    for (double speed : speeds) {
        ScenarioConfig cfg = base;
        cfg.variant = VariantChoice::both;
        cfg.current = dims == 3 ? CurrentSpec::static_3d(speed, 0.0, 45.0)
                                : CurrentSpec::static_2d(speed, 0.0);
        cells.push_back(
            with_id(cfg, "speed" + std::to_string(dims) + "d_" + num_label(speed)));
        labels.push_back(num_label(speed));
    }
    return tabulate("speeds" + std::to_string(dims) + "d", "current speed (m/s)", labels,
                    cells, mode);
}

SweepOutput sweep_directions_3d(const ScenarioConfig& base, ExecMode mode) {
    const std::vector<std::pair<double, double>> pairs{
        {45, 0}, {45, 45}, {45, 90}, {45, 135}, {45, 180},
        {0, 45}, {90, 45}, {135, 45}, {180, 45}};
    std::vector<ScenarioConfig> cells;
    std::vector<std::string> labels;
    for (const auto& [xy, xz] : pairs) {
        ScenarioConfig cfg = base;
        cfg.variant = VariantChoice::both;
        cfg.current = CurrentSpec::static_3d(0.05, xy, xz);
        cells.push_back(
            with_id(cfg, "dir3d_xy" + num_label(xy) + "_xz" + num_label(xz)));
        labels.push_back(num_label(xy) + "&" + num_label(xz));
    }
    return tabulate("directions3d", "degrees to X-Y & X-Z planes", labels, cells, mode);
}

RatioSweepOutput sweep_obstacle_ratio(const ScenarioConfig& base, ExecMode mode) {
    const std::vector<double> ratios{0.2, 0.4, 0.6};
    std::vector<ScenarioConfig> cells;
    for (double ratio : ratios) {
        for (int seed = 0; seed < base.ratio_sweep_seeds; ++seed) {
            ScenarioConfig cfg = base;
            cfg.variant = VariantChoice::both;
            cfg.current = CurrentSpec::static_2d(0.05, 135.0);
            cfg.map.file.clear();
            cfg.map.ratio = ratio;
            cfg.map.seed = static_cast<std::uint64_t>(seed) + 1;
            cells.push_back(with_id(cfg, "ratio" + num_label(ratio) + "_seed" +
                                             std::to_string(seed + 1)));
        }
    }

    const std::vector<ScenarioResult> results = run_batch(cells, mode);
    RatioSweepOutput out;
    for (double ratio : ratios)
        for (Variant v : {Variant::cbnnp, Variant::bnnp}) {
            RatioStats st;
            st.ratio = ratio;
            st.variant = v;
            out.stats.push_back(st);
        }
    for (std::size_t i = 0; i < results.size(); ++i) {
        const double ratio = cells[i].map.ratio;
        for (const RunRecord& rec : results[i].records) {
            out.records.push_back(rec);
            for (RatioStats& st : out.stats) {
                if (st.ratio == ratio && st.variant == rec.variant) {
                    ++st.seeds;
                    st.reached += rec.reached;
                    st.collisions += rec.collision;
                    st.fails += rec.fail;
                    st.plan_failures += rec.plan_status != PlanStatus::reached;
                }
            }
        }
    }
    return out;
}

std::string RatioSweepOutput::summary_csv() const {
    std::string out =
        "ratio,algorithm,seeds,reached,collisions,fails,plan_failures,reach_rate\n";
    for (const RatioStats& st : stats) {
        out += fmt(st.ratio, "%.2f") + "," +
               (st.variant == Variant::cbnnp ? "CBNNP" : "BNNP") + "," +
               std::to_string(st.seeds) + "," + std::to_string(st.reached) + "," +
               std::to_string(st.collisions) + "," + std::to_string(st.fails) + "," +
               std::to_string(st.plan_failures) + "," + fmt4(st.reach_rate()) + "\n";
    }
    return out;
}

std::vector<ScenarioResult> dynamic_current_demo(const ScenarioConfig& base) {
    ScenarioConfig cfg = base;
    cfg.id = "dynamic";
    cfg.variant = VariantChoice::both;
    if (cfg.current.kind != CurrentKind::dynamic2d)
        cfg.current = CurrentSpec::dynamic_default();
    return {evaluate_scenario(cfg, true)};
}

std::string records_to_csv(const std::vector<RunRecord>& records, bool include_timing) {
    std::string out =
        "scenario_id,algorithm,plan_status,planned_length,traveled_length,reached,"
        "collision,fail,deviation_max,saturated_steps";
    if (include_timing) out += ",wall_ms";
    out += "\n";
    for (const RunRecord& r : records) {
        const char* status = r.plan_status == PlanStatus::reached   ? "reached"
                             : r.plan_status == PlanStatus::trapped ? "trapped"
                                                                    : "step_limit";
        out += r.scenario_id + "," + to_string(r.variant) + "," + status + "," +
               fmt(r.planned_length) + "," + fmt(r.traveled_length) + "," +
               std::to_string(int(r.reached)) + "," + std::to_string(int(r.collision)) +
               "," + std::to_string(int(r.fail)) + "," + fmt(r.deviation_max) + "," +
               std::to_string(r.saturated_steps);
        if (include_timing) out += "," + fmt(r.wall_ms, "%.3f");
        out += "\n";
    }
    return out;
}

std::string records_to_json_text(const std::vector<RunRecord>& records,
                                 bool include_timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (const RunRecord& r : records) {
        nlohmann::json j;
        j["scenario_id"] = r.scenario_id;
        j["algorithm"] = to_string(r.variant);
        j["plan_status"] = r.plan_status == PlanStatus::reached   ? "reached"
                           : r.plan_status == PlanStatus::trapped ? "trapped"
                                                                  : "step_limit";
        j["planned_length"] = r.planned_length;
        j["traveled_length"] = r.traveled_length;
        j["reached"] = r.reached;
        j["collision"] = r.collision;
        j["fail"] = r.fail;
        j["deviation_max"] = r.deviation_max;
        j["saturated_steps"] = r.saturated_steps;
        if (include_timing) j["wall_ms"] = r.wall_ms;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string trajectory_to_csv(const Trajectory& traj, Variant variant, int dims) {
    std::string out = dims == 3 ? "time,x,y,z,cell_x,cell_y,cell_z,variant\n"
                                : "time,x,y,cell_x,cell_y,variant\n";
    const std::string vname = to_string(variant);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const Vec& p = traj.positions[i];
        const Cell c = containing_cell(p, dims);
        out += fmt(traj.times[i]) + "," + fmt(p.x()) + "," + fmt(p.y());
        if (dims == 3) out += "," + fmt(p.z());
        out += "," + std::to_string(c.x()) + "," + std::to_string(c.y());
        if (dims == 3) out += "," + std::to_string(c.z());
        out += "," + vname + "\n";
    }
    return out;
}

std::string schedule_to_csv(const std::vector<VelocityTriple>& schedule,
                            const PlanPath& plan, double speed) {
    const int dims = plan.waypoints.empty() ? 2 : plan.waypoints.front().dims;
    std::string out = "t";
    for (const char* name : {"v_d", "v_cur", "v_plan"}) {
        out += std::string(",") + name + "_x," + name + "_y";
        if (dims == 3) out += std::string(",") + name + "_z";
    }
    out += "\n";
    double t = 0.0;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        const VelocityTriple& triple = schedule[k];
        out += fmt(t);
        for (const Vec* v : {&triple.desired, &triple.current, &triple.commanded}) {
            out += "," + fmt(v->x()) + "," + fmt(v->y());
            if (dims == 3) out += "," + fmt(v->z());
        }
        out += "\n";
        t += euclidean_distance(plan.waypoints[k], plan.waypoints[k + 1]) / speed;
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    const auto parent = std::filesystem::path(path).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace uuvplan

#include "uuvplan/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace uuvplan {

using nlohmann::json;

GridMap MapSource::build(const std::vector<Cell>& protected_cells) const {
    if (!file.empty()) return GridMap::load(file);
    return generate_random_obstacles(extent, ratio, seed, protected_cells, style);
}

std::vector<Variant> ScenarioConfig::variants() const {
    switch (variant) {
        case VariantChoice::bnnp: return {Variant::bnnp};
        case VariantChoice::cbnnp: return {Variant::cbnnp};
        case VariantChoice::both: return {Variant::bnnp, Variant::cbnnp};
    }
    return {};
}

ScenarioConfig ScenarioConfig::defaults(int dims) {
    ScenarioConfig cfg;
    if (dims == 3) {
        cfg.map.extent = {10, 10, 10};
        cfg.origin = Cell(2, 1, 1);
        cfg.destination = Cell(9, 9, 9);
        cfg.current = CurrentSpec::static_3d(0.05, 0.0, 0.0);
    }
    return cfg;
}

void ScenarioConfig::validate() const {
    const int d = dims();
    if (d != 2 && d != 3)
        throw std::invalid_argument("config: extent must have 2 or 3 axes");
    if (map.file.empty()) {
        for (int e : map.extent)
            if (e <= 0) throw std::invalid_argument("config: extent must be positive");
        if (map.ratio < 0.0 || map.ratio > 0.9)
            throw std::invalid_argument("config: obstacle ratio must be in [0, 0.9]");
    }
    if (origin.dims != d || destination.dims != d)
        throw std::invalid_argument("config: origin/destination arity must match the map");
    if (origin == destination)
        throw std::invalid_argument("config: origin and destination must be distinct");
    if (!(gain > 0.0 && gain <= 1.0))
        throw std::invalid_argument("config: k_g must lie in (0, 1]");
    if (desired_speed <= 0.0)
        throw std::invalid_argument("config: desired_speed must be positive");
    if (current.speed < 0.0)
        throw std::invalid_argument("config: current speed must be >= 0");
    if (current.dims() != d)
        throw std::invalid_argument("config: current kind arity must match the map");
    if (ratio_sweep_seeds <= 0)
        throw std::invalid_argument("config: ratio sweep needs at least one seed");
    sim.validate();
}

namespace {

Cell cell_from_json(const json& j, int dims, const char* what) {
    auto v = j.get<std::vector<int>>();
    if (static_cast<int>(v.size()) != dims)
        throw std::invalid_argument(std::string("config: ") + what +
                                    " arity does not match the map extent");
    return dims == 2 ? Cell(v[0], v[1]) : Cell(v[0], v[1], v[2]);
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
    for (const auto& item : j.items()) {
        bool ok = false;
        for (const char* k : known)
            if (item.key() == k) {
                ok = true;
                break;
            }
        if (!ok)
            throw std::invalid_argument("config: unknown key '" + item.key() + "' in " +
                                        where);
    }
}

CurrentSpec current_from_json(const json& j, int dims) {
    reject_unknown_keys(j,
                        {"kind", "speed", "theta_xy", "theta_xz", "base_angle_deg",
                         "angle_amplitude_deg", "angle_period_s", "speed_amplitude",
                         "speed_period_s"},
                        "current");
    CurrentSpec spec;
    spec.kind = dims == 3 ? CurrentKind::static3d : CurrentKind::static2d;
    if (j.contains("kind")) spec.kind = current_kind_from_string(j.at("kind"));
    spec.speed = spec.kind == CurrentKind::dynamic2d ? 0.3 : 0.05;
    if (j.contains("speed")) spec.speed = j.at("speed").get<double>();
    if (j.contains("theta_xy")) spec.theta_xy = j.at("theta_xy").get<double>();
    if (j.contains("theta_xz")) spec.theta_xz = j.at("theta_xz").get<double>();
    if (spec.kind == CurrentKind::dynamic2d) {
        if (j.contains("base_angle_deg"))
            spec.base_angle_deg = j.at("base_angle_deg").get<double>();
        if (j.contains("angle_amplitude_deg"))
            spec.angle_amplitude_deg = j.at("angle_amplitude_deg").get<double>();
        if (j.contains("angle_period_s"))
            spec.angle_period_s = j.at("angle_period_s").get<double>();
        if (j.contains("speed_amplitude"))
            spec.speed_amplitude = j.at("speed_amplitude").get<double>();
        if (j.contains("speed_period_s"))
            spec.speed_period_s = j.at("speed_period_s").get<double>();
    }
    return spec;
}

}  // namespace

ScenarioConfig ScenarioConfig::from_json_text(const std::string& text) {
    json j = json::parse(text);
    reject_unknown_keys(j,
                        {"version", "id", "map", "origin", "destination", "k_g",
                         "desired_speed", "current", "variant", "sim", "out_dir",
                         "ratio_sweep_seeds"},
                        "config root");
    if (j.contains("version") && j.at("version").get<int>() != 1)
        throw std::invalid_argument("config: unsupported version");

    // Dimensionality comes from the map extent (or origin for file maps).
    int dims = 2;
    if (j.contains("map") && j.at("map").contains("random") &&
        j.at("map").at("random").contains("extent"))
        dims = static_cast<int>(j.at("map").at("random").at("extent").size());
    else if (j.contains("origin"))
        dims = static_cast<int>(j.at("origin").size());

    ScenarioConfig cfg = defaults(dims);
    if (j.contains("id")) cfg.id = j.at("id").get<std::string>();
    if (j.contains("map")) {
        const json& m = j.at("map");
        reject_unknown_keys(m, {"file", "random"}, "map");
        if (m.contains("file")) {
            cfg.map.file = m.at("file").get<std::string>();
            GridMap loaded = GridMap::load(cfg.map.file);
            cfg.map.extent = loaded.extent();
            dims = loaded.dims();
        }
        if (m.contains("random")) {
            const json& r = m.at("random");
            reject_unknown_keys(r, {"extent", "ratio", "seed", "style"}, "map.random");
            if (r.contains("extent")) cfg.map.extent = r.at("extent").get<std::vector<int>>();
            if (r.contains("ratio")) cfg.map.ratio = r.at("ratio").get<double>();
            if (r.contains("seed")) cfg.map.seed = r.at("seed").get<std::uint64_t>();
            if (r.contains("style")) {
                const std::string s = r.at("style").get<std::string>();
                if (s == "cells")
                    cfg.map.style = ObstacleStyle::cells;
                else if (s == "blocks")
                    cfg.map.style = ObstacleStyle::blocks;
                else
                    throw std::invalid_argument("config: obstacle style must be cells|blocks");
            }
        }
    }
    if (j.contains("origin")) cfg.origin = cell_from_json(j.at("origin"), dims, "origin");
    if (j.contains("destination"))
        cfg.destination = cell_from_json(j.at("destination"), dims, "destination");
    if (j.contains("k_g")) cfg.gain = j.at("k_g").get<double>();
    if (j.contains("desired_speed")) cfg.desired_speed = j.at("desired_speed").get<double>();
    if (j.contains("current")) cfg.current = current_from_json(j.at("current"), dims);
    if (j.contains("variant")) {
        const std::string v = j.at("variant").get<std::string>();
        if (v == "bnnp")
            cfg.variant = VariantChoice::bnnp;
        else if (v == "cbnnp")
            cfg.variant = VariantChoice::cbnnp;
        else if (v == "both")
            cfg.variant = VariantChoice::both;
        else
            throw std::invalid_argument("config: variant must be bnnp|cbnnp|both");
    }
    if (j.contains("sim")) {
        const json& s = j.at("sim");
        reject_unknown_keys(
            s, {"dt", "capture_radius", "v_max", "time_limit_factor"}, "sim");
        if (s.contains("dt")) cfg.sim.dt = s.at("dt").get<double>();
        if (s.contains("capture_radius"))
            cfg.sim.capture_radius = s.at("capture_radius").get<double>();
        if (s.contains("v_max")) cfg.sim.v_max = s.at("v_max").get<double>();
        if (s.contains("time_limit_factor"))
            cfg.sim.time_limit_factor = s.at("time_limit_factor").get<double>();
    }
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("ratio_sweep_seeds"))
        cfg.ratio_sweep_seeds = j.at("ratio_sweep_seeds").get<int>();

    cfg.sim.desired_speed = cfg.desired_speed;
    cfg.sim.gain = cfg.gain;
    cfg.validate();
    return cfg;
}

ScenarioConfig ScenarioConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string ScenarioConfig::to_json_text() const {
    json j;
    j["version"] = 1;
    j["id"] = id;
    if (!map.file.empty()) {
        j["map"]["file"] = map.file;
    } else {
        j["map"]["random"]["extent"] = map.extent;
        j["map"]["random"]["ratio"] = map.ratio;
        j["map"]["random"]["seed"] = map.seed;
        j["map"]["random"]["style"] =
            map.style == ObstacleStyle::cells ? "cells" : "blocks";
    }
    std::vector<int> o(origin.c.begin(), origin.c.begin() + dims());
    std::vector<int> d(destination.c.begin(), destination.c.begin() + dims());
    j["origin"] = o;
    j["destination"] = d;
    j["k_g"] = gain;
    j["desired_speed"] = desired_speed;
    j["current"]["kind"] = to_string(current.kind);
    j["current"]["speed"] = current.speed;
    j["current"]["theta_xy"] = current.theta_xy;
    if (current.kind == CurrentKind::static3d) j["current"]["theta_xz"] = current.theta_xz;
    if (current.kind == CurrentKind::dynamic2d) {
        j["current"]["base_angle_deg"] = current.base_angle_deg;
        j["current"]["angle_amplitude_deg"] = current.angle_amplitude_deg;
        j["current"]["angle_period_s"] = current.angle_period_s;
        j["current"]["speed_amplitude"] = current.speed_amplitude;
        j["current"]["speed_period_s"] = current.speed_period_s;
    }
    j["variant"] = variant == VariantChoice::bnnp    ? "bnnp"
                   : variant == VariantChoice::cbnnp ? "cbnnp"
                                                     : "both";
    j["sim"]["dt"] = sim.dt;
    j["sim"]["capture_radius"] = sim.capture_radius;
    j["sim"]["v_max"] = sim.v_max;
    j["sim"]["time_limit_factor"] = sim.time_limit_factor;
    j["out_dir"] = out_dir;
    return j.dump(2) + "\n";
}

std::string RunRecord::table_cell() const {
    if (reached) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", traveled_length);
        return buf;
    }
    if (collision && fail) return "C & F";
    if (collision) return "C";
    return "F";
}

}  // namespace uuvplan

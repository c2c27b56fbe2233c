#include "chtails/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace chtails {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (...) {
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError("key '" + key + "': expected a number, got '" + v + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    size_t pos = 0;
    long x;
    try {
        x = std::stol(v, &pos);
    } catch (...) {
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    }
    if (pos != v.size())
        throw ConfigError("key '" + key + "': expected an integer, got '" + v + "'");
    return static_cast<int>(x);
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true") return true;
    if (v == "false") return false;
    throw ConfigError("key '" + key + "': expected true or false, got '" + v + "'");
}

std::string fmt_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void validate(RunConfig& c) {
    static const std::set<std::string> experiments = {
        "compact_support", "persistence", "unique_continuation", "peakon", "fast_decay"};
    if (c.experiment.empty()) throw ConfigError("missing required key 'experiment'");
    if (!experiments.count(c.experiment))
        throw ConfigError("key 'experiment': unknown experiment '" + c.experiment + "'");

    if (c.grid.n < 16) throw ConfigError("key 'grid.n': must be >= 16");
    if (!(c.grid.x_min < c.grid.x_max)) throw ConfigError("key 'grid.x_min': must be < grid.x_max");
    if (!(c.time.cfl > 0.0 && c.time.cfl <= 0.5)) throw ConfigError("key 'time.cfl': must be in (0, 0.5]");
    if (!(c.time.dt_max > 0.0)) throw ConfigError("key 'time.dt_max': must be > 0");
    if (!(c.time.t_end > 0.0)) throw ConfigError("key 'time.t_end': must be > 0");
    if (c.time.monitor_stride < 1) throw ConfigError("key 'time.monitor_stride': must be >= 1");

    if (c.scenario.kind.empty()) {
        static const std::map<std::string, std::string> default_kind = {
            {"compact_support", "compact_bump"},
            {"persistence", "sech_tail"},
            {"unique_continuation", "compact_bump"},
            {"peakon", "smoothed_peakon"},
            {"fast_decay", "custom"}};
        c.scenario.kind = default_kind.at(c.experiment);
    }
    static const std::set<std::string> kinds = {
        "compact_bump", "sech_tail", "peakon", "smoothed_peakon", "custom"};
    if (!kinds.count(c.scenario.kind))
        throw ConfigError("key 'scenario.kind': unknown kind '" + c.scenario.kind + "'");
    if (!(c.scenario.theta > 0.0 && c.scenario.theta < 1.0))
        throw ConfigError("key 'scenario.theta': theta must be in (0,1)");
    if (!(c.weight.theta > 0.0 && c.weight.theta < 1.0))
        throw ConfigError("key 'weight.theta': theta must be in (0,1)");
    if (c.weight.N < 1) throw ConfigError("key 'weight.N': must be >= 1");
    if (!(c.scenario.width > 0.0)) throw ConfigError("key 'scenario.width': must be > 0");
    if (!(c.scenario.epsilon > 0.0)) throw ConfigError("key 'scenario.epsilon': must be > 0");
    if (!(c.scenario.mu > 0.0)) throw ConfigError("key 'scenario.mu': must be > 0");
    if (c.scenario.custom_profile != "gaussian" && c.scenario.custom_profile != "odd_gaussian" &&
        c.scenario.custom_profile != "right_exponential")
        throw ConfigError(
            "key 'scenario.custom_profile': must be gaussian, odd_gaussian or right_exponential");

    auto positive = [](const char* key, double v) {
        if (!(v > 0.0)) throw ConfigError(std::string("key '") + key + "': must be > 0");
    };
    positive("tolerances.slope_tol", c.tolerances.slope_tol);
    positive("tolerances.persistence_slope_tol", c.tolerances.persistence_slope_tol);
    positive("tolerances.r2_min", c.tolerances.r2_min);
    positive("tolerances.e_match_tol", c.tolerances.e_match_tol);
    positive("tolerances.deriv_match_tol", c.tolerances.deriv_match_tol);
    positive("tolerances.c0_match_tol", c.tolerances.c0_match_tol);
    positive("tolerances.drift_tol", c.tolerances.drift_tol);
    positive("tolerances.plateau_tol", c.tolerances.plateau_tol);
    positive("tolerances.peakon_dist_tol", c.tolerances.peakon_dist_tol);
    positive("tolerances.peakon_shape_tol", c.tolerances.peakon_shape_tol);
    if (!(c.tolerances.support_threshold > 0.0 && c.tolerances.support_threshold < 1.0))
        throw ConfigError("key 'tolerances.support_threshold': must be in (0,1)");
    if (!(c.tolerances.value_floor > 0.0 && c.tolerances.value_floor < 1.0))
        throw ConfigError("key 'tolerances.value_floor': must be in (0,1)");
    if (c.tolerances.support_pad_cells < 0)
        throw ConfigError("key 'tolerances.support_pad_cells': must be >= 0");
    if (!(c.windows.margin > 0.0)) throw ConfigError("key 'windows.margin': must be > 0");
    if (!(c.windows.width > 0.0)) throw ConfigError("key 'windows.width': must be > 0");
    if (!(c.windows.margin + c.windows.width < 0.5 * (c.grid.x_max - c.grid.x_min)))
        throw ConfigError("key 'windows.margin': margin + width must fit in half the domain");

    // experiment / scenario compatibility
    const std::string& k = c.scenario.kind;
    if (c.experiment == "persistence" && k != "sech_tail")
        throw ConfigError("key 'scenario.kind': persistence requires sech_tail data");
    if (c.experiment == "compact_support" && k != "compact_bump" &&
        !(k == "custom" && c.scenario.custom_profile == "right_exponential"))
        throw ConfigError("key 'scenario.kind': compact_support requires compact_bump "
                          "(or the custom right_exponential variant)");
    if (c.experiment == "unique_continuation" && k != "compact_bump")
        throw ConfigError("key 'scenario.kind': unique_continuation requires compact_bump data");
    if (c.experiment == "peakon" && k != "smoothed_peakon")
        throw ConfigError("key 'scenario.kind': peakon validation requires smoothed_peakon data");
    if (c.experiment == "fast_decay") {
        if (k == "sech_tail")
            throw ConfigError("key 'scenario.kind': sech_tail decays like e^{-theta|x|} with "
                              "theta < 1 and cannot satisfy the fast-decay hypothesis "
                              "e^{-(1+mu)|x|}; use the gaussian custom profile");
        if (!(k == "custom" && (c.scenario.custom_profile == "gaussian" ||
                               c.scenario.custom_profile == "odd_gaussian")))
            throw ConfigError("key 'scenario.kind': fast_decay requires a gaussian-class custom profile");
    }
    if (k == "smoothed_peakon") {
        const double dx = (c.grid.x_max - c.grid.x_min) / (c.grid.n - 1);
        if (c.scenario.epsilon < 4.0 * dx)
            throw ConfigError("key 'scenario.epsilon': must be >= 4 grid spacings");
    }

    // output formats
    std::stringstream ss(c.output.formats);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok != "csv" && tok != "json" && tok != "profiles")
            throw ConfigError("key 'output.formats': unknown format '" + tok + "'");
    }
}

} // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::map<std::string, std::function<void(const std::string&, const std::string&)>> setters = {
        {"experiment", [&](const std::string&, const std::string& v) { c.experiment = v; }},
        {"grid.x_min", [&](const std::string& k, const std::string& v) { c.grid.x_min = parse_double(k, v); }},
        {"grid.x_max", [&](const std::string& k, const std::string& v) { c.grid.x_max = parse_double(k, v); }},
        {"grid.n", [&](const std::string& k, const std::string& v) { c.grid.n = parse_int(k, v); }},
        {"time.cfl", [&](const std::string& k, const std::string& v) { c.time.cfl = parse_double(k, v); }},
        {"time.dt_max", [&](const std::string& k, const std::string& v) { c.time.dt_max = parse_double(k, v); }},
        {"time.t_end", [&](const std::string& k, const std::string& v) { c.time.t_end = parse_double(k, v); }},
        {"time.monitor_stride", [&](const std::string& k, const std::string& v) { c.time.monitor_stride = parse_int(k, v); }},
        {"time.tail_clamp", [&](const std::string& k, const std::string& v) { c.time.tail_clamp = parse_bool(k, v); }},
        {"scenario.kind", [&](const std::string&, const std::string& v) { c.scenario.kind = v; }},
        {"scenario.amplitude", [&](const std::string& k, const std::string& v) { c.scenario.amplitude = parse_double(k, v); }},
        {"scenario.center", [&](const std::string& k, const std::string& v) { c.scenario.center = parse_double(k, v); }},
        {"scenario.width", [&](const std::string& k, const std::string& v) { c.scenario.width = parse_double(k, v); }},
        {"scenario.theta", [&](const std::string& k, const std::string& v) { c.scenario.theta = parse_double(k, v); }},
        {"scenario.c", [&](const std::string& k, const std::string& v) { c.scenario.c = parse_double(k, v); }},
        {"scenario.epsilon", [&](const std::string& k, const std::string& v) { c.scenario.epsilon = parse_double(k, v); }},
        {"scenario.mu", [&](const std::string& k, const std::string& v) { c.scenario.mu = parse_double(k, v); }},
        {"scenario.custom_profile", [&](const std::string&, const std::string& v) { c.scenario.custom_profile = v; }},
        {"tolerances.slope_tol", [&](const std::string& k, const std::string& v) { c.tolerances.slope_tol = parse_double(k, v); }},
        {"tolerances.persistence_slope_tol", [&](const std::string& k, const std::string& v) { c.tolerances.persistence_slope_tol = parse_double(k, v); }},
        {"tolerances.r2_min", [&](const std::string& k, const std::string& v) { c.tolerances.r2_min = parse_double(k, v); }},
        {"tolerances.e_match_tol", [&](const std::string& k, const std::string& v) { c.tolerances.e_match_tol = parse_double(k, v); }},
        {"tolerances.deriv_match_tol", [&](const std::string& k, const std::string& v) { c.tolerances.deriv_match_tol = parse_double(k, v); }},
        {"tolerances.c0_match_tol", [&](const std::string& k, const std::string& v) { c.tolerances.c0_match_tol = parse_double(k, v); }},
        {"tolerances.drift_tol", [&](const std::string& k, const std::string& v) { c.tolerances.drift_tol = parse_double(k, v); }},
        {"tolerances.support_threshold", [&](const std::string& k, const std::string& v) { c.tolerances.support_threshold = parse_double(k, v); }},
        {"tolerances.support_pad_cells", [&](const std::string& k, const std::string& v) { c.tolerances.support_pad_cells = parse_int(k, v); }},
        {"tolerances.value_floor", [&](const std::string& k, const std::string& v) { c.tolerances.value_floor = parse_double(k, v); }},
        {"tolerances.plateau_tol", [&](const std::string& k, const std::string& v) { c.tolerances.plateau_tol = parse_double(k, v); }},
        {"tolerances.peakon_dist_tol", [&](const std::string& k, const std::string& v) { c.tolerances.peakon_dist_tol = parse_double(k, v); }},
        {"tolerances.peakon_shape_tol", [&](const std::string& k, const std::string& v) { c.tolerances.peakon_shape_tol = parse_double(k, v); }},
        {"windows.margin", [&](const std::string& k, const std::string& v) { c.windows.margin = parse_double(k, v); }},
        {"windows.width", [&](const std::string& k, const std::string& v) { c.windows.width = parse_double(k, v); }},
        {"weight.theta", [&](const std::string& k, const std::string& v) { c.weight.theta = parse_double(k, v); }},
        {"weight.N", [&](const std::string& k, const std::string& v) { c.weight.N = parse_int(k, v); }},
        {"output.directory", [&](const std::string&, const std::string& v) { c.output.directory = v; }},
        {"output.formats", [&](const std::string&, const std::string& v) { c.output.formats = v; }},
    };

    std::set<std::string> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        auto it = setters.find(key);
        if (it == setters.end()) throw ConfigError("unknown key '" + key + "'");
        if (!seen.insert(key).second) throw ConfigError("duplicate key '" + key + "'");
        it->second(key, val);
    }
    validate(c);
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str());
}

std::string print_config(const RunConfig& c) {
    std::map<std::string, std::string> kv = {
        {"experiment", c.experiment},
        {"grid.x_min", fmt_double(c.grid.x_min)},
        {"grid.x_max", fmt_double(c.grid.x_max)},
        {"grid.n", std::to_string(c.grid.n)},
        {"time.cfl", fmt_double(c.time.cfl)},
        {"time.dt_max", fmt_double(c.time.dt_max)},
        {"time.t_end", fmt_double(c.time.t_end)},
        {"time.monitor_stride", std::to_string(c.time.monitor_stride)},
        {"time.tail_clamp", c.time.tail_clamp ? "true" : "false"},
        {"scenario.kind", c.scenario.kind},
        {"scenario.amplitude", fmt_double(c.scenario.amplitude)},
        {"scenario.center", fmt_double(c.scenario.center)},
        {"scenario.width", fmt_double(c.scenario.width)},
        {"scenario.theta", fmt_double(c.scenario.theta)},
        {"scenario.c", fmt_double(c.scenario.c)},
        {"scenario.epsilon", fmt_double(c.scenario.epsilon)},
        {"scenario.mu", fmt_double(c.scenario.mu)},
        {"scenario.custom_profile", c.scenario.custom_profile},
        {"tolerances.slope_tol", fmt_double(c.tolerances.slope_tol)},
        {"tolerances.persistence_slope_tol", fmt_double(c.tolerances.persistence_slope_tol)},
        {"tolerances.r2_min", fmt_double(c.tolerances.r2_min)},
        {"tolerances.e_match_tol", fmt_double(c.tolerances.e_match_tol)},
        {"tolerances.deriv_match_tol", fmt_double(c.tolerances.deriv_match_tol)},
        {"tolerances.c0_match_tol", fmt_double(c.tolerances.c0_match_tol)},
        {"tolerances.drift_tol", fmt_double(c.tolerances.drift_tol)},
        {"tolerances.support_threshold", fmt_double(c.tolerances.support_threshold)},
        {"tolerances.support_pad_cells", std::to_string(c.tolerances.support_pad_cells)},
        {"tolerances.value_floor", fmt_double(c.tolerances.value_floor)},
        {"tolerances.plateau_tol", fmt_double(c.tolerances.plateau_tol)},
        {"tolerances.peakon_dist_tol", fmt_double(c.tolerances.peakon_dist_tol)},
        {"tolerances.peakon_shape_tol", fmt_double(c.tolerances.peakon_shape_tol)},
        {"windows.margin", fmt_double(c.windows.margin)},
        {"windows.width", fmt_double(c.windows.width)},
        {"weight.theta", fmt_double(c.weight.theta)},
        {"weight.N", std::to_string(c.weight.N)},
        {"output.directory", c.output.directory},
        {"output.formats", c.output.formats},
    };
    std::string out;
    for (const auto& [k, v] : kv) out += k + " = " + v + "\n";
    return out;
}

bool has_format(const RunConfig& cfg, const std::string& fmt) {
    std::stringstream ss(cfg.output.formats);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (trim(tok) == fmt) return true;
    return false;
}

std::string resolve_output_dir(const RunConfig& cfg) {
    if (const char* env = std::getenv("CH_TAILS_OUT"); env && *env) return env;
    return cfg.output.directory;
}

} // namespace chtails

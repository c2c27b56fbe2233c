#ifndef CHTAILS_CONFIG_HPP
#define CHTAILS_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace chtails {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridConfig {
    double x_min = -60.0;
    double x_max = 60.0;
    int n = 8192;
    bool operator==(const GridConfig&) const = default;
};

struct TimeConfig {
    double cfl = 0.25;
    double dt_max = 0.01;
    double t_end = 1.0;
    int monitor_stride = 5;
    bool tail_clamp = true;
    bool operator==(const TimeConfig&) const = default;
};

struct ScenarioConfig {
    std::string kind;   // empty: defaulted from the experiment
    double amplitude = 0.25;
    double center = 0.0;
    double width = 2.0;
    double theta = 0.5;       // sech tail decay exponent
    double c = 1.0;           // peakon speed
    double epsilon = 0.1;     // mollification width
    double mu = 0.5;          // fast-decay margin over e^{-|x|}
    std::string custom_profile = "gaussian";
    bool operator==(const ScenarioConfig&) const = default;
};

struct ToleranceConfig {
    double slope_tol = 0.05;
    double persistence_slope_tol = 0.02;
    double r2_min = 0.999;
    double e_match_tol = 0.005;     // c_plus vs E_plus
    double deriv_match_tol = 0.01;  // dE_plus/dt vs predicted
    double c0_match_tol = 0.02;     // tail prefactor vs accumulated source
    double drift_tol = 1e-6;        // conserved-quantity drift
    double support_threshold = 1e-8;
    int support_pad_cells = 3;
    double value_floor = 1e-13;     // relative floor for tail fits
    double plateau_tol = 0.05;
    double peakon_dist_tol = 0.02;
    double peakon_shape_tol = 0.02;
    bool operator==(const ToleranceConfig&) const = default;
};

struct WindowConfig {
    double margin = 40.0;
    double width = 10.0;
    bool operator==(const WindowConfig&) const = default;
};

struct WeightConfig {
    double theta = 0.5;
    int N = 30;
    bool operator==(const WeightConfig&) const = default;
};

struct OutputConfig {
    std::string directory = "out";
    std::string formats = "csv,json"; // comma list of csv, json, profiles
    bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
    std::string experiment; // compact_support | persistence | unique_continuation | peakon | fast_decay
    GridConfig grid;
    TimeConfig time;
    ScenarioConfig scenario;
    ToleranceConfig tolerances;
    WindowConfig windows;
    WeightConfig weight;
    OutputConfig output;
    bool operator==(const RunConfig&) const = default;
};

// Strict parse: unknown or duplicate keys rejected naming the key; values
// type- and range-checked; scenario kind resolved against the experiment.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// Canonical text form; parse_config(print_config(cfg)) == cfg.
std::string print_config(const RunConfig& cfg);

bool has_format(const RunConfig& cfg, const std::string& fmt);

// output.directory unless CH_TAILS_OUT is set in the environment.
std::string resolve_output_dir(const RunConfig& cfg);

} // namespace chtails

#endif

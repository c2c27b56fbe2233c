#ifndef CHTAILS_SCENARIOS_HPP
#define CHTAILS_SCENARIOS_HPP

#include "chtails/config.hpp"
#include "chtails/dynamics.hpp"
#include "chtails/grid.hpp"

#include <string>
#include <vector>

namespace chtails {

// Initial-data profiles.  compact_bump is C-infinity with exact compact
// support; sech_tail has two-sided e^{-theta|x|} tails; peakon is the
// kinked traveling wave; smoothed_peakon is its mollification (unit-mass
// compact mollifier of width epsilon, evaluated by fine quadrature);
// custom covers gaussian and the right_exponential profile whose momentum
// is compactly supported while u itself carries an exact e^{-x} tail.
Field make_initial(const Grid1D& g, const ScenarioConfig& sc);

// int m(z) e^{z} dz for the width-eps mollifier; exact tail-coefficient
// factor of the smoothed peakon.
double mollifier_exp_moment(double eps);

struct Verdict {
    std::string id;          // maps onto one acceptance criterion
    std::string description;
    double measured = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct MonitorRow {
    double t = 0, H1 = 0, M0 = 0, E_plus = 0, E_minus = 0, dEplus_pred = 0;
    double c_plus = 0, c_minus = 0, slope_right = 0, slope_left = 0;
    double supp_left = 0, supp_right = 0, eta_a = 0, eta_b = 0;
    double wsup_u = 0, wsup_ux = 0;
};

struct ExperimentReport {
    std::string name;
    RunConfig config;
    std::vector<MonitorRow> rows;
    std::vector<Verdict> verdicts;
    Trajectory trajectory; // retained for optional profile output
    bool partial = false;
    std::string error;
    bool all_pass() const;
};

ExperimentReport run_persistence(const RunConfig& cfg);
ExperimentReport run_compact_support(const RunConfig& cfg);
ExperimentReport run_unique_continuation(const RunConfig& cfg); // t1 = time.t_end
ExperimentReport run_peakon_validation(const RunConfig& cfg);
ExperimentReport run_fast_decay(const RunConfig& cfg);

// Dispatch on cfg.experiment.
ExperimentReport run_experiment(const RunConfig& cfg);

std::vector<std::string> list_scenarios();

} // namespace chtails

#endif

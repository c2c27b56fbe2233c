#ifndef CHTAILS_DYNAMICS_HPP
#define CHTAILS_DYNAMICS_HPP

#include "chtails/greens.hpp"
#include "chtails/grid.hpp"

#include <functional>
#include <string>
#include <vector>

namespace chtails {

// -u u_x - G'*(u^2 + u_x^2/2): the evolution right-hand side.
Field rhs(const Field& u);

// -u h_x - 2 u_x h: transport form of the momentum density.
Field rhs_momentum(const Field& h, const Field& u);

struct TimeStepConfig {
    double cfl = 0.25;       // advective CFL number, <= 0.5
    double dt_max = 0.01;
    double t_end = 1.0;
    int monitor_stride = 5;  // steps between diagnostic records
    std::vector<double> checkpoints; // forced record times (hit exactly)
    bool tail_clamp = true;  // zero out |u| < 1e-300 (denormal guard only)
};

struct SolverState {
    double t = 0.0;
    Field u;
    long step_count = 0;
};

// One classical RK4 advance by dt.  Returns false (state untouched) when a
// stage or the result goes non-finite.
bool step_rk4(SolverState& s, double dt);

struct Trajectory {
    Grid1D grid;
    std::vector<double> times;                  // monitor times
    std::vector<std::vector<double>> snapshots; // u at monitor times
    long steps = 0;
    double t_final = 0.0;
    bool completed = false;
    std::string error; // "blow-up or instability detected" on failure
};

using Monitor = std::function<void(double, const Field&)>;

// Integrates to t_end, recording at t = 0, every monitor_stride-th step,
// every checkpoint, and t_end.  On blow-up the partial trajectory is
// returned with completed = false and the error set.
Trajectory evolve(const Field& u0, const TimeStepConfig& cfg,
                  const std::vector<Monitor>& monitors = {});

// Same stepping driven through the momentum transport equation,
// reconstructing u = G*h at every stage.  Cross-check only.
Trajectory evolve_momentum(const Field& h0, const TimeStepConfig& cfg);

// Conserved functionals used by the drift monitors.
double H1_norm_sq(const Field& u);   // int (u^2 + u_x^2) dx
double momentum_total(const Field& u); // int (u - u_xx) dx

} // namespace chtails

#endif

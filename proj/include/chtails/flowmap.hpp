#ifndef CHTAILS_FLOWMAP_HPP
#define CHTAILS_FLOWMAP_HPP

#include "chtails/dynamics.hpp"
#include "chtails/grid.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace chtails {

// Velocity samples (u and u_x) at the recorded monitor times; evaluation is
// cubic 4-point Lagrange in space, linear in time between records.
struct VelocityRecord {
    Grid1D grid;
    std::vector<double> times;
    std::vector<std::vector<double>> u;
    std::vector<std::vector<double>> ux;
};

VelocityRecord make_velocity_record(const Trajectory& traj);

// Cubic interpolation of nodal values at position xi (clamped stencil near
// the boundaries).  Out-of-domain positions are the caller's problem.
double interp4(const Grid1D& g, const std::vector<double>& f, double xi);

struct FlowState {
    std::vector<double> labels; // initial positions, strictly increasing
    std::vector<double> eta;    // current positions
    std::vector<double> jac;    // d(eta)/d(label)
    std::vector<std::uint8_t> escaped; // left the recorded domain at some time
    double t = 0.0;
};

FlowState init_flow(const std::vector<double>& labels);

// Advances all particles from fs.t to t_to with one RK4 step per record
// interval.  Throws on jac <= 0 ("flow degenerated").
void advance_flow(FlowState& fs, const VelocityRecord& rec, double t_to);

// Images of the initial support endpoints; a and b must be tracked labels.
std::pair<double, double> support_endpoints(const FlowState& fs, double a, double b);

struct ConservationResidual {
    double max_abs = 0.0;
    double rms = 0.0;
    int counted = 0;
};

// Per-particle residual of h_now(eta) * jac^2 - h0(label), over particles
// with |h0| above 1e-10 of its max; escaped particles excluded.
ConservationResidual check_momentum_conservation(const FlowState& fs,
                                                 const Field& h_now,
                                                 const Field& h0);

} // namespace chtails

#endif

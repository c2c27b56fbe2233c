#include "chtails/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chtails {

namespace {

constexpr double u_floor = 1e-12;   // CFL velocity floor
constexpr double dt_floor = 1e-12;  // below this the run is declared dead

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

// rhs on raw vectors; scratch buffers supplied by the caller so the RK4
// loop does not allocate.
struct RhsWork {
    std::vector<double> ux, F, rev;
    explicit RhsWork(size_t n) : ux(n), F(n), rev(n) {}
};

void rhs_raw(const std::vector<double>& u, double h, RhsWork& w, std::vector<double>& out) {
    const int n = static_cast<int>(u.size());
    diff1(u.data(), w.ux.data(), n, h);
    for (int i = 0; i < n; ++i)
        w.F[i] = u[i] * u[i] + 0.5 * w.ux[i] * w.ux[i];
    std::vector<double> P = cum_exp_left(w.F, h);
    std::copy(w.F.rbegin(), w.F.rend(), w.rev.begin());
    std::vector<double> Q = cum_exp_left(w.rev, h);
    // conv_dG(F) = (Q - P)/2 with Q reversed in place below
    out.resize(u.size());
    for (int i = 0; i < n; ++i)
        out[i] = -u[i] * w.ux[i] - 0.5 * (Q[n - 1 - i] - P[i]);
}

} // namespace

Field rhs(const Field& u) {
    RhsWork w(u.values.size());
    Field out = make_field(u.grid, "du/dt");
    rhs_raw(u.values, u.grid.dx, w, out.values);
    return out;
}

Field rhs_momentum(const Field& h, const Field& u) {
    if (!(h.grid == u.grid)) throw std::invalid_argument("rhs_momentum: grids differ");
    Field hx = derivative(h);
    Field ux = derivative(u);
    Field out = make_field(h.grid, "dh/dt");
    for (int i = 0; i < h.grid.n; ++i)
        out.values[i] = -u.values[i] * hx.values[i] - 2.0 * ux.values[i] * h.values[i];
    return out;
}

bool step_rk4(SolverState& s, double dt) {
    const size_t n = s.u.values.size();
    const double h = s.u.grid.dx;
    RhsWork w(n);
    std::vector<double> k1, k2, k3, k4, tmp(n);

    rhs_raw(s.u.values, h, w, k1);
    for (size_t i = 0; i < n; ++i) tmp[i] = s.u.values[i] + 0.5 * dt * k1[i];
    rhs_raw(tmp, h, w, k2);
    for (size_t i = 0; i < n; ++i) tmp[i] = s.u.values[i] + 0.5 * dt * k2[i];
    rhs_raw(tmp, h, w, k3);
    for (size_t i = 0; i < n; ++i) tmp[i] = s.u.values[i] + dt * k3[i];
    rhs_raw(tmp, h, w, k4);

    for (size_t i = 0; i < n; ++i)
        tmp[i] = s.u.values[i] + dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
    if (!all_finite(tmp)) return false;

    s.u.values.swap(tmp);
    s.t += dt;
    ++s.step_count;
    return true;
}

namespace {

struct Recorder {
    Trajectory* traj;
    const std::vector<Monitor>* monitors;
    void emit(double t, const Field& u) {
        if (!traj->times.empty() && t <= traj->times.back()) return; // dedup coincident records
        traj->times.push_back(t);
        traj->snapshots.push_back(u.values);
        for (const auto& m : *monitors) m(t, u);
    }
};

} // namespace

Trajectory evolve(const Field& u0, const TimeStepConfig& cfg,
                  const std::vector<Monitor>& monitors) {
    if (!(cfg.t_end > 0.0)) throw std::invalid_argument("evolve: t_end must be > 0");
    if (!(cfg.cfl > 0.0 && cfg.cfl <= 0.5)) throw std::invalid_argument("evolve: cfl must be in (0, 0.5]");
    if (cfg.monitor_stride < 1) throw std::invalid_argument("evolve: monitor_stride must be >= 1");

    Trajectory traj;
    traj.grid = u0.grid;
    Recorder rec{&traj, &monitors};

    // sorted forced record times within (0, t_end]
    std::vector<double> events(cfg.checkpoints);
    events.push_back(cfg.t_end);
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());
    std::erase_if(events, [&](double t) { return t <= 0.0 || t > cfg.t_end; });

    SolverState s{0.0, u0, 0};
    traj.times.push_back(0.0);
    traj.snapshots.push_back(s.u.values);
    for (const auto& m : monitors) m(0.0, s.u);

    size_t next_event = 0;
    while (next_event < events.size()) {
        const double target = events[next_event];
        double dt = std::min(cfg.dt_max, cfg.cfl * u0.grid.dx / std::max(max_abs(s.u.values), u_floor));
        if (dt < dt_floor) { // CFL collapse; checked before event clipping,
            traj.error = "blow-up or instability detected"; // which may shorten
            traj.t_final = s.t;                             // dt legitimately
            traj.steps = s.step_count;
            return traj;
        }
        bool hit_event = false;
        // Land exactly on the event once it is within 1.5 steps; the window
        // absorbs the roundoff drift of accumulating many equal steps.
        if (target - s.t <= 1.5 * dt) {
            dt = target - s.t;
            hit_event = true;
        }
        if (!step_rk4(s, dt)) {
            traj.error = "blow-up or instability detected";
            traj.t_final = s.t;
            traj.steps = s.step_count;
            return traj;
        }
        if (cfg.tail_clamp)
            for (double& v : s.u.values)
                if (std::fabs(v) < 1e-300) v = 0.0;
        if (hit_event) {
            s.t = target; // land exactly, no drift
            ++next_event;
            rec.emit(s.t, s.u);
        } else if (s.step_count % cfg.monitor_stride == 0) {
            rec.emit(s.t, s.u);
        }
    }
    traj.completed = true;
    traj.t_final = s.t;
    traj.steps = s.step_count;
    return traj;
}

Trajectory evolve_momentum(const Field& h0, const TimeStepConfig& cfg) {
    // RK4 on dh/dt = -u h_x - 2 u_x h with u = G*h per stage
    Trajectory traj;
    traj.grid = h0.grid;
    const int n = h0.grid.n;
    const double dx = h0.grid.dx;

    auto rhs_m = [&](const std::vector<double>& h) {
        Field hf{h0.grid, h, "h"};
        Field u = conv_G(hf);
        Field r = rhs_momentum(hf, u);
        return r.values;
    };

    std::vector<double> h = h0.values;
    double t = 0.0;
    long steps = 0;
    traj.times.push_back(0.0);
    traj.snapshots.push_back(h);
    while (t < cfg.t_end - 1e-14) {
        Field uf = conv_G(Field{h0.grid, h, "h"});
        double dt = std::min(cfg.dt_max, cfg.cfl * dx / std::max(max_abs(uf.values), u_floor));
        if (cfg.t_end - t <= 1.5 * dt) dt = cfg.t_end - t;
        std::vector<double> k1 = rhs_m(h), s2(n), s3(n), s4(n);
        for (int i = 0; i < n; ++i) s2[i] = h[i] + 0.5 * dt * k1[i];
        std::vector<double> k2 = rhs_m(s2);
        for (int i = 0; i < n; ++i) s3[i] = h[i] + 0.5 * dt * k2[i];
        std::vector<double> k3 = rhs_m(s3);
        for (int i = 0; i < n; ++i) s4[i] = h[i] + dt * k3[i];
        std::vector<double> k4 = rhs_m(s4);
        for (int i = 0; i < n; ++i)
            h[i] += dt / 6.0 * (k1[i] + 2.0 * (k2[i] + k3[i]) + k4[i]);
        t += dt;
        ++steps;
        if (!all_finite(h)) {
            traj.error = "blow-up or instability detected";
            traj.t_final = t;
            traj.steps = steps;
            return traj;
        }
    }
    traj.times.push_back(cfg.t_end);
    traj.snapshots.push_back(h);
    traj.completed = true;
    traj.t_final = cfg.t_end;
    traj.steps = steps;
    return traj;
}

double H1_norm_sq(const Field& u) {
    Field ux = derivative(u);
    std::vector<double> f(u.values.size());
    for (size_t i = 0; i < f.size(); ++i)
        f[i] = u.values[i] * u.values[i] + ux.values[i] * ux.values[i];
    return trapezoid(f, u.grid.dx);
}

double momentum_total(const Field& u) { return integrate(apply_helmholtz(u)); }

} // namespace chtails

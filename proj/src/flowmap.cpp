#include "chtails/flowmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chtails {

VelocityRecord make_velocity_record(const Trajectory& traj) {
    VelocityRecord rec;
    rec.grid = traj.grid;
    rec.times = traj.times;
    rec.u = traj.snapshots;
    rec.ux.reserve(traj.snapshots.size());
    const int n = traj.grid.n;
    for (const auto& u : traj.snapshots) {
        std::vector<double> ux(u.size());
        diff1(u.data(), ux.data(), n, traj.grid.dx);
        rec.ux.push_back(std::move(ux));
    }
    return rec;
}

double interp4(const Grid1D& g, const std::vector<double>& f, double xi) {
    // stencil nodes j-1 .. j+2 around the cell containing xi
    int j = static_cast<int>(std::floor((xi - g.x_min) / g.dx));
    j = std::clamp(j, 1, g.n - 3);
    const double s = (xi - g.node(j)) / g.dx; // in [0,1] away from boundaries
    const double sm = s - 1.0, sp = s + 1.0, s2 = s - 2.0;
    const double c0 = -s * sm * s2 / 6.0;
    const double c1 = sp * sm * s2 / 2.0;
    const double c2 = -sp * s * s2 / 2.0;
    const double c3 = sp * s * sm / 6.0;
    return c0 * f[j - 1] + c1 * f[j] + c2 * f[j + 1] + c3 * f[j + 2];
}

FlowState init_flow(const std::vector<double>& labels) {
    for (size_t i = 1; i < labels.size(); ++i)
        if (!(labels[i] > labels[i - 1]))
            throw std::invalid_argument("init_flow: labels must be strictly increasing");
    FlowState fs;
    fs.labels = labels;
    fs.eta = labels;
    fs.jac.assign(labels.size(), 1.0);
    fs.escaped.assign(labels.size(), 0);
    return fs;
}

namespace {

struct VelocityAt {
    const VelocityRecord* rec;
    size_t k; // interval [times[k], times[k+1]]
    // velocity and its space derivative at (xi, t), linear blend in time
    void eval(double t, double xi, double& u, double& ux) const {
        const double t0 = rec->times[k], t1 = rec->times[k + 1];
        const double w = (t1 > t0) ? (t - t0) / (t1 - t0) : 0.0;
        const double ua = interp4(rec->grid, rec->u[k], xi);
        const double ub = interp4(rec->grid, rec->u[k + 1], xi);
        const double ga = interp4(rec->grid, rec->ux[k], xi);
        const double gb = interp4(rec->grid, rec->ux[k + 1], xi);
        u = (1.0 - w) * ua + w * ub;
        ux = (1.0 - w) * ga + w * gb;
    }
};

} // namespace

void advance_flow(FlowState& fs, const VelocityRecord& rec, double t_to) {
    if (rec.times.size() < 2) throw std::invalid_argument("advance_flow: record too short");
    if (t_to > rec.times.back() + 1e-12 || t_to < fs.t - 1e-14)
        throw std::invalid_argument("advance_flow: record does not cover the step interval");
    const double x_lo = rec.grid.x_min, x_hi = rec.grid.x_max;
    while (fs.t < t_to - 1e-14) {
        // record interval containing fs.t
        size_t k = 0;
        while (k + 2 < rec.times.size() && rec.times[k + 1] <= fs.t + 1e-14) ++k;
        const double t1 = std::min(rec.times[k + 1], t_to);
        const double dt = t1 - fs.t;
        if (dt <= 0.0) break;
        VelocityAt v{&rec, k};
        const double tm = fs.t + 0.5 * dt;
        for (size_t p = 0; p < fs.eta.size(); ++p) {
            if (fs.escaped[p]) continue;
            double e = fs.eta[p], J = fs.jac[p];
            double u1, g1, u2, g2, u3, g3, u4, g4;
            v.eval(fs.t, e, u1, g1);
            v.eval(tm, e + 0.5 * dt * u1, u2, g2);
            v.eval(tm, e + 0.5 * dt * u2, u3, g3);
            v.eval(t1, e + dt * u3, u4, g4);
            const double e_new = e + dt / 6.0 * (u1 + 2.0 * (u2 + u3) + u4);
            // d(jac)/dt = u_x(eta) jac, staged with the same nodes
            const double J1 = g1 * J;
            const double J2 = g2 * (J + 0.5 * dt * J1);
            const double J3 = g3 * (J + 0.5 * dt * J2);
            const double J4 = g4 * (J + dt * J3);
            const double J_new = J + dt / 6.0 * (J1 + 2.0 * (J2 + J3) + J4);
            if (e_new < x_lo || e_new > x_hi) {
                fs.escaped[p] = 1;
                continue;
            }
            if (!(J_new > 0.0))
                throw std::runtime_error("advance_flow: flow degenerated (jac <= 0)");
            fs.eta[p] = e_new;
            fs.jac[p] = J_new;
        }
        fs.t = t1;
    }
    fs.t = t_to;
}

std::pair<double, double> support_endpoints(const FlowState& fs, double a, double b) {
    auto find = [&](double x) -> size_t {
        for (size_t i = 0; i < fs.labels.size(); ++i)
            if (fs.labels[i] == x) return i;
        throw std::invalid_argument("support_endpoints: label not tracked");
    };
    return {fs.eta[find(a)], fs.eta[find(b)]};
}

ConservationResidual check_momentum_conservation(const FlowState& fs,
                                                 const Field& h_now,
                                                 const Field& h0) {
    ConservationResidual r;
    const double cut = 1e-10 * max_abs(h0.values);
    double ss = 0.0;
    for (size_t p = 0; p < fs.labels.size(); ++p) {
        if (fs.escaped[p]) continue;
        const double h0p = interp4(h0.grid, h0.values, fs.labels[p]);
        if (std::fabs(h0p) <= cut) continue;
        const double res = interp4(h_now.grid, h_now.values, fs.eta[p]) * fs.jac[p] * fs.jac[p] - h0p;
        r.max_abs = std::max(r.max_abs, std::fabs(res));
        ss += res * res;
        ++r.counted;
    }
    r.rms = r.counted ? std::sqrt(ss / r.counted) : 0.0;
    return r;
}

} // namespace chtails

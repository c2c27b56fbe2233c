#include "chtails/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace chtails {

double WeightProfile::operator()(double x) const {
    if (x <= 0.0) return 1.0;
    if (x >= static_cast<double>(N)) return std::exp(theta * N);
    return std::exp(theta * x);
}

Field F_field(const Field& u) {
    Field ux = derivative(u);
    Field out = make_field(u.grid, "F");
    for (int i = 0; i < u.grid.n; ++i)
        out.values[i] = u.values[i] * u.values[i] + 0.5 * ux.values[i] * ux.values[i];
    return out;
}

double weighted_sup(const Field& u, const WeightProfile& w) {
    double m = 0.0;
    for (int i = 0; i < u.grid.n; ++i)
        m = std::max(m, std::fabs(u.values[i]) * w(u.grid.node(i)));
    return m;
}

TailFit fit_tail(const Field& u, IndexRange window, double value_floor_rel) {
    TailFit fit;
    fit.window = window;
    const double floor = value_floor_rel * max_abs(u.values);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = 0;
    for (int i = window.first; i <= window.last; ++i) {
        const double v = std::fabs(u.values[i]);
        if (!(v > floor) || v == 0.0) {
            fit.floor_hit = true;
            continue;
        }
        const double x = u.grid.node(i), y = std::log(v);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++m;
    }
    fit.usable = m;
    if (m < 8) {
        fit.below_floor = true;
        return fit;
    }
    const double det = m * sxx - sx * sx;
    fit.slope = (m * sxy - sx * sy) / det;
    fit.log_prefactor = (sy - fit.slope * sx) / m;
    // r^2 against the fitted line
    double ss_res = 0, ss_tot = 0;
    const double ybar = sy / m;
    for (int i = window.first; i <= window.last; ++i) {
        const double v = std::fabs(u.values[i]);
        if (!(v > floor) || v == 0.0) continue;
        const double y = std::log(v);
        const double yf = fit.log_prefactor + fit.slope * u.grid.node(i);
        ss_res += (y - yf) * (y - yf);
        ss_tot += (y - ybar) * (y - ybar);
    }
    fit.r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

namespace {

void warn_if_tails_hot(const Field& h) {
    const int n = h.grid.n;
    const int edge = std::max(1, n / 100);
    const double m = max_abs(h.values);
    if (m == 0.0) return;
    double e = 0.0;
    for (int i = 0; i < edge; ++i) {
        e = std::max(e, std::fabs(h.values[i]));
        e = std::max(e, std::fabs(h.values[n - 1 - i]));
    }
    if (e > 1e-6 * m)
        std::fprintf(stderr, "tail_coefficients: momentum has not decayed at the domain edges\n");
}

} // namespace

TailCoefficients tail_coefficients(const Field& h, double t) {
    warn_if_tails_hot(h);
    TailCoefficients tc;
    tc.t = t;
    tc.E_plus = 0.5 * exp_moment(h, +1);
    tc.E_minus = 0.5 * exp_moment(h, -1);
    Field u = conv_G(h);
    tc.dE_plus_dt_pred = 0.5 * exp_moment(F_field(u), +1);
    return tc;
}

double check_E_plus_zero_initial(const Field& u0) {
    return 0.5 * exp_moment(apply_helmholtz(u0), +1);
}

SupportInterval momentum_support(const Field& h, double threshold_rel) {
    if (!(threshold_rel > 0.0 && threshold_rel < 1.0))
        throw std::invalid_argument("momentum_support: threshold_rel must be in (0,1)");
    SupportInterval s;
    const double cut = threshold_rel * max_abs(h.values);
    if (cut == 0.0) return s;
    int lo = -1, hi = -1;
    for (int i = 0; i < h.grid.n; ++i) {
        if (std::fabs(h.values[i]) > cut) {
            if (lo < 0) lo = i;
            hi = i;
        }
    }
    if (lo < 0) return s;
    s.left = h.grid.node(lo);
    s.right = h.grid.node(hi);
    s.empty = false;
    return s;
}

namespace {

PlateauEstimate plateau(const Field& u, IndexRange window, double floor_rel, int sign) {
    PlateauEstimate p;
    const double floor = floor_rel * max_abs(u.values);
    double sum = 0.0;
    int m = 0;
    for (int i = window.first; i <= window.last; ++i) {
        if (!(std::fabs(u.values[i]) > floor)) continue;
        sum += u.values[i] * std::exp(sign * u.grid.node(i));
        ++m;
    }
    p.usable = m;
    if (m < 8) {
        p.below_floor = true;
        return p;
    }
    p.value = sum / m;
    for (int i = window.first; i <= window.last; ++i) {
        if (!(std::fabs(u.values[i]) > floor)) continue;
        p.max_dev = std::max(p.max_dev, std::fabs(u.values[i] * std::exp(sign * u.grid.node(i)) - p.value));
    }
    return p;
}

} // namespace

PlateauEstimate c_plus_estimate(const Field& u, IndexRange window, double value_floor_rel) {
    return plateau(u, window, value_floor_rel, +1);
}

PlateauEstimate c_minus_estimate(const Field& u, IndexRange window, double value_floor_rel) {
    return plateau(u, window, value_floor_rel, -1);
}

double kernel_weight_bound(const Grid1D& g, const WeightProfile& w) {
    Field inv = sample(g, [&](double x) { return 1.0 / w(x); }, "1/phi");
    Field conv = conv_G(inv);
    double m = 0.0;
    for (int i = 0; i < g.n; ++i)
        m = std::max(m, w(g.node(i)) * 2.0 * conv.values[i]);
    return m;
}

double kernel_weight_bound_analytic(const WeightProfile& w) {
    const double d = 1.0 - w.theta;
    const double e = std::exp(-d * w.N);
    return 1.0 + e + (1.0 - e) / d;
}

} // namespace chtails

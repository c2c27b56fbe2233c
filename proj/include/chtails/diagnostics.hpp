#ifndef CHTAILS_DIAGNOSTICS_HPP
#define CHTAILS_DIAGNOSTICS_HPP

#include "chtails/greens.hpp"
#include "chtails/grid.hpp"

namespace chtails {

// Capped exponential weight: 1 for x <= 0, e^{theta x} on (0, N), e^{theta N}
// beyond.  Bounded, with 0 <= phi' <= phi where defined.
struct WeightProfile {
    double theta = 0.5;
    int N = 30;
    double operator()(double x) const;
};

// u^2 + u_x^2 / 2, the source density driving the tail growth.
Field F_field(const Field& u);

double weighted_sup(const Field& u, const WeightProfile& w);

struct TailFit {
    double slope = 0.0;
    double log_prefactor = 0.0;
    double r2 = 0.0;
    IndexRange window;
    bool floor_hit = false;   // some nodes excluded as below floor
    bool below_floor = false; // fewer than 8 usable nodes: no fit
    int usable = 0;
};

// Least-squares line through (x, log|u|) over window nodes with
// |u| > value_floor_rel * max|u|.
TailFit fit_tail(const Field& u, IndexRange window, double value_floor_rel = 1e-13);

struct TailCoefficients {
    double E_plus = 0.0;
    double E_minus = 0.0;
    double dE_plus_dt_pred = 0.0; // (1/2) int e^y F(u) dy with u = G*h
    double t = 0.0;
};

TailCoefficients tail_coefficients(const Field& h, double t);

// E_plus computed from h0 = u0 - u0''; vanishes identically for data whose
// momentum integrates e^y to zero (compactly supported u0).
double check_E_plus_zero_initial(const Field& u0);

struct SupportInterval {
    double left = 0.0;
    double right = 0.0;
    bool empty = true;
};

// Outermost nodes with |h| > threshold_rel * max|h|.
SupportInterval momentum_support(const Field& h, double threshold_rel);

struct PlateauEstimate {
    double value = 0.0;
    double max_dev = 0.0; // flatness of the plateau over the window
    bool below_floor = false;
    int usable = 0;
};

// Mean of e^{+x} u over the window (the far-field prefactor when u ~ C e^{-x}).
PlateauEstimate c_plus_estimate(const Field& u, IndexRange window,
                                double value_floor_rel = 1e-13);
// Mirror: mean of e^{-x} u on a left window.
PlateauEstimate c_minus_estimate(const Field& u, IndexRange window,
                                 double value_floor_rel = 1e-13);

// sup over nodes of phi_N(x) * int e^{-|x-y|} / phi_N(y) dy, evaluated with
// the convolution machinery.  Finite for any N; grows toward the analytic
// x = N value as N increases.
double kernel_weight_bound(const Grid1D& g, const WeightProfile& w);

// Closed form of phi_N(x) int e^{-|x-y|}/phi_N(y) dy at x = N, where the sup
// sits: 1 + e^{-(1-theta)N} + (1 - e^{-(1-theta)N})/(1-theta).
double kernel_weight_bound_analytic(const WeightProfile& w);

} // namespace chtails

#endif

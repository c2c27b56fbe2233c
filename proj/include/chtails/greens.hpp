#ifndef CHTAILS_GREENS_HPP
#define CHTAILS_GREENS_HPP

#include "chtails/grid.hpp"

namespace chtails {

// Per-cell quadrature weights for integrating e^{s}*(cubic interpolant)
// over one cell, expressed through the moments mu_k = int_0^h s^k e^s ds
// and nu_k = int_0^h s^k e^{-s} ds (recurrences, no cancellation).
struct ExpCellWeights {
    double r;          // e^{-h}, recurrence damping factor
    double w_int[4];   // cell [x_{i-1},x_i], stencil nodes i-2..i+1, premultiplied by caller with r
    double w_first[4]; // cell [x_0,x_1], one-sided stencil 0..3
    double v_last[4];  // cell [x_{n-2},x_{n-1}], one-sided from the right, measure e^{-s}
};

ExpCellWeights exp_cell_weights(double h);

// P_i = e^{-x_i} * int_{x_min}^{x_i} e^{y} f(y) dy for the cubic interpolant
// of f, accumulated in shifted-exponent form (no e^{y} is ever materialized,
// so the result is finite for any domain size by construction).
std::vector<double> cum_exp_left(const std::vector<double>& f, double h);

struct ConvParts {
    std::vector<double> P; // e^{-x} int_{x_min}^{x} e^{y} f dy
    std::vector<double> Q; // e^{+x} int_{x}^{x_max} e^{-y} f dy
};

ConvParts conv_parts(const std::vector<double>& f, double h);

// (G*f)(x) with G(x) = (1/2) e^{-|x|}, the kernel with (1 - d^2/dx^2) G = delta.
Field conv_G(const Field& f);

// (G'*f)(x) = -(1/2) int sgn(x-y) e^{-|x-y|} f(y) dy.
Field conv_dG(const Field& f);

// int e^{+y} f dy (sign=+1) or int e^{-y} f dy (sign=-1) over the domain,
// via the shifted cumulative integrals; exact cancellation-preserving.
double exp_moment(const Field& f, int sign);

// Solves (1 - d^2/dx^2) u = f with transparent Robin conditions
// u' = +u at x_min, u' = -u at x_max (exact for e^{+x}/e^{-x} far fields).
// Warns on stderr when f has not decayed at the outermost nodes.
Field helmholtz_solve(const Field& f, double edge_warn_frac = 1e-6);

// h = u - u'' with the 4th-order second-derivative stencil.
Field apply_helmholtz(const Field& u);

} // namespace chtails

#endif

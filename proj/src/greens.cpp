#include "chtails/greens.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace chtails {

ExpCellWeights exp_cell_weights(double h) {
    ExpCellWeights w;
    const double h2 = h * h, h3 = h2 * h;
    const double eh = std::exp(h);
    // mu_k = int_0^h s^k e^s ds
    const double mu0 = std::expm1(h);
    const double mu1 = h * eh - mu0;
    const double mu2 = h2 * eh - 2.0 * mu1;
    const double mu3 = h3 * eh - 3.0 * mu2;
    // cubic Lagrange basis on s in {-h, 0, h, 2h}, integrated against e^s over [0, h]
    w.w_int[0] = -(mu3 - 3.0 * h * mu2 + 2.0 * h2 * mu1) / (6.0 * h3);
    w.w_int[1] = (mu3 - 2.0 * h * mu2 - h2 * mu1 + 2.0 * h3 * mu0) / (2.0 * h3);
    w.w_int[2] = -(mu3 - h * mu2 - 2.0 * h2 * mu1) / (2.0 * h3);
    w.w_int[3] = (mu3 - h2 * mu1) / (6.0 * h3);
    // basis on s in {0, h, 2h, 3h} for the first cell
    w.w_first[0] = -(mu3 - 6.0 * h * mu2 + 11.0 * h2 * mu1 - 6.0 * h3 * mu0) / (6.0 * h3);
    w.w_first[1] = (mu3 - 5.0 * h * mu2 + 6.0 * h2 * mu1) / (2.0 * h3);
    w.w_first[2] = -(mu3 - 4.0 * h * mu2 + 3.0 * h2 * mu1) / (2.0 * h3);
    w.w_first[3] = (mu3 - 3.0 * h * mu2 + 2.0 * h2 * mu1) / (6.0 * h3);
    w.r = std::exp(-h);
    // nu_k = int_0^h s^k e^{-s} ds; last cell integrates from the right end
    const double nu0 = -std::expm1(-h);
    const double nu1 = -h * w.r + nu0;
    const double nu2 = -h2 * w.r + 2.0 * nu1;
    const double nu3 = -h3 * w.r + 3.0 * nu2;
    w.v_last[0] = -(nu3 - 6.0 * h * nu2 + 11.0 * h2 * nu1 - 6.0 * h3 * nu0) / (6.0 * h3);
    w.v_last[1] = (nu3 - 5.0 * h * nu2 + 6.0 * h2 * nu1) / (2.0 * h3);
    w.v_last[2] = -(nu3 - 4.0 * h * nu2 + 3.0 * h2 * nu1) / (2.0 * h3);
    w.v_last[3] = (nu3 - 3.0 * h * nu2 + 2.0 * h2 * nu1) / (6.0 * h3);
    return w;
}

std::vector<double> cum_exp_left(const std::vector<double>& f, double h) {
    const size_t n = f.size();
    if (n < 4) throw std::invalid_argument("cum_exp_left: need at least 4 nodes");
    const ExpCellWeights w = exp_cell_weights(h);
    std::vector<double> P(n, 0.0);
    // P_i = r * P_{i-1} + (cell integral over [x_{i-1}, x_i] with measure e^{y - x_i})
    P[1] = w.r * (w.w_first[0] * f[0] + w.w_first[1] * f[1] + w.w_first[2] * f[2] + w.w_first[3] * f[3]);
    for (size_t i = 2; i + 1 < n; ++i) {
        const double src = w.r * (w.w_int[0] * f[i - 2] + w.w_int[1] * f[i - 1] +
                                  w.w_int[2] * f[i] + w.w_int[3] * f[i + 1]);
        P[i] = w.r * P[i - 1] + src;
    }
    const double src_last = w.v_last[0] * f[n - 1] + w.v_last[1] * f[n - 2] +
                            w.v_last[2] * f[n - 3] + w.v_last[3] * f[n - 4];
    P[n - 1] = w.r * P[n - 2] + src_last;
    return P;
}

ConvParts conv_parts(const std::vector<double>& f, double h) {
    ConvParts cp;
    cp.P = cum_exp_left(f, h);
    // mirror symmetry of the kernel: Q = reverse(cum_exp_left(reverse(f)))
    std::vector<double> rev(f.rbegin(), f.rend());
    cp.Q = cum_exp_left(rev, h);
    std::reverse(cp.Q.begin(), cp.Q.end());
    return cp;
}

Field conv_G(const Field& f) {
    ConvParts cp = conv_parts(f.values, f.grid.dx);
    Field out = make_field(f.grid, "G*" + f.role);
    for (int i = 0; i < f.grid.n; ++i)
        out.values[i] = 0.5 * (cp.P[i] + cp.Q[i]);
    return out;
}

Field conv_dG(const Field& f) {
    ConvParts cp = conv_parts(f.values, f.grid.dx);
    Field out = make_field(f.grid, "G'*" + f.role);
    for (int i = 0; i < f.grid.n; ++i)
        out.values[i] = 0.5 * (cp.Q[i] - cp.P[i]);
    return out;
}

double exp_moment(const Field& f, int sign) {
    const Grid1D& g = f.grid;
    if (sign > 0) {
        std::vector<double> P = cum_exp_left(f.values, g.dx);
        return P.back() * std::exp(g.x_max);
    }
    std::vector<double> rev(f.values.rbegin(), f.values.rend());
    std::vector<double> Q = cum_exp_left(rev, g.dx);
    return Q.back() * std::exp(-g.x_min);
}

namespace {

void warn_if_edges_hot(const Field& f, double frac, const char* who) {
    const int n = f.grid.n;
    const int edge = std::max(1, n / 100);
    double m = max_abs(f.values);
    if (m == 0.0) return;
    double e = 0.0;
    for (int i = 0; i < edge; ++i) {
        e = std::max(e, std::fabs(f.values[i]));
        e = std::max(e, std::fabs(f.values[n - 1 - i]));
    }
    if (e > frac * m)
        std::fprintf(stderr, "%s: input has not decayed at the domain edges "
                             "(edge max %.3e vs %.3e overall)\n", who, e, m);
}

} // namespace

Field helmholtz_solve(const Field& f, double edge_warn_frac) {
    warn_if_edges_hot(f, edge_warn_frac, "helmholtz_solve");
    const Grid1D& g = f.grid;
    const int n = g.n;
    const double h = g.dx, h2 = h * h;
    // tridiagonal rows: -u_{i-1}/h^2 + (1 + 2/h^2) u_i - u_{i+1}/h^2 = f_i,
    // Robin ghost elimination at both ends
    std::vector<double> a(n, -1.0 / h2), b(n, 1.0 + 2.0 / h2), c(n, -1.0 / h2), d = f.values;
    b[0] = 1.0 + 2.0 / h + 2.0 / h2;
    c[0] = -2.0 / h2;
    a[n - 1] = -2.0 / h2;
    b[n - 1] = 1.0 + 2.0 / h + 2.0 / h2;
    // Thomas sweep (diagonally dominant, cannot break down)
    for (int i = 1; i < n; ++i) {
        const double m = a[i] / b[i - 1];
        b[i] -= m * c[i - 1];
        d[i] -= m * d[i - 1];
    }
    Field out = make_field(g, "u");
    out.values[n - 1] = d[n - 1] / b[n - 1];
    for (int i = n - 2; i >= 0; --i)
        out.values[i] = (d[i] - c[i] * out.values[i + 1]) / b[i];
    return out;
}

Field apply_helmholtz(const Field& u) {
    Field out = second_derivative(u);
    out.role = "h";
    for (int i = 0; i < u.grid.n; ++i)
        out.values[i] = u.values[i] - out.values[i];
    return out;
}

} // namespace chtails

#include "chtails/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chtails {

Grid1D make_grid(double x_min, double x_max, int n) {
    if (n < 2) throw std::invalid_argument("grid: n must be >= 2");
    if (!(x_min < x_max)) throw std::invalid_argument("grid: x_min must be < x_max");
    Grid1D g;
    g.x_min = x_min;
    g.x_max = x_max;
    g.n = n;
    g.dx = (x_max - x_min) / (n - 1);
    return g;
}

Field make_field(const Grid1D& g, std::string role) {
    return Field{g, std::vector<double>(static_cast<size_t>(g.n), 0.0), std::move(role)};
}

Field sample(const Grid1D& g, const std::function<double(double)>& f, std::string role) {
    Field out = make_field(g, std::move(role));
    for (int i = 0; i < g.n; ++i) {
        const double v = f(g.node(i));
        if (!std::isfinite(v))
            throw std::runtime_error("sample: non-finite value at node " + std::to_string(i) +
                                     " (x = " + std::to_string(g.node(i)) + ")");
        out.values[static_cast<size_t>(i)] = v;
    }
    return out;
}

void diff1(const double* f, double* out, int n, double h) {
    const double c = 1.0 / (12.0 * h);
    out[0] = c * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    out[1] = c * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (int i = 2; i < n - 2; ++i)
        out[i] = c * (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]);
    out[n - 2] = -c * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
    out[n - 1] = -c * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
}

void diff2(const double* f, double* out, int n, double h) {
    const double c = 1.0 / (12.0 * h * h);
    out[0] = c * (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]);
    out[1] = c * (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]);
    for (int i = 2; i < n - 2; ++i)
        out[i] = c * (-f[i - 2] + 16.0 * f[i - 1] - 30.0 * f[i] + 16.0 * f[i + 1] - f[i + 2]);
    out[n - 2] = c * (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] + f[n - 6]);
    out[n - 1] = c * (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5] - 10.0 * f[n - 6]);
}

double trapezoid(const std::vector<double>& f, double h) {
    const size_t n = f.size();
    if (n < 2) return 0.0;
    double s = 0.5 * (f[0] + f[n - 1]);
    for (size_t i = 1; i + 1 < n; ++i) s += f[i];
    return s * h;
}

Field derivative(const Field& f) {
    if (f.grid.n < 8) throw std::invalid_argument("derivative: need n >= 8");
    Field out = make_field(f.grid, "∂x " + f.role);
    diff1(f.values.data(), out.values.data(), f.grid.n, f.grid.dx);
    return out;
}

Field second_derivative(const Field& f) {
    if (f.grid.n < 8) throw std::invalid_argument("second_derivative: need n >= 8");
    Field out = make_field(f.grid, "∂xx " + f.role);
    diff2(f.values.data(), out.values.data(), f.grid.n, f.grid.dx);
    return out;
}

double integrate(const Field& f) { return trapezoid(f.values, f.grid.dx); }

IndexRange tail_window(const Grid1D& g, Side side, double margin, double width) {
    if (!(margin + width < 0.5 * (g.x_max - g.x_min)))
        throw std::invalid_argument("tail_window: margin + width must fit in half the domain");
    double lo, hi;
    if (side == Side::right) {
        lo = g.x_max - margin - width;
        hi = g.x_max - margin;
    } else {
        lo = g.x_min + margin;
        hi = g.x_min + margin + width;
    }
    const double eps = 1e-9 * g.dx;
    int first = static_cast<int>(std::floor((lo - g.x_min) / g.dx + eps));
    int last = static_cast<int>(std::ceil((hi - g.x_min) / g.dx - eps));
    if (first < 0) first = 0;
    if (last > g.n - 1) last = g.n - 1;
    if (last < first) throw std::invalid_argument("tail_window: empty window");
    return IndexRange{first, last};
}

double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        const double a = std::fabs(x);
        if (a > m) m = a;
    }
    return m;
}

} // namespace chtails

#ifndef CHTAILS_GRID_HPP
#define CHTAILS_GRID_HPP

#include <functional>
#include <string>
#include <vector>

namespace chtails {

// Uniform grid with n nodes on [x_min, x_max], spacing dx = (x_max-x_min)/(n-1).
struct Grid1D {
    double x_min = 0.0;
    double x_max = 0.0;
    int n = 0;
    double dx = 0.0;

    double node(int i) const { return x_min + i * dx; }
    bool operator==(const Grid1D&) const = default;
};

Grid1D make_grid(double x_min, double x_max, int n);

struct Field {
    Grid1D grid;
    std::vector<double> values;
    std::string role = "u";
};

Field make_field(const Grid1D& g, std::string role = "u");

// Samples f at every node; rejects non-finite values naming the node.
Field sample(const Grid1D& g, const std::function<double(double)>& f,
             std::string role = "u");

// Raw stencil kernels (4th order interior, one-sided 4th order at the two
// nodes nearest each boundary).  Exposed for reuse by the solver hot path.
void diff1(const double* f, double* out, int n, double h);
void diff2(const double* f, double* out, int n, double h);
double trapezoid(const std::vector<double>& f, double h);

Field derivative(const Field& f);
Field second_derivative(const Field& f);
double integrate(const Field& f);

enum class Side { left, right };

// Inclusive node range [first, last].
struct IndexRange {
    int first = 0;
    int last = -1;
    int count() const { return last - first + 1; }
};

// Nodes covering [x_max - margin - width, x_max - margin] (right side;
// mirrored for left).
IndexRange tail_window(const Grid1D& g, Side side, double margin, double width);

double max_abs(const std::vector<double>& v);

} // namespace chtails

#endif

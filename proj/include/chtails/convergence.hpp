#ifndef CHTAILS_CONVERGENCE_HPP
#define CHTAILS_CONVERGENCE_HPP

#include <string>
#include <vector>

namespace chtails {

struct OrderStudy {
    std::string name;
    std::vector<double> params; // dt or dx, finest last
    std::vector<double> errors; // same length as params
    double fitted_order = 0.0;  // least-squares slope of log err vs log param
};

// G-convolution self-convergence on a gaussian (4th-order cells).
OrderStudy operator_order_study();
// RK4 self-convergence at fixed resolution (order 4).
OrderStudy temporal_order_study();
// Snapshot self-convergence under grid refinement at fixed dt.
OrderStudy spatial_order_study();
// Momentum-conservation residual along the flow map under refinement.
OrderStudy flow_residual_study();

std::string format_study(const OrderStudy& s);

} // namespace chtails

#endif

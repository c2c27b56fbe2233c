#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chtails/convergence.hpp"
#include "chtails/dynamics.hpp"
#include "chtails/flowmap.hpp"
#include "chtails/greens.hpp"
#include "chtails/grid.hpp"

#include <cmath>

using namespace chtails;

namespace {

// A synthetic record with a time-independent velocity field.
VelocityRecord frozen_field(const Grid1D& g, const std::function<double(double)>& u,
                            const std::function<double(double)>& ux,
                            double t0, double t1, int n_times) {
    VelocityRecord rec;
    rec.grid = g;
    for (int k = 0; k < n_times; ++k) {
        rec.times.push_back(t0 + (t1 - t0) * k / (n_times - 1));
        std::vector<double> uv(static_cast<size_t>(g.n)), uxv(static_cast<size_t>(g.n));
        for (int i = 0; i < g.n; ++i) {
            uv[static_cast<size_t>(i)] = u(g.node(i));
            uxv[static_cast<size_t>(i)] = ux(g.node(i));
        }
        rec.u.push_back(std::move(uv));
        rec.ux.push_back(std::move(uxv));
    }
    return rec;
}

} // namespace

TEST_CASE("interp4 reproduces cubics exactly and clamps at the edges") {
    Grid1D g = make_grid(0.0, 1.0, 33);
    std::vector<double> f(33);
    for (int i = 0; i < 33; ++i) {
        const double x = g.node(i);
        f[static_cast<size_t>(i)] = ((x - 0.3) * x + 2.0) * x - 1.0; // cubic
    }
    for (double xi : {0.017, 0.25, 0.4999, 0.93, 0.0, 1.0}) {
        const double want = ((xi - 0.3) * xi + 2.0) * xi - 1.0;
        CHECK(interp4(g, f, xi) == doctest::Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("still fluid: labels do not move and the jacobian stays one") {
    Grid1D g = make_grid(-10.0, 10.0, 256);
    VelocityRecord rec = frozen_field(
        g, [](double) { return 0.0; }, [](double) { return 0.0; }, 0.0, 1.0, 11);
    FlowState fs = init_flow({-3.0, 0.0, 2.5});
    advance_flow(fs, rec, 1.0);
    CHECK(fs.t == doctest::Approx(1.0));
    for (size_t j = 0; j < fs.labels.size(); ++j) {
        CHECK(fs.eta[j] == fs.labels[j]);
        CHECK(fs.jac[j] == 1.0);
        CHECK(fs.escaped[j] == 0);
    }
}

TEST_CASE("uniform stream translates labels and marks escapes") {
    Grid1D g = make_grid(-10.0, 10.0, 256);
    VelocityRecord rec = frozen_field(
        g, [](double) { return 2.0; }, [](double) { return 0.0; }, 0.0, 2.0, 21);
    FlowState fs = init_flow({-5.0, 0.0, 7.0});
    advance_flow(fs, rec, 2.0);
    CHECK(fs.eta[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(fs.eta[1] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(fs.jac[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fs.escaped[0] == 0);
    CHECK(fs.escaped[2] == 1); // 7 + 4 runs past the right edge
}

TEST_CASE("exponential shear integrates to the logarithmic trajectory") {
    // eta' = e^{-eta}, eta(0) = 0  ->  eta(t) = ln(1 + t).
    Grid1D g = make_grid(-10.0, 10.0, 2048);
    VelocityRecord rec = frozen_field(
        g, [](double x) { return std::exp(-x); }, [](double x) { return -std::exp(-x); },
        0.0, 0.5, 51);
    FlowState fs = init_flow({0.0});
    advance_flow(fs, rec, 0.5);
    CHECK(std::fabs(fs.eta[0] - std::log(1.5)) < 1e-5);
    // d(eta)/d(label) for this field: jac(t) = e^{-eta(t)} (1 + t e^{label}) = ... > 0
    CHECK(fs.jac[0] > 0.0);
}

TEST_CASE("advance_flow refuses to run backwards and support needs tracked labels") {
    Grid1D g = make_grid(-10.0, 10.0, 256);
    VelocityRecord rec = frozen_field(
        g, [](double) { return 0.0; }, [](double) { return 0.0; }, 0.0, 1.0, 11);
    FlowState fs = init_flow({-1.0, 1.0});
    advance_flow(fs, rec, 0.5);
    CHECK_THROWS(advance_flow(fs, rec, 0.25));
    CHECK_NOTHROW(support_endpoints(fs, -1.0, 1.0));
    CHECK_THROWS(support_endpoints(fs, -1.0, 0.5)); // 0.5 was never tracked
}

TEST_CASE("particles of an evolved pulse keep order and positive jacobian") {
    Grid1D g = make_grid(-30.0, 30.0, 1025);
    Field u0 = sample(g, [](double x) { return 0.25 * std::exp(-x * x); });
    TimeStepConfig cfg;
    cfg.dt_max = 0.005;
    cfg.t_end = 1.0;
    cfg.monitor_stride = 5;
    Trajectory tr = evolve(u0, cfg);
    REQUIRE(tr.completed);
    VelocityRecord rec = make_velocity_record(tr);

    std::vector<double> labels;
    for (int i = 0; i < g.n; i += 8) labels.push_back(g.node(i));
    FlowState fs = init_flow(labels);
    advance_flow(fs, rec, 1.0);
    for (size_t j = 1; j < fs.eta.size(); ++j) CHECK(fs.eta[j] > fs.eta[j - 1]);
    for (double jv : fs.jac) CHECK(jv > 0.0);

    // the rightward drift of a positive pulse moves every particle right
    const size_t mid = fs.eta.size() / 2;
    CHECK(fs.eta[mid] > fs.labels[mid]);
}

TEST_CASE("momentum is conserved along particle paths") {
    Grid1D g = make_grid(-30.0, 30.0, 1025);
    Field u0 = sample(g, [](double x) { return 0.25 * std::exp(-x * x / 9.0); });
    Field h0 = apply_helmholtz(u0);
    TimeStepConfig cfg;
    cfg.dt_max = 1.0; // CFL-bound dt: the record spacing shrinks with dx
    cfg.t_end = 0.5;
    cfg.monitor_stride = 5;
    Trajectory tr = evolve(u0, cfg);
    REQUIRE(tr.completed);
    VelocityRecord rec = make_velocity_record(tr);

    std::vector<double> labels;
    for (int i = 0; i < g.n; ++i) labels.push_back(g.node(i));
    FlowState fs = init_flow(labels);

    // at t = 0 the identity holds exactly
    ConservationResidual r0 = check_momentum_conservation(fs, h0, h0);
    CHECK(r0.counted > 0);
    CHECK(r0.max_abs == 0.0);

    advance_flow(fs, rec, 0.5);
    Field uf = make_field(g);
    uf.values = tr.snapshots.back();
    Field hf = apply_helmholtz(uf);
    ConservationResidual r = check_momentum_conservation(fs, hf, h0);
    CHECK(r.counted > 0);
    CHECK(r.max_abs < 1e-4); // measured 1.9e-5
    CHECK(r.rms <= r.max_abs);
}

TEST_CASE("support endpoints follow the outermost particles") {
    Grid1D g = make_grid(-10.0, 10.0, 256);
    VelocityRecord rec = frozen_field(
        g, [](double) { return 1.0; }, [](double) { return 0.0; }, 0.0, 1.0, 11);
    FlowState fs = init_flow({-2.0, 0.0, 2.0});
    auto [a0, b0] = support_endpoints(fs, -2.0, 2.0);
    CHECK(a0 == -2.0);
    CHECK(b0 == 2.0);
    advance_flow(fs, rec, 1.0);
    auto [a1, b1] = support_endpoints(fs, -2.0, 2.0);
    CHECK(a1 == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(b1 == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("flow-path conservation residual shrinks under refinement") {
    OrderStudy s = flow_residual_study();
    REQUIRE(s.errors.size() >= 2);
    for (size_t i = 1; i < s.errors.size(); ++i) CHECK(s.errors[i] < s.errors[i - 1]);
    CHECK(s.fitted_order > 1.5); // linear-in-time velocity interpolation dominates
}

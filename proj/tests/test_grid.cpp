#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chtails/grid.hpp"

#include <cmath>
#include <numbers>

using namespace chtails;

TEST_CASE("make_grid basics") {
    Grid1D g = make_grid(-40.0, 40.0, 4096);
    CHECK(g.node(0) == -40.0);
    CHECK(g.node(g.n - 1) == doctest::Approx(40.0).epsilon(1e-15));
    CHECK(g.dx == doctest::Approx(80.0 / 4095).epsilon(1e-15));
    CHECK_THROWS(make_grid(1.0, 1.0, 64));
    CHECK_THROWS(make_grid(0.0, 1.0, 1));
}

TEST_CASE("sample: zero, endpoints, pointwise oracle") {
    Grid1D g2 = make_grid(0.0, 1.0, 2);
    Field lin = sample(g2, [](double x) { return x; });
    CHECK(lin.values[0] == 0.0);
    CHECK(lin.values[1] == 1.0);

    Grid1D g = make_grid(-40.0, 40.0, 4096);
    Field z = sample(g, [](double) { return 0.0; });
    CHECK(max_abs(z.values) == 0.0);

    Field e = sample(g, [](double x) { return std::exp(-std::fabs(x)); });
    for (int i = 0; i < g.n; i += 97)
        CHECK(e.values[i] == std::exp(-std::fabs(g.node(i))));
}

TEST_CASE("sample rejects non-finite values naming the node") {
    Grid1D g = make_grid(-1.0, 1.0, 17); // node 8 sits at x = 0
    CHECK_THROWS_WITH_AS(sample(g, [](double x) { return 1.0 / x; }),
                         doctest::Contains("node 8"), std::runtime_error);
}

TEST_CASE("derivative: constants, analytic oracle, refinement factor") {
    Grid1D g = make_grid(-3.0, 3.0, 256);
    Field c = sample(g, [](double) { return 7.5; });
    CHECK(max_abs(derivative(c).values) == 0.0); // stencil weights sum to zero

    auto sin_err = [](int n) {
        Grid1D gg = make_grid(-std::numbers::pi, std::numbers::pi, n);
        Field f = sample(gg, [](double x) { return std::sin(x); });
        Field d = derivative(f);
        double e = 0.0;
        for (int i = 0; i < gg.n; ++i)
            e = std::max(e, std::fabs(d.values[i] - std::cos(gg.node(i))));
        return e;
    };
    const double e256 = sin_err(256), e512 = sin_err(512);
    CHECK(e256 < 1e-7);
    const double factor = e256 / e512; // 4th order: refinement halves dx, error /16
    CHECK(factor > 14.0);
    CHECK(factor < 18.0);
}

TEST_CASE("derivative exact on degree <= 4 polynomials") {
    Grid1D g = make_grid(-1.0, 3.0, 64);
    Field f = sample(g, [](double x) { return ((x - 2.0) * x + 1.0) * x * x; }); // x^4-2x^3+x^2
    Field d = derivative(f);
    double e = 0.0;
    for (int i = 2; i < g.n - 2; ++i) { // interior stencil only
        const double x = g.node(i);
        e = std::max(e, std::fabs(d.values[i] - (((4.0 * x - 6.0) * x + 2.0) * x)));
    }
    CHECK(e < 1e-12); // roundoff of the exact stencil, |f| ~ 40, dx ~ 0.06

    Field q = sample(g, [](double x) { return x * x; });
    Field dq = derivative(q);
    double eq = 0.0;
    for (int i = 2; i < g.n - 2; ++i)
        eq = std::max(eq, std::fabs(dq.values[i] - 2.0 * g.node(i)));
    CHECK(eq < 1e-13);
}

TEST_CASE("integrate: zero, exact constant, gaussian quadrature oracle") {
    Grid1D g01 = make_grid(0.0, 1.0, 101);
    CHECK(integrate(sample(g01, [](double) { return 0.0; })) == 0.0);
    CHECK(integrate(sample(g01, [](double) { return 1.0; })) == doctest::Approx(1.0).epsilon(1e-14));

    Grid1D g = make_grid(-40.0, 40.0, 4096);
    const double spi = integrate(sample(g, [](double x) { return std::exp(-x * x); }));
    CHECK(std::fabs(spi - std::sqrt(std::numbers::pi)) < 1e-10);
}

TEST_CASE("integrate(derivative(f)) telescopes to the boundary difference") {
    Grid1D g = make_grid(-20.0, 20.0, 512);
    Field f = sample(g, [](double x) { return std::tanh(x); });
    const double lhs = integrate(derivative(f));
    const double rhs = std::tanh(20.0) - std::tanh(-20.0);
    CHECK(std::fabs(lhs - rhs) < 1e-6);
}

TEST_CASE("second_derivative matches analytic gaussian curvature") {
    Grid1D g = make_grid(-10.0, 10.0, 1024);
    Field f = sample(g, [](double x) { return std::exp(-x * x); });
    Field d2 = second_derivative(f);
    double e = 0.0;
    for (int i = 0; i < g.n; ++i) {
        const double x = g.node(i);
        e = std::max(e, std::fabs(d2.values[i] - (4.0 * x * x - 2.0) * std::exp(-x * x)));
    }
    CHECK(e < 1e-6);
}

TEST_CASE("tail_window arithmetic, mirror, and rejection") {
    Grid1D g = make_grid(-40.0, 40.0, 4096);
    IndexRange r = tail_window(g, Side::right, 5.0, 10.0);
    CHECK(g.node(r.first) >= 25.0 - g.dx);
    CHECK(g.node(r.first) <= 25.0 + g.dx);
    CHECK(g.node(r.last) >= 35.0 - g.dx);
    CHECK(g.node(r.last) <= 35.0 + g.dx);
    CHECK(r.count() >= static_cast<int>(10.0 / g.dx) - 1);

    IndexRange l = tail_window(g, Side::left, 5.0, 10.0);
    CHECK(g.node(l.first) >= -35.0 - g.dx);
    CHECK(g.node(l.first) <= -35.0 + g.dx);
    CHECK(g.node(l.last) >= -25.0 - g.dx);
    CHECK(g.node(l.last) <= -25.0 + g.dx);

    CHECK_THROWS(tail_window(g, Side::right, 41.0, 10.0)); // past half-domain
}

TEST_CASE("roles propagate through differentiation") {
    Grid1D g = make_grid(-1.0, 1.0, 32);
    Field f = sample(g, [](double x) { return x; }, "u");
    CHECK(derivative(f).role == "∂x u");
    CHECK(second_derivative(f).role == "∂xx u");
}

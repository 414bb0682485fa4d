#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mcflab/fixtures.hpp"
#include "mcflab/flow.hpp"
#include "mcflab/soliton.hpp"

using namespace mcf;

namespace {

GraphFlow grim_reaper_flow(double half_width, int n, double cfl = 0.35) {
    const auto metric = fixtures::flat_gaussian({-2, 2, -20, 20});
    std::vector<double> xs(n + 1), us(n + 1);
    const double dx = 2 * half_width / n;
    for (int i = 0; i <= n; ++i) {
        xs[i] = -half_width + i * dx;
        us[i] = -std::log(std::cos(xs[i]));
    }
    const double dt = cfl * dx * dx;
    return GraphFlow(metric, xs, us, dt, GraphBC::Dirichlet,
                     [](double x, double t) {
                         return t - std::log(std::cos(x));
                     });
}

double grim_reaper_sup_error(GraphFlow& flow, double T) {
    flow.run_until(T);
    double worst = 0;
    for (size_t i = 0; i < flow.x().size(); ++i) {
        const double exact =
            flow.t() - std::log(std::cos(flow.x()[i]));
        worst = std::max(worst, std::abs(flow.u()[i] - exact));
    }
    return worst;
}

} // namespace

TEST_CASE("graph flow keeps geodesics stationary") {
    const auto metric = fixtures::flat_gaussian({-2, 2, -2, 2});
    std::vector<double> xs(65), us(65, 0.4);
    for (int i = 0; i <= 64; ++i) xs[i] = -1 + 2.0 * i / 64;
    GraphFlow flow(metric, xs, us, 1e-5, GraphBC::Dirichlet,
                   [](double, double) { return 0.4; });
    for (int i = 0; i < 100; ++i) flow.step();
    for (double u : flow.u()) CHECK(u == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("graph flow tracks the translating grim reaper") {
    auto flow = grim_reaper_flow(1.2, 512);
    CHECK(grim_reaper_sup_error(flow, 0.1) <= 1e-3);
}

TEST_CASE("graph flow is second order in space") {
    auto coarse = grim_reaper_flow(1.2, 128);
    auto fine = grim_reaper_flow(1.2, 256);
    const double ec = grim_reaper_sup_error(coarse, 0.05);
    const double ef = grim_reaper_sup_error(fine, 0.05);
    const double ratio = ec / ef;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.5);
}

TEST_CASE("graph flow: small sine data decays at the heat rate") {
    const auto metric = fixtures::flat_gaussian({-1, 2, -1, 1});
    const int n = 128;
    std::vector<double> xs(n + 1), us(n + 1);
    const double eps = 1e-3;
    for (int i = 0; i <= n; ++i) {
        xs[i] = double(i) / n;
        us[i] = eps * std::sin(std::numbers::pi * xs[i]);
    }
    const double dx = 1.0 / n;
    GraphFlow flow(metric, xs, us, 0.35 * dx * dx, GraphBC::Dirichlet,
                   [](double, double) { return 0.0; });
    const double T = 0.02;
    flow.run_until(T);
    double amp = 0;
    for (double u : flow.u()) amp = std::max(amp, std::abs(u));
    const double expected = eps * std::exp(-std::numbers::pi * std::numbers::pi * T);
    CHECK(std::abs(amp / expected - 1.0) <= 0.05);
}

TEST_CASE("graph flow: periodic small data decays at the k = 1 rate") {
    const auto metric = fixtures::flat_gaussian({-1, 2, -1, 1});
    const int n = 64;
    std::vector<double> xs(n), us(n);
    const double eps = 1e-3;
    for (int i = 0; i < n; ++i) {
        xs[i] = double(i) / n;
        us[i] = 0.2 + eps * std::sin(2 * std::numbers::pi * xs[i]);
    }
    const double dx = 1.0 / n;
    GraphFlow flow(metric, xs, us, 0.3 * dx * dx, GraphBC::Periodic);
    const double T = 0.005;
    flow.run_until(T);
    double amp = 0, mean = 0;
    for (double u : flow.u()) mean += u;
    mean /= n;
    for (double u : flow.u()) amp = std::max(amp, std::abs(u - mean));
    const double expected =
        eps * std::exp(-4 * std::numbers::pi * std::numbers::pi * T);
    CHECK(mean == doctest::Approx(0.2).epsilon(1e-6));
    CHECK(std::abs(amp / expected - 1.0) <= 0.1);
}

TEST_CASE("graph flow guards") {
    const auto metric = fixtures::flat_gaussian({-2, 2, -2, 2});
    std::vector<double> xs(65), us(65, 0.0);
    for (int i = 0; i <= 64; ++i) xs[i] = -1 + 2.0 * i / 64;
    const double dx = 2.0 / 64;
    CHECK_THROWS_AS(GraphFlow(metric, xs, us, -1, GraphBC::Periodic),
                    ParamError);
    GraphFlow too_fast(metric, xs, us, dx * dx, GraphBC::Dirichlet,
                       [](double, double) { return 0.0; });
    CHECK_THROWS_AS(too_fast.step(), CFLViolation);
}

TEST_CASE("metric evolution residual") {
    SUBCASE("stationary geodesic: zero") {
        const auto metric = fixtures::flat_gaussian({-2, 2, -2, 2});
        std::vector<double> xs(65), us(65, 0.0);
        for (int i = 0; i <= 64; ++i) xs[i] = -1 + 2.0 * i / 64;
        GraphFlow flow(metric, xs, us, 1e-5, GraphBC::Dirichlet,
                       [](double, double) { return 0.0; });
        flow.step();
        flow.step();
        CHECK(metric_evolution_residual(flow, metric) <= 1e-12);
    }
    SUBCASE("needs three stored levels") {
        const auto metric = fixtures::flat_gaussian({-2, 2, -2, 2});
        std::vector<double> xs(65), us(65, 0.0);
        for (int i = 0; i <= 64; ++i) xs[i] = -1 + 2.0 * i / 64;
        GraphFlow flow(metric, xs, us, 1e-5, GraphBC::Dirichlet,
                       [](double, double) { return 0.0; });
        CHECK_THROWS_AS(metric_evolution_residual(flow, metric),
                        TooFewTimeLevels);
    }
    SUBCASE("grim reaper: small, corrupted run: large") {
        const auto metric = fixtures::flat_gaussian({-2, 2, -20, 20});
        auto flow = grim_reaper_flow(1.2, 512);
        flow.run_until(0.02);
        CHECK(metric_evolution_residual(flow, metric) <= 5e-3);
        flow.corrupt_level(1, 1.1);
        CHECK(metric_evolution_residual(flow, metric) >= 1e-1);
    }
}

TEST_CASE("parametric flow: shrinking circle radius law") {
    const auto metric = fixtures::flat_isothermal({-3, 3, -3, 3});
    Curve circle = fixtures::unit_circle(128);
    const double T = 0.05;
    circle = run_parametric_flow(metric, circle, T, 2e-5);
    const double expected = std::sqrt(1 - 2 * T);
    for (const Vec2& p : circle.pts)
        CHECK(p.norm() == doctest::Approx(expected).epsilon(2e-4));
}

TEST_CASE("parametric flow: geodesics do not move") {
    const auto metric = fixtures::flat_isothermal({-3, 3, -3, 3});
    Curve line;
    line.spacing = 0.02;
    for (int i = 0; i < 101; ++i) line.pts.emplace_back(-1 + 0.02 * i, 0.25);
    const Curve after = parametric_flow_step(metric, line, 1e-5);
    for (size_t i = 0; i < line.pts.size(); ++i)
        CHECK((after.pts[i] - line.pts[i]).norm() <= 1e-12);
}

TEST_CASE("parametric flow: ellipse rounds out monotonically") {
    const auto metric = fixtures::flat_isothermal({-4, 4, -4, 4});
    Curve ellipse;
    ellipse.closed = true;
    const int n = 256;
    for (int i = 0; i < n; ++i) {
        const double t = 2 * std::numbers::pi * i / n;
        ellipse.pts.emplace_back(1.6 * std::cos(t), 0.8 * std::sin(t));
    }
    ellipse = resample_arclength(ellipse, n, &metric);

    auto area = [](const Curve& c) {
        double a = 0;
        for (size_t i = 0; i < c.pts.size(); ++i) {
            const Vec2& p = c.pts[i];
            const Vec2& q = c.pts[(i + 1) % c.pts.size()];
            a += p.x() * q.y() - q.x() * p.y();
        }
        return 0.5 * std::abs(a);
    };

    std::vector<FlowSample> series;
    run_parametric_flow_series(metric, ellipse, 0.05, 2e-5, series);
    REQUIRE(series.size() > 10);
    // Length decreases monotonically; the isoperimetric gap never grows.
    for (size_t i = 1; i < series.size(); ++i)
        CHECK(series[i].length <= series[i - 1].length + 1e-12);
    (void)area;
}

TEST_CASE("parametric flow enforces its CFL guard") {
    const auto metric = fixtures::flat_isothermal({-3, 3, -3, 3});
    const Curve circle = fixtures::unit_circle(64);
    CHECK_THROWS_AS(parametric_flow_step(metric, circle, 1.0), CFLViolation);
}

TEST_CASE("group flow of conformal fields") {
    const auto metric = fixtures::flat_isothermal({-5, 5, -5, 5});
    SUBCASE("translation") {
        SurfaceField X;
        X.c1 = linear_component(1, 0, 0);
        X.c2 = linear_component(0, 0, 0);
        const Vec2 q = flow_conformal_field(metric, X, {0, 0}, 1.0);
        CHECK(q.x() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(q.y() == doctest::Approx(0.0));
    }
    SUBCASE("dilation reaches e^eps") {
        SurfaceField X;
        X.c1 = linear_component(0, 1, 0);
        X.c2 = linear_component(0, 0, 1);
        const Vec2 q =
            flow_conformal_field(metric, X, {1, 0}, std::log(2.0));
        CHECK(q.x() == doctest::Approx(2.0).epsilon(1e-10));
    }
    SUBCASE("rotation by pi/2") {
        SurfaceField X;
        X.c1 = linear_component(0, 0, 1);  // phi = v
        X.c2 = linear_component(0, -1, 0); // psi = -u
        const Vec2 q = flow_conformal_field(metric, X, {1, 0},
                                            std::numbers::pi / 2);
        CHECK(q.x() == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(q.y() == doctest::Approx(-1.0).epsilon(1e-10));
    }
    SUBCASE("trajectories report domain exit") {
        SurfaceField X;
        X.c1 = linear_component(1, 0, 0);
        X.c2 = linear_component(0, 0, 0);
        const auto tight = fixtures::flat_isothermal({-1, 1, -1, 1});
        CHECK_THROWS_AS(flow_conformal_field(tight, X, {0.5, 0}, 1.0),
                        DomainExit);
    }
}

TEST_CASE("conformal factor check") {
    Rng rng(5);
    SUBCASE("Killing field: factor 1") {
        const auto metric = fixtures::flat_isothermal({-2, 2, -2, 2});
        SurfaceField X;
        X.c1 = linear_component(0, 0, 1);
        X.c2 = linear_component(0, -1, 0);
        X.lambda = 0;
        CHECK(conformal_factor_check(metric, X, 0.0, 0.25, rng) <= 1e-6);
    }
    SUBCASE("flat dilation: factor e^{2 eps}") {
        const auto metric = fixtures::flat_isothermal({-2, 2, -2, 2});
        SurfaceField X;
        X.c1 = linear_component(0, 1, 0);
        X.c2 = linear_component(0, 0, 1);
        X.lambda = 1;
        CHECK(conformal_factor_check(metric, X, 1.0, 0.3, rng) <= 1e-6);
    }
    SUBCASE("I-i family matches e^{2 lambda eps} and decays like eps^2") {
        const auto pair = make_conformal_family(fixtures::family_I_i());
        const double d1 = conformal_factor_check(pair.metric, pair.field,
                                                 pair.field.lambda, 0.2, rng);
        CHECK(d1 <= 1e-5);
        const double d2 = conformal_factor_check(pair.metric, pair.field,
                                                 pair.field.lambda, 0.1, rng);
        CHECK(d2 <= 0.5 * d1 + 1e-9);
    }
}

TEST_CASE("group time solves s' e^{lambda s} = e^{-lambda s}") {
    CHECK(group_time(0.0, 0.37) == doctest::Approx(0.37));
    CHECK(group_time(-1.0, 0.125) ==
          doctest::Approx(std::log(0.75) / -2.0).epsilon(1e-15));
    CHECK_THROWS_AS(group_time(-1.0, 0.6), ParamError);
    // Matches the Euclidean shrinker scale factor sqrt(1 + 2 lambda t).
    const double s = group_time(-1.0, 0.125);
    CHECK(std::exp(-s) == doctest::Approx(std::sqrt(0.75)).epsilon(1e-14));
}

TEST_CASE("self similarity distance vanishes at T = 0") {
    const auto metric = fixtures::flat_isothermal({-3, 3, -3, 3});
    const auto X = fixtures::shrinker_field();
    const Curve circle = fixtures::unit_circle(256);
    const double d = self_similarity_check(metric, X, X.lambda, circle, 0.0);
    CHECK(d <= 1e-9);
}

TEST_CASE("self similarity rejects non-soliton inputs") {
    const auto metric = fixtures::flat_isothermal({-3, 3, -3, 3});
    const auto X = fixtures::translator_field();
    const Curve circle = fixtures::unit_circle(256);
    CHECK_THROWS_AS(self_similarity_check(metric, X, X.lambda, circle, 0.1),
                    ManifoldError);
}

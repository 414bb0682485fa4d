#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mcflab/fixtures.hpp"
#include "mcflab/symmetry.hpp"

using namespace mcf;

namespace {

JetPoint manifold_jet(const SurfaceMetric& metric, double x, double u,
                      double ux, double uxx, double t = 0.2,
                      double utt = 0.0) {
    JetPoint j;
    j.x = x;
    j.u = u;
    j.t = t;
    j.ux = ux;
    j.uxx = uxx;
    j.utt = utt;
    const Jet2 A = metric.A({x, u});
    const double L2 = A.val + ux * ux;
    j.ut = (uxx - (A.d2 / A.val) * ux * ux - (A.d1 / (2 * A.val)) * ux -
            0.5 * A.d2) /
           L2;
    const double k = geodesic_curvature_graph(metric, {x, u, ux, uxx});
    j.uxt = std::abs(ux) >= 1e-12 ? -L2 * k * k / ux : 0.0;
    j.on_manifold = true;
    return j;
}

} // namespace

TEST_CASE("phi1 examples") {
    const auto metric = fixtures::flat_gaussian();
    SUBCASE("zero jet") {
        CHECK(phi1(metric, JetPoint{}) == doctest::Approx(0.0));
    }
    SUBCASE("flat graph flow jets satisfy phi1 = 0") {
        JetPoint j;
        j.ux = 0.7;
        j.uxx = 1.3;
        j.ut = j.uxx / (1 + j.ux * j.ux);
        CHECK(phi1(metric, j) == doctest::Approx(0.0).epsilon(1e-15));
    }
    SUBCASE("unit time-defect") {
        JetPoint j;
        j.ut = 1.0;
        CHECK(phi1(metric, j) == doctest::Approx(1.0));
    }
}

TEST_CASE("phi2 examples") {
    const auto metric = fixtures::flat_gaussian();
    SUBCASE("geodesic jet") {
        CHECK(phi2(metric, JetPoint{}) == doctest::Approx(0.0));
    }
    SUBCASE("constraint solved for u_xt") {
        JetPoint j;
        j.ux = 1.0;
        j.uxx = 2.0;
        const double L2 = 1 + j.ux * j.ux;
        const double k = j.uxx / std::pow(L2, 1.5);
        j.uxt = -L2 * k * k / j.ux;
        CHECK(phi2(metric, j) == doctest::Approx(0.0).epsilon(1e-15));
    }
    SUBCASE("u_x = 0 with curvature leaves a positive defect") {
        JetPoint j;
        j.uxx = 2.0;
        CHECK(phi2(metric, j) == doctest::Approx(4.0)); // L^2 k^2 = 4
    }
}

TEST_CASE("prolongation coefficients, printed formulas") {
    SUBCASE("constant-coefficient field d_t") {
        const auto cand = fixtures::candidate_dt();
        JetPoint j;
        j.ux = 0.3;
        j.ut = -0.8;
        j.uxx = 1.1;
        j.uxt = 0.2;
        j.utt = 0.5;
        const auto c = prolongation_coeffs(cand, j);
        CHECK(c.px == doctest::Approx(0.0));
        CHECK(c.pt == doctest::Approx(0.0));
        CHECK(c.pxx == doctest::Approx(0.0));
        CHECK(c.pxt == doctest::Approx(0.0));
    }
    SUBCASE("dilation: phi^x = 0, phi^t = -u_t") {
        const auto cand = fixtures::candidate_dilation();
        JetPoint j;
        j.ux = 0.37;
        j.ut = -1.4;
        const auto c = prolongation_coeffs(cand, j);
        CHECK(c.px == doctest::Approx(0.0));
        CHECK(c.pt == doctest::Approx(-j.ut));
    }
    SUBCASE("tau = t^2 alone: phi^t = -2 t u_t") {
        const auto cand = SymmetryCandidate::from_quadratics(
            Quadratic3{.ctt = 1}, {}, {}, "t^2 d_t");
        JetPoint j;
        j.t = 0.6;
        j.ut = 1.0;
        const auto c = prolongation_coeffs(cand, j);
        CHECK(c.pt == doctest::Approx(-2 * j.t * j.ut));
    }
}

TEST_CASE("prolongation coefficients satisfy the total-derivative recursion") {
    // Second-order coefficients are total derivatives of first-order ones:
    //   phi^xx = D_x phi^x - (D_x xi) u_xx - (D_x tau) u_xt
    //   phi^xt = D_t phi^x - (D_t xi) u_xx - (D_t tau) u_xt
    // with D_x = d_x + u_x d_u + u_xx d_{u_x} + u_xt d_{u_t} and
    // D_t = d_t + u_t d_u + u_xt d_{u_x} + u_tt d_{u_t} on first-order
    // quantities. Checked by numeric differentiation of phi^x itself.
    Rng rng(99);
    auto random_quadratic = [&]() {
        Quadratic3 q;
        q.c0 = rng.uniform(-1, 1);
        q.ct = rng.uniform(-1, 1);
        q.cx = rng.uniform(-1, 1);
        q.cu = rng.uniform(-1, 1);
        q.ctt = rng.uniform(-1, 1);
        q.ctx = rng.uniform(-1, 1);
        q.ctu = rng.uniform(-1, 1);
        q.cxx = rng.uniform(-1, 1);
        q.cxu = rng.uniform(-1, 1);
        q.cuu = rng.uniform(-1, 1);
        return q;
    };
    for (int trial = 0; trial < 20; ++trial) {
        const auto cand = SymmetryCandidate::from_quadratics(
            random_quadratic(), random_quadratic(), random_quadratic(),
            "random");
        JetPoint j;
        j.t = rng.uniform(-1, 1);
        j.x = rng.uniform(-1, 1);
        j.u = rng.uniform(-1, 1);
        j.ux = rng.uniform(-1, 1);
        j.ut = rng.uniform(-1, 1);
        j.uxx = rng.uniform(-1, 1);
        j.uxt = rng.uniform(-1, 1);
        j.utt = rng.uniform(-1, 1);

        const double h = 1e-6;
        auto phix = [&](double dt_, double dx_, double du_, double dux,
                        double dut) {
            JetPoint p = j;
            p.t += dt_;
            p.x += dx_;
            p.u += du_;
            p.ux += dux;
            p.ut += dut;
            return prolongation_coeffs(cand, p).px;
        };
        const double px_t =
            (phix(h, 0, 0, 0, 0) - phix(-h, 0, 0, 0, 0)) / (2 * h);
        const double px_x =
            (phix(0, h, 0, 0, 0) - phix(0, -h, 0, 0, 0)) / (2 * h);
        const double px_u =
            (phix(0, 0, h, 0, 0) - phix(0, 0, -h, 0, 0)) / (2 * h);
        const double px_ux =
            (phix(0, 0, 0, h, 0) - phix(0, 0, 0, -h, 0)) / (2 * h);
        const double px_ut =
            (phix(0, 0, 0, 0, h) - phix(0, 0, 0, 0, -h)) / (2 * h);

        const Trijet tau = cand.tau(j.t, j.x, j.u);
        const Trijet xi = cand.xi(j.t, j.x, j.u);
        const double Dx_phix =
            px_x + j.ux * px_u + j.uxx * px_ux + j.uxt * px_ut;
        const double Dt_phix =
            px_t + j.ut * px_u + j.uxt * px_ux + j.utt * px_ut;
        const double Dx_xi = xi.dx + j.ux * xi.du;
        const double Dt_xi = xi.dt + j.ut * xi.du;
        const double Dx_tau = tau.dx + j.ux * tau.du;
        const double Dt_tau = tau.dt + j.ut * tau.du;

        const auto c = prolongation_coeffs(cand, j);
        CHECK(c.pxx == doctest::Approx(Dx_phix - Dx_xi * j.uxx -
                                       Dx_tau * j.uxt)
                           .epsilon(1e-7));
        CHECK(c.pxt == doctest::Approx(Dt_phix - Dt_xi * j.uxx -
                                       Dt_tau * j.uxt)
                           .epsilon(1e-7));
    }
}

TEST_CASE("apply_prolongation rejects off-manifold jets") {
    const auto metric = fixtures::flat_gaussian();
    JetPoint j;
    j.ut = 1.0; // phi1 = 1
    CHECK_THROWS_AS(
        apply_prolongation(metric, fixtures::candidate_dt(), j),
        ManifoldError);
}

TEST_CASE("hand-computed prolongation residuals") {
    const auto metric = fixtures::flat_gaussian();
    // For v = u d_x on the flat chart the residual reduces to
    // 2 u_x u_xx / L^2; for v = x^2 d_x it is 2 u_x + 4 x u_xx / L^2.
    const JetPoint j = manifold_jet(metric, 0.4, -0.2, 0.8, 1.5);
    const double L2 = 1 + j.ux * j.ux;
    CHECK(apply_prolongation(metric, fixtures::candidate_udx(), j) ==
          doctest::Approx(2 * j.ux * j.uxx / L2).epsilon(1e-12));
    CHECK(apply_prolongation(metric, fixtures::candidate_x2dx(), j) ==
          doctest::Approx(2 * j.ux + 4 * j.x * j.uxx / L2).epsilon(1e-12));
}

TEST_CASE("symmetry table candidates annihilate phi1 on the flat manifold") {
    const auto metric = fixtures::flat_gaussian();
    Rng rng(41);
    const auto jets = sample_manifold_jets(metric, 100, rng);
    for (const auto& cand : fixtures::symmetry_table_candidates()) {
        CAPTURE(cand.name);
        CHECK(max_prolongation_residual(metric, cand, jets) <= 1e-8);
    }
}

TEST_CASE("failing candidates are separated by the dead zone") {
    const auto metric = fixtures::flat_gaussian();
    Rng rng(42);
    const auto jets = sample_manifold_jets(metric, 100, rng);
    CHECK(max_prolongation_residual(metric, fixtures::candidate_x2dx(), jets) >=
          1e-2);
    CHECK(max_prolongation_residual(metric, fixtures::candidate_udx(), jets) >=
          1e-2);
}

TEST_CASE("hyperbolic chart: Killing passes, dilation is obstructed") {
    const auto metric = fixtures::hyperbolic_gaussian();
    Rng rng(43);
    const auto jets = sample_manifold_jets(metric, 100, rng);
    CHECK(max_prolongation_residual(metric, fixtures::candidate_dx(), jets) <=
          1e-8);
    CHECK(max_prolongation_residual(metric, fixtures::candidate_dilation(),
                                    jets) >= 1e-2);
}

TEST_CASE("determining equations on the flat chart") {
    const auto metric = fixtures::flat_gaussian();
    SUBCASE("d_x solves all eight") {
        const auto r = determining_residuals(metric, fixtures::candidate_dx());
        for (double v : r) CHECK(v <= 1e-12);
    }
    SUBCASE("dilation solves all eight") {
        const auto r =
            determining_residuals(metric, fixtures::candidate_dilation());
        for (double v : r) CHECK(v <= 1e-10);
    }
    SUBCASE("u d_x violates (26b) by exactly one") {
        const auto r = determining_residuals(metric, fixtures::candidate_udx());
        CHECK(r[1] == doctest::Approx(1.0));
    }
    SUBCASE("tau(x,u) dependence is reported via the eighth entry") {
        const auto cand = SymmetryCandidate::from_quadratics(
            Quadratic3{.cx = 1}, {}, {}, "x d_t");
        const auto r = determining_residuals(metric, cand);
        CHECK(r[7] >= 1.0 - 1e-12);
    }
}

TEST_CASE("determining residuals agree with prolongation verdicts") {
    // The equivalence behind the determining system: all eight residuals
    // vanish exactly when pr^(2)v[Phi^1] vanishes on the manifold.
    for (const bool hyperbolic : {false, true}) {
        const auto metric = hyperbolic ? fixtures::hyperbolic_gaussian()
                                       : fixtures::flat_gaussian();
        Rng rng(44);
        const auto jets = sample_manifold_jets(metric, 100, rng);
        auto all = fixtures::symmetry_table_candidates();
        all.push_back(fixtures::candidate_x2dx());
        all.push_back(fixtures::candidate_udx());
        for (const auto& cand : all) {
            CAPTURE(hyperbolic);
            CAPTURE(cand.name);
            const auto det = determining_residuals(metric, cand);
            double det_max = 0;
            for (double v : det) det_max = std::max(det_max, v);
            const double pr = max_prolongation_residual(metric, cand, jets);
            CHECK((det_max <= 1e-9) == (pr <= 1e-7));
        }
    }
}

TEST_CASE("x-dependent metric: disguised flat dilation passes") {
    // A = e^{2x} is the flat plane in the chart y = e^x; the Euclidean
    // dilation pulls back to d_x + u d_u, so with 2t d_t it generates a
    // rescaling. This exercises every A_x term of the determining system.
    const auto metric = SurfaceMetric::normal_gaussian(
        [](const Vec2& p) {
            const double A = std::exp(2 * p.x());
            return Jet2{A, 2 * A, 0, 4 * A, 0, 0};
        },
        {-1, 1, -1, 1});
    const auto good = SymmetryCandidate::from_quadratics(
        Quadratic3{.ct = 2}, Quadratic3{.c0 = 1}, Quadratic3{.cu = 1},
        "d_x + u d_u + 2t d_t");

    const auto det = determining_residuals(metric, good);
    for (double v : det) CHECK(v <= 1e-12);
    const auto hom = homothetic_system_residual(metric, good, 1.0);
    for (double v : hom) CHECK(v <= 1e-12);

    Rng rng(55);
    const auto jets = sample_manifold_jets(metric, 100, rng);
    CHECK(max_prolongation_residual(metric, good, jets) <= 1e-8);
    // The coordinate dilation x d_x + u d_u + 2t d_t is not a symmetry in
    // this chart.
    CHECK(max_prolongation_residual(metric, fixtures::candidate_dilation(),
                                    jets) >= 1e-2);
}

TEST_CASE("homothetic field system residuals") {
    const auto metric = fixtures::flat_gaussian();
    SUBCASE("dilation field with lambda = 1") {
        const auto r = homothetic_system_residual(
            metric, fixtures::candidate_dilation(), 1.0);
        for (double v : r) CHECK(v <= 1e-14);
    }
    SUBCASE("rotation Killing field with lambda = 0") {
        const auto r = homothetic_system_residual(
            metric, fixtures::candidate_rotation(), 0.0);
        for (double v : r) CHECK(v <= 1e-14);
    }
    SUBCASE("xi = x^2 leaves |4x - 2 lambda| in the first equation") {
        for (double lambda : {0.0, 1.0}) {
            const auto r = homothetic_system_residual(
                metric, fixtures::candidate_x2dx(), lambda);
            CHECK(r[0] ==
                  doctest::Approx(std::max(std::abs(4 - 2 * lambda),
                                           std::abs(-4 - 2 * lambda))));
        }
    }
}

TEST_CASE("verdict dead zone") {
    CHECK(classify_residual(1e-9) == Verdict::Pass);
    CHECK(classify_residual(1e-5) == Verdict::Indeterminate);
    CHECK(classify_residual(0.5) == Verdict::Fail);
}

#include "mcflab/symmetry.hpp"

#include <cmath>

#include "mcflab/geometry.hpp"

namespace mcf {

double phi1(const SurfaceMetric& metric, const JetPoint& jet) {
    const Jet2 A = metric.A({jet.x, jet.u});
    const double L2 = A.val + jet.ux * jet.ux;
    return L2 * jet.ut - jet.uxx + (A.d2 / A.val) * jet.ux * jet.ux +
           (A.d1 / (2 * A.val)) * jet.ux + 0.5 * A.d2;
}

double phi2(const SurfaceMetric& metric, const JetPoint& jet) {
    const Jet2 A = metric.A({jet.x, jet.u});
    const double L2 = A.val + jet.ux * jet.ux;
    const double k =
        geodesic_curvature_graph(metric, {jet.x, jet.u, jet.ux, jet.uxx});
    return jet.ux * jet.uxt + L2 * k * k;
}

ProlongationCoeffs prolongation_coeffs(const SymmetryCandidate& cand,
                                       const JetPoint& j) {
    const Trijet tau = cand.tau(j.t, j.x, j.u);
    const Trijet xi = cand.xi(j.t, j.x, j.u);
    const Trijet eta = cand.eta(j.t, j.x, j.u);
    const double ux = j.ux, ut = j.ut, uxx = j.uxx, uxt = j.uxt, utt = j.utt;

    ProlongationCoeffs c{};
    c.px = eta.dx + (eta.du - xi.dx) * ux - tau.dx * ut - xi.du * ux * ux -
           tau.du * ux * ut;

    c.pt = eta.dt - xi.dt * ux + (eta.du - tau.dt) * ut - xi.du * ux * ut -
           tau.du * ut * ut;

    c.pxx = eta.dxx + 2 * eta.dxu * ux - xi.dxx * ux - tau.dxx * ut +
            eta.duu * ux * ux - 2 * xi.dxu * ux * ux -
            2 * tau.dxu * ux * ut - xi.duu * ux * ux * ux -
            tau.duu * ux * ux * ut + eta.du * uxx - 2 * xi.dx * uxx -
            2 * tau.dx * uxt - 3 * xi.du * ux * uxx - tau.du * ut * uxx -
            2 * tau.du * ux * uxt;

    c.pxt = eta.dtx + eta.dtu * ux + eta.dxu * ut - xi.dtx * ux -
            tau.dtx * ut + eta.duu * ux * ut - xi.dtu * ux * ux -
            xi.dxu * ut * ux - tau.dtu * ux * ut + eta.du * uxt -
            xi.dt * uxx - xi.dx * uxt - tau.dt * uxt -
            xi.duu * ut * ux * ux - tau.dxu * ut * ut -
            2 * xi.du * uxt * ux - xi.du * ut * uxx -
            tau.duu * ux * ut * ut - 2 * tau.du * ut * uxt - tau.dx * utt -
            tau.du * ux * utt;
    return c;
}

double apply_prolongation(const SurfaceMetric& metric,
                          const SymmetryCandidate& cand, const JetPoint& jet,
                          double manifold_tol) {
    const Jet2 A = metric.A({jet.x, jet.u});
    const double L2 = A.val + jet.ux * jet.ux;

    const double p1 = phi1(metric, jet);
    if (std::abs(p1) > manifold_tol * std::max(1.0, std::abs(L2 * jet.ut)))
        throw ManifoldError("jet does not satisfy Phi^1 = 0");
    if (std::abs(jet.ux) >= 0.1) {
        const double p2 = phi2(metric, jet);
        if (std::abs(p2) > manifold_tol * std::max(1.0, L2))
            throw ManifoldError("jet does not satisfy Phi^2 = 0");
    }

    const Trijet tau = cand.tau(jet.t, jet.x, jet.u);
    const Trijet xi = cand.xi(jet.t, jet.x, jet.u);
    const Trijet eta = cand.eta(jet.t, jet.x, jet.u);
    const ProlongationCoeffs c = prolongation_coeffs(cand, jet);

    const double a = A.val;
    // Partials of Phi^1 with respect to the jet coordinates, in closed form.
    const double dAu_over_A_dx = (A.d12 * a - A.d2 * A.d1) / (a * a);
    const double dAu_over_A_du = (A.d22 * a - A.d2 * A.d2) / (a * a);
    const double dAx_over_2A_dx = (A.d11 * a - A.d1 * A.d1) / (2 * a * a);
    const double dAx_over_2A_du = (A.d12 * a - A.d1 * A.d2) / (2 * a * a);

    const double phi1_x = A.d1 * jet.ut + dAu_over_A_dx * jet.ux * jet.ux +
                          dAx_over_2A_dx * jet.ux + 0.5 * A.d12;
    const double phi1_u = A.d2 * jet.ut + dAu_over_A_du * jet.ux * jet.ux +
                          dAx_over_2A_du * jet.ux + 0.5 * A.d22;
    const double phi1_ux =
        2 * jet.ux * jet.ut + 2 * (A.d2 / a) * jet.ux + A.d1 / (2 * a);
    const double phi1_ut = L2;
    const double phi1_uxx = -1.0;

    // A carries no explicit t-dependence, so the tau d_t term drops; tau
    // still acts through the prolongation coefficients.
    (void)tau;
    return xi.val * phi1_x + eta.val * phi1_u + c.px * phi1_ux +
           c.pt * phi1_ut + c.pxx * phi1_uxx;
}

std::vector<JetPoint> sample_manifold_jets(const SurfaceMetric& metric, int n,
                                           Rng& rng) {
    std::vector<JetPoint> jets;
    jets.reserve(n);
    const Rect& d = metric.domain();
    for (int i = 0; i < n; ++i) {
        JetPoint j;
        j.x = rng.uniform(d.lo1, d.hi1);
        j.u = rng.uniform(d.lo2, d.hi2);
        j.t = rng.uniform(0.0, 1.0);
        j.ux = rng.uniform_two_sided(0.1, 2.0);
        j.uxx = rng.uniform(-2.0, 2.0);
        j.utt = rng.uniform(-1.0, 1.0);

        const Jet2 A = metric.A({j.x, j.u});
        const double L2 = A.val + j.ux * j.ux;
        j.ut = (j.uxx - (A.d2 / A.val) * j.ux * j.ux -
                (A.d1 / (2 * A.val)) * j.ux - 0.5 * A.d2) /
               L2;
        const double k =
            geodesic_curvature_graph(metric, {j.x, j.u, j.ux, j.uxx});
        j.uxt = -L2 * k * k / j.ux;
        j.on_manifold = true;
        jets.push_back(j);
    }
    return jets;
}

double max_prolongation_residual(const SurfaceMetric& metric,
                                 const SymmetryCandidate& cand,
                                 const std::vector<JetPoint>& jets) {
    double worst = 0;
    for (const auto& j : jets)
        worst = std::max(worst, std::abs(apply_prolongation(metric, cand, j)));
    return worst;
}

std::array<double, 8> determining_residuals(const SurfaceMetric& metric,
                                            const SymmetryCandidate& cand,
                                            int grid) {
    std::array<double, 8> worst{};
    const auto pts = metric.domain().grid(grid, grid);
    const double times[3] = {0.0, 0.5, 1.0};
    for (const Vec2& p : pts) {
        const Jet2 A = metric.A(p);
        const double a = A.val;
        const double dAuA_u = (A.d22 * a - A.d2 * A.d2) / (a * a);
        const double dAuA_x = (A.d12 * a - A.d2 * A.d1) / (a * a);
        const double dAxA_x = (A.d11 * a - A.d1 * A.d1) / (a * a);
        const double dAxA_u = (A.d12 * a - A.d1 * A.d2) / (a * a);
        for (double t : times) {
            const Trijet tau = cand.tau(t, p.x(), p.y());
            const Trijet xi = cand.xi(t, p.x(), p.y());
            const Trijet eta = cand.eta(t, p.x(), p.y());

            const double e[8] = {
                2 * a * xi.dx + A.d1 * xi.val + A.d2 * eta.val - a * tau.dt,
                a * xi.du + eta.dx,
                2 * eta.du - tau.dt,
                A.d2 * xi.du + a * xi.duu - a * xi.dt,
                dAuA_u * eta.val + dAuA_x * xi.val + (A.d1 / a) * xi.du +
                    2 * xi.dxu + eta.dt + (A.d2 / a) * eta.du,
                dAxA_u * eta.val + dAxA_x * xi.val - 2 * a * xi.dt +
                    (A.d2 / a) * eta.dx + (A.d1 / a) * xi.dx + 2 * xi.dxx,
                A.d22 * eta.val + A.d12 * xi.val + 2 * A.d2 * xi.dx +
                    2 * a * eta.dt - A.d2 * eta.du + (A.d1 / a) * eta.dx -
                    2 * eta.dxx,
                std::abs(tau.dx) + std::abs(tau.du),
            };
            for (int k = 0; k < 8; ++k)
                worst[k] = std::max(worst[k], std::abs(e[k]));
        }
    }
    return worst;
}

std::array<double, 3> homothetic_system_residual(const SurfaceMetric& metric,
                                                 const SymmetryCandidate& cand,
                                                 double lambda, int grid) {
    std::array<double, 3> worst{};
    const auto pts = metric.domain().grid(grid, grid);
    for (const Vec2& p : pts) {
        const Jet2 A = metric.A(p);
        const Trijet xi = cand.xi(0, p.x(), p.y());
        const Trijet eta = cand.eta(0, p.x(), p.y());
        const double e[3] = {
            2 * A.val * xi.dx + A.d1 * xi.val + A.d2 * eta.val -
                2 * A.val * lambda,
            A.val * xi.du + eta.dx,
            eta.du - lambda,
        };
        for (int k = 0; k < 3; ++k)
            worst[k] = std::max(worst[k], std::abs(e[k]));
    }
    return worst;
}

Verdict classify_residual(double residual, double pass_tol, double fail_tol) {
    if (residual <= pass_tol) return Verdict::Pass;
    if (residual >= fail_tol) return Verdict::Fail;
    return Verdict::Indeterminate;
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

} // namespace mcf

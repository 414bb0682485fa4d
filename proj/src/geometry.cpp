#include "mcflab/geometry.hpp"

#include <cmath>

namespace mcf {

double geodesic_curvature_graph(const SurfaceMetric& metric,
                                const GraphJet& jet) {
    const Jet2 A = metric.A({jet.x, jet.u});
    const double L2 = A.val + jet.ux * jet.ux;
    const double L = std::sqrt(L2);
    // d1 = A_x, d2 = A_u in the (x,u) chart.
    return std::sqrt(A.val) / (L2 * L) *
           (jet.uxx - (A.d2 / A.val) * jet.ux * jet.ux -
            (A.d1 / (2 * A.val)) * jet.ux - 0.5 * A.d2);
}

Vec2 gauss_formula_terms(const Jet2& rho, const CurveState& st) {
    const double up = st.vel.x(), vp = st.vel.y();
    const double upp = st.acc.x(), vpp = st.acc.y();
    const double f1 =
        upp + (up * up - vp * vp) * rho.d1 + 2 * up * vp * rho.d2;
    const double f2 =
        vpp - (up * up - vp * vp) * rho.d2 + 2 * up * vp * rho.d1;
    return {f1, f2};
}

double geodesic_curvature_parametric(const SurfaceMetric& metric,
                                     const CurveState& state,
                                     double speed_tol) {
    const Jet2 rho = metric.rho(state.pos);
    const double e2r = std::exp(2 * rho.val);
    const double speed2 = state.vel.squaredNorm();
    if (std::abs(speed2 - std::exp(-2 * rho.val)) >
        speed_tol * std::max(1.0, std::exp(-2 * rho.val)))
        throw SpeedError("curve state violates the unit-speed relation");
    const Vec2 f = gauss_formula_terms(rho, state);
    return e2r * (-state.vel.y() * f.x() + state.vel.x() * f.y());
}

double gauss_curvature(const SurfaceMetric& metric, const Vec2& point) {
    const Jet2 rho = metric.rho(point);
    return -std::exp(-2 * rho.val) * (rho.d11 + rho.d22);
}

Mat2 lie_derivative_matrix(const SurfaceMetric& metric,
                           const SurfaceField& field, const Vec2& p) {
    metric.require_point(p);
    const Jet1 f1 = field.c1(p);
    const Jet1 f2 = field.c2(p);
    Mat2 r;
    if (metric.form() == MetricForm::Isothermal) {
        const Jet2 rho = metric.rho(p);
        const double E = std::exp(2 * rho.val);
        const double drift = f1.val * rho.d1 + f2.val * rho.d2;
        const double r11 = E * (2 * f1.d1 + 2 * drift - 2 * field.lambda);
        const double r22 = E * (2 * f2.d2 + 2 * drift - 2 * field.lambda);
        const double r12 = E * (f1.d2 + f2.d1);
        r << r11, r12, r12, r22;
    } else {
        // (xi, eta) on A(x,u) dx^2 + du^2
        const Jet2 A = metric.A(p);
        const double r11 =
            2 * A.val * f1.d1 + A.d1 * f1.val + A.d2 * f2.val -
            2 * field.lambda * A.val;
        const double r12 = A.val * f1.d2 + f2.d1;
        const double r22 = 2 * f2.d2 - 2 * field.lambda;
        r << r11, r12, r12, r22;
    }
    return r;
}

LieDerivativeResult lie_derivative_residual(const SurfaceMetric& metric,
                                            const SurfaceField& field,
                                            std::span<const Vec2> points) {
    LieDerivativeResult out;
    out.points.assign(points.begin(), points.end());
    out.residuals.reserve(points.size());
    for (const Vec2& p : points) {
        const Mat2 r = lie_derivative_matrix(metric, field, p);
        out.residuals.push_back(r);
        out.max_norm =
            std::max(out.max_norm, r.cwiseAbs().maxCoeff());
    }
    return out;
}

LieDerivativeResult lie_derivative_residual(const SurfaceMetric& metric,
                                            const SurfaceField& field) {
    const auto pts = metric.domain().grid(20, 20);
    return lie_derivative_residual(metric, field, pts);
}

} // namespace mcf

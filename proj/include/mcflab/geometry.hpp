#ifndef MCFLAB_GEOMETRY_HPP
#define MCFLAB_GEOMETRY_HPP

#include <span>
#include <vector>

#include "mcflab/metric.hpp"
#include "mcflab/vector_field.hpp"

namespace mcf {

/** Second-order data of a graph curve u(x) at one point. */
struct GraphJet {
    double x = 0, u = 0, ux = 0, uxx = 0;
};

/** Second-order data of a parametrized curve (u(s), v(s)) at one point. */
struct CurveState {
    Vec2 pos{0, 0};
    Vec2 vel{0, 0}; // (u', v')
    Vec2 acc{0, 0}; // (u'', v'')
};

/** Geodesic curvature of the graph curve u(x) in the normal Gaussian metric
 * A(x,u) dx^2 + du^2,
 *     k = (sqrt(A)/L^3) (u_xx - (A_u/A) u_x^2 - (A_x/2A) u_x - A_u/2),
 * with L^2 = A + u_x^2 and unit normal (1/(sqrt(A) L)) (-u_x d_x + A d_u). */
double geodesic_curvature_graph(const SurfaceMetric& metric, const GraphJet& jet);

/** Geodesic curvature of a unit-speed curve on an isothermal surface,
 *     k_g = e^{2 rho} (-v' f1 + u' f2),
 * with respect to the left-ward unit normal -v' d_u + u' d_v.
 * Requires (u')^2 + (v')^2 = e^{-2 rho} within speed_tol. */
double geodesic_curvature_parametric(const SurfaceMetric& metric,
                                     const CurveState& state,
                                     double speed_tol = 1e-6);

/** The pair (f1, f2) from the Gauss formula; k_g = e^{2rho}(-v' f1 + u' f2). */
Vec2 gauss_formula_terms(const Jet2& rho, const CurveState& state);

/** Gauss curvature K = -e^{-2 rho} (rho_uu + rho_vv) of an isothermal metric. */
double gauss_curvature(const SurfaceMetric& metric, const Vec2& point);

struct LieDerivativeResult {
    std::vector<Vec2> points;
    std::vector<Mat2> residuals; // (L_X g - 2 lambda g) componentwise
    double max_norm = 0;
};

/** Componentwise defect L_X g - 2 lambda g of a candidate conformal field,
 * evaluated at the given sample points (or on a 20x20 grid by default). */
LieDerivativeResult lie_derivative_residual(const SurfaceMetric& metric,
                                            const SurfaceField& field,
                                            std::span<const Vec2> points);
LieDerivativeResult lie_derivative_residual(const SurfaceMetric& metric,
                                            const SurfaceField& field);

/** Single-point residual matrix. */
Mat2 lie_derivative_matrix(const SurfaceMetric& metric,
                           const SurfaceField& field, const Vec2& p);

} // namespace mcf

#endif

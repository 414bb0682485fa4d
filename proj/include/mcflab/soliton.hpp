#ifndef MCFLAB_SOLITON_HPP
#define MCFLAB_SOLITON_HPP

#include <vector>

#include "mcflab/curve.hpp"
#include "mcflab/geometry.hpp"

namespace mcf {

/** State of the initial-curve ODE system: position (u,v) and arclength
 * derivatives (w,z) = (u', v'), subject to w^2 + z^2 = e^{-2 rho(u,v)}. */
struct SolitonState {
    double u = 0, v = 0, w = 0, z = 0;

    Vec2 pos() const { return {u, v}; }
    Vec2 vel() const { return {w, z}; }
};

/** Right-hand side (w, z, w', z') of the first-order system obtained from
 * the soliton condition (phi - f1) v' + (f2 - psi) u' = 0 together with the
 * differentiated unit-speed relation. The closure for (w', z') divides by
 * w in its eliminated form; |w| < w_min raises SingularError to signal a
 * chart swap. */
Eigen::Vector4d soliton_rhs(const SurfaceMetric& metric,
                            const SurfaceField& field,
                            const SolitonState& state, double w_min = 1e-6);

/** The same closure solved as a 2x2 linear system; total away from
 * e^{-2rho} = 0 and used internally by the integrator stages. */
Vec2 soliton_closure(const Jet2& rho, const SurfaceField& field,
                     const SolitonState& state);

enum class StopReason { Completed, Singular, LeftDomain };

struct SolitonRun {
    Curve curve;                       // positions, arclength-parametrized
    std::vector<SolitonState> states;  // one per point
    std::vector<double> s;             // arclength per point
    StopReason stop = StopReason::Completed;
    double s_reached = 0;
    double max_speed_defect = 0;       // max |w^2+z^2-e^{-2rho}| along the run
};

struct SolitonOptions {
    double step = 1e-3;
    int project_interval = 100; // renormalize (w,z) every k steps; 0 disables
    double w_min = 1e-6;        // chart-swap threshold
};

/** Fixed-step RK4 integration of the initial-curve system. Swaps to the
 * mirrored chart (u <-> v) when |w| drops under the elimination guard and
 * stops with a diagnostic on singularity or domain exit. */
SolitonRun integrate_soliton(const SurfaceMetric& metric,
                             const SurfaceField& field,
                             const SolitonState& initial, double arclength,
                             const SolitonOptions& opts = {});

/** Max over points of |(phi - f1) v' + (f2 - psi) u'| for an
 * arclength-parametrized curve, derivatives by central differences.
 * Zero certifies the curve as a soliton initial datum for (X, metric). */
double characterizing_residual(const SurfaceMetric& metric,
                               const SurfaceField& field, const Curve& curve);

/** The same defect per point. */
std::vector<double> characterizing_residuals_pointwise(
    const SurfaceMetric& metric, const SurfaceField& field,
    const Curve& curve);

/** Planar homothetic-soliton defect max |k nu - cc' F0^perp| over a planar
 * arclength-parametrized curve, with cc' evaluated at t = 0. */
double euclidean_homothetic_residual(const Curve& curve, double cc_prime);

} // namespace mcf

#endif

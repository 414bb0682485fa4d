#ifndef MCFLAB_CURVE_HPP
#define MCFLAB_CURVE_HPP

#include <optional>
#include <vector>

#include "mcflab/geometry.hpp"
#include "mcflab/metric.hpp"

namespace mcf {

enum class CurveParam { Arclength, Graph, General };

/** Ordered point list on a surface chart. `spacing`, when set, is the exact
 * uniform arclength step between consecutive points (integrator output and
 * analytic fixtures know it; flow steps invalidate it). */
struct Curve {
    std::vector<Vec2> pts;
    CurveParam param = CurveParam::General;
    bool closed = false;
    std::optional<double> spacing;

    size_t size() const { return pts.size(); }
};

/** Metric length of one segment (midpoint-rule conformal factor, or the
 * Euclidean chord when metric is null / normal Gaussian is not involved). */
double segment_length(const Vec2& a, const Vec2& b, const SurfaceMetric* metric);

/** Total polygonal length of a curve in the metric. */
double curve_length(const Curve& c, const SurfaceMetric* metric);

/** Cumulative arclength table; size() entries for open curves,
 * size()+1 (with the closing segment) for closed ones. */
std::vector<double> arclength_table(const Curve& c, const SurfaceMetric* metric);

/** Resamples a curve to n points uniform in metric arclength, using
 * Catmull-Rom interpolation through the existing points (periodic for
 * closed curves). */
Curve resample_arclength(const Curve& c, int n, const SurfaceMetric* metric);

/** Checks the Arclength invariant: segment lengths uniform within rel_tol. */
bool arclength_uniform(const Curve& c, const SurfaceMetric* metric,
                       double rel_tol = 0.05);

/** Stencil selection for open-curve boundary nodes: HighOrder uses wide
 * one-sided formulas (best for static residual evaluation), FlowSafe uses
 * compact second-order ones that stay stable under explicit stepping. */
enum class StencilMode { HighOrder, FlowSafe };

/** Central-difference curve states (position, d/ds, d2/ds2) at every node.
 * Uniformly spaced curves get five-point stencils; otherwise nonuniform
 * 3-point formulas. Requires >= 5 points. */
std::vector<CurveState> curve_states(const Curve& c, const SurfaceMetric* metric,
                                     StencilMode mode = StencilMode::HighOrder);

/** Curve state rescaled to exact metric unit speed, with the chain-rule
 * correction applied to the second derivative. The Gauss-formula
 * curvature assumes unit speed; finite-difference states miss it by
 * O(h^2) without this. */
struct UnitSpeedState {
    CurveState state;
    Jet2 rho;
    double e2rho = 1;
};
std::vector<UnitSpeedState> unit_speed_states(const SurfaceMetric& metric,
                                              const Curve& c,
                                              StencilMode mode = StencilMode::HighOrder);

/** True if any two non-adjacent segments of the polygon cross. */
bool self_intersects(const Curve& c);

} // namespace mcf

#endif

#ifndef MCFLAB_FLOW_HPP
#define MCFLAB_FLOW_HPP

#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "mcflab/curve.hpp"
#include "mcflab/geometry.hpp"
#include "mcflab/vector_field.hpp"

namespace mcf {

enum class GraphBC { Dirichlet, Periodic };

/** Method-of-lines state for the graph flow
 *   u_t = (1/L^2)(u_xx - (A_u/A) u_x^2 - (A_x/2A) u_x - A_u/2).
 *
 * Explicit Euler in time with central differences in space, guarded by
 * dt <= cfl_factor * dx^2 * min(L^2). Keeps the last three time levels for
 * time differencing. */
class GraphFlow {
  public:
    GraphFlow(const SurfaceMetric& metric, std::vector<double> x_grid,
              std::vector<double> u0, double dt, GraphBC bc,
              std::function<double(double, double)> boundary = {});

    /** One explicit Euler step. Throws CFLViolation or BlowUp. */
    void step();

    void run_until(double T);

    const std::vector<double>& x() const { return x_; }
    const std::vector<double>& u() const { return u_; }
    double t() const { return t_; }
    double dx() const { return dx_; }
    double dt() const { return dt_; }
    int stored_levels() const { return static_cast<int>(history_.size()); }

    /** Level snapshots (time, values), oldest first, at most three. */
    const std::deque<std::pair<double, std::vector<double>>>& history() const {
        return history_;
    }

    /** Overwrites one stored history level (negative-control experiments). */
    void corrupt_level(int level_index, double scale);

    double length() const;
    double max_curvature() const;

    static constexpr double cfl_factor = 0.4;
    static constexpr double gradient_blowup = 1e6;

  private:
    std::vector<double> rhs(const std::vector<double>& u, double t) const;
    double boundary_value(int side, double t) const;
    void push_history();

    SurfaceMetric metric_;
    std::vector<double> x_, u_;
    double t_ = 0, dx_, dt_;
    GraphBC bc_;
    std::function<double(double, double)> boundary_;
    std::deque<std::pair<double, std::vector<double>>> history_;
};

/** Consistency defect of the induced-metric evolution on a graph-flow run,
 * evaluated at the middle stored time level:
 *   d/dt L^2 + 2 L^2 k^2 - 2 L d/dx (u_x u_t / L),
 * where the last term carries the tangential part of the vertical motion.
 * Max over interior nodes; needs three stored levels. */
double metric_evolution_residual(const GraphFlow& flow,
                                 const SurfaceMetric& metric);

struct ParametricFlowOptions {
    int resample_interval = 20;
    bool check_self_intersection = true;
    double collapse_factor = 10.0; // abort when length < factor * spacing
};

/** One front-tracking step of (dF/dt)^perp = k_g nu: every node moves by
 * dt * k_g * nu with the left-ward normal. Requires an arclength-resampled
 * curve and dt <= 0.4 * (min segment length)^2. */
Curve parametric_flow_step(const SurfaceMetric& metric, const Curve& curve,
                           double dt);

/** Runs the parametric flow to time T, re-resampling to uniform arclength
 * every resample_interval steps. Returns the final curve. */
Curve run_parametric_flow(const SurfaceMetric& metric, Curve curve, double T,
                          double dt, const ParametricFlowOptions& opts = {});

struct FlowSample {
    double t, length, max_k;
};

/** As run_parametric_flow, also recording (t, length, max |k|) every
 * resample interval. */
Curve run_parametric_flow_series(const SurfaceMetric& metric, Curve curve,
                                 double T, double dt,
                                 std::vector<FlowSample>& series,
                                 const ParametricFlowOptions& opts = {});

/** Point transport along the one-parameter group of X: RK4 integration of
 * d omega/d eps = X(omega) from p over [0, eps]. */
Vec2 flow_conformal_field(const SurfaceMetric& metric,
                          const SurfaceField& field, const Vec2& p,
                          double eps, double step_hint = 1e-3);

/** Max over sample points and tangent directions of
 * |(omega_eps^* g)(V,V) / g(V,V) - e^{2 lambda eps}|, the pullback computed
 * by centrally differencing flowed points. */
double conformal_factor_check(const SurfaceMetric& metric,
                              const SurfaceField& field, double lambda,
                              double eps, Rng& rng, int samples = 20,
                              double fd_step = 1e-4);

/** Group reparametrization s(T) with s' e^{lambda s} = e^{-lambda s}:
 * s = log(1 + 2 lambda T) / (2 lambda), continuous at lambda = 0. */
double group_time(double lambda, double T);

struct SelfSimilarityOptions {
    double dt = 0;            // 0: choose from the CFL bound
    int compare_points = 512; // dense resampling for the distance
    double trim_fraction = 0; // open curves: drop ends from the sweep
    ParametricFlowOptions flow{};
};

/** Distance between the curve evolved by the parametric flow to time T and
 * the initial curve mapped by the group element omega_{s(T)}. */
double self_similarity_check(const SurfaceMetric& metric,
                             const SurfaceField& field, double lambda,
                             const Curve& soliton_curve, double T,
                             const SelfSimilarityOptions& opts = {});

} // namespace mcf

#endif

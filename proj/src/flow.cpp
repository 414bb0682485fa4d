#include "mcflab/flow.hpp"

#include <cmath>

#include "mcflab/hausdorff.hpp"
#include "mcflab/soliton.hpp"

namespace mcf {

GraphFlow::GraphFlow(const SurfaceMetric& metric, std::vector<double> x_grid,
                     std::vector<double> u0, double dt, GraphBC bc,
                     std::function<double(double, double)> boundary)
    : metric_(metric), x_(std::move(x_grid)), u_(std::move(u0)), dt_(dt),
      bc_(bc), boundary_(std::move(boundary)) {
    if (metric_.form() != MetricForm::NormalGaussian)
        throw ParamError("graph flow needs a normal Gaussian metric");
    if (x_.size() < 5 || x_.size() != u_.size())
        throw ParamError("graph flow needs matching grids with >= 5 nodes");
    if (dt_ <= 0) throw ParamError("dt must be positive");
    dx_ = x_[1] - x_[0];
    if (bc_ == GraphBC::Dirichlet && !boundary_)
        throw ParamError("Dirichlet flow needs a boundary function");
    push_history();
}

double GraphFlow::boundary_value(int side, double t) const {
    return boundary_(side == 0 ? x_.front() : x_.back(), t);
}

std::vector<double> GraphFlow::rhs(const std::vector<double>& u,
                                   double /*t*/) const {
    const size_t n = u.size();
    std::vector<double> f(n, 0.0);
    double minL2 = std::numeric_limits<double>::infinity();
    auto at = [&](size_t i) -> double {
        if (bc_ == GraphBC::Periodic) return u[(i + n) % n];
        return u[i];
    };
    const size_t lo = bc_ == GraphBC::Periodic ? 0 : 1;
    const size_t hi = bc_ == GraphBC::Periodic ? n : n - 1;
    for (size_t i = lo; i < hi; ++i) {
        const double up = bc_ == GraphBC::Periodic ? at(i + 1) : u[i + 1];
        const double um =
            bc_ == GraphBC::Periodic ? at(i + n - 1) : u[i - 1];
        const double ux = (up - um) / (2 * dx_);
        const double uxx = (up - 2 * u[i] + um) / (dx_ * dx_);
        const Jet2 A = metric_.A({x_[i], u[i]});
        const double L2 = A.val + ux * ux;
        minL2 = std::min(minL2, L2);
        f[i] = (uxx - (A.d2 / A.val) * ux * ux -
                (A.d1 / (2 * A.val)) * ux - 0.5 * A.d2) /
               L2;
    }
    if (dt_ > cfl_factor * dx_ * dx_ * minL2)
        throw CFLViolation("dt exceeds 0.4 dx^2 min(L^2)");
    return f;
}

void GraphFlow::step() {
    const auto f = rhs(u_, t_);
    for (size_t i = 0; i < u_.size(); ++i) u_[i] += dt_ * f[i];
    t_ += dt_;
    if (bc_ == GraphBC::Dirichlet) {
        u_.front() = boundary_value(0, t_);
        u_.back() = boundary_value(1, t_);
    }
    for (size_t i = 0; i + 1 < u_.size(); ++i)
        if (std::abs((u_[i + 1] - u_[i]) / dx_) > gradient_blowup)
            throw BlowUp("graph gradient exceeded the blow-up guard");
    push_history();
}

void GraphFlow::run_until(double T) {
    while (t_ + 0.5 * dt_ < T) step();
}

void GraphFlow::push_history() {
    history_.emplace_back(t_, u_);
    while (history_.size() > 3) history_.pop_front();
}

void GraphFlow::corrupt_level(int level_index, double scale) {
    auto& level = history_.at(level_index).second;
    for (double& v : level) v *= scale;
}

double GraphFlow::length() const {
    double L = 0;
    for (size_t i = 0; i + 1 < u_.size(); ++i) {
        const double ux = (u_[i + 1] - u_[i]) / dx_;
        const double xm = 0.5 * (x_[i] + x_[i + 1]);
        const double um = 0.5 * (u_[i] + u_[i + 1]);
        L += std::sqrt(metric_.coef_unchecked({xm, um}).val + ux * ux) * dx_;
    }
    return L;
}

double GraphFlow::max_curvature() const {
    double worst = 0;
    for (size_t i = 1; i + 1 < u_.size(); ++i) {
        const double ux = (u_[i + 1] - u_[i - 1]) / (2 * dx_);
        const double uxx = (u_[i + 1] - 2 * u_[i] + u_[i - 1]) / (dx_ * dx_);
        worst = std::max(worst, std::abs(geodesic_curvature_graph(
                                    metric_, {x_[i], u_[i], ux, uxx})));
    }
    return worst;
}

double metric_evolution_residual(const GraphFlow& flow,
                                 const SurfaceMetric& metric) {
    const auto& h = flow.history();
    if (h.size() < 3)
        throw TooFewTimeLevels("metric evolution residual needs 3 levels");
    const auto& [t0, u0] = h[0];
    const auto& [t1, u1] = h[1];
    const auto& [t2, u2] = h[2];
    const double dt = 0.5 * (t2 - t0);
    const double dx = flow.dx();
    const size_t n = u1.size();
    if (n < 7) throw TooFewPoints("residual stencils need >= 7 nodes");

    // 4th-order space stencils keep the diagnostic well below the solver's
    // own truncation error.
    auto ux_at = [&](const std::vector<double>& u, size_t i) {
        if (i < 2)
            return (-25 * u[i] + 48 * u[i + 1] - 36 * u[i + 2] +
                    16 * u[i + 3] - 3 * u[i + 4]) /
                   (12 * dx);
        if (i + 2 >= n)
            return (25 * u[i] - 48 * u[i - 1] + 36 * u[i - 2] -
                    16 * u[i - 3] + 3 * u[i - 4]) /
                   (12 * dx);
        return (u[i - 2] - 8 * u[i - 1] + 8 * u[i + 1] - u[i + 2]) / (12 * dx);
    };
    auto uxx_at = [&](const std::vector<double>& u, size_t i) {
        return (-u[i - 2] + 16 * u[i - 1] - 30 * u[i] + 16 * u[i + 1] -
                u[i + 2]) /
               (12 * dx * dx);
    };

    // G = u_x u_t / L carries the tangential part of the vertical motion;
    // the consistency identity is  d/dt L^2 + 2 L^2 k^2 - 2 L dG/dx = 0.
    std::vector<double> G(n);
    std::vector<double> Lv(n);
    for (size_t i = 0; i < n; ++i) {
        const double ux = ux_at(u1, i);
        const double ut = (u2[i] - u0[i]) / (2 * dt);
        const Jet2 A = metric.A({flow.x()[i], u1[i]});
        Lv[i] = std::sqrt(A.val + ux * ux);
        G[i] = ux * ut / Lv[i];
    }

    double worst = 0;
    for (size_t i = 2; i + 2 < n; ++i) {
        const double ux = ux_at(u1, i);
        const double uxx = uxx_at(u1, i);
        const double ut = (u2[i] - u0[i]) / (2 * dt);
        const double uxt = (ux_at(u2, i) - ux_at(u0, i)) / (2 * dt);
        const Jet2 A = metric.A({flow.x()[i], u1[i]});
        const double L2 = A.val + ux * ux;
        const double k =
            geodesic_curvature_graph(metric, {flow.x()[i], u1[i], ux, uxx});
        const double dtL2 = A.d2 * ut + 2 * ux * uxt;
        const double dGdx =
            (G[i - 2] - 8 * G[i - 1] + 8 * G[i + 1] - G[i + 2]) / (12 * dx);
        worst = std::max(worst,
                         std::abs(dtL2 + 2 * L2 * k * k - 2 * Lv[i] * dGdx));
    }
    return worst;
}

Curve parametric_flow_step(const SurfaceMetric& metric, const Curve& curve,
                           double dt) {
    if (curve.size() < 5) throw TooFewPoints("parametric flow needs >= 5 points");
    double min_seg = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i + 1 < curve.pts.size(); ++i)
        min_seg = std::min(min_seg,
                           segment_length(curve.pts[i], curve.pts[i + 1], &metric));
    if (curve.closed)
        min_seg = std::min(min_seg, segment_length(curve.pts.back(),
                                                   curve.pts.front(), &metric));
    if (dt > 0.4 * min_seg * min_seg)
        throw CFLViolation("dt exceeds 0.4 (min segment length)^2");

    const auto nodes =
        unit_speed_states(metric, curve, StencilMode::FlowSafe);
    Curve out = curve;
    out.spacing.reset();
    for (size_t i = 0; i < nodes.size(); ++i) {
        const auto& nd = nodes[i];
        const Vec2 f = gauss_formula_terms(nd.rho, nd.state);
        const double kg = nd.e2rho * (-nd.state.vel.y() * f.x() +
                                      nd.state.vel.x() * f.y());
        const Vec2 nu{-nd.state.vel.y(), nd.state.vel.x()};
        out.pts[i] = curve.pts[i] + dt * kg * nu;
    }
    return out;
}

Curve run_parametric_flow(const SurfaceMetric& metric, Curve curve, double T,
                          double dt, const ParametricFlowOptions& opts) {
    std::vector<FlowSample> ignored;
    return run_parametric_flow_series(metric, std::move(curve), T, dt, ignored,
                                      opts);
}

Curve run_parametric_flow_series(const SurfaceMetric& metric, Curve curve,
                                 double T, double dt,
                                 std::vector<FlowSample>& series,
                                 const ParametricFlowOptions& opts) {
    if (T < 0) throw ParamError("T must be nonnegative");
    const int n_target = static_cast<int>(curve.size());
    double t = 0;
    int since_resample = 0;

    auto housekeeping = [&]() {
        curve = resample_arclength(curve, n_target, &metric);
        const double length = curve_length(curve, &metric);
        const double spacing = length / n_target;
        if (length < opts.collapse_factor * spacing)
            throw CollapseError("curve collapsed below resolution");
        if (opts.check_self_intersection && self_intersects(curve))
            throw SelfIntersection("curve crossed itself");
    };

    while (t < T - 1e-15) {
        const double h = std::min(dt, T - t);
        curve = parametric_flow_step(metric, curve, h);
        t += h;
        if (++since_resample >= opts.resample_interval) {
            since_resample = 0;
            housekeeping();
            double max_k = 0;
            for (const auto& nd : unit_speed_states(metric, curve)) {
                const Vec2 f = gauss_formula_terms(nd.rho, nd.state);
                max_k = std::max(max_k,
                                 std::abs(nd.e2rho *
                                          (-nd.state.vel.y() * f.x() +
                                           nd.state.vel.x() * f.y())));
            }
            series.push_back({t, curve_length(curve, &metric), max_k});
        }
    }
    if (since_resample > 0) curve = resample_arclength(curve, n_target, &metric);
    return curve;
}

Vec2 flow_conformal_field(const SurfaceMetric& metric,
                          const SurfaceField& field, const Vec2& p,
                          double eps, double step_hint) {
    metric.require_point(p);
    if (eps == 0) return p;
    const double dir = eps > 0 ? 1.0 : -1.0;
    const double span = std::abs(eps);
    const int n = std::max(16, static_cast<int>(std::ceil(span / step_hint)));
    const double h = dir * span / n;
    auto f = [&](const Vec2& q) { return field.value(q); };
    Vec2 y = p;
    for (int i = 0; i < n; ++i) {
        const Vec2 k1 = f(y);
        const Vec2 k2 = f(y + 0.5 * h * k1);
        const Vec2 k3 = f(y + 0.5 * h * k2);
        const Vec2 k4 = f(y + h * k3);
        y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!metric.domain().contains(y))
            throw DomainExit("group trajectory left the domain",
                             (i + 1) * std::abs(h));
    }
    return y;
}

namespace {

double metric_quadratic(const SurfaceMetric& metric, const Vec2& q,
                        const Vec2& W) {
    if (metric.form() == MetricForm::Isothermal)
        return std::exp(2 * metric.rho(q).val) * W.squaredNorm();
    const Jet2 A = metric.A(q);
    return A.val * W.x() * W.x() + W.y() * W.y();
}

} // namespace

double conformal_factor_check(const SurfaceMetric& metric,
                              const SurfaceField& field, double lambda,
                              double eps, Rng& rng, int samples,
                              double fd_step) {
    const double expected = std::exp(2 * lambda * eps);
    const Vec2 dirs[3] = {{1, 0}, {0, 1}, {std::sqrt(0.5), std::sqrt(0.5)}};
    double worst = 0;
    int accepted = 0, attempts = 0;
    while (accepted < samples && attempts < 50 * samples) {
        ++attempts;
        const Vec2 p = metric.domain().sample(rng);
        try {
            for (const Vec2& V : dirs) {
                const Vec2 plus = flow_conformal_field(
                    metric, field, p + fd_step * V, eps);
                const Vec2 minus = flow_conformal_field(
                    metric, field, p - fd_step * V, eps);
                const Vec2 image = flow_conformal_field(metric, field, p, eps);
                const Vec2 dW = (plus - minus) / (2 * fd_step);
                const double num = metric_quadratic(metric, image, dW);
                const double den = metric_quadratic(metric, p, V);
                worst = std::max(worst, std::abs(num / den - expected));
            }
            ++accepted;
        } catch (const DomainExit&) {
            // flowed stencil left the chart; try another base point
        } catch (const DomainError&) {
            // stencil foot already outside; try another base point
        }
    }
    if (accepted == 0)
        throw DomainExit("no sample survives the group flow inside the domain",
                         eps);
    return worst;
}

double group_time(double lambda, double T) {
    if (lambda == 0) return T;
    const double arg = 1 + 2 * lambda * T;
    if (arg <= 0) throw ParamError("1 + 2 lambda T must be positive");
    return std::log(arg) / (2 * lambda);
}

double self_similarity_check(const SurfaceMetric& metric,
                             const SurfaceField& field, double lambda,
                             const Curve& soliton_curve, double T,
                             const SelfSimilarityOptions& opts) {
    if (characterizing_residual(metric, field, soliton_curve) > 1e-5)
        throw ManifoldError("curve is not a soliton initial datum");
    const double s = group_time(lambda, T);

    double dt = opts.dt;
    if (dt <= 0) {
        // Leave headroom under the 0.4 guard: spacing drifts between
        // resamples as points move normally.
        double min_seg = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i + 1 < soliton_curve.pts.size(); ++i)
            min_seg = std::min(min_seg,
                               segment_length(soliton_curve.pts[i],
                                              soliton_curve.pts[i + 1], &metric));
        dt = 0.2 * min_seg * min_seg;
    }

    const Curve flowed =
        run_parametric_flow(metric, soliton_curve, T, dt, opts.flow);

    Curve mapped = soliton_curve;
    for (Vec2& p : mapped.pts) p = flow_conformal_field(metric, field, p, s);

    const Curve a = resample_arclength(flowed, opts.compare_points, &metric);
    const Curve b = resample_arclength(mapped, opts.compare_points, &metric);
    const double trim = soliton_curve.closed ? 0.0 : opts.trim_fraction;
    return hausdorff_trimmed(a.pts, a.closed, b.pts, b.closed, trim);
}

} // namespace mcf

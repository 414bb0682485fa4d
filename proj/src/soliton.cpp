#include "mcflab/soliton.hpp"

#include <cmath>

namespace mcf {

namespace {

using Vec4 = Eigen::Vector4d;

// The soliton condition (phi - f1) v' + (f2 - psi) u' = 0 and the
// differentiated unit-speed relation w w' + z z' = -e^{-2rho}(rho_u w +
// rho_v z) form a linear system for (w', z') with determinant -(w^2+z^2):
//   -z w' + w z' = psi w - phi z + (w^2+z^2)(w rho_v - z rho_u)
//    w w' + z z' = -e^{-2rho}(w rho_u + z rho_v)
Vec2 closure(const Jet2& rho, double phi, double psi, const SolitonState& st) {
    const double w = st.w, z = st.z;
    const double n2 = w * w + z * z;
    const double b1 = psi * w - phi * z + n2 * (w * rho.d2 - z * rho.d1);
    const double b2 = -std::exp(-2 * rho.val) * (w * rho.d1 + z * rho.d2);
    return {(w * b2 - z * b1) / n2, (w * b1 + z * b2) / n2};
}

struct Chart {
    const SurfaceMetric* metric;
    const SurfaceField* field;
    bool swapped = false;

    // State in the working chart from the original one and back.
    static SolitonState to_chart(const SolitonState& s, bool swapped) {
        return swapped ? SolitonState{s.v, s.u, s.z, s.w} : s;
    }

    Vec4 rhs(const Vec4& y) const {
        SolitonState orig{y[0], y[1], y[2], y[3]};
        if (swapped) orig = {y[1], y[0], y[3], y[2]};
        const Jet2 rho = metric->coef_unchecked(orig.pos());
        const Vec2 X = field->value(orig.pos());
        const Vec2 d = closure(rho, X.x(), X.y(), orig);
        if (swapped) return {y[2], y[3], d.y(), d.x()};
        return {y[2], y[3], d.x(), d.y()};
    }
};

Vec4 rk4_step(const Chart& chart, const Vec4& y, double h) {
    const Vec4 k1 = chart.rhs(y);
    const Vec4 k2 = chart.rhs(y + 0.5 * h * k1);
    const Vec4 k3 = chart.rhs(y + 0.5 * h * k2);
    const Vec4 k4 = chart.rhs(y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

} // namespace

Vec2 soliton_closure(const Jet2& rho, const SurfaceField& field,
                     const SolitonState& state) {
    const Vec2 X = field.value(state.pos());
    return closure(rho, X.x(), X.y(), state);
}

Eigen::Vector4d soliton_rhs(const SurfaceMetric& metric,
                            const SurfaceField& field,
                            const SolitonState& state, double w_min) {
    metric.require_point(state.pos());
    if (std::abs(state.w) < w_min)
        throw SingularError("|w| below the 1/w elimination guard", state.w);
    const Vec2 d = soliton_closure(metric.rho(state.pos()), field, state);
    return {state.w, state.z, d.x(), d.y()};
}

SolitonRun integrate_soliton(const SurfaceMetric& metric,
                             const SurfaceField& field,
                             const SolitonState& initial, double arclength,
                             const SolitonOptions& opts) {
    metric.require_point(initial.pos());
    {
        const double speed2 = initial.w * initial.w + initial.z * initial.z;
        const double target = std::exp(-2 * metric.rho(initial.pos()).val);
        if (std::abs(speed2 - target) > 1e-10 * std::max(1.0, target))
            throw SpeedError("initial state violates unit speed");
    }
    if (opts.step <= 0) throw ParamError("step must be positive");

    SolitonRun run;
    auto record = [&](const SolitonState& st, double s) {
        run.curve.pts.push_back(st.pos());
        run.states.push_back(st);
        run.s.push_back(s);
        const double defect =
            std::abs(st.w * st.w + st.z * st.z -
                     std::exp(-2 * metric.coef_unchecked(st.pos()).val));
        run.max_speed_defect = std::max(run.max_speed_defect, defect);
    };

    run.curve.param = CurveParam::Arclength;
    record(initial, 0.0);
    if (arclength <= 0) {
        run.s_reached = 0;
        return run;
    }

    // A whole number of equal steps lands exactly on the requested length.
    const int n = std::max(1, static_cast<int>(std::llround(arclength / opts.step)));
    const double h = arclength / n;
    run.curve.spacing = h;

    Chart chart{&metric, &field, false};
    SolitonState st = initial;

    for (int i = 0; i < n; ++i) {
        // Chart swap keeps the eliminated 1/w factor well away from zero.
        SolitonState working = Chart::to_chart(st, chart.swapped);
        if (std::abs(working.w) < opts.w_min) {
            chart.swapped = !chart.swapped;
            working = Chart::to_chart(st, chart.swapped);
            if (std::abs(working.w) < opts.w_min) {
                run.stop = StopReason::Singular;
                run.s_reached = run.s.back();
                return run;
            }
        }

        Vec4 y{working.u, working.v, working.w, working.z};
        y = rk4_step(chart, y, h);
        SolitonState next{y[0], y[1], y[2], y[3]};
        if (chart.swapped) next = {next.v, next.u, next.z, next.w};

        if (!metric.domain().contains(next.pos())) {
            run.stop = StopReason::LeftDomain;
            run.s_reached = run.s.back();
            return run;
        }

        if (opts.project_interval > 0 && (i + 1) % opts.project_interval == 0) {
            const double target =
                std::exp(-metric.coef_unchecked(next.pos()).val);
            const double speed = std::hypot(next.w, next.z);
            if (speed > 0) {
                next.w *= target / speed;
                next.z *= target / speed;
            }
        }

        st = next;
        record(st, (i + 1) * h);
    }
    run.s_reached = arclength;
    return run;
}

std::vector<double> characterizing_residuals_pointwise(
    const SurfaceMetric& metric, const SurfaceField& field,
    const Curve& curve) {
    if (curve.size() < 5)
        throw TooFewPoints("characterizing residual needs >= 5 points");
    const auto states = curve_states(curve, &metric);
    std::vector<double> r;
    r.reserve(states.size());
    for (const auto& st : states) {
        const Jet2 rho = metric.rho(st.pos);
        const Vec2 f = gauss_formula_terms(rho, st);
        const Vec2 X = field.value(st.pos);
        r.push_back(std::abs((X.x() - f.x()) * st.vel.y() +
                             (f.y() - X.y()) * st.vel.x()));
    }
    return r;
}

double characterizing_residual(const SurfaceMetric& metric,
                               const SurfaceField& field, const Curve& curve) {
    const auto r = characterizing_residuals_pointwise(metric, field, curve);
    double worst = 0;
    for (double v : r) worst = std::max(worst, v);
    return worst;
}

double euclidean_homothetic_residual(const Curve& curve, double cc_prime) {
    if (curve.size() < 5)
        throw TooFewPoints("homothetic residual needs >= 5 points");
    const auto states = curve_states(curve, nullptr);
    double worst = 0;
    for (const auto& st : states) {
        Vec2 tangent = st.vel;
        const double sp = tangent.norm();
        if (sp == 0) continue;
        tangent /= sp;
        const Vec2 normal{-tangent.y(), tangent.x()};
        // Planar curvature of a near-unit-speed parametrization.
        const double k =
            (st.vel.x() * st.acc.y() - st.vel.y() * st.acc.x()) /
            (sp * sp * sp);
        const Vec2 perp = st.pos - st.pos.dot(tangent) * tangent;
        worst = std::max(worst, (k * normal - cc_prime * perp).norm());
    }
    return worst;
}

} // namespace mcf

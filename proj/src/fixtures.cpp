#include "mcflab/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace mcf {
namespace fixtures {

SurfaceMetric flat_gaussian(Rect domain) {
    return SurfaceMetric::normal_gaussian(constant_field(1.0), domain);
}

SurfaceMetric hyperbolic_gaussian(Rect domain) {
    return SurfaceMetric::normal_gaussian(
        [](const Vec2& p) {
            const double A = std::exp(-2 * p.y());
            return Jet2{A, 0, -2 * A, 0, 0, 4 * A};
        },
        domain);
}

SurfaceMetric flat_isothermal(Rect domain) {
    return SurfaceMetric::isothermal(constant_field(0.0), domain);
}

SurfaceField shrinker_field() {
    SurfaceField X;
    X.c1 = linear_component(0, -1, 0);
    X.c2 = linear_component(0, 0, -1);
    X.lambda = -1;
    X.name = "shrinker";
    return X;
}

SurfaceField translator_field() {
    SurfaceField X;
    X.c1 = linear_component(0, 0, 0);
    X.c2 = linear_component(1, 0, 0);
    X.lambda = 0;
    X.name = "translator";
    return X;
}

ConformalFamily family_I_i() {
    ConformalFamily f;
    f.case_id = FamilyCase::I_i;
    f.lambda = 1;
    f.c1 = 0;
    f.c2 = 1;
    f.form = FirstIntegralForm::V;
    f.Q = Fn1::quadratic_tenth();
    f.domain = {-1, 1, -1, 1};
    return f; // rho = v + u^2/10, X = d_v
}

ConformalFamily family_I_ii() {
    ConformalFamily f;
    f.case_id = FamilyCase::I_ii;
    f.lambda = 2;
    f.a = 1;
    f.c1 = 0;
    f.c2 = 2;
    f.Q = Fn1::zero();
    f.domain = {0.4, 2.2, -1, 1};
    return f; // rho = ln u, X = u d_u + (v+2) d_v
}

ConformalFamily family_I_iii() {
    ConformalFamily f;
    f.case_id = FamilyCase::I_iii;
    f.lambda = 1;
    f.b = 1;
    f.c1 = 0;
    f.c2 = 0;
    f.Q = Fn1::quadratic_tenth();
    f.domain = {0.7, 1.7, 0.3, 1.3};
    return f; // rho = -atan(v/u) + (u^2+v^2)^2/10, X = v d_u - u d_v
}

ConformalFamily family_II() {
    ConformalFamily f;
    f.case_id = FamilyCase::II;
    f.lambda = 1;
    f.C = 1;
    f.D = 0;
    f.domain = {-0.4, 0.4, 0.8, 1.6};
    return f; // X = (u^2-v^2) d_u + 2uv d_v
}

std::vector<ConformalFamily> shipped_families() {
    return {family_I_i(), family_I_ii(), family_I_iii(), family_II()};
}

FamilyScenario family_scenario(FamilyCase c) {
    auto make_state = [](const ConformalFamily& spec, Vec2 p,
                         double angle) {
        const ConformalPair pair = make_conformal_family(spec);
        const double speed = std::exp(-pair.metric.rho(p).val);
        return SolitonState{p.x(), p.y(), speed * std::cos(angle),
                            speed * std::sin(angle)};
    };
    switch (c) {
    case FamilyCase::I_i: {
        auto spec = family_I_i();
        return {spec, make_state(spec, {0.0, 0.0}, 0.0), 1.0, 0.005};
    }
    case FamilyCase::I_ii: {
        auto spec = family_I_ii();
        return {spec, make_state(spec, {0.7, 0.0}, 0.0), 0.8, 0.01};
    }
    case FamilyCase::I_iii: {
        auto spec = family_I_iii();
        return {spec, make_state(spec, {1.2, 0.8}, std::numbers::pi / 2), 0.5,
                0.01};
    }
    case FamilyCase::II: {
        auto spec = family_II();
        return {spec, make_state(spec, {0.0, 1.2}, 0.0), 0.38, 0.01};
    }
    }
    throw ParamError("unknown family case");
}

Curve unit_circle(int n, double radius) {
    Curve c;
    c.closed = true;
    c.param = CurveParam::Arclength;
    c.spacing = 2 * std::numbers::pi * radius / n;
    c.pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double th = 2 * std::numbers::pi * i / n;
        c.pts.emplace_back(radius * std::cos(th), radius * std::sin(th));
    }
    return c;
}

Curve grim_reaper(int n, double s_max) {
    Curve c;
    c.closed = false;
    c.param = CurveParam::Arclength;
    c.spacing = 2 * s_max / (n - 1);
    c.pts.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double s = -s_max + 2 * s_max * i / (n - 1);
        c.pts.emplace_back(std::asin(std::tanh(s)), std::log(std::cosh(s)));
    }
    return c;
}

namespace {

SymmetryCandidate quad(const Quadratic3& tau, const Quadratic3& xi,
                       const Quadratic3& eta, const char* name,
                       std::optional<double> lambda = {}) {
    return SymmetryCandidate::from_quadratics(tau, xi, eta, name, lambda);
}

} // namespace

SymmetryCandidate candidate_dt() {
    return quad({.c0 = 1}, {}, {}, "d_t", 0.0);
}
SymmetryCandidate candidate_dx() {
    return quad({}, {.c0 = 1}, {}, "d_x", 0.0);
}
SymmetryCandidate candidate_du() {
    return quad({}, {}, {.c0 = 1}, "d_u", 0.0);
}
SymmetryCandidate candidate_rotation() {
    return quad({}, {.cu = -1}, {.cx = 1}, "-u d_x + x d_u", 0.0);
}
SymmetryCandidate candidate_dilation() {
    return quad({.ct = 2}, {.cx = 1}, {.cu = 1}, "x d_x + u d_u + 2t d_t", 1.0);
}
SymmetryCandidate candidate_x2dx() {
    return quad({}, {.cxx = 1}, {}, "x^2 d_x");
}
SymmetryCandidate candidate_udx() {
    return quad({}, {.cu = 1}, {}, "u d_x");
}

std::vector<SymmetryCandidate> symmetry_table_candidates() {
    return {candidate_dt(), candidate_dx(), candidate_du(),
            candidate_rotation(), candidate_dilation()};
}

} // namespace fixtures
} // namespace mcf

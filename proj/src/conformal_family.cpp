#include "mcflab/conformal_family.hpp"

#include <cmath>
#include <limits>

namespace mcf {

namespace {

// Minimum of |a*x + b| over [lo, hi].
double min_abs_linear(double a, double b, double lo, double hi) {
    const double at_lo = a * lo + b, at_hi = a * hi + b;
    if (at_lo == 0 || at_hi == 0 || (at_lo < 0) != (at_hi < 0)) return 0;
    return std::min(std::abs(at_lo), std::abs(at_hi));
}

void require_clear(double dist, double margin, const char* what) {
    if (dist < margin)
        throw SingularDomainError(std::string("domain touches singular locus: ") +
                                  what);
}

Field2 rho_I_i(const ConformalFamily& s) {
    const double lam = s.lambda, c1 = s.c1, c2 = s.c2;
    const bool u_form = s.form == FirstIntegralForm::U;
    const double slope = u_form ? lam / c1 : lam / c2;
    const Fn1 Q = s.Q;
    return [=](const Vec2& p) {
        const double w = c2 * p.x() - c1 * p.y();
        const double q1 = Q.df(w), q2 = Q.ddf(w);
        Jet2 j;
        j.val = (u_form ? slope * p.x() : slope * p.y()) + Q.f(w);
        j.d1 = (u_form ? slope : 0.0) + c2 * q1;
        j.d2 = (u_form ? 0.0 : slope) - c1 * q1;
        j.d11 = c2 * c2 * q2;
        j.d12 = -c1 * c2 * q2;
        j.d22 = c1 * c1 * q2;
        return j;
    };
}

Field2 rho_I_ii(const ConformalFamily& s) {
    const double lam = s.lambda, a = s.a, c1 = s.c1, c2 = s.c2;
    const Fn1 Q = s.Q;
    return [=](const Vec2& p) {
        const double m = a * p.x() + c1;
        const double n = a * p.y() + c2;
        const double I = std::pow(std::abs(m), a) * std::pow(std::abs(n), -a);
        const double Iu = a * a * I / m;
        const double Iv = -a * a * I / n;
        const double Iuu = a * a * (a * a - a) * I / (m * m);
        const double Iuv = -a * a * a * a * I / (m * n);
        const double Ivv = a * a * (a * a + a) * I / (n * n);
        const double q1 = Q.df(I), q2 = Q.ddf(I);
        Jet2 j;
        j.val = (lam - a) / a * std::log(std::abs(m)) + Q.f(I);
        j.d1 = (lam - a) / m + q1 * Iu;
        j.d2 = q1 * Iv;
        j.d11 = -(lam - a) * a / (m * m) + q2 * Iu * Iu + q1 * Iuu;
        j.d12 = q2 * Iu * Iv + q1 * Iuv;
        j.d22 = q2 * Iv * Iv + q1 * Ivv;
        return j;
    };
}

Field2 rho_I_iii(const ConformalFamily& s) {
    const double lam = s.lambda, b = s.b, c1 = s.c1, c2 = s.c2;
    const Fn1 Q = s.Q;
    return [=](const Vec2& p) {
        const double P = b * p.y() + c1;
        const double M = b * p.x() - c2;
        const double S = M * M + P * P;
        const double q1 = Q.df(S), q2 = Q.ddf(S);
        Jet2 j;
        j.val = -(lam / b) * std::atan(P / M) + Q.f(S);
        j.d1 = lam * P / S + q1 * 2 * b * M;
        j.d2 = -lam * M / S + q1 * 2 * b * P;
        j.d11 = -2 * lam * b * M * P / (S * S) +
                q2 * 4 * b * b * M * M + 2 * b * b * q1;
        j.d12 = lam * b * (M * M - P * P) / (S * S) + q2 * 4 * b * b * M * P;
        j.d22 = 2 * lam * b * M * P / (S * S) +
                q2 * 4 * b * b * P * P + 2 * b * b * q1;
        return j;
    };
}

// Case II in (u,v) form. Solving the characteristic system of
// (u^2-v^2) rho_u + 2uv rho_v = lambda - 2u along the circles
// u^2+v^2 = C v and eliminating the characteristic label gives
//     rho = lambda (v-u)/(u^2+v^2) + ln((u^2+v^2)/(2 v^2)) + D,
// which satisfies the equation on open sets away from v = 0.
Field2 rho_II(const ConformalFamily& s) {
    const double lam = s.lambda, D = s.D;
    return [=](const Vec2& p) {
        const double u = p.x(), v = p.y();
        const double r2 = u * u + v * v;
        const double r4 = r2 * r2;
        Jet2 j;
        j.val = lam * (v - u) / r2 + std::log(r2 / (2 * v * v)) + D;
        const double Tu = lam * (u * u - v * v - 2 * u * v) / r4;
        const double Tv = lam * (u * u - v * v + 2 * u * v) / r4;
        j.d1 = Tu + 2 * u / r2;
        j.d2 = Tv + 2 * v / r2 - 2 / v;
        const double r6 = r4 * r2;
        j.d11 = lam * ((2 * u - 2 * v) * r2 -
                       4 * u * (u * u - v * v - 2 * u * v)) / r6 +
                2 * (v * v - u * u) / r4;
        j.d12 = lam * ((-2 * v - 2 * u) * r2 -
                       4 * v * (u * u - v * v - 2 * u * v)) / r6 -
                4 * u * v / r4;
        j.d22 = lam * ((2 * u - 2 * v) * r2 -
                       4 * v * (u * u - v * v + 2 * u * v)) / r6 +
                2 * (u * u - v * v) / r4 + 2 / (v * v);
        return j;
    };
}

} // namespace

ConformalPair make_conformal_family(const ConformalFamily& spec) {
    const Rect& d = spec.domain;
    Field2 rho;
    SurfaceField X;
    X.lambda = spec.lambda;

    switch (spec.case_id) {
    case FamilyCase::I_i: {
        if (spec.form == FirstIntegralForm::U && spec.c1 == 0)
            throw ParamError("case I-i u-form needs c1 != 0");
        if (spec.form == FirstIntegralForm::V && spec.c2 == 0)
            throw ParamError("case I-i v-form needs c2 != 0");
        rho = rho_I_i(spec);
        X.c1 = linear_component(spec.c1, 0, 0);
        X.c2 = linear_component(spec.c2, 0, 0);
        X.name = "I_i";
        break;
    }
    case FamilyCase::I_ii: {
        if (spec.a == 0) throw ParamError("case I-ii needs a != 0");
        // rho blows up where a u + c1 = 0; the Q argument where a v + c2 = 0.
        require_clear(min_abs_linear(spec.a, spec.c1, d.lo1, d.hi1) /
                          std::abs(spec.a),
                      spec.margin, "u = -c1/a");
        require_clear(min_abs_linear(spec.a, spec.c2, d.lo2, d.hi2) /
                          std::abs(spec.a),
                      spec.margin, "v = -c2/a");
        rho = rho_I_ii(spec);
        X.c1 = linear_component(spec.c1, spec.a, 0);
        X.c2 = linear_component(spec.c2, 0, spec.a);
        X.name = "I_ii";
        break;
    }
    case FamilyCase::I_iii: {
        if (spec.b == 0) throw ParamError("case I-iii needs b != 0");
        require_clear(min_abs_linear(spec.b, -spec.c2, d.lo1, d.hi1) /
                          std::abs(spec.b),
                      spec.margin, "u = c2/b");
        require_clear(min_abs_linear(spec.b, spec.c1, d.lo2, d.hi2) /
                          std::abs(spec.b),
                      spec.margin, "v = -c1/b");
        rho = rho_I_iii(spec);
        X.c1 = linear_component(spec.c1, 0, spec.b);
        X.c2 = linear_component(spec.c2, -spec.b, 0);
        X.name = "I_iii";
        break;
    }
    case FamilyCase::II: {
        if (!(spec.C > 0)) throw ParamError("case II needs C > 0");
        require_clear(std::min(std::abs(d.lo2), std::abs(d.hi2)), spec.margin,
                      "v = 0");
        // Distance from the rectangle to the line v = u.
        double diag = std::numeric_limits<double>::infinity();
        if (d.lo2 - d.hi1 > 0) diag = (d.lo2 - d.hi1) / std::sqrt(2.0);
        else if (d.lo1 - d.hi2 > 0) diag = (d.lo1 - d.hi2) / std::sqrt(2.0);
        else diag = 0;
        require_clear(diag, spec.margin, "v = u");
        rho = rho_II(spec);
        X.c1 = [](const Vec2& p) {
            return Jet1{p.x() * p.x() - p.y() * p.y(), 2 * p.x(), -2 * p.y()};
        };
        X.c2 = [](const Vec2& p) {
            return Jet1{2 * p.x() * p.y(), 2 * p.y(), 2 * p.x()};
        };
        X.name = "II";
        break;
    }
    }

    return {SurfaceMetric::isothermal(std::move(rho), d), std::move(X)};
}

std::string to_string(FamilyCase c) {
    switch (c) {
    case FamilyCase::I_i: return "I_i";
    case FamilyCase::I_ii: return "I_ii";
    case FamilyCase::I_iii: return "I_iii";
    case FamilyCase::II: return "II";
    }
    return "?";
}

} // namespace mcf

#ifndef MCFLAB_FIELDS_HPP
#define MCFLAB_FIELDS_HPP

#include <functional>
#include <utility>

#include "mcflab/types.hpp"

namespace mcf {

/** Value and first partials of a scalar field on a 2-D chart.
 * d1, d2 differentiate along the first and second chart coordinate. */
struct Jet1 {
    double val = 0, d1 = 0, d2 = 0;
};

/** Value and partials to order two of a scalar field on a 2-D chart. */
struct Jet2 {
    double val = 0, d1 = 0, d2 = 0, d11 = 0, d12 = 0, d22 = 0;

    Jet1 first() const { return {val, d1, d2}; }
};

/** Value and partials to order two of a function of (t, x, u). */
struct Trijet {
    double val = 0;
    double dt = 0, dx = 0, du = 0;
    double dtt = 0, dtx = 0, dtu = 0, dxx = 0, dxu = 0, duu = 0;
};

using Field1 = std::function<Jet1(const Vec2&)>;
using Field2 = std::function<Jet2(const Vec2&)>;
using Field3 = std::function<Trijet(double t, double x, double u)>;

/** One-variable function with first and second derivative (the Q profiles). */
struct Fn1 {
    std::function<double(double)> f, df, ddf;

    double operator()(double w) const { return f(w); }

    static Fn1 zero() {
        return {[](double) { return 0.0; }, [](double) { return 0.0; },
                [](double) { return 0.0; }};
    }
    static Fn1 identity() {
        return {[](double w) { return w; }, [](double) { return 1.0; },
                [](double) { return 0.0; }};
    }
    // w^2 / 10
    static Fn1 quadratic_tenth() {
        return {[](double w) { return w * w / 10.0; },
                [](double w) { return w / 5.0; },
                [](double) { return 0.2; }};
    }
};

Field2 constant_field(double c);

/** Wraps a value-only callable into a Field2 by central differencing.
 * First partials use step 1e-5; second partials use a wider stencil. */
Field2 fd_wrap(std::function<double(const Vec2&)> f, double step = 1e-5);

/** Quadratic polynomial in (t, x, u) with exact jet evaluation.
 * Coefficient slots follow c0 + ct*t + cx*x + cu*u + ctt*t^2 + ... */
struct Quadratic3 {
    double c0 = 0, ct = 0, cx = 0, cu = 0;
    double ctt = 0, ctx = 0, ctu = 0, cxx = 0, cxu = 0, cuu = 0;

    Trijet jet(double t, double x, double u) const {
        Trijet j;
        j.val = c0 + ct * t + cx * x + cu * u + ctt * t * t + ctx * t * x +
                ctu * t * u + cxx * x * x + cxu * x * u + cuu * u * u;
        j.dt = ct + 2 * ctt * t + ctx * x + ctu * u;
        j.dx = cx + ctx * t + 2 * cxx * x + cxu * u;
        j.du = cu + ctu * t + cxu * x + 2 * cuu * u;
        j.dtt = 2 * ctt;
        j.dtx = ctx;
        j.dtu = ctu;
        j.dxx = 2 * cxx;
        j.dxu = cxu;
        j.duu = 2 * cuu;
        return j;
    }

    Field3 field() const {
        Quadratic3 q = *this;
        return [q](double t, double x, double u) { return q.jet(t, x, u); };
    }
};

} // namespace mcf

#endif

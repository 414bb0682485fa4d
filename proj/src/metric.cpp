#include "mcflab/metric.hpp"

#include <cmath>
#include <string>

namespace mcf {

namespace {

// Pulls a sample point far enough from the rectangle edge that the FD
// stencil stays inside.
Vec2 inset_sample(const Rect& d, Rng& rng, double step) {
    const double m1 = 2 * step * (1 + std::abs(d.hi1) + std::abs(d.lo1));
    const double m2 = 2 * step * (1 + std::abs(d.hi2) + std::abs(d.lo2));
    return {rng.uniform(d.lo1 + m1, d.hi1 - m1),
            rng.uniform(d.lo2 + m2, d.hi2 - m2)};
}

} // namespace

void check_field_partials(const Field2& f, const Rect& domain, Rng& rng,
                          int samples, double step, double rel_tol) {
    for (int i = 0; i < samples; ++i) {
        const Vec2 p = inset_sample(domain, rng, step);
        const Jet2 j = f(p);
        const double fd1 =
            (f({p.x() + step, p.y()}).val - f({p.x() - step, p.y()}).val) /
            (2 * step);
        const double fd2 =
            (f({p.x(), p.y() + step}).val - f({p.x(), p.y() - step}).val) /
            (2 * step);
        const double scale1 = std::max(1.0, std::abs(j.d1));
        const double scale2 = std::max(1.0, std::abs(j.d2));
        if (std::abs(j.d1 - fd1) > rel_tol * scale1 ||
            std::abs(j.d2 - fd2) > rel_tol * scale2)
            throw MetricError(
                "declared partials disagree with central differences at (" +
                std::to_string(p.x()) + ", " + std::to_string(p.y()) + ")");
    }
}

void SurfaceMetric::self_check(Rng& rng, int samples, double step,
                               double rel_tol) const {
    if (form_ == MetricForm::NormalGaussian) {
        for (int i = 0; i < samples; ++i) {
            const Vec2 p = domain_.sample(rng);
            if (!(coef_(p).val > 0))
                throw MetricError("A <= 0 at sample point");
        }
    }
    check_field_partials(coef_, domain_, rng, samples, step, rel_tol);
}

} // namespace mcf

#ifndef MCFLAB_METRIC_HPP
#define MCFLAB_METRIC_HPP

#include <string>
#include <utility>

#include "mcflab/domain.hpp"
#include "mcflab/errors.hpp"
#include "mcflab/fields.hpp"

namespace mcf {

enum class MetricForm { NormalGaussian, Isothermal };

/** A 2-D Riemannian metric in one of two diagonal charts.
 *
 * NormalGaussian:  A(x,u) dx^2 + du^2, with A > 0 on the domain.
 * Isothermal:      e^{2 rho(u,v)} (du^2 + dv^2).
 *
 * The coefficient callable supplies the scalar field (A or rho) together
 * with its partials to order two. Immutable after construction; all
 * evaluations are const and thread-safe. */
class SurfaceMetric {
  public:
    static SurfaceMetric normal_gaussian(Field2 A, Rect domain) {
        return SurfaceMetric(MetricForm::NormalGaussian, std::move(A), domain);
    }
    static SurfaceMetric isothermal(Field2 rho, Rect domain) {
        return SurfaceMetric(MetricForm::Isothermal, std::move(rho), domain);
    }

    MetricForm form() const { return form_; }
    const Rect& domain() const { return domain_; }

    void require_point(const Vec2& p) const {
        if (!domain_.contains(p))
            throw DomainError("point (" + std::to_string(p.x()) + ", " +
                              std::to_string(p.y()) + ") outside metric domain");
    }

    /** Jet of A at (x,u). Checks the domain and the A > 0 invariant. */
    Jet2 A(const Vec2& xu) const {
        require_point(xu);
        Jet2 j = coef_(xu);
        if (!(j.val > 0))
            throw MetricError("metric coefficient A <= 0 at sample point");
        return j;
    }

    /** Jet of rho at (u,v). */
    Jet2 rho(const Vec2& uv) const {
        require_point(uv);
        return coef_(uv);
    }

    /** Conformal factor e^{2 rho} (isothermal chart). */
    double e2rho(const Vec2& uv) const { return std::exp(2.0 * rho(uv).val); }

    /** Raw coefficient jet without domain checks (integrator stages may
     * probe slightly outside the rectangle). */
    Jet2 coef_unchecked(const Vec2& p) const { return coef_(p); }

    /** Spot-checks positivity (NormalGaussian) and consistency of the
     * declared first partials against central differences.
     * Throws MetricError on failure. */
    void self_check(Rng& rng, int samples = 50, double step = 1e-5,
                    double rel_tol = 1e-6) const;

  private:
    SurfaceMetric(MetricForm f, Field2 c, Rect d)
        : form_(f), coef_(std::move(c)), domain_(d) {}

    MetricForm form_;
    Field2 coef_;
    Rect domain_;
};

/** First-partial self-consistency check for any Field2 on a rectangle. */
void check_field_partials(const Field2& f, const Rect& domain, Rng& rng,
                          int samples = 50, double step = 1e-5,
                          double rel_tol = 1e-6);

} // namespace mcf

#endif

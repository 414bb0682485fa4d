#ifndef MCFLAB_VECTOR_FIELD_HPP
#define MCFLAB_VECTOR_FIELD_HPP

#include <optional>
#include <string>
#include <utility>

#include "mcflab/fields.hpp"

namespace mcf {

/** A vector field on a surface chart with a homothety constant.
 *
 * Components are (phi, psi) on an isothermal chart (u,v), or (xi, eta) on a
 * normal Gaussian chart (x,u); both cases store two scalar fields with first
 * partials plus the constant lambda of L_X g = 2 lambda g. */
struct SurfaceField {
    Field1 c1; // phi or xi
    Field1 c2; // psi or eta
    double lambda = 0;
    std::string name;

    Vec2 value(const Vec2& p) const { return {c1(p).val, c2(p).val}; }
};

inline Field1 linear_component(double a, double bu, double bv) {
    return [=](const Vec2& p) {
        return Jet1{a + bu * p.x() + bv * p.y(), bu, bv};
    };
}

/** Candidate infinitesimal symmetry tau d_t + xi d_x + eta d_u.
 *
 * Components are functions of (t, x, u) with partials to order two; the
 * general tau(t,x,u) form is kept so failing candidates can be expressed. */
struct SymmetryCandidate {
    Field3 tau, xi, eta;
    std::optional<double> lambda;
    std::string name;

    static SymmetryCandidate from_quadratics(const Quadratic3& tau,
                                             const Quadratic3& xi,
                                             const Quadratic3& eta,
                                             std::string name = {},
                                             std::optional<double> lambda = {}) {
        return {tau.field(), xi.field(), eta.field(), lambda, std::move(name)};
    }
};

} // namespace mcf

#endif

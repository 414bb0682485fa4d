#ifndef MCFLAB_CONFORMAL_FAMILY_HPP
#define MCFLAB_CONFORMAL_FAMILY_HPP

#include <string>

#include "mcflab/geometry.hpp"

namespace mcf {

enum class FamilyCase { I_i, I_ii, I_iii, II };

/** Which first integral closes case I-i: the u-form rho = (lambda/c1) u + Q,
 * or the v-form rho = (lambda/c2) v + Q. Both are valid; callers choose. */
enum class FirstIntegralForm { U, V };

/** Parameters of one closed-form conformal metric/field pair.
 *
 * I_i   : phi = c1, psi = c2           (needs c1 != 0 or c2 != 0 per form)
 * I_ii  : phi = a u + c1, psi = a v + c2, a != 0
 * I_iii : phi = b v + c1, psi = -b u + c2, b != 0
 * II    : phi = u^2 - v^2, psi = 2 u v, C > 0
 *
 * Q is any C^2 profile; the singular loci of each case are excluded from
 * the domain by `margin`. */
struct ConformalFamily {
    FamilyCase case_id = FamilyCase::I_i;
    double lambda = 0;
    double a = 0, b = 0, c1 = 0, c2 = 0;
    double C = 1, D = 0;
    Fn1 Q = Fn1::zero();
    FirstIntegralForm form = FirstIntegralForm::U; // case I_i only
    Rect domain{-1, 1, -1, 1};
    double margin = 1e-3;
};

struct ConformalPair {
    SurfaceMetric metric;
    SurfaceField field;
};

/** Builds the isothermal metric and homothetic field for a family spec.
 * Throws ParamError for degenerate parameters and SingularDomainError when
 * the requested rectangle comes within `margin` of a singular locus. */
ConformalPair make_conformal_family(const ConformalFamily& spec);

std::string to_string(FamilyCase c);

} // namespace mcf

#endif

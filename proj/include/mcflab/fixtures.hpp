#ifndef MCFLAB_FIXTURES_HPP
#define MCFLAB_FIXTURES_HPP

#include <vector>

#include "mcflab/conformal_family.hpp"
#include "mcflab/curve.hpp"
#include "mcflab/soliton.hpp"
#include "mcflab/vector_field.hpp"

namespace mcf {
namespace fixtures {

/** Flat plane as a normal Gaussian chart, A == 1, on [-1,1]^2 by default. */
SurfaceMetric flat_gaussian(Rect domain = {-1, 1, -1, 1});

/** Hyperbolic plane in normal Gaussian form, A = e^{-2u}. */
SurfaceMetric hyperbolic_gaussian(Rect domain = {-1, 1, -1, 1});

/** Flat plane as an isothermal chart, rho == 0. */
SurfaceMetric flat_isothermal(Rect domain);

/** Flat shrinker field X = -u d_u - v d_v (lambda = -1). */
SurfaceField shrinker_field();

/** Flat translator field X = d_v (lambda = 0). */
SurfaceField translator_field();

/** The shipped family specs: I-i with Q = w^2/10 on rho = v + u^2/10,
 * I-ii (a=1, rho = ln u), I-iii (b=1, Q = w^2/10), and II. */
ConformalFamily family_I_i();
ConformalFamily family_I_ii();
ConformalFamily family_I_iii();
ConformalFamily family_II();
std::vector<ConformalFamily> shipped_families();

/** Soliton initial state and run length tuned to stay inside each shipped
 * family's domain. */
struct FamilyScenario {
    ConformalFamily spec;
    SolitonState initial;
    double arclength;
    double similarity_T; // short group time for the self-similarity check
};
FamilyScenario family_scenario(FamilyCase c);

/** Unit circle about the origin, counterclockwise, n points. */
Curve unit_circle(int n, double radius = 1.0);

/** Grim reaper v = -ln cos u sampled uniformly in arclength via
 * (u, v) = (gd(s), ln cosh s), s in [-s_max, s_max]. */
Curve grim_reaper(int n, double s_max);

/** Named flat-chart symmetry candidates: d_t, d_x, d_u, the rotation
 * -u d_x + x d_u, the dilation x d_x + u d_u + 2t d_t, and the failing
 * candidates x^2 d_x and u d_x. */
SymmetryCandidate candidate_dt();
SymmetryCandidate candidate_dx();
SymmetryCandidate candidate_du();
SymmetryCandidate candidate_rotation();
SymmetryCandidate candidate_dilation();
SymmetryCandidate candidate_x2dx();
SymmetryCandidate candidate_udx();
std::vector<SymmetryCandidate> symmetry_table_candidates();

} // namespace fixtures
} // namespace mcf

#endif

#ifndef MCFLAB_SYMMETRY_HPP
#define MCFLAB_SYMMETRY_HPP

#include <array>
#include <string>
#include <vector>

#include "mcflab/metric.hpp"
#include "mcflab/vector_field.hpp"

namespace mcf {

/** A second-order jet (x, t, u, u_x, u_t, u_xx, u_xt, u_tt). */
struct JetPoint {
    double x = 0, t = 0, u = 0;
    double ux = 0, ut = 0, uxx = 0, uxt = 0, utt = 0;
    bool on_manifold = false;
};

/** Phi^1 = L^2 u_t - u_xx + (A_u/A) u_x^2 + (A_x/2A) u_x + A_u/2. */
double phi1(const SurfaceMetric& metric, const JetPoint& jet);

/** Phi^2 = u_x u_xt + L^2 k^2 with k the graph geodesic curvature. */
double phi2(const SurfaceMetric& metric, const JetPoint& jet);

/** The four prolongation coefficients (phi^x, phi^t, phi^xx, phi^xt) of
 * pr^(2) v for v = tau d_t + xi d_x + eta d_u, evaluated verbatim. */
struct ProlongationCoeffs {
    double px, pt, pxx, pxt;
};
ProlongationCoeffs prolongation_coeffs(const SymmetryCandidate& cand,
                                       const JetPoint& jet);

/** pr^(2) v [Phi^1] at a solution-manifold jet; zero for infinitesimal
 * symmetries. Throws ManifoldError when the jet does not satisfy Phi^1 = 0
 * (and Phi^2 = 0 where |u_x| >= 0.1). */
double apply_prolongation(const SurfaceMetric& metric,
                          const SymmetryCandidate& cand, const JetPoint& jet,
                          double manifold_tol = 1e-12);

/** Samples jets on the solution manifold: (x,u) in the domain, |u_x| in
 * [0.1, 2], u_xx in [-2, 2], u_t fixed by Phi^1 = 0, u_xt by Phi^2 = 0,
 * u_tt free in [-1, 1], t in [0, 1]. */
std::vector<JetPoint> sample_manifold_jets(const SurfaceMetric& metric, int n,
                                           Rng& rng);

double max_prolongation_residual(const SurfaceMetric& metric,
                                 const SymmetryCandidate& cand,
                                 const std::vector<JetPoint>& jets);

/** Max-norms over a sample grid of the eight determining equations; the
 * eighth entry encodes the constraint tau = tau(t) as max(|tau_x|+|tau_u|). */
std::array<double, 8> determining_residuals(const SurfaceMetric& metric,
                                            const SymmetryCandidate& cand,
                                            int grid = 20);

/** Max-norms of the three homothetic-field equations
 *   2A xi_x + A_x xi + A_u eta = 2 A lambda,
 *   A xi_u + eta_x = 0,
 *   eta_u = lambda. */
std::array<double, 3> homothetic_system_residual(const SurfaceMetric& metric,
                                                 const SymmetryCandidate& cand,
                                                 double lambda, int grid = 20);

enum class Verdict { Pass, Fail, Indeterminate };

/** Tolerance split: <= pass_tol passes, >= fail_tol fails, the dead zone in
 * between is reported as Indeterminate rather than silently classified. */
Verdict classify_residual(double residual, double pass_tol = 1e-8,
                          double fail_tol = 1e-2);

std::string to_string(Verdict v);

} // namespace mcf

#endif

#ifndef MCFLAB_AFFINE_HPP
#define MCFLAB_AFFINE_HPP

#include <functional>
#include <string>
#include <vector>

#include "mcflab/types.hpp"

namespace mcf {

/** One-parameter affine family F(x,t) = R(t) F0(x) + T(t), given either as
 * callables or as sampled triples (t_i, R_i, T_i). R(0) = I, T(0) = 0 and
 * det R(t) > 0. */
struct AffineFamily {
    int n = 2;
    std::function<MatX(double)> R;
    std::function<VecX(double)> T;
    std::vector<double> sample_t;    // used when R/T are absent
    std::vector<MatX> sample_R;
    std::vector<VecX> sample_T;

    bool sampled() const { return !R; }

    /** Validates R(0) = I, T(0) = 0 and det R > 0 at the given times. */
    void validate(const std::vector<double>& probe_times = {}) const;
};

/** R = U (sI) V with U special orthogonal, s > 0, V upper triangular with
 * V(0,0) = 1; QR with positive diagonal makes the decomposition unique. */
struct USVDecomposition {
    MatX U;
    double s = 1;
    MatX V;

    MatX reconstruct() const { return U * (s * V); }
};

USVDecomposition usv_decompose(const MatX& R);

/** R'(0) split into skew + scalar * I + strictly "upper with zero (1,1)"
 * parts, together with T'(0); the three parts live in complementary
 * subspaces so the split is unique. */
struct InfinitesimalSplit {
    MatX skew;
    double scalar = 0;
    MatX upper;
    VecX translation;

    MatX generator() const {
        return skew + scalar * MatX::Identity(skew.rows(), skew.cols()) + upper;
    }
};

InfinitesimalSplit infinitesimal_split(const AffineFamily& family);

enum class FamilyVerdict { SelfSimilar, ShearGenerator, Indeterminate };

/** Classifies the generator: SelfSimilar when the normalized upper part is
 * negligible, ShearGenerator when it clearly is not, Indeterminate in the
 * dead zone. The verdict describes the generator decomposition only. */
FamilyVerdict classify_family(const AffineFamily& family, double tol = 1e-8);

std::string to_string(FamilyVerdict v);

} // namespace mcf

#endif

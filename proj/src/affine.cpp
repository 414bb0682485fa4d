#include "mcflab/affine.hpp"

#include <Eigen/LU>
#include <Eigen/QR>
#include <cmath>

#include "mcflab/errors.hpp"

namespace mcf {

void AffineFamily::validate(const std::vector<double>& probe_times) const {
    auto check = [&](double t, const MatX& Rt, const VecX& Tt) {
        if (Rt.rows() != n || Rt.cols() != n || Tt.size() != n)
            throw ParamError("family dimension mismatch");
        if (t == 0) {
            if ((Rt - MatX::Identity(n, n)).norm() > 1e-10)
                throw ParamError("R(0) must be the identity");
            if (Tt.norm() > 1e-10) throw ParamError("T(0) must vanish");
        }
        if (!(Rt.determinant() > 0))
            throw ParamError("det R(t) must stay positive");
    };
    if (sampled()) {
        if (sample_t.size() != sample_R.size() ||
            sample_t.size() != sample_T.size())
            throw ParamError("sample arrays disagree in length");
        for (size_t i = 0; i < sample_t.size(); ++i)
            check(sample_t[i], sample_R[i], sample_T[i]);
    } else {
        check(0.0, R(0.0), T(0.0));
        for (double t : probe_times) check(t, R(t), T(t));
    }
}

USVDecomposition usv_decompose(const MatX& M) {
    const int n = static_cast<int>(M.rows());
    if (M.cols() != n) throw SingularMatrix("matrix must be square");
    if (!(M.determinant() > 0))
        throw SingularMatrix("decomposition needs det R > 0");

    Eigen::HouseholderQR<MatX> qr(M);
    MatX Q = qr.householderQ();
    MatX T = qr.matrixQR().triangularView<Eigen::Upper>();

    // Positive diagonal makes the QR factors unique; det Q = +1 follows.
    for (int i = 0; i < n; ++i) {
        if (T(i, i) == 0) throw SingularMatrix("rank-deficient matrix");
        if (T(i, i) < 0) {
            T.row(i) = -T.row(i);
            Q.col(i) = -Q.col(i);
        }
    }

    USVDecomposition out;
    out.s = T(0, 0);
    out.U = Q;
    out.V = T / out.s;
    return out;
}

namespace {

// 4th-order five-point derivative at t = 0 of a matrix/vector path.
template <typename M, typename F>
M stencil_derivative(F&& f, double h) {
    const M a = f(-2 * h), b = f(-h), c = f(h), d = f(2 * h);
    return M((a - 8.0 * b + 8.0 * c - d) / (12.0 * h));
}

} // namespace

InfinitesimalSplit infinitesimal_split(const AffineFamily& family) {
    family.validate();
    const int n = family.n;
    MatX Rdot;
    VecX Tdot;

    if (!family.sampled()) {
        const double h = 1e-3;
        Rdot = stencil_derivative<MatX>([&](double t) { return family.R(t); }, h);
        Tdot = stencil_derivative<VecX>([&](double t) { return family.T(t); }, h);
    } else {
        const auto& ts = family.sample_t;
        if (ts.size() < 5)
            throw DifferentiationError("need >= 5 samples around t = 0");
        // Locate t = 0 with two uniformly spaced samples on each side.
        size_t i0 = ts.size();
        for (size_t i = 0; i < ts.size(); ++i)
            if (std::abs(ts[i]) < 1e-12) i0 = i;
        if (i0 == ts.size() || i0 < 2 || i0 + 2 >= ts.size())
            throw DifferentiationError(
                "samples must bracket t = 0 with two points on each side");
        const double h = ts[i0 + 1] - ts[i0];
        for (int k = -2; k <= 2; ++k)
            if (std::abs(ts[i0 + k] - k * h) > 1e-9 * std::max(1.0, std::abs(h)))
                throw DifferentiationError("samples must be uniformly spaced");
        Rdot = (family.sample_R[i0 - 2] - 8.0 * family.sample_R[i0 - 1] +
                8.0 * family.sample_R[i0 + 1] - family.sample_R[i0 + 2]) /
               (12.0 * h);
        Tdot = (family.sample_T[i0 - 2] - 8.0 * family.sample_T[i0 - 1] +
                8.0 * family.sample_T[i0 + 1] - family.sample_T[i0 + 2]) /
               (12.0 * h);
    }

    // Unique split into skew + scalar I + upper-triangular-with-zero-(1,1):
    // the below-diagonal entries fix the skew part, the (1,1) entry fixes
    // the scalar, and the remainder is upper triangular by construction.
    InfinitesimalSplit out;
    out.skew = MatX::Zero(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            out.skew(i, j) = Rdot(i, j);
            out.skew(j, i) = -Rdot(i, j);
        }
    out.scalar = Rdot(0, 0);
    out.upper = Rdot - out.skew - out.scalar * MatX::Identity(n, n);
    out.translation = Tdot;
    return out;
}

FamilyVerdict classify_family(const AffineFamily& family, double tol) {
    const InfinitesimalSplit split = infinitesimal_split(family);
    const double gen_norm = split.generator().norm();
    if (gen_norm == 0) return FamilyVerdict::SelfSimilar;
    // The verdict depends only on the generator's direction, so rescaling
    // t by a positive constant cannot change it.
    const double ratio = split.upper.norm() / gen_norm;
    if (ratio <= tol) return FamilyVerdict::SelfSimilar;
    if (ratio >= 100 * tol) return FamilyVerdict::ShearGenerator;
    return FamilyVerdict::Indeterminate;
}

std::string to_string(FamilyVerdict v) {
    switch (v) {
    case FamilyVerdict::SelfSimilar: return "self-similar";
    case FamilyVerdict::ShearGenerator: return "shear-generator";
    case FamilyVerdict::Indeterminate: return "indeterminate";
    }
    return "?";
}

} // namespace mcf

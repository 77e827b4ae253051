#include <array>
#include <cmath>

#include "splitkit/linalg.hpp"

namespace splitkit {

namespace {

// Principal square root of an upper triangular matrix (no eigenvalue on the
// closed negative real axis, so the diagonal recursion never breaks down).
ComplexMatrix sqrtm_triangular(const ComplexMatrix& t) {
    const int n = t.dim();
    ComplexMatrix s(n);
    for (int i = 0; i < n; ++i) s(i, i) = std::sqrt(t(i, i));
    for (int d = 1; d < n; ++d) {
        for (int i = 0; i + d < n; ++i) {
            const int j = i + d;
            cplx acc = t(i, j);
            for (int k = i + 1; k < j; ++k) acc -= s(i, k) * s(k, j);
            s(i, j) = acc / (s(i, i) + s(j, j));
        }
    }
    return s;
}

// 7-point Gauss-Legendre nodes/weights on [0,1]; the partial-fraction form of
// the diagonal Pade approximant of log(I+X).
constexpr std::array<double, 7> kNodes = {
    0.02544604382862076, 0.12923440720030277, 0.29707742431130146, 0.5,
    0.70292257568869854, 0.87076559279969723, 0.97455395617137924};
constexpr std::array<double, 7> kWeights = {
    0.06474248308443485, 0.13985269574463833, 0.19091502525255946,
    0.20897959183673470, 0.19091502525255946, 0.13985269574463833,
    0.06474248308443485};

ComplexMatrix pade_log(const ComplexMatrix& x) {
    const int n = x.dim();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    ComplexMatrix acc(n);
    for (size_t j = 0; j < kNodes.size(); ++j) {
        ComplexMatrix denom = eye + cplx(kNodes[j]) * x;
        acc += cplx(kWeights[j]) * (solve(denom, x));
    }
    return acc;
}

} // namespace

ComplexMatrix logm_principal(const ComplexMatrix& s, double branch_tol) {
    const int n = s.dim();
    if (n <= 0) throw InvalidInputError("logm: empty matrix");
    if (!s.is_finite()) throw InvalidInputError("logm: non-finite input");

    SchurResult sch = schur(s, true);

    for (int i = 0; i < n; ++i) {
        const cplx lam = sch.t(i, i);
        const double dist_to_cut =
            (lam.real() <= 0.0) ? std::abs(lam.imag()) : std::abs(lam);
        if (dist_to_cut <= branch_tol)
            throw BranchCutError("logm: eigenvalue within tolerance of the closed negative real axis");
    }

    ComplexMatrix t = sch.t;
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    int k = 0;
    const int max_sqrts = 50;
    while (distance(t, eye) > 0.25 && k < max_sqrts) {
        t = sqrtm_triangular(t);
        ++k;
    }
    if (k == max_sqrts)
        throw NumericError("logm: square-root phase did not contract", k);

    ComplexMatrix l = pade_log(t - eye);
    l *= std::pow(2.0, k);
    return sch.z * l * sch.z.adjoint();
}

ComplexMatrix spectral_projector(const ComplexMatrix& a, cplx cluster_center,
                                 double cluster_tol) {
    if (cluster_tol <= 0.0)
        throw InvalidInputError("spectral_projector: cluster_tol must be positive");
    const Spectrum sp = eigvals(a);

    int inside = 0;
    for (const auto& lam : sp.values) {
        const double d = std::abs(lam - cluster_center);
        if (d <= cluster_tol) {
            ++inside;
        } else if (d < 10.0 * cluster_tol) {
            throw ClusteringError(
                "spectral_projector: eigenvalue in the dead zone between cluster_tol and 10*cluster_tol");
        }
    }
    const int n = a.dim();
    if (inside == 0) return ComplexMatrix::zero(n);

    // Resolvent contour integral on a circle that separates the cluster from
    // the rest of the spectrum by at least a factor sqrt(10) on either side;
    // the trapezoid rule then converges geometrically.
    const double radius = cluster_tol * 3.1622776601683795;
    const int npts = 48;
    ComplexMatrix acc(n);
    for (int k = 0; k < npts; ++k) {
        const double th = 2.0 * 3.14159265358979323846 * k / npts;
        const cplx w = std::polar(1.0, th);
        const cplx z = cluster_center + radius * w;
        ComplexMatrix zi = ComplexMatrix::identity(n);
        zi *= z;
        acc += (radius / npts) * (w * solve(zi - a, ComplexMatrix::identity(n)));
    }
    return acc;
}

} // namespace splitkit

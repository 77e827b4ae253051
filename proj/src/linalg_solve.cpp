#include <algorithm>
#include <cmath>

#include "splitkit/linalg.hpp"

namespace splitkit {

namespace {

// In-place partial-pivot LU. Returns the pivot permutation.
std::vector<int> lu_factor(ComplexMatrix& a) {
    const int n = a.dim();
    std::vector<int> piv(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (best == 0.0) throw NumericError("lu_factor: singular matrix", k);
        piv[static_cast<size_t>(k)] = p;
        if (p != k)
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
        const cplx akk = a(k, k);
        for (int i = k + 1; i < n; ++i) {
            const cplx lik = a(i, k) / akk;
            a(i, k) = lik;
            if (lik == cplx(0.0)) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= lik * a(k, j);
        }
    }
    return piv;
}

// The factorization swaps whole rows (L columns included), so the full
// permutation must be applied to the right-hand side before elimination.
void lu_solve_inplace(const ComplexMatrix& lu, const std::vector<int>& piv, CVector& b) {
    const int n = lu.dim();
    for (int k = 0; k < n; ++k) {
        const int p = piv[static_cast<size_t>(k)];
        if (p != k) std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(p)]);
    }
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i) b[static_cast<size_t>(i)] -= lu(i, k) * b[static_cast<size_t>(k)];
    for (int i = n - 1; i >= 0; --i) {
        cplx s = b[static_cast<size_t>(i)];
        for (int j = i + 1; j < n; ++j) s -= lu(i, j) * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(i)] = s / lu(i, i);
    }
}

} // namespace

CVector solve(const ComplexMatrix& a, const CVector& b) {
    ComplexMatrix lu = a;
    const auto piv = lu_factor(lu);
    CVector x = b;
    lu_solve_inplace(lu, piv, x);
    return x;
}

ComplexMatrix solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw InvalidInputError("solve: dimension mismatch");
    const int n = a.dim();
    ComplexMatrix lu = a;
    const auto piv = lu_factor(lu);
    ComplexMatrix x(n);
    CVector col(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) col[static_cast<size_t>(i)] = b(i, j);
        lu_solve_inplace(lu, piv, col);
        for (int i = 0; i < n; ++i) x(i, j) = col[static_cast<size_t>(i)];
    }
    return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return solve(a, ComplexMatrix::identity(a.dim()));
}

ComplexMatrix qr_unitary(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix r = a;
    ComplexMatrix q = ComplexMatrix::identity(n);
    CVector v(static_cast<size_t>(n));
    for (int k = 0; k < n - 1; ++k) {
        double xnorm = 0.0;
        for (int i = k; i < n; ++i) xnorm += std::norm(r(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        const cplx x0 = r(k, k);
        const double ax0 = std::abs(x0);
        const cplx phase = (ax0 == 0.0) ? cplx(1.0) : x0 / ax0;
        const cplx alpha = -phase * xnorm;
        double vnorm2 = 0.0;
        for (int i = k; i < n; ++i) {
            v[static_cast<size_t>(i)] = r(i, k);
        }
        v[static_cast<size_t>(k)] -= alpha;
        for (int i = k; i < n; ++i) vnorm2 += std::norm(v[static_cast<size_t>(i)]);
        if (vnorm2 == 0.0) continue;

        // Apply H = I - 2 v v^* / (v^* v) to R (left) and accumulate into Q.
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = k; i < n; ++i) s += std::conj(v[static_cast<size_t>(i)]) * r(i, j);
            s *= 2.0 / vnorm2;
            for (int i = k; i < n; ++i) r(i, j) -= s * v[static_cast<size_t>(i)];
        }
        for (int j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (int i = k; i < n; ++i) s += std::conj(v[static_cast<size_t>(i)]) * q(i, j);
            s *= 2.0 / vnorm2;
            for (int i = k; i < n; ++i) q(i, j) -= s * v[static_cast<size_t>(i)];
        }
    }
    // q currently holds Q^*; columns of Q are what we return, with the phase
    // of R's diagonal absorbed so the distribution is uniform for Gaussian input.
    ComplexMatrix qmat = q.adjoint();
    for (int j = 0; j < n; ++j) {
        const cplx d = r(j, j);
        const double ad = std::abs(d);
        const cplx ph = (ad == 0.0) ? cplx(1.0) : d / ad;
        for (int i = 0; i < n; ++i) qmat(i, j) *= ph;
    }
    return qmat;
}

double spectra_paired_distance(const Spectrum& a, const Spectrum& b) {
    if (a.size() != b.size())
        throw InvalidInputError("spectra_paired_distance: size mismatch");
    Spectrum sa = a, sb = b;
    sa.sort_canonical();
    sb.sort_canonical();
    const int n = sa.size();
    std::vector<bool> used(static_cast<size_t>(n), false);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        int jbest = -1;
        double dbest = 0.0;
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            const double d = std::abs(sa.values[static_cast<size_t>(i)] - sb.values[static_cast<size_t>(j)]);
            if (jbest < 0 || d < dbest) {
                jbest = j;
                dbest = d;
            }
        }
        used[static_cast<size_t>(jbest)] = true;
        worst = std::max(worst, dbest);
    }
    return worst;
}

double spectra_hausdorff_distance(const Spectrum& a, const Spectrum& b) {
    auto directed = [](const Spectrum& x, const Spectrum& y) {
        double worst = 0.0;
        for (const auto& xv : x.values) {
            double best = -1.0;
            for (const auto& yv : y.values) {
                const double d = std::abs(xv - yv);
                if (best < 0.0 || d < best) best = d;
            }
            worst = std::max(worst, best);
        }
        return worst;
    };
    return std::max(directed(a, b), directed(b, a));
}

LsqFit lsq_matrix_fit(const std::vector<std::vector<ComplexMatrix>>& basis_per_point,
                      const std::vector<ComplexMatrix>& targets,
                      const std::vector<double>& weights) {
    const size_t npts = targets.size();
    if (basis_per_point.size() != npts || weights.size() != npts || npts == 0)
        throw InvalidInputError("lsq_matrix_fit: inconsistent inputs");
    const size_t nterms = basis_per_point[0].size();

    // Normal equations G x = c with G_kl = sum_i w_i^2 <B_ik, B_il>.
    ComplexMatrix gram(static_cast<int>(nterms));
    CVector rhs(nterms, cplx(0.0));
    auto dot = [](const ComplexMatrix& x, const ComplexMatrix& y) {
        cplx s = 0.0;
        const auto& xd = x.data();
        const auto& yd = y.data();
        for (size_t k = 0; k < xd.size(); ++k) s += std::conj(xd[k]) * yd[k];
        return s;
    };
    double total = 0.0;
    for (size_t i = 0; i < npts; ++i) {
        const double w2 = weights[i] * weights[i];
        for (size_t k = 0; k < nterms; ++k) {
            for (size_t l = 0; l < nterms; ++l)
                gram(static_cast<int>(k), static_cast<int>(l)) +=
                    w2 * dot(basis_per_point[i][k], basis_per_point[i][l]);
            rhs[k] += w2 * dot(basis_per_point[i][k], targets[i]);
        }
        total += w2 * targets[i].frobenius_norm() * targets[i].frobenius_norm();
    }
    CVector x = solve(gram, rhs);

    double misfit = 0.0;
    for (size_t i = 0; i < npts; ++i) {
        ComplexMatrix res = targets[i];
        for (size_t k = 0; k < nterms; ++k) {
            ComplexMatrix term = basis_per_point[i][k];
            term *= x[k];
            res -= term;
        }
        misfit += weights[i] * weights[i] * res.frobenius_norm() * res.frobenius_norm();
    }
    LsqFit fit;
    fit.coeffs = std::move(x);
    fit.rel_residual = (total > 0.0) ? std::sqrt(misfit / total) : 0.0;
    return fit;
}

} // namespace splitkit

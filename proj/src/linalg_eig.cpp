#include <algorithm>
#include <cmath>

#include "splitkit/linalg.hpp"

namespace splitkit {

void Spectrum::sort_canonical() {
    std::sort(values.begin(), values.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

namespace {

struct Givens {
    double c = 1.0;
    cplx s = 0.0;
};

// Rotation [[c, s], [-conj(s), c]] with c real mapping (f, g) -> (r, 0).
Givens make_givens(cplx f, cplx g, cplx& r) {
    Givens gv;
    const double ag = std::abs(g);
    if (ag == 0.0) {
        r = f;
        return gv;
    }
    const double af = std::abs(f);
    if (af == 0.0) {
        gv.c = 0.0;
        gv.s = std::conj(g) / ag;
        r = ag;
        return gv;
    }
    const double d = std::hypot(af, ag);
    const cplx fs = f / af;
    gv.c = af / d;
    gv.s = fs * std::conj(g) / d;
    r = fs * d;
    return gv;
}

// Householder reduction to upper Hessenberg form, accumulating the unitary
// similarity into q (A = q H q^*).
void hessenberg(ComplexMatrix& h, ComplexMatrix& q, bool want_q) {
    const int n = h.dim();
    CVector v(static_cast<size_t>(n));
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm += std::norm(h(i, k));
        xnorm = std::sqrt(xnorm);
        if (xnorm == 0.0) continue;
        const cplx x0 = h(k + 1, k);
        const double ax0 = std::abs(x0);
        const cplx phase = (ax0 == 0.0) ? cplx(1.0) : x0 / ax0;
        const cplx alpha = -phase * xnorm;
        double vnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) v[static_cast<size_t>(i)] = h(i, k);
        v[static_cast<size_t>(k + 1)] -= alpha;
        for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[static_cast<size_t>(i)]);
        if (vnorm2 == 0.0) continue;
        const double beta = 2.0 / vnorm2;

        // left: H <- P H
        for (int j = k; j < n; ++j) {
            cplx s = 0.0;
            for (int i = k + 1; i < n; ++i) s += std::conj(v[static_cast<size_t>(i)]) * h(i, j);
            s *= beta;
            for (int i = k + 1; i < n; ++i) h(i, j) -= s * v[static_cast<size_t>(i)];
        }
        // right: H <- H P
        for (int i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (int j = k + 1; j < n; ++j) s += h(i, j) * v[static_cast<size_t>(j)];
            s *= beta;
            for (int j = k + 1; j < n; ++j) h(i, j) -= s * std::conj(v[static_cast<size_t>(j)]);
        }
        if (want_q) {
            for (int i = 0; i < n; ++i) {
                cplx s = 0.0;
                for (int j = k + 1; j < n; ++j) s += q(i, j) * v[static_cast<size_t>(j)];
                s *= beta;
                for (int j = k + 1; j < n; ++j) q(i, j) -= s * std::conj(v[static_cast<size_t>(j)]);
            }
        }
        h(k + 1, k) = alpha;
        for (int i = k + 2; i < n; ++i) h(i, k) = 0.0;
    }
}

cplx wilkinson_shift(const ComplexMatrix& h, int u) {
    const cplx a = h(u - 1, u - 1), b = h(u - 1, u);
    const cplx c = h(u, u - 1), d = h(u, u);
    const cplx tr2 = 0.5 * (a - d);
    const cplx disc = std::sqrt(tr2 * tr2 + b * c);
    const cplx l1 = d + tr2 + disc;
    const cplx l2 = d + tr2 - disc;
    return (std::abs(l1 - d) < std::abs(l2 - d)) ? l1 : l2;
}

} // namespace

SchurResult schur(const ComplexMatrix& a, bool want_z) {
    const int n = a.dim();
    if (n <= 0) throw InvalidInputError("schur: empty matrix");
    if (!a.is_finite()) throw InvalidInputError("schur: non-finite input");

    SchurResult res;
    res.t = a;
    res.z = ComplexMatrix::identity(n);
    ComplexMatrix& h = res.t;
    ComplexMatrix& z = res.z;

    hessenberg(h, z, want_z);

    const double eps = 2.220446049250313e-16;
    const double tiny = 1e-300;
    int iter_total = 0;
    const int iter_cap = 60 * std::max(n, 4);

    int u = n - 1;
    int stalled = 0;
    while (u > 0) {
        // deflate converged subdiagonal entries
        int l = u;
        while (l > 0) {
            const double sub = std::abs(h(l, l - 1));
            const double scale = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (sub <= eps * scale + tiny) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == u) {
            --u;
            stalled = 0;
            continue;
        }

        if (++iter_total > iter_cap)
            throw NumericError("schur: QR iteration did not converge", iter_total);

        cplx mu;
        if (stalled > 0 && stalled % 12 == 0) {
            // exceptional shift to break symmetry-induced stalls
            mu = h(u, u) + cplx(0.75 * std::abs(h(u, u - 1)), 0.0);
        } else {
            mu = wilkinson_shift(h, u);
        }
        ++stalled;

        // explicit single-shift QR sweep on the active window [l, u]
        for (int i = l; i <= u; ++i) h(i, i) -= mu;
        std::vector<Givens> rots(static_cast<size_t>(u - l));
        for (int k = l; k < u; ++k) {
            cplx r;
            const Givens gv = make_givens(h(k, k), h(k + 1, k), r);
            rots[static_cast<size_t>(k - l)] = gv;
            h(k, k) = r;
            h(k + 1, k) = 0.0;
            for (int j = k + 1; j < n; ++j) {
                const cplx t1 = h(k, j), t2 = h(k + 1, j);
                h(k, j) = gv.c * t1 + gv.s * t2;
                h(k + 1, j) = -std::conj(gv.s) * t1 + gv.c * t2;
            }
        }
        for (int k = l; k < u; ++k) {
            const Givens gv = rots[static_cast<size_t>(k - l)];
            const int top = std::min(k + 1, u);
            for (int i = 0; i <= top; ++i) {
                const cplx t1 = h(i, k), t2 = h(i, k + 1);
                h(i, k) = gv.c * t1 + std::conj(gv.s) * t2;
                h(i, k + 1) = -gv.s * t1 + gv.c * t2;
            }
            if (want_z) {
                for (int i = 0; i < n; ++i) {
                    const cplx t1 = z(i, k), t2 = z(i, k + 1);
                    z(i, k) = gv.c * t1 + std::conj(gv.s) * t2;
                    z(i, k + 1) = -gv.s * t1 + gv.c * t2;
                }
            }
        }
        for (int i = l; i <= u; ++i) h(i, i) += mu;
    }

    // clean the strict lower triangle (holds deflated debris below eps scale)
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) h(i, j) = 0.0;

    if (want_z) {
        const ComplexMatrix rec = z * h * z.adjoint();
        res.residual = distance(rec, a) / std::max(1.0, a.frobenius_norm());
    }
    return res;
}

Spectrum eigvals(const ComplexMatrix& a) {
    const SchurResult s = schur(a, false);
    Spectrum sp;
    sp.values.reserve(static_cast<size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) sp.values.push_back(s.t(i, i));
    sp.sort_canonical();
    return sp;
}

} // namespace splitkit

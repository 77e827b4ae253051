#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "splitkit/linalg.hpp"
#include "splitkit/rng.hpp"

using namespace splitkit;

namespace {

ComplexMatrix random_complex(int n, Rng& rng, double scale = 1.0) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m(i, j) = scale * cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return m;
}

ComplexMatrix random_hermitian(int n, Rng& rng, double scale = 1.0) {
    ComplexMatrix w = random_complex(n, rng, scale);
    ComplexMatrix h = w + w.adjoint();
    h *= 0.5;
    return h;
}

// Independent oracle: plain truncated Taylor series, valid for small norms.
ComplexMatrix expm_taylor(const ComplexMatrix& a) {
    const int n = a.dim();
    ComplexMatrix sum = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 60; ++k) {
        term = term * a;
        term *= cplx(1.0 / k);
        sum += term;
        if (term.frobenius_norm() < 1e-20) break;
    }
    return sum;
}

// Independent oracle: Mercator series log(I + X), valid for ||X|| < 1.
ComplexMatrix logm_series(const ComplexMatrix& s) {
    const int n = s.dim();
    ComplexMatrix x = s - ComplexMatrix::identity(n);
    ComplexMatrix sum(n);
    ComplexMatrix pw = ComplexMatrix::identity(n);
    for (int k = 1; k <= 300; ++k) {
        pw = pw * x;
        ComplexMatrix term = pw;
        term *= cplx(((k % 2) ? 1.0 : -1.0) / k);
        sum += term;
        if (pw.frobenius_norm() / k < 1e-18) break;
    }
    return sum;
}

// Independent oracle: characteristic polynomial coefficients via the
// Faddeev-LeVerrier recursion, then Durand-Kerner root finding.
std::vector<cplx> charpoly_roots(const ComplexMatrix& a) {
    const int n = a.dim();
    // p(x) = x^n + c1 x^{n-1} + ... + cn
    std::vector<cplx> c(static_cast<size_t>(n) + 1, cplx(0.0));
    c[0] = 1.0;
    ComplexMatrix m = ComplexMatrix::zero(n);
    for (int k = 1; k <= n; ++k) {
        m = a * m;
        for (int i = 0; i < n; ++i) m(i, i) += c[static_cast<size_t>(k - 1)];
        c[static_cast<size_t>(k)] = -(a * m).trace() / cplx(static_cast<double>(k));
    }
    std::vector<cplx> roots(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = std::pow(cplx(0.4, 0.9), i + 1);
    auto eval = [&](cplx x) {
        cplx v = c[0];
        for (int k = 1; k <= n; ++k) v = v * x + c[static_cast<size_t>(k)];
        return v;
    };
    for (int it = 0; it < 200; ++it) {
        double moved = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            const cplx delta = eval(roots[static_cast<size_t>(i)]) / denom;
            roots[static_cast<size_t>(i)] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return roots;
}

} // namespace

TEST_CASE("expm of the zero matrix is the identity") {
    const ComplexMatrix z = ComplexMatrix::zero(4);
    CHECK(approx_equal(expm(z, cplx(3.7, -1.2)), ComplexMatrix::identity(4), 1e-15));
}

TEST_CASE("expm of a diagonal matrix exponentiates the diagonal") {
    ComplexMatrix d(2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    const ComplexMatrix e = expm(d);
    CHECK(std::abs(e(0, 0) - std::exp(1.0)) < 1e-14);
    CHECK(std::abs(e(1, 1) - std::exp(2.0)) < 1e-13);
    CHECK(std::abs(e(0, 1)) < 1e-15);
    CHECK(std::abs(e(1, 0)) < 1e-15);
}

TEST_CASE("expm of a rotation generator matches the closed form and the Taylor oracle") {
    const double theta = 1.5707963267948966; // pi/2
    ComplexMatrix g(2);
    g(0, 1) = theta;
    g(1, 0) = -theta;
    const ComplexMatrix e = expm(g);
    ComplexMatrix expected(2);
    expected(0, 1) = 1.0;
    expected(1, 0) = -1.0;
    CHECK(distance(e, expected) < 1e-13);
    CHECK(distance(e, expm_taylor(g)) < 1e-13);
}

TEST_CASE("expm agrees with the Taylor oracle on random matrices") {
    Rng rng(11, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const ComplexMatrix a = random_complex(6, rng, 0.8);
        CHECK(distance(expm(a), expm_taylor(a)) < 1e-12 * std::max(1.0, expm_taylor(a).frobenius_norm()));
    }
}

TEST_CASE("expm group property on commuting arguments") {
    Rng rng(12, 0);
    const ComplexMatrix a = random_complex(5, rng, 0.6);
    const ComplexMatrix left = expm(a, cplx(0.3, 0.1)) * expm(a, cplx(0.45, -0.2));
    const ComplexMatrix right = expm(a, cplx(0.75, -0.1));
    CHECK(distance(left, right) < 1e-12);
}

TEST_CASE("eigvals of Pauli-X") {
    ComplexMatrix x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const Spectrum sp = eigvals(x);
    CHECK(std::abs(sp.values[0] - cplx(-1.0)) < 1e-14);
    CHECK(std::abs(sp.values[1] - cplx(1.0)) < 1e-14);
}

TEST_CASE("eigvals of a diagonal matrix, canonical order") {
    const ComplexMatrix d = ComplexMatrix::diagonal({cplx(0.0, 3.0), cplx(2.0), cplx(-1.0)});
    const Spectrum sp = eigvals(d);
    CHECK(std::abs(sp.values[0] - cplx(-1.0)) < 1e-14);
    CHECK(std::abs(sp.values[1] - cplx(0.0, 3.0)) < 1e-14);
    CHECK(std::abs(sp.values[2] - cplx(2.0)) < 1e-14);
}

TEST_CASE("Hermitian spectra are real, skew-Hermitian spectra are imaginary") {
    Rng rng(13, 0);
    const ComplexMatrix h = random_hermitian(10, rng);
    for (const auto& lam : eigvals(h).values) CHECK(std::abs(lam.imag()) < 1e-12);

    ComplexMatrix s = random_hermitian(10, rng);
    s *= cplx(0.0, 1.0);
    for (const auto& lam : eigvals(s).values) CHECK(std::abs(lam.real()) < 1e-12);
}

TEST_CASE("eigvals agrees with characteristic-polynomial roots on a 4x4 Hermitian") {
    Rng rng(14, 0);
    const ComplexMatrix h = random_hermitian(4, rng);
    Spectrum ours = eigvals(h);
    Spectrum oracle;
    oracle.values = charpoly_roots(h);
    oracle.sort_canonical();
    CHECK(spectra_paired_distance(ours, oracle) < 1e-10);
}

TEST_CASE("eigvals is invariant under similarity transforms") {
    Rng rng(15, 0);
    const ComplexMatrix a = random_complex(8, rng);
    ComplexMatrix p = random_complex(8, rng, 0.3);
    p += ComplexMatrix::identity(8);
    const ComplexMatrix b = p * a * inverse(p);
    CHECK(spectra_paired_distance(eigvals(a), eigvals(b)) < 1e-8);
}

TEST_CASE("schur reconstruction residual is tiny") {
    Rng rng(16, 0);
    const ComplexMatrix a = random_complex(12, rng);
    const SchurResult s = schur(a);
    CHECK(s.residual < 1e-13);
    // triangular
    for (int i = 1; i < 12; ++i)
        for (int j = 0; j < i; ++j) CHECK(s.t(i, j) == cplx(0.0));
}

TEST_CASE("logm of the identity is zero") {
    CHECK(logm_principal(ComplexMatrix::identity(5)).frobenius_norm() < 1e-14);
}

TEST_CASE("logm round-trips expm for small norms") {
    Rng rng(17, 0);
    for (int trial = 0; trial < 5; ++trial) {
        ComplexMatrix a = random_complex(6, rng);
        a *= cplx(0.5 / std::max(1.0, a.frobenius_norm()));
        const ComplexMatrix l = logm_principal(expm(a));
        CHECK(distance(l, a) < 1e-11 * (1.0 + a.frobenius_norm()));
    }
}

TEST_CASE("logm agrees with the Mercator-series oracle") {
    Rng rng(18, 0);
    ComplexMatrix a = random_complex(5, rng, 0.05);
    const ComplexMatrix s = ComplexMatrix::identity(5) + a;
    CHECK(distance(logm_principal(s), logm_series(s)) < 1e-13);
}

TEST_CASE("logm rejects eigenvalues on the branch cut") {
    const ComplexMatrix d = ComplexMatrix::diagonal({cplx(-1.0), cplx(1.0)});
    CHECK_THROWS_AS(logm_principal(d), BranchCutError);
}

TEST_CASE("expm then logm recovers the generator used for a propagator") {
    Rng rng(19, 0);
    ComplexMatrix h = random_hermitian(6, rng);
    const ComplexMatrix s = expm(h, cplx(0.0, 0.2));
    const ComplexMatrix l = logm_principal(s);
    ComplexMatrix expect = h;
    expect *= cplx(0.0, 0.2);
    CHECK(distance(l, expect) < 1e-12);
}

TEST_CASE("spectral projector on a diagonal matrix") {
    const ComplexMatrix d = ComplexMatrix::diagonal({cplx(1.0), cplx(1.0), cplx(5.0)});
    const ComplexMatrix p = spectral_projector(d, cplx(1.0), 0.1);
    ComplexMatrix expected(3);
    expected(0, 0) = 1.0;
    expected(1, 1) = 1.0;
    CHECK(distance(p, expected) < 1e-12);
}

TEST_CASE("spectral projector idempotency and commutation on random diagonalizable input") {
    Rng rng(20, 0);
    // well-separated eigenvalues, mildly non-normal similarity
    CVector lams;
    for (int i = 0; i < 8; ++i) lams.push_back(cplx(1.0 * i, 0.3 * ((i % 2) ? 1 : -1)));
    ComplexMatrix p = random_complex(8, rng, 0.25);
    p += ComplexMatrix::identity(8);
    const ComplexMatrix a = p * ComplexMatrix::diagonal(lams) * inverse(p);

    ComplexMatrix sum(8);
    for (int i = 0; i < 8; ++i) {
        const ComplexMatrix pi = spectral_projector(a, lams[static_cast<size_t>(i)], 0.05);
        CHECK(distance(pi * pi, pi) < 1e-9);
        CHECK(distance(a * pi, pi * a) < 1e-9);
        CHECK(std::abs(pi.trace() - cplx(1.0)) < 1e-9);
        sum += pi;
    }
    CHECK(distance(sum, ComplexMatrix::identity(8)) < 1e-9);
}

TEST_CASE("spectral projector flags ambiguous clustering") {
    const ComplexMatrix d = ComplexMatrix::diagonal({cplx(1.0), cplx(1.5), cplx(9.0)});
    CHECK_THROWS_AS(spectral_projector(d, cplx(1.0), 0.1), ClusteringError);
}

TEST_CASE("qr_unitary produces a unitary factor") {
    Rng rng(21, 0);
    ComplexMatrix g(7);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) g(i, j) = cplx(rng.normal(), rng.normal());
    const ComplexMatrix q = qr_unitary(g);
    CHECK(distance(q.adjoint() * q, ComplexMatrix::identity(7)) < 1e-13);
}

TEST_CASE("paired and Hausdorff spectrum distances") {
    Spectrum a, b;
    a.values = {cplx(1.0), cplx(2.0), cplx(2.0)};
    b.values = {cplx(2.0), cplx(1.0), cplx(2.0)};
    CHECK(spectra_paired_distance(a, b) < 1e-15);
    Spectrum c;
    c.values = {cplx(1.0), cplx(2.0), cplx(2.5)};
    CHECK(spectra_hausdorff_distance(a, c) == doctest::Approx(0.5));
}

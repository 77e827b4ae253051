#include "splitkit/complex_matrix.hpp"

#include <cmath>

namespace splitkit {

namespace {
void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw InvalidInputError(std::string("dimension mismatch in ") + op);
}
} // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const CVector& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& b) {
    check_same_dim(*this, b, "operator+=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += b.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& b) {
    check_same_dim(*this, b, "operator-=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= b.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(n_);
    for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = std::conj(a_[k]);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r += b;
    return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix r = a;
    r -= b;
    return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b, "operator*");
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix r = a;
    r *= s;
    return r;
}

CVector matvec(const ComplexMatrix& a, const CVector& x) {
    const int n = a.dim();
    if (static_cast<int>(x.size()) != n)
        throw InvalidInputError("matvec: vector length does not match matrix dimension");
    CVector y(static_cast<size_t>(n), cplx(0.0));
    for (int i = 0; i < n; ++i) {
        cplx s = 0.0;
        for (int j = 0; j < n; ++j) s += a(i, j) * x[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] = s;
    }
    return y;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a * b - b * a;
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.dim() != b.dim()) return false;
    return distance(a, b) <= tol;
}

double vec_norm(const CVector& x) {
    double s = 0.0;
    for (const auto& v : x) s += std::norm(v);
    return std::sqrt(s);
}

CVector vec_sub(const CVector& x, const CVector& y) {
    CVector r(x.size());
    for (size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

} // namespace splitkit

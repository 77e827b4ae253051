#pragma once

#include <complex>
#include <vector>

#include "splitkit/errors.hpp"

namespace splitkit {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Dense square complex matrix, row-major, value semantics.
// The workhorse carrier for generators and propagators (N <= ~64).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {
        if (n <= 0) throw InvalidInputError("ComplexMatrix: dimension must be positive");
    }

    static ComplexMatrix zero(int n) { return ComplexMatrix(n); }
    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const CVector& d);

    int dim() const { return n_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    ComplexMatrix& operator+=(const ComplexMatrix& b);
    ComplexMatrix& operator-=(const ComplexMatrix& b);
    ComplexMatrix& operator*=(cplx s);

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    double frobenius_norm() const;
    double max_abs() const;
    cplx trace() const;
    bool is_finite() const;

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

CVector matvec(const ComplexMatrix& a, const CVector& x);

// [A, B] = AB - BA
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// Frobenius distance; equality for these matrices is always tolerance-based.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol);

double vec_norm(const CVector& x);
CVector vec_sub(const CVector& x, const CVector& y);

} // namespace splitkit

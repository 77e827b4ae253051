#include <array>
#include <cmath>

#include "splitkit/linalg.hpp"

namespace splitkit {

namespace {

// 1-norm (max column sum), the classical bound used to pick the Pade degree.
double norm1(const ComplexMatrix& a) {
    const int n = a.dim();
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

// Diagonal Pade of degree m for exp, evaluated as in Higham (2005).
ComplexMatrix pade_exp(const ComplexMatrix& a, int m) {
    static const std::array<double, 4> b3 = {120, 60, 12, 1};
    static const std::array<double, 6> b5 = {30240, 15120, 3360, 420, 30, 1};
    static const std::array<double, 8> b7 = {17297280, 8648640, 1995840, 277200, 25200, 1512, 56, 1};
    static const std::array<double, 10> b9 = {17643225600.0, 8821612800.0, 2075673600.0,
                                              302702400.0,   30270240.0,   2162160.0,
                                              110880.0,      3960.0,       90.0,
                                              1.0};
    static const std::array<double, 14> b13 = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0, 1187353796428800.0,
        129060195264000.0,   10559470521600.0,    670442572800.0,     33522128640.0,
        1323241920.0,        40840800.0,          960960.0,           16380.0,
        182.0,               1.0};

    const int n = a.dim();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    const ComplexMatrix a2 = a * a;

    ComplexMatrix u(n), v(n);
    if (m == 13) {
        const ComplexMatrix a4 = a2 * a2;
        const ComplexMatrix a6 = a4 * a2;
        ComplexMatrix w1 = b13[13] * a6 + b13[11] * a4 + b13[9] * a2;
        ComplexMatrix w2 = b13[7] * a6 + b13[5] * a4 + b13[3] * a2 + b13[1] * eye;
        u = a * (a6 * w1 + w2);
        ComplexMatrix z1 = b13[12] * a6 + b13[10] * a4 + b13[8] * a2;
        v = a6 * z1 + b13[6] * a6 + b13[4] * a4 + b13[2] * a2 + b13[0] * eye;
    } else {
        std::vector<double> b;
        if (m == 3)
            b.assign(b3.begin(), b3.end());
        else if (m == 5)
            b.assign(b5.begin(), b5.end());
        else if (m == 7)
            b.assign(b7.begin(), b7.end());
        else
            b.assign(b9.begin(), b9.end());
        // powers a^0, a^2, a^4, ...
        std::vector<ComplexMatrix> pw;
        pw.push_back(eye);
        pw.push_back(a2);
        for (int k = 2; 2 * k <= m + 1; ++k) pw.push_back(pw.back() * a2);
        ComplexMatrix usum(n), vsum(n);
        for (int k = 0; 2 * k + 1 <= m; ++k) usum += b[static_cast<size_t>(2 * k + 1)] * pw[static_cast<size_t>(k)];
        for (int k = 0; 2 * k <= m; ++k) vsum += b[static_cast<size_t>(2 * k)] * pw[static_cast<size_t>(k)];
        u = a * usum;
        v = vsum;
    }
    // (V - U) X = (V + U)
    return solve(v - u, v + u);
}

} // namespace

ComplexMatrix expm(const ComplexMatrix& a, cplx t) {
    if (a.dim() <= 0) throw InvalidInputError("expm: empty matrix");
    if (!a.is_finite()) throw InvalidInputError("expm: non-finite input");

    ComplexMatrix ta = a;
    ta *= t;

    const double nrm = norm1(ta);
    // degree selection thresholds from Higham's scaling-and-squaring analysis
    if (nrm <= 1.495585217958292e-2) return pade_exp(ta, 3);
    if (nrm <= 2.539398330063230e-1) return pade_exp(ta, 5);
    if (nrm <= 9.504178996162932e-1) return pade_exp(ta, 7);
    if (nrm <= 2.097847961257068e0) return pade_exp(ta, 9);

    const double theta13 = 5.371920351148152;
    int s = 0;
    double scaled = nrm;
    while (scaled > theta13) {
        scaled *= 0.5;
        ++s;
    }
    ta *= std::pow(2.0, -s);
    ComplexMatrix x = pade_exp(ta, 13);
    for (int k = 0; k < s; ++k) x = x * x;
    if (!x.is_finite()) throw NumericError("expm: overflow in squaring phase", s);
    return x;
}

} // namespace splitkit

#include "ghzcert/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ghzcert {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One unitary plane rotation in the (p, q) plane that annihilates a(p, q).
// With u = a(p,q) = |u| e^{i phi} and tau = (a_qq - a_pp) / (2 |u|), the
// rotation R differs from the identity only in
//   R(p,p) = c, R(p,q) = -s e^{i phi}, R(q,p) = s e^{-i phi}, R(q,q) = c,
// and A <- R^dagger A R zeroes the (p,q) entry.
void rotate(ComplexMatrix& a, int p, int q) {
    const cplx u = a(p, q);
    const double abs_u = std::abs(u);
    if (abs_u == 0.0) return;

    const cplx phase = u / abs_u;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    // smaller-magnitude root of t^2 - 2*tau*t - 1 = 0
    const double tau = (aqq - app) / (2.0 * abs_u);
    const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::hypot(tau, 1.0));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = a.dim();
    // rows p, q: A <- R^dagger A
    for (int k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk + s * phase * aqk;
        a(q, k) = -s * std::conj(phase) * apk + c * aqk;
    }
    // columns p, q: A <- A R
    for (int k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp + s * std::conj(phase) * akq;
        a(k, q) = -s * phase * akp + c * akq;
    }
    a(p, q) = cplx(0.0, 0.0);
    a(q, p) = cplx(0.0, 0.0);
    a(p, p) = cplx(a(p, p).real(), 0.0);
    a(q, q) = cplx(a(q, q).real(), 0.0);
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    if (h.hermiticity_defect() > 1e-10) {
        throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian");
    }

    // Work on the exactly Hermitian part; a no-op for Hermitian input.
    const int n = h.dim();
    ComplexMatrix a(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    const double scale = std::max(1.0, a.max_abs());
    const double target = 1e-14 * scale;
    const int max_sweeps = 50;
    for (int sweep = 0; sweep < max_sweeps && offdiag_norm(a) > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                rotate(a, p, q);
    }

    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = a(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

} // namespace ghzcert

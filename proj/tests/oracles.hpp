#ifndef QESQNM_TESTS_ORACLES_HPP
#define QESQNM_TESTS_ORACLES_HPP

// Reference computations written directly from the defining equations,
// sharing no code paths with the library beyond the ModelSpec struct.

#include "qesqnm/model.hpp"

#include <cmath>
#include <complex>
#include <span>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

inline cplx P(const qesqnm::ModelSpec &s, cplx z) { return (s.p.A2 * z + s.p.A1) * z + s.p.A0; }
inline cplx dP(const qesqnm::ModelSpec &s, cplx z) { return 2.0 * s.p.A2 * z + s.p.A1; }
inline cplx Q(const qesqnm::ModelSpec &s, cplx z) { return (s.q.alpha * z + s.q.beta) * z + s.q.gamma; }
inline cplx dQ(const qesqnm::ModelSpec &s, cplx z) { return 2.0 * s.q.alpha * z + s.q.beta; }

/// z(x) for a spec already in canonical form.
inline double z_of_x(const qesqnm::ModelSpec &s, double x)
{
    const double a = s.q.alpha.real();
    const double b = s.q.beta.real();
    const double g = s.q.gamma.real();
    if (a == 0.0 && b == 0.0) {
        return std::sqrt(g) * x;
    }
    if (a == 0.0) {
        return b * x * x / 4.0;
    }
    if (a < 0.0) {
        return std::sin(std::sqrt(-a) * x);
    }
    if (g > 0.0) {
        return std::sinh(std::sqrt(a) * x);
    }
    if (g < 0.0) {
        return std::cosh(std::sqrt(a) * x);
    }
    return std::exp(std::sqrt(a) * x);
}

/// phi''/phi for phi = exp(-W0) prod (z - z_k), written in z alone:
/// (P^2 + P Q'/2 - Q P')/Q - 2P S1 + Q (S1^2 - S2) + Q' S1 / 2
/// with S1 = sum 1/(z - z_k), S2 = sum 1/(z - z_k)^2.
inline cplx local_potential_minus_energy(const qesqnm::ModelSpec &s, std::span<const cplx> roots, double z)
{
    cplx s1 = 0.0;
    cplx s2 = 0.0;
    for (const cplx &zk : roots) {
        const cplx d = 1.0 / (cplx(z) - zk);
        s1 += d;
        s2 += d * d;
    }
    const cplx p = P(s, z);
    const cplx q = Q(s, z);
    const cplx dq = dQ(s, z);
    return (p * p + 0.5 * p * dq - q * dP(s, z)) / q - 2.0 * p * s1 + q * (s1 * s1 - s2) + 0.5 * dq * s1;
}

/// Monic polynomial coefficients (ascending) from its zeros.
inline std::vector<cplx> from_roots(std::span<const cplx> roots)
{
    std::vector<cplx> c{1.0};
    for (const cplx &r : roots) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= r * c[i];
        }
        c = std::move(next);
    }
    return c;
}

/// Image of z^j under -Q d^2 + (2P - Q'/2) d - 2 A2 N z, by direct
/// polynomial arithmetic on coefficient vectors.
inline std::vector<cplx> gauged_image(const qesqnm::ModelSpec &s, int j)
{
    const int N = s.level_count;
    std::vector<cplx> out(j + 3, 0.0);
    const double dj = j;
    const cplx q[3] = {s.q.gamma, s.q.beta, s.q.alpha};
    const cplx p[3] = {s.p.A0, s.p.A1, s.p.A2};
    const cplx dq[2] = {s.q.beta, 2.0 * s.q.alpha};
    if (j >= 2) {
        for (int i = 0; i < 3; ++i) {
            out[j - 2 + i] -= q[i] * dj * (dj - 1.0);
        }
    }
    if (j >= 1) {
        for (int i = 0; i < 3; ++i) {
            out[j - 1 + i] += 2.0 * p[i] * dj;
        }
        for (int i = 0; i < 2; ++i) {
            out[j - 1 + i] -= 0.5 * dq[i] * dj;
        }
    }
    out[j + 1] -= 2.0 * s.p.A2 * static_cast<double>(N);
    return out;
}

/// Exact Lambda_n = 2 A1 n - alpha n^2 for A2 = 0 (quadratic Q).
inline cplx ladder_lambda(const qesqnm::ModelSpec &s, int n)
{
    return 2.0 * s.p.A1 * static_cast<double>(n) - s.q.alpha * static_cast<double>(n * n);
}

} // namespace oracle

#endif

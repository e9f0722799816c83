#ifndef QESQNM_POLYROOTS_HPP
#define QESQNM_POLYROOTS_HPP

#include <complex>
#include <span>
#include <vector>

namespace qesqnm {

/// Zeros of c[0] + c[1] z + ... + c[d] z^d (c[d] != 0).
///
/// Starting values are the eigenvalues of the companion matrix; they are then
/// polished together by Aberth-Ehrlich iterations in extended precision.
/// Exact zero low-order coefficients are factored out first and returned as
/// exact zero roots.
std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs);

/// One simultaneous Aberth-Ehrlich sweep until the largest correction is
/// below rel_tol * (1 + |z|) or max_iter is reached. Returns the number of
/// sweeps used.
int aberth_polish(std::span<const std::complex<long double>> coeffs,
                  std::vector<std::complex<long double>> &roots, long double rel_tol = 1e-18L,
                  int max_iter = 100);

} // namespace qesqnm

#endif

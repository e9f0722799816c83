#include "qesqnm/polyroots.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <stdexcept>

namespace qesqnm {

namespace {

using cld = std::complex<long double>;

/// p(z) and p'(z) by Horner, ascending coefficients.
std::pair<cld, cld> horner(std::span<const cld> c, cld z)
{
    cld p = c.back();
    cld dp = 0.0L;
    for (int k = static_cast<int>(c.size()) - 2; k >= 0; --k) {
        dp = dp * z + p;
        p = p * z + c[k];
    }
    return {p, dp};
}

} // namespace

int aberth_polish(std::span<const cld> coeffs, std::vector<cld> &roots, long double rel_tol,
                  int max_iter)
{
    const int n = static_cast<int>(roots.size());
    long double previous = std::numeric_limits<long double>::infinity();
    int stalls = 0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        long double worst = 0.0L;
        for (int k = 0; k < n; ++k) {
            const auto [p, dp] = horner(coeffs, roots[k]);
            if (p == cld(0.0L)) {
                continue;
            }
            cld sum = 0.0L;
            for (int j = 0; j < n; ++j) {
                if (j != k && roots[j] != roots[k]) {
                    sum += 1.0L / (roots[k] - roots[j]);
                }
            }
            const cld ratio = p / dp;
            const cld denom = 1.0L - ratio * sum;
            const cld step = denom == cld(0.0L) ? ratio : ratio / denom;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) {
                continue;
            }
            roots[k] -= step;
            worst = std::max(worst, std::abs(step) / (1.0L + std::abs(roots[k])));
        }
        if (worst <= rel_tol) {
            return iter;
        }
        stalls = worst >= previous ? stalls + 1 : 0;
        if (stalls >= 3) {
            return iter;
        }
        previous = worst;
    }
    return max_iter;
}

std::vector<std::complex<double>> polynomial_roots(std::span<const std::complex<double>> coeffs)
{
    if (coeffs.empty() || coeffs.back() == 0.0) {
        throw std::invalid_argument("polynomial_roots: leading coefficient must be nonzero");
    }
    std::size_t zeros = 0;
    while (zeros < coeffs.size() - 1 && coeffs[zeros] == 0.0) {
        ++zeros;
    }
    std::vector<std::complex<double>> out(zeros, 0.0);
    std::span<const std::complex<double>> rest = coeffs.subspan(zeros);
    const int d = static_cast<int>(rest.size()) - 1;
    if (d == 0) {
        return out;
    }
    if (d == 1) {
        out.push_back(-rest[0] / rest[1]);
        return out;
    }

    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (int i = 0; i < d; ++i) {
        companion(i, d - 1) = -rest[i] / rest[d];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("polynomial_roots: companion eigensolver failed");
    }

    std::vector<cld> c(rest.begin(), rest.end());
    std::vector<cld> roots(d);
    for (int i = 0; i < d; ++i) {
        roots[i] = solver.eigenvalues()(i);
    }
    aberth_polish(c, roots);
    for (const cld &r : roots) {
        out.emplace_back(static_cast<double>(r.real()), static_cast<double>(r.imag()));
    }
    return out;
}

} // namespace qesqnm

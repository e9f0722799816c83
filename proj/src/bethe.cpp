#include "qesqnm/bethe.hpp"

#include "qesqnm/coordinates.hpp"
#include "qesqnm/polyroots.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include <algorithm>
#include <cmath>
#include <limits>

namespace qesqnm {

namespace {

using cld = std::complex<long double>;
using MatrixXcld = Eigen::Matrix<cld, Eigen::Dynamic, Eigen::Dynamic>;
using VectorXcld = Eigen::Matrix<cld, Eigen::Dynamic, 1>;

bool complex_less(const cplx &a, const cplx &b)
{
    if (a.real() != b.real()) {
        return a.real() < b.real();
    }
    return a.imag() < b.imag();
}

double coefficient_scale(const ModelSpec &s)
{
    return std::max({std::abs(s.p.A2), std::abs(s.p.A1), std::abs(s.p.A0), std::abs(s.q.alpha),
                     std::abs(s.q.beta), std::abs(s.q.gamma)});
}

/// Newton refinement of (Lambda, v) with v[pivot] held at 1, in extended
/// precision. Returns false if the bordered Jacobian is singular.
bool refine_eigenpair(const ComplexMatrix &m, cplx &lambda, Eigen::VectorXcd &v, int pivot)
{
    const int n = static_cast<int>(m.rows());
    MatrixXcld mm = m.cast<cld>();
    VectorXcld x = v.cast<cld>();
    x /= x(pivot);
    cld lam = lambda;
    long double last = std::numeric_limits<long double>::infinity();
    for (int iter = 0; iter < 6; ++iter) {
        VectorXcld f = mm * x - lam * x;
        const long double norm = f.norm();
        if (norm >= last) {
            break;
        }
        last = norm;
        if (norm == 0.0L) {
            break;
        }
        // Unknowns: x without the pivot entry, then lambda.
        MatrixXcld jac(n, n);
        for (int col = 0, out = 0; col < n; ++col) {
            if (col == pivot) {
                continue;
            }
            jac.col(out) = mm.col(col);
            jac(col, out) -= lam;
            ++out;
        }
        jac.col(n - 1) = -x;
        Eigen::FullPivLU<MatrixXcld> lu(jac);
        if (!lu.isInvertible()) {
            return false;
        }
        VectorXcld step = lu.solve(-f);
        for (int col = 0, out = 0; col < n; ++col) {
            if (col == pivot) {
                continue;
            }
            x(col) += step(out++);
        }
        lam += step(n - 1);
    }
    lambda = cplx(static_cast<double>(lam.real()), static_cast<double>(lam.imag()));
    v = x.unaryExpr([](const cld &c) {
        return cplx(static_cast<double>(c.real()), static_cast<double>(c.imag()));
    });
    return true;
}

/// Fills roots, residuals and flags from a coefficient vector (ascending).
RootSet finish_level(const ModelSpec &canonical, cplx lambda, std::vector<cplx> coeffs,
                     std::vector<std::string> flags)
{
    RootSet r;
    r.lambda = lambda;
    r.flags = std::move(flags);
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && coeffs[deg] == 0.0) {
        --deg;
    }
    coeffs.resize(deg + 1);
    const cplx lead = coeffs[deg];
    for (cplx &c : coeffs) {
        c /= lead;
    }
    coeffs[deg] = 1.0;
    r.coefficients = coeffs;
    if (deg < canonical.level_count) {
        r.flags.emplace_back("degree_deficient");
    }
    r.roots = polynomial_roots(coeffs);
    std::sort(r.roots.begin(), r.roots.end(), complex_less);
    r.zero_roots = static_cast<int>(std::count(r.roots.begin(), r.roots.end(), cplx(0.0)));
    if (r.zero_roots > 0) {
        r.flags.emplace_back("zero_roots");
    }

    double zmax = 0.0;
    for (const cplx &z : r.roots) {
        zmax = std::max(zmax, std::abs(z));
    }
    r.residual_scale = std::max(1.0, zmax * zmax * coefficient_scale(canonical));
    BaeResult bae = bae_residuals(canonical, r.roots);
    r.residuals = std::move(bae.residuals);
    for (const cplx &res : r.residuals) {
        r.residual_max = std::max(r.residual_max, std::abs(res));
    }
    if (bae.clustered) {
        r.flags.emplace_back("clustered");
    }
    return r;
}

std::vector<RootSet> upper_triangular_levels(const ModelSpec &canonical, const ComplexMatrix &m)
{
    const int n = static_cast<int>(m.rows());
    const double tiny = 1e-14 * std::max(1.0, m.cwiseAbs().maxCoeff());
    std::vector<RootSet> out;
    for (int j = 0; j < n; ++j) {
        const cplx lambda = m(j, j);
        std::vector<cplx> v(j + 1, 0.0);
        std::vector<std::string> flags;
        v[j] = 1.0;
        bool defective = false;
        for (int i = j - 1; i >= 0; --i) {
            cplx rhs = 0.0;
            for (int k = i + 1; k <= j; ++k) {
                rhs -= m(i, k) * v[k];
            }
            const cplx d = m(i, i) - lambda;
            if (std::abs(d) <= tiny) {
                flags.emplace_back("degenerate");
                if (std::abs(rhs) <= tiny) {
                    v[i] = 0.0;
                } else {
                    defective = true;
                    break;
                }
            } else {
                v[i] = rhs / d;
            }
        }
        if (defective) {
            RootSet r;
            r.lambda = lambda;
            r.flags = {"defective"};
            out.push_back(std::move(r));
            continue;
        }
        out.push_back(finish_level(canonical, lambda, std::move(v), std::move(flags)));
    }
    return out;
}

std::vector<RootSet> lower_triangular_levels(const ModelSpec &canonical, const ComplexMatrix &m)
{
    const int n = static_cast<int>(m.rows());
    const double tiny = 1e-14 * std::max(1.0, m.cwiseAbs().maxCoeff());
    std::vector<RootSet> out;
    for (int j = 0; j < n; ++j) {
        const cplx lambda = m(j, j);
        std::vector<cplx> v(n, 0.0);
        std::vector<std::string> flags;
        v[j] = 1.0;
        bool defective = false;
        for (int i = j + 1; i < n; ++i) {
            cplx rhs = 0.0;
            for (int k = j; k < i; ++k) {
                rhs -= m(i, k) * v[k];
            }
            const cplx d = m(i, i) - lambda;
            if (std::abs(d) <= tiny) {
                flags.emplace_back("degenerate");
                if (std::abs(rhs) <= tiny) {
                    v[i] = 0.0;
                } else {
                    defective = true;
                    break;
                }
            } else {
                v[i] = rhs / d;
            }
        }
        if (defective) {
            RootSet r;
            r.lambda = lambda;
            r.flags = {"defective"};
            out.push_back(std::move(r));
            continue;
        }
        out.push_back(finish_level(canonical, lambda, std::move(v), std::move(flags)));
    }
    return out;
}

std::vector<RootSet> dense_levels(const ModelSpec &canonical, const ComplexMatrix &m)
{
    const int n = static_cast<int>(m.rows());
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m, true);
    std::vector<RootSet> out;
    if (solver.info() != Eigen::Success) {
        RootSet r;
        r.flags = {"eigensolver_failed"};
        out.push_back(std::move(r));
        return out;
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    for (int e = 0; e < n; ++e) {
        cplx lambda = solver.eigenvalues()(e);
        Eigen::VectorXcd v = solver.eigenvectors().col(e);
        std::vector<std::string> flags;
        for (int o = 0; o < n; ++o) {
            if (o != e && std::abs(solver.eigenvalues()(o) - lambda) <= 1e-8 * scale) {
                flags.emplace_back("degenerate");
                break;
            }
        }
        int pivot = n - 1;
        if (std::abs(v(pivot)) < 1e-8 * v.norm()) {
            v.cwiseAbs().maxCoeff(&pivot);
        }
        if (!refine_eigenpair(m, lambda, v, pivot)) {
            flags.emplace_back("unrefined");
        }
        std::vector<cplx> coeffs(v.data(), v.data() + n);
        out.push_back(finish_level(canonical, lambda, std::move(coeffs), std::move(flags)));
    }
    return out;
}

} // namespace

bool RootSet::has_flag(std::string_view f) const
{
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

bool GaugedMatrix::lower_triangular() const
{
    for (int j = 1; j < entries.cols(); ++j) {
        for (int i = 0; i < j; ++i) {
            if (entries(i, j) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

bool GaugedMatrix::upper_triangular() const
{
    for (int j = 0; j < entries.cols(); ++j) {
        for (int i = j + 1; i < entries.rows(); ++i) {
            if (entries(i, j) != 0.0) {
                return false;
            }
        }
    }
    return true;
}

GaugedMatrix algebraize(const ModelSpec &spec)
{
    if (classify_solvability(spec.p, spec.q).kind == Solvability::HigherType) {
        throw UnsupportedModel("higher-type models (max{m, n-1} >= 3) are not generated");
    }
    if (spec.level_count < 0) {
        throw ModelError("level count N must be non-negative");
    }
    const CanonicalModel cm = canonicalize(spec);
    const PolyP &p = cm.spec.p;
    const PolyQ &q = cm.spec.q;
    const int N = spec.level_count;
    GaugedMatrix g;
    g.N = N;
    g.entries = ComplexMatrix::Zero(N + 1, N + 1);
    for (int j = 0; j <= N; ++j) {
        const double dj = j;
        if (j + 1 <= N) {
            g.entries(j + 1, j) = 2.0 * p.A2 * (dj - N);
        }
        g.entries(j, j) = dj * (2.0 * p.A1 - q.alpha * dj);
        if (j >= 1) {
            g.entries(j - 1, j) = dj * (2.0 * p.A0 - q.beta * (dj - 0.5));
        }
        if (j >= 2) {
            g.entries(j - 2, j) = -q.gamma * dj * (dj - 1.0);
        }
    }
    return g;
}

std::vector<RootSet> qes_levels(const ModelSpec &spec)
{
    const GaugedMatrix g = algebraize(spec);
    const CanonicalModel cm = canonicalize(spec);
    if (g.N == 0) {
        RootSet r;
        r.lambda = g.entries(0, 0);
        r.coefficients = {1.0};
        return {r};
    }
    std::vector<RootSet> levels;
    if (g.upper_triangular()) {
        levels = upper_triangular_levels(cm.spec, g.entries);
    } else if (g.lower_triangular()) {
        levels = lower_triangular_levels(cm.spec, g.entries);
    } else {
        levels = dense_levels(cm.spec, g.entries);
    }
    std::stable_sort(levels.begin(), levels.end(), [](const RootSet &a, const RootSet &b) {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        return complex_less(a.lambda, b.lambda);
    });
    return levels;
}

BaeResult bae_residuals(const ModelSpec &spec, std::span<const cplx> roots)
{
    const CanonicalModel cm = canonicalize(spec);
    const PolyP &p = cm.spec.p;
    const PolyQ &q = cm.spec.q;
    const int n = static_cast<int>(roots.size());
    double zmax = 0.0;
    for (const cplx &z : roots) {
        zmax = std::max(zmax, std::abs(z));
    }
    const double cluster = 1e-10 * std::max(1.0, zmax);

    BaeResult out;
    out.residuals.resize(n);
    for (int k = 0; k < n; ++k) {
        const cplx z = roots[k];
        cplx r = p.A2 * z * z + (p.A1 - 0.5 * q.alpha) * z + p.A0 - 0.25 * q.beta;
        const cplx qz = q(z);
        for (int l = 0; l < n; ++l) {
            if (l == k) {
                continue;
            }
            const cplx diff = z - roots[l];
            if (diff == 0.0 && qz == 0.0 && q.derivative(z) == 0.0) {
                continue; // double zero of Q: the pair term tends to 0
            }
            if (std::abs(diff) < cluster) {
                out.clustered = true;
                if (diff == 0.0) {
                    continue;
                }
            }
            r -= qz / diff;
        }
        out.residuals[k] = r;
    }
    return out;
}

ConjugationClosure conjugation_closure(std::span<const cplx> roots, double tol)
{
    const int n = static_cast<int>(roots.size());
    ConjugationClosure out;
    out.partner.assign(n, -1);
    out.closed = true;
    for (int k = 0; k < n; ++k) {
        if (out.partner[k] >= 0) {
            continue;
        }
        const cplx target = -std::conj(roots[k]);
        const double limit = tol * std::max(1.0, std::abs(roots[k]));
        int best = -1;
        double best_dist = limit;
        for (int l = 0; l < n; ++l) {
            if (out.partner[l] >= 0) {
                continue;
            }
            const double dist = std::abs(roots[l] - target);
            if (dist <= best_dist) {
                best = l;
                best_dist = dist;
            }
        }
        if (best < 0) {
            out.closed = false;
            continue;
        }
        out.partner[k] = best;
        out.partner[best] = k;
    }
    return out;
}

} // namespace qesqnm

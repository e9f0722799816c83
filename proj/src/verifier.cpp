#include "qesqnm/verifier.hpp"

#include "qesqnm/coordinates.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qesqnm {

namespace {

constexpr int kScanSamples = 4001;
constexpr double kLocalizedDrop = 20.0;
constexpr int kMaxOraclePoints = 64001;

double truncation_threshold(cplx energy) { return 1e3 * std::abs(energy) + 1e3; }

/// Scan interval before truncation: 12 length units on unbounded sides,
/// 0.05 length units off finite ends.
std::pair<double, double> scan_interval(const CanonicalCoordinate &c)
{
    const double ell = c.length_scale();
    const double lo = c.domain.lo_finite() ? c.domain.lo + 0.05 * ell : -12.0 * ell;
    const double hi = c.domain.hi_finite() ? c.domain.hi - 0.05 * ell : 12.0 * ell;
    return {lo, hi};
}

/// Contiguous run around argmin |V - E| where |V - E| stays below threshold.
std::pair<double, double> truncated_run(const PotentialShape &shape, cplx energy, double lo, double hi)
{
    const double thr = truncation_threshold(energy);
    std::vector<double> gap(kScanSamples);
    std::vector<double> xs(kScanSamples);
    int best = -1;
    for (int i = 0; i < kScanSamples; ++i) {
        xs[i] = lo + (hi - lo) * i / (kScanSamples - 1);
        const cplx v = shape.shape_value(xs[i]);
        gap[i] = std::isfinite(v.real()) && std::isfinite(v.imag()) ? std::abs(v - energy)
                                                                      : std::numeric_limits<double>::infinity();
        if (gap[i] < thr && (best < 0 || gap[i] < gap[best])) {
            best = i;
        }
    }
    if (best < 0) {
        throw ModelError("no grid point with |V - E| below the truncation threshold");
    }
    int a = best;
    int b = best;
    while (a > 0 && gap[a - 1] < thr) {
        --a;
    }
    while (b < kScanSamples - 1 && gap[b + 1] < thr) {
        ++b;
    }
    if (b - a < 8) {
        throw ModelError("truncated domain is too narrow for a grid");
    }
    return {xs[a], xs[b]};
}

std::vector<cplx> log_phi_on(const Eigenfunction &f, const Grid &g)
{
    std::vector<cplx> out(g.points);
    for (int i = 0; i < g.points; ++i) {
        out[i] = f.log_value(g.x(i));
    }
    return out;
}

bool all_finite(const std::vector<cplx> &v)
{
    return std::all_of(v.begin(), v.end(), [](const cplx &c) {
        return !std::isnan(c.real()) && c.real() != std::numeric_limits<double>::infinity() &&
               (std::isfinite(c.imag()) || c.real() == -std::numeric_limits<double>::infinity());
    });
}

bool is_regular_linear(const ModelSpec &spec, const PotentialShape &shape)
{
    return shape.model.coordinate.form == CoordinateForm::Linear && shape.terms.size() == 4 &&
           shape.terms[3].coefficient == 0.0 && spec.level_count >= 0;
}

/// k lowest eigenvalues of the Dirichlet 3-point matrix by LAPACK bisection.
std::vector<double> tridiagonal_eigenvalues(const PotentialShape &shape, double x_lo, double h, int points,
                                            int k)
{
    const int n = points - 2;
    std::vector<double> diag(n);
    std::vector<double> off(std::max(n - 1, 0), -1.0 / (h * h));
    for (int i = 0; i < n; ++i) {
        const cplx v = shape.shape_value(x_lo + (i + 1) * h);
        if (std::abs(v.imag()) > 1e-9 * (1.0 + std::abs(v.real()))) {
            throw ModelError("finite-difference oracle needs a real potential");
        }
        diag[i] = 2.0 / (h * h) + v.real();
    }
    k = std::min(k, n);
    lapack_int found = 0;
    lapack_int nsplit = 0;
    std::vector<double> w(n);
    std::vector<lapack_int> iblock(n);
    std::vector<lapack_int> isplit(n);
    const lapack_int info =
        LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, k, 2.0 * LAPACKE_dlamch('S'), diag.data(), off.data(),
                       &found, &nsplit, w.data(), iblock.data(), isplit.data());
    if (info != 0) {
        throw ModelError("tridiagonal bisection failed (info " + std::to_string(info) + ")");
    }
    w.resize(found);
    return w;
}

cplx sum_of(std::span<const cplx> v)
{
    cplx s = 0.0;
    for (const cplx &c : v) {
        s += c;
    }
    return s;
}

std::string fmt(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

Check make_check(std::string name, double value, double tol, bool passed, std::string detail = {})
{
    return {std::move(name), passed, value, tol, std::move(detail)};
}

bool real_prepotential(const CanonicalModel &m)
{
    const PolyP &p = m.spec.p;
    const auto real = [](cplx c) { return std::abs(c.imag()) <= 1e-12 * (1.0 + std::abs(c.real())); };
    return real(p.A2) && real(p.A1) && real(p.A0);
}

/// Log-modulus drop of phi from its maximum to the grid ends on unbounded
/// sides (0 when a side is closed by a domain end).
std::pair<double, double> tail_drops(const Eigenfunction &f, const Grid &g, const Domain &d)
{
    constexpr int kProbe = 2001;
    const double a = std::max(g.x_lo, d.lo);
    const double b = std::min(g.x_hi, d.hi);
    double peak = -std::numeric_limits<double>::infinity();
    std::vector<double> re(kProbe);
    for (int i = 0; i < kProbe; ++i) {
        re[i] = f.log_value(a + (b - a) * (i + 1.0) / (kProbe + 1.0)).real();
        if (std::isnan(re[i])) {
            return {0.0, 0.0};
        }
        peak = std::max(peak, re[i]);
    }
    const double closed = -kLocalizedDrop - 1.0;
    const double lo = d.lo_finite() && g.x_lo <= d.lo ? closed : re.front() - peak;
    const double hi = d.hi_finite() && g.x_hi >= d.hi ? closed : re.back() - peak;
    return {lo, hi};
}

/// Widens unbounded sides at fixed spacing until phi has dropped by
/// kLocalizedDrop nats at both ends. Returns false if the point cap is hit.
bool localize(const Eigenfunction &f, Grid &g, const Domain &d, bool symmetric)
{
    const double h = g.spacing();
    for (int iter = 0; iter < 16; ++iter) {
        auto [lo, hi] = tail_drops(f, g, d);
        if (symmetric) {
            lo = hi;
        }
        if (lo < -kLocalizedDrop && hi < -kLocalizedDrop) {
            return true;
        }
        const double grow = 0.5 * (g.x_hi - g.x_lo);
        if (hi >= -kLocalizedDrop || symmetric) {
            g.x_hi = d.hi_finite() ? std::min(d.hi, g.x_hi + grow) : g.x_hi + grow;
        }
        if (symmetric) {
            g.x_lo = -g.x_hi;
        } else if (lo >= -kLocalizedDrop) {
            g.x_lo = d.lo_finite() ? std::max(d.lo, g.x_lo - grow) : g.x_lo - grow;
        }
        g.points = static_cast<int>(std::lround((g.x_hi - g.x_lo) / h)) + 1;
        if (g.points > kMaxOraclePoints) {
            return false;
        }
    }
    return false;
}

bool singular_scarf_shape(const CanonicalModel &m)
{
    if (m.coordinate.form != CoordinateForm::Sinh) {
        return false;
    }
    const PolyP &p = m.spec.p;
    const double a = m.coordinate.alpha;
    const double N = m.spec.level_count;
    const double tol = 1e-12 * (1.0 + std::abs(p.A2));
    return p.A2 != 0.0 && std::abs(p.A2.real()) <= tol && std::abs(p.A0 - p.A2) <= tol &&
           std::abs(2.0 * p.A1 / a - 2.0 * N - 1.0) <= 1e-12 * (1.0 + N);
}

} // namespace

Grid Grid::refined() const
{
    Grid g = *this;
    g.points = 2 * points - 1;
    return g;
}

Grid default_grid(const ModelSpec &spec, cplx energy, int points)
{
    if (points < 64) {
        throw ModelError("grid needs at least 64 points");
    }
    const PotentialShape shape = potential_shape(spec);
    const auto [lo, hi] = scan_interval(shape.model.coordinate);
    const auto [a, b] = truncated_run(shape, energy, lo, hi);
    Grid g;
    g.x_lo = a;
    g.x_hi = b;
    g.points = points;
    return g;
}

Grid oracle_grid(const ModelSpec &spec, cplx reference_energy, int points)
{
    Grid g = default_grid(spec, reference_energy, points);
    const PotentialShape shape = potential_shape(spec);
    if (is_regular_linear(spec, shape)) {
        g.x_lo = -g.x_hi;
    }
    // Dirichlet walls sit on finite domain ends.
    const Domain &d = shape.model.coordinate.domain;
    if (d.lo_finite() && g.x_lo >= d.lo) {
        g.x_lo = d.lo;
    }
    if (d.hi_finite()) {
        g.x_hi = d.hi;
    }
    return g;
}

ResidualNorm residual_norm(const ModelSpec &spec, const RootSet &level, const Grid &grid,
                           std::optional<cplx> energy)
{
    if (grid.points < 64) {
        throw ModelError("grid needs at least 64 points");
    }
    const PotentialShape shape = potential_shape(spec);
    const cplx E = energy.value_or(level.lambda - shape.offset);
    const Eigenfunction f(spec, level.roots);

    Grid g = grid;
    std::vector<cplx> lp = log_phi_on(f, g);
    while (!all_finite(lp) && g.standoff_widenings < 20) {
        const double shrink = 0.05 * (g.x_hi - g.x_lo);
        g.x_lo += shrink;
        g.x_hi -= shrink;
        ++g.standoff_widenings;
        lp = log_phi_on(f, g);
    }
    if (!all_finite(lp)) {
        throw ModelError("eigenfunction is not finite on the grid");
    }
    double top = -std::numeric_limits<double>::infinity();
    for (const cplx &l : lp) {
        top = std::max(top, l.real());
    }
    std::vector<cplx> phi(g.points);
    for (int i = 0; i < g.points; ++i) {
        phi[i] = std::isinf(lp[i].real()) ? cplx(0.0) : std::exp(lp[i] - top);
    }

    const double h = g.spacing();
    double r2 = 0.0;
    double p2 = 0.0;
    double rmax = 0.0;
    double pmax = 0.0;
    for (int i = 1; i + 1 < g.points; ++i) {
        const cplx d2 = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h);
        const cplx r = -d2 + (shape.shape_value(g.x(i)) - E) * phi[i];
        r2 += std::norm(r);
        p2 += std::norm(phi[i]);
        rmax = std::max(rmax, std::abs(r));
        pmax = std::max(pmax, std::abs(phi[i]));
    }
    ResidualNorm out;
    out.l2 = std::sqrt(r2 / p2);
    out.max = rmax / pmax;
    out.standoff_widenings = g.standoff_widenings;
    return out;
}

ConvergenceEstimate convergence_order(const ModelSpec &spec, const RootSet &level, const Grid &grid)
{
    ConvergenceEstimate out;
    out.coarse = residual_norm(spec, level, grid);
    out.fine = residual_norm(spec, level, grid.refined());
    out.order = std::log2(out.coarse.l2 / out.fine.l2);
    out.monotone = out.fine.l2 < out.coarse.l2;
    return out;
}

OracleResult fd_oracle(const ModelSpec &spec, const Grid &grid, int k, double truncation_tol)
{
    if (grid.points < 64) {
        throw ModelError("grid needs at least 64 points");
    }
    const PotentialShape shape = potential_shape(spec);
    OracleResult out;
    out.grid = grid;
    const double h = grid.spacing();
    const std::vector<double> ev = tridiagonal_eigenvalues(shape, grid.x_lo, h, grid.points, k);
    out.eigenvalues = ev;

    // Widen by 25% at the same spacing, staying inside the domain.
    const CanonicalCoordinate &c = shape.model.coordinate;
    const double pad = 0.125 * (grid.x_hi - grid.x_lo);
    double lo = grid.x_lo - pad;
    double hi = grid.x_hi + pad;
    if (c.domain.lo_finite() && grid.x_lo >= c.domain.lo) {
        lo = std::max(lo, c.domain.lo);
    }
    if (c.domain.hi_finite()) {
        hi = std::min(hi, c.domain.hi);
    }
    const int below = static_cast<int>(std::floor((grid.x_lo - lo) / h));
    const int above = static_cast<int>(std::floor((hi - grid.x_hi) / h));
    const std::vector<double> wide =
        tridiagonal_eigenvalues(shape, grid.x_lo - below * h, h, grid.points + below + above, k);
    out.widened_eigenvalues = wide;
    for (std::size_t i = 0; i < std::min(ev.size(), wide.size()); ++i) {
        const double shift = std::abs(ev[i] - wide[i]) / std::max(1.0, std::abs(ev[i]));
        out.shifts.push_back(shift);
        out.max_truncation_shift = std::max(out.max_truncation_shift, shift);
    }
    out.truncation_ok = out.max_truncation_shift <= truncation_tol;
    return out;
}

SummationReport summation_identities(std::span<const cplx> roots)
{
    SummationReport out;
    const int n = static_cast<int>(roots.size());
    double zmax = 0.0;
    for (const cplx &z : roots) {
        zmax = std::max(zmax, std::abs(z));
    }
    const double cluster = 1e-10 * std::max(1.0, zmax);
    cplx total = 0.0;
    for (int k = 0; k < n; ++k) {
        cplx left = 0.0;
        cplx right = 0.0;
        for (int l = 0; l < n; ++l) {
            if (l == k) {
                continue;
            }
            if (std::abs(roots[k] - roots[l]) < cluster) {
                out.clustered = true;
                if (roots[k] == roots[l]) {
                    continue;
                }
            }
            left += roots[l] / (roots[l] - roots[k]);
            right += roots[k] / (roots[k] - roots[l]);
        }
        out.pairwise_deviation =
            std::max(out.pairwise_deviation, std::abs(left - (static_cast<double>(n - 1) - right)));
        total += right;
    }
    out.double_sum_deviation = std::abs(total - 0.5 * n * (n - 1));
    return out;
}

bool is_mirror_morse(const ModelSpec &spec)
{
    CanonicalModel m;
    try {
        m = canonicalize(spec);
    } catch (const std::exception &) {
        return false;
    }
    if (m.coordinate.form != CoordinateForm::Exp || !m.map.is_identity()) {
        return false;
    }
    const PolyP &p = m.spec.p;
    const double a = m.coordinate.alpha;
    const double N = spec.level_count;
    const double tol = 1e-12 * (1.0 + std::abs(p.A2));
    const cplx k = p.A1 / a - N - 0.5;
    return p.A0 == 0.0 && p.A2 != 0.0 && std::abs(p.A2.real()) <= tol &&
           std::abs(k.real()) <= 1e-12 * (1.0 + N);
}

ParityReport parity_equivalence(const ModelSpec &spec, double bae_tol, double energy_tol,
                                double ratio_tol)
{
    if (!is_mirror_morse(spec)) {
        throw ModelError("parity_equivalence needs A2 = -ic, A1/alpha = id/2 + N + 1/2, A0 = 0 on z = exp(sqrt(alpha) x)");
    }
    const CanonicalModel m = canonicalize(spec);
    const double alpha = m.coordinate.alpha;
    const double c = -m.spec.p.A2.imag();
    const double d = 2.0 * (m.spec.p.A1 / alpha).imag();
    const int N = spec.level_count;
    const cplx I(0.0, 1.0);

    ModelSpec mirror;
    mirror.q = m.spec.q;
    mirror.p.A2 = 0.0;
    mirror.p.A0 = I * c;
    mirror.p.A1 = -alpha * (I * d + 1.0) / 2.0;
    mirror.level_count = N;
    mirror.family = Family::Morse;
    const std::vector<RootSet> mirror_levels = qes_levels(mirror);
    const cplx mirror_offset = potential_shape(mirror).offset;
    const double coeff_scale =
        std::max({std::abs(mirror.p.A1), std::abs(mirror.p.A0), alpha});

    const PotentialShape shape = potential_shape(spec);
    ParityReport out;
    for (const RootSet &level : qes_levels(spec)) {
        ParityLevel pl;
        std::vector<cplx> w;
        for (const cplx &r : level.roots) {
            if (r != 0.0) {
                w.push_back(1.0 / r);
            }
        }
        const int n = static_cast<int>(w.size());
        pl.mirror_level = n;
        pl.energy = level.lambda - shape.offset;
        pl.mirror_energy = alpha * ((d * d - 1.0) / 4.0 - n * n - n - I * d * (n + 0.5));

        // Solver route on the mirror model: the level of degree n.
        cplx solver_mirror = pl.mirror_energy;
        for (const RootSet &ml : mirror_levels) {
            if (ml.degree() == n) {
                solver_mirror = ml.lambda - mirror_offset;
            }
        }
        pl.energy_diff = std::max(std::abs(pl.energy - pl.mirror_energy),
                                  std::abs(pl.energy - solver_mirror)) /
                         std::max(1.0, std::abs(pl.mirror_energy));

        double wmax = 0.0;
        for (const cplx &z : w) {
            wmax = std::max(wmax, std::abs(z));
        }
        const double scale = std::max(1.0, wmax * wmax * coeff_scale);
        for (const cplx &res : bae_residuals(mirror, w).residuals) {
            pl.mirror_bae_max = std::max(pl.mirror_bae_max, std::abs(res) / scale);
        }

        // psi2(-x) / psi1(x) on a symmetric sample set.
        const Eigenfunction psi2(spec, level.roots);
        const Eigenfunction psi1(mirror, w);
        const double ell = m.coordinate.length_scale();
        const cplx ref = psi2.log_value(0.0) - psi1.log_value(0.0);
        for (int i = 0; i <= 100; ++i) {
            const double x = -3.0 * ell + 6.0 * ell * i / 100.0;
            const cplx lr = psi2.log_value(-x) - psi1.log_value(x) - ref;
            pl.ratio_deviation = std::max(pl.ratio_deviation, std::abs(std::exp(lr) - 1.0));
        }

        out.max_energy_diff = std::max(out.max_energy_diff, pl.energy_diff);
        out.max_mirror_bae = std::max(out.max_mirror_bae, pl.mirror_bae_max);
        out.max_ratio_deviation = std::max(out.max_ratio_deviation, pl.ratio_deviation);
        out.levels.push_back(pl);
    }
    out.bae_ok = out.max_mirror_bae <= bae_tol;
    out.energy_ok = out.max_energy_diff <= energy_tol;
    out.eigenfunction_ok = out.max_ratio_deviation <= ratio_tol;
    return out;
}

bool VerificationReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

VerificationReport verify_model(const ModelSpec &spec, const VerifyOptions &options)
{
    VerificationReport report;
    const ValidationReport valid = validate_model(spec);
    {
        std::string detail;
        for (const Diagnostic &d : valid.violations) {
            detail += (detail.empty() ? "" : "; ") + d.check + ": " + d.message;
        }
        report.checks.push_back(make_check("validate", valid.max_imag_leak, 1e-9, valid.valid, detail));
    }

    const Spectrum sp = solve_spectrum(spec);
    const PolyP &p = sp.model.spec.p;
    const double alpha = sp.model.spec.q.alpha.real();
    const bool exact = p.A2 == 0.0;
    std::vector<LadderEntry> ladder;
    if (exact) {
        ladder = exact_spectrum(spec, spec.level_count);
    }
    const bool singular = singular_scarf_shape(sp.model);

    cplx e_ref = 0.0;
    for (const SpectralLevel &lv : sp.levels) {
        if (std::abs(lv.E) > std::abs(e_ref)) {
            e_ref = lv.E;
        }
    }

    for (const SpectralLevel &lv : sp.levels) {
        const RootSet &rs = lv.rootset;
        const std::string tag = "[" + std::to_string(lv.n) + "]";
        if (rs.has_flag("defective")) {
            report.checks.push_back(make_check("level" + tag, 0.0, 0.0, false, "defective eigenvalue"));
            continue;
        }

        const double bae = rs.residual_max / rs.residual_scale;
        report.checks.push_back(make_check("bae" + tag, bae, options.tol, bae <= options.tol));

        const double deg = rs.degree();
        const cplx expected = 2.0 * p.A1 * deg - alpha * deg * deg + 2.0 * p.A2 * sum_of(rs.roots);
        const double lam_dev = std::abs(rs.lambda - expected) / std::max(1.0, std::abs(rs.lambda));
        report.checks.push_back(make_check("lambda-consistency" + tag, lam_dev, 1e-9, lam_dev <= 1e-9));

        std::vector<cplx> nonzero;
        for (const cplx &z : rs.roots) {
            if (z != 0.0) {
                nonzero.push_back(z);
            }
        }
        if (nonzero.size() >= 2) {
            const SummationReport s = summation_identities(nonzero);
            const double dev = std::max(s.pairwise_deviation, s.double_sum_deviation);
            report.checks.push_back(make_check("summation" + tag, dev, 1e-10, s.clustered || dev <= 1e-10,
                                               s.clustered ? "clustered roots" : ""));
        }

        Grid grid = default_grid(spec, lv.E, options.grid_points);
        if (options.x_lo) {
            grid.x_lo = *options.x_lo;
        }
        if (options.x_hi) {
            grid.x_hi = *options.x_hi;
        }
        const ConvergenceEstimate conv = convergence_order(spec, rs, grid);
        const bool order_ok = conv.order >= 1.7 && conv.order <= 2.3;
        report.checks.push_back(make_check("residual-order" + tag, conv.order, 0.3, order_ok,
                                           "l2 " + fmt(conv.coarse.l2) + " -> " + fmt(conv.fine.l2)));

        if (exact && rs.degree() < static_cast<int>(ladder.size())) {
            const cplx e_ladder = ladder[rs.degree()].E;
            const double dev = std::abs(lv.E - e_ladder) / std::max(1.0, std::abs(e_ladder));
            report.checks.push_back(make_check("ladder" + tag, dev, 1e-10, dev <= 1e-10));
        }

        if (singular) {
            const double re_sum = std::abs(sum_of(rs.roots).real());
            report.checks.push_back(make_check("root-sum-imaginary" + tag, re_sum, 1e-10, re_sum < 1e-10));
            const double im_e = std::abs(lv.E.imag());
            report.checks.push_back(make_check("real-energy" + tag, im_e, 1e-9, im_e < 1e-9));
            const bool closed = conjugation_closure(rs.roots).closed;
            report.checks.push_back(make_check("conjugation-closure" + tag, closed ? 0.0 : 1.0, 0.0, closed));
        }

        if (lv.mode == ModeClass::BoundState && valid.max_imag_leak <= 1e-9 && !singular &&
            real_prepotential(sp.model)) {
            Grid og = oracle_grid(spec, e_ref, 2 * options.grid_points - 1);
            const bool symmetric = is_regular_linear(spec, sp.shape);
            // A Dirichlet wall resolves phi ~ d^p at second order only for p >= 1.
            const auto walled = [](const EndpointBehavior &b) { return b.finite && b.rate < 1.0 - 1e-9; };
            if ((walled(lv.endpoints.lower) && !symmetric) || walled(lv.endpoints.upper)) {
                report.checks.push_back(make_check("oracle" + tag, 0.0, 1e-3, true,
                                                   "skipped: endpoint exponent below 1, not resolved "
                                                   "by a Dirichlet wall"));
                continue;
            }
            if (!localize(eigenfunction(spec, rs), og, sp.model.coordinate.domain, symmetric)) {
                report.checks.push_back(make_check("oracle" + tag, 0.0, 1e-3, true,
                                                   "skipped: level not localized within " +
                                                       std::to_string(kMaxOraclePoints) + " points"));
                continue;
            }
            const int k = 2 * spec.level_count + 4;
            const OracleResult orc = fd_oracle(spec, og, k);
            double best = std::numeric_limits<double>::infinity();
            double shift = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < orc.eigenvalues.size(); ++i) {
                const double dev =
                    std::abs(orc.eigenvalues[i] - lv.E.real()) / std::max(1.0, std::abs(lv.E.real()));
                if (dev < best) {
                    best = dev;
                    shift = i < orc.shifts.size() ? orc.shifts[i] : shift;
                }
            }
            report.checks.push_back(make_check("oracle" + tag, best, 1e-3, best <= 1e-3 && shift <= 1e-6,
                                               "truncation shift " + fmt(shift)));
        }
    }

    if (is_mirror_morse(spec)) {
        const ParityReport pr = parity_equivalence(spec);
        report.checks.push_back(make_check("parity-bae", pr.max_mirror_bae, 1e-9, pr.bae_ok));
        report.checks.push_back(make_check("parity-energy", pr.max_energy_diff, 1e-10, pr.energy_ok));
        report.checks.push_back(
            make_check("parity-eigenfunction", pr.max_ratio_deviation, 1e-8, pr.eigenfunction_ok));
    }
    return report;
}

} // namespace qesqnm

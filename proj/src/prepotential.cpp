#include "qesqnm/prepotential.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <numbers>

namespace qesqnm {

namespace {

/// ln cosh(u) without overflow.
double log_cosh(double u)
{
    const double a = std::abs(u);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

/// ln sinh(u), u > 0.
double log_sinh(double u)
{
    if (u > 1.0) {
        return u + std::log1p(-std::exp(-2.0 * u)) - std::numbers::ln2;
    }
    return std::log(std::sinh(u));
}

/// ln tanh(u/2), u > 0.
double log_tanh_half(double u)
{
    const double e = std::exp(-u);
    return std::log1p(-e) - std::log1p(e);
}

} // namespace

Prepotential::Prepotential(const ModelSpec &spec)
    : model_(canonicalize(spec))
{
}

cplx Prepotential::w0(double x) const
{
    const CanonicalCoordinate &c = model_.coordinate;
    const PolyP &p = model_.spec.p;
    const double z = z_of_x(c, x);
    switch (c.form) {
    case CoordinateForm::Constant:
        return (p.A2 * (z * z * z / 3.0) + p.A1 * (0.5 * z * z) + p.A0 * z) / c.gamma;
    case CoordinateForm::Linear:
        return p.A2 * (c.beta * std::pow(x, 4) / 32.0) + p.A1 * (0.25 * x * x) +
               p.A0 * (2.0 / c.beta * std::log(x));
    case CoordinateForm::Sinh: {
        const double u = std::sqrt(c.alpha) * x;
        return (p.A2 * z + p.A1 * log_cosh(u) + (p.A0 - p.A2) * std::atan(z)) / c.alpha;
    }
    case CoordinateForm::Exp: {
        const double u = std::sqrt(c.alpha) * x;
        return (p.A2 * z + p.A1 * u - p.A0 * std::exp(-u)) / c.alpha;
    }
    case CoordinateForm::Cosh: {
        const double u = std::sqrt(c.alpha) * x;
        return (p.A2 * z + p.A1 * log_sinh(u) + (p.A0 + p.A2) * log_tanh_half(u)) / c.alpha;
    }
    case CoordinateForm::Sin: {
        const double u = std::sqrt(-c.alpha) * x;
        return (p.A2 * z + p.A1 * std::log(std::cos(u)) - (p.A0 + p.A2) * std::atanh(z)) / c.alpha;
    }
    }
    return 0.0;
}

cplx Prepotential::w0_prime(double x) const
{
    const CanonicalCoordinate &c = model_.coordinate;
    return model_.spec.p(z_of_x(c, x)) / dz_dx(c, x);
}

cplx Prepotential::phi0(double x) const { return std::exp(-w0(x)); }

cplx Prepotential::log_phi(double x, std::span<const cplx> roots) const
{
    cplx acc = -w0(x);
    if (!roots.empty()) {
        const double z = z_of_x(model_.coordinate, x);
        for (const cplx &r : roots) {
            acc += std::log(cplx(z) - r);
        }
    }
    return acc;
}

cplx w0_quadrature(const ModelSpec &spec, double x_ref, double x)
{
    const CanonicalModel m = canonicalize(spec);
    const double z0 = z_of_x(m.coordinate, x_ref);
    const double z1 = z_of_x(m.coordinate, x);
    if (z0 == z1) {
        return 0.0;
    }
    const PolyP &p = m.spec.p;
    const PolyQ &q = m.spec.q;
    using boost::math::quadrature::gauss_kronrod;
    auto integrand = [&](double z) { return p(z) / q(z); };
    const double re = gauss_kronrod<double, 61>::integrate(
        [&](double z) { return integrand(z).real(); }, z0, z1, 20, 1e-14);
    const double im = gauss_kronrod<double, 61>::integrate(
        [&](double z) { return integrand(z).imag(); }, z0, z1, 20, 1e-14);
    return {re, im};
}

std::string_view to_string(GrowthKind g)
{
    switch (g) {
    case GrowthKind::SuperExponential:
        return "super-exponential";
    case GrowthKind::Exponential:
        return "exponential";
    case GrowthKind::Power:
        return "power";
    case GrowthKind::Bounded:
        return "bounded";
    }
    return "bounded";
}

std::string_view to_string(EndpointVerdict v)
{
    switch (v) {
    case EndpointVerdict::Decaying:
        return "Decaying";
    case EndpointVerdict::Growing:
        return "Growing";
    case EndpointVerdict::PowerDivergent:
        return "PowerDivergent";
    case EndpointVerdict::Bounded:
        return "Bounded";
    }
    return "Bounded";
}

std::string_view to_string(Normalizability n)
{
    switch (n) {
    case Normalizability::Normalizable:
        return "Normalizable";
    case Normalizability::NonNormalizable:
        return "NonNormalizable";
    case Normalizability::QnmOutgoing:
        return "QnmOutgoing";
    }
    return "NonNormalizable";
}

namespace {

/// log|phi| ~ rate * (growth variable) at an infinite end.
EndpointBehavior infinite_end(bool upper, GrowthKind kind, double rate)
{
    EndpointBehavior b;
    b.upper = upper;
    b.finite = false;
    b.rate = rate;
    if (rate == 0.0) {
        b.kind = GrowthKind::Bounded;
        b.verdict = EndpointVerdict::Bounded;
    } else {
        b.kind = kind;
        b.verdict = rate < 0.0 ? EndpointVerdict::Decaying : EndpointVerdict::Growing;
    }
    b.admissible = b.verdict == EndpointVerdict::Decaying;
    return b;
}

/// |phi| ~ dist^exponent at a finite end.
EndpointBehavior finite_end(bool upper, double exponent, bool bounded_ok)
{
    EndpointBehavior b;
    b.upper = upper;
    b.finite = true;
    b.kind = exponent == 0.0 ? GrowthKind::Bounded : GrowthKind::Power;
    b.rate = exponent;
    if (exponent > 0.0) {
        b.verdict = EndpointVerdict::Decaying;
    } else if (exponent < 0.0) {
        b.verdict = EndpointVerdict::PowerDivergent;
    } else {
        b.verdict = EndpointVerdict::Bounded;
    }
    b.admissible = b.verdict == EndpointVerdict::Decaying ||
                   (bounded_ok && b.verdict == EndpointVerdict::Bounded);
    return b;
}

/// Leading term of a polynomial growth exponent c3 t^3 + c2 t^2 + c1 t
/// (t -> +infinity), falling back to a power rate.
EndpointBehavior polynomial_end(bool upper, double c3, double c2, double c1, double power)
{
    if (c3 != 0.0) {
        return infinite_end(upper, GrowthKind::SuperExponential, c3);
    }
    if (c2 != 0.0) {
        return infinite_end(upper, GrowthKind::SuperExponential, c2);
    }
    if (c1 != 0.0) {
        return infinite_end(upper, GrowthKind::Exponential, c1);
    }
    return infinite_end(upper, GrowthKind::Power, power);
}

bool trend_matches(const EndpointBehavior &b, double before, double last)
{
    const double delta = last - before;
    switch (b.verdict) {
    case EndpointVerdict::Decaying:
        return delta < 0.0;
    case EndpointVerdict::Growing:
    case EndpointVerdict::PowerDivergent:
        return delta > 0.0;
    case EndpointVerdict::Bounded:
        return std::abs(delta) < 0.5;
    }
    return true;
}

/// Samples log|phi| on a geometric approach to the endpoint and compares the
/// last step with the verdict.
bool sample_trend(const Prepotential &pre, const EndpointBehavior &b, std::span<const cplx> roots)
{
    const CanonicalCoordinate &c = pre.coordinate();
    const double ell = c.length_scale();
    std::vector<double> xs;
    if (b.finite) {
        const double end = b.upper ? c.domain.hi : c.domain.lo;
        for (int j = 2; j <= 7; ++j) {
            const double d = ell * std::pow(10.0, -j);
            xs.push_back(b.upper ? end - d : end + d);
        }
    } else {
        const double base = c.domain.lo_finite() ? c.domain.lo : 0.0;
        for (int j = 0; j <= 4; ++j) {
            const double d = ell * std::pow(2.0, j);
            xs.push_back(b.upper ? base + d : base - d);
        }
    }
    const double before = pre.log_phi(xs[xs.size() - 2], roots).real();
    const double last = pre.log_phi(xs.back(), roots).real();
    if (!std::isfinite(before) || !std::isfinite(last)) {
        return true;
    }
    return trend_matches(b, before, last);
}

/// Roots (canonical variable) sitting on w; each one vanishes like dist^2.
int roots_at(std::span<const cplx> roots, double w)
{
    int count = 0;
    for (const cplx &z : roots) {
        if (std::abs(z - w) <= 1e-8 * std::max(1.0, std::abs(w))) {
            ++count;
        }
    }
    return count;
}

} // namespace

EndpointReport endpoint_analysis(const ModelSpec &spec, int degree, int zero_roots,
                                 std::span<const cplx> roots)
{
    const Prepotential pre(spec);
    const CanonicalCoordinate &c = pre.coordinate();
    const PolyP &p = pre.model().spec.p;
    const double a2 = p.A2.real();
    const double a1 = p.A1.real();
    const double a0 = p.A0.real();
    const double k = degree;
    const double m = zero_roots;

    EndpointReport rep;
    switch (c.form) {
    case CoordinateForm::Sinh:
        if (a2 != 0.0) {
            rep.upper = infinite_end(true, GrowthKind::SuperExponential, -a2 / c.alpha);
            rep.lower = infinite_end(false, GrowthKind::SuperExponential, a2 / c.alpha);
        } else {
            rep.upper = infinite_end(true, GrowthKind::Exponential, k - a1 / c.alpha);
            rep.lower = infinite_end(false, GrowthKind::Exponential, k - a1 / c.alpha);
        }
        break;
    case CoordinateForm::Exp:
        rep.upper = a2 != 0.0 ? infinite_end(true, GrowthKind::SuperExponential, -a2 / c.alpha)
                              : infinite_end(true, GrowthKind::Exponential, k - a1 / c.alpha);
        rep.lower = a0 != 0.0 ? infinite_end(false, GrowthKind::SuperExponential, a0 / c.alpha)
                              : infinite_end(false, GrowthKind::Exponential, a1 / c.alpha - m);
        break;
    case CoordinateForm::Cosh:
        rep.upper = a2 != 0.0 ? infinite_end(true, GrowthKind::SuperExponential, -a2 / c.alpha)
                              : infinite_end(true, GrowthKind::Exponential, k - a1 / c.alpha);
        rep.lower = finite_end(false, -(a1 + a0 + a2) / c.alpha + 2.0 * roots_at(roots, 1.0),
                               false);
        break;
    case CoordinateForm::Sin:
        rep.upper = finite_end(true, (a1 + a0 + a2) / -c.alpha + 2.0 * roots_at(roots, 1.0), false);
        rep.lower = finite_end(false, (a1 - a0 - a2) / -c.alpha + 2.0 * roots_at(roots, -1.0),
                               false);
        break;
    case CoordinateForm::Constant: {
        const double sg = std::sqrt(c.gamma);
        const double c3 = -a2 * sg / 3.0;
        const double c2 = -a1 / 2.0;
        const double c1 = -a0 / sg;
        rep.upper = polynomial_end(true, c3, c2, c1, k);
        rep.lower = polynomial_end(false, -c3, c2, -c1, k);
        break;
    }
    case CoordinateForm::Linear: {
        const double c4 = -a2 * c.beta / 32.0;
        const double c2 = -a1 / 4.0;
        const double power = -2.0 * a0 / c.beta;
        rep.upper = polynomial_end(true, c4, c2, 0.0, power + 2.0 * k);
        rep.lower = finite_end(false, power + 2.0 * m, p.A0 == 0.0);
        break;
    }
    }

    const EndpointBehavior *ends[] = {&rep.lower, &rep.upper};
    bool super_growth = false;
    bool finite_bad = false;
    bool all_ok = true;
    for (const EndpointBehavior *e : ends) {
        super_growth |= e->kind == GrowthKind::SuperExponential && e->verdict == EndpointVerdict::Growing;
        finite_bad |= e->finite && !e->admissible;
        all_ok &= e->admissible;
    }
    if (super_growth || finite_bad) {
        rep.overall = Normalizability::NonNormalizable;
    } else if (all_ok) {
        rep.overall = Normalizability::Normalizable;
    } else {
        rep.overall = Normalizability::QnmOutgoing;
    }

    if (degree == 0 || static_cast<int>(roots.size()) == degree) {
        rep.lower.trend_consistent = sample_trend(pre, rep.lower, roots);
        rep.upper.trend_consistent = sample_trend(pre, rep.upper, roots);
        rep.trend_consistent = rep.lower.trend_consistent && rep.upper.trend_consistent;
    }
    return rep;
}

} // namespace qesqnm

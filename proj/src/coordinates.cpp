#include "qesqnm/coordinates.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace qesqnm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_in_domain(const CanonicalCoordinate &c, double x)
{
    if (!c.domain.contains(x)) {
        throw DomainError("x = " + std::to_string(x) + " is outside the open domain of the " +
                          std::string(to_string(c.form)) + " coordinate");
    }
}

CanonicalCoordinate make_quadratic(double alpha, int delta)
{
    CanonicalCoordinate c{};
    c.alpha = alpha;
    c.delta = delta;
    if (alpha < 0.0) {
        const double half = std::numbers::pi / (2.0 * std::sqrt(-alpha));
        c.form = CoordinateForm::Sin;
        c.domain = {-half, half};
    } else if (delta == 1) {
        c.form = CoordinateForm::Sinh;
        c.domain = {-kInf, kInf};
    } else if (delta == 0) {
        c.form = CoordinateForm::Exp;
        c.domain = {-kInf, kInf};
    } else {
        c.form = CoordinateForm::Cosh;
        c.domain = {0.0, kInf};
    }
    return c;
}

} // namespace

std::string_view to_string(CoordinateForm f)
{
    switch (f) {
    case CoordinateForm::Constant:
        return "constant";
    case CoordinateForm::Linear:
        return "linear";
    case CoordinateForm::Sinh:
        return "sinh";
    case CoordinateForm::Exp:
        return "exp";
    case CoordinateForm::Cosh:
        return "cosh";
    case CoordinateForm::Sin:
        return "sin";
    }
    return "constant";
}

bool Domain::lo_finite() const { return std::isfinite(lo); }
bool Domain::hi_finite() const { return std::isfinite(hi); }

double CanonicalCoordinate::length_scale() const
{
    switch (form) {
    case CoordinateForm::Constant:
    case CoordinateForm::Linear:
        return 1.0;
    default:
        return 1.0 / std::sqrt(std::abs(alpha));
    }
}

PolyQ CanonicalCoordinate::as_poly() const
{
    switch (form) {
    case CoordinateForm::Constant:
        return PolyQ{0.0, 0.0, gamma, {}};
    case CoordinateForm::Linear:
        return PolyQ{0.0, beta, 0.0, {}};
    default:
        return PolyQ{alpha, 0.0, alpha * delta, {}};
    }
}

CoordinateResolution canonical_coordinate(const PolyQ &q)
{
    for (const cplx &h : q.higher) {
        if (h != 0.0) {
            throw UnsupportedModel("Q of degree > 2 is not a sinusoidal coordinate");
        }
    }
    if (!q.is_real()) {
        throw ModelError("Q must have real coefficients");
    }
    const double a = q.alpha.real();
    const double b = q.beta.real();
    const double g = q.gamma.real();

    if (a == 0.0 && b == 0.0) {
        if (g == 0.0) {
            throw ModelError("Q is identically zero");
        }
        if (g < 0.0) {
            throw ModelError("z'^2 = gamma < 0 admits no real coordinate");
        }
        CanonicalCoordinate c{};
        c.form = CoordinateForm::Constant;
        c.gamma = g;
        c.domain = {-kInf, kInf};
        return {c, {}};
    }

    if (a == 0.0) {
        CanonicalCoordinate c{};
        c.form = CoordinateForm::Linear;
        c.beta = std::abs(b);
        c.domain = {0.0, kInf};
        AffineMap map;
        map.scale = b > 0.0 ? 1.0 : -1.0;
        map.shift = g == 0.0 ? 0.0 : -g / b;
        return {c, map};
    }

    AffineMap map;
    map.shift = b == 0.0 ? 0.0 : -b / (2.0 * a);
    const double g_shifted = b == 0.0 ? g : g - b * b / (4.0 * a);
    if (g_shifted == 0.0) {
        if (a < 0.0) {
            throw ModelError("z'^2 = alpha z^2 with alpha < 0 admits no real coordinate");
        }
        return {make_quadratic(a, 0), map};
    }
    const double ratio = g_shifted / a;
    const int delta = ratio > 0.0 ? 1 : -1;
    if (a < 0.0 && delta == 1) {
        throw ModelError("Q is negative everywhere (alpha < 0 with positive discriminant offset)");
    }
    map.scale = std::abs(ratio) == 1.0 ? 1.0 : std::sqrt(std::abs(ratio));
    return {make_quadratic(a, delta), map};
}

CanonicalModel canonicalize(const ModelSpec &spec)
{
    for (const cplx &h : spec.p.higher) {
        if (h != 0.0) {
            throw UnsupportedModel("P of degree > 2 is outside the generated scope");
        }
    }
    CoordinateResolution res = canonical_coordinate(spec.q);
    CanonicalModel out{spec, res.coordinate, res.map};
    out.spec.p.higher.clear();
    out.spec.q = res.coordinate.as_poly();
    if (!res.map.is_identity()) {
        const double s = res.map.scale;
        const double t = res.map.shift;
        const PolyP &p = spec.p;
        out.spec.p.A2 = p.A2 * s;
        out.spec.p.A1 = 2.0 * p.A2 * t + p.A1;
        out.spec.p.A0 = (p.A2 * t * t + p.A1 * t + p.A0) / s;
    }
    return out;
}

double z_of_x(const CanonicalCoordinate &c, double x)
{
    require_in_domain(c, x);
    switch (c.form) {
    case CoordinateForm::Constant:
        return std::sqrt(c.gamma) * x;
    case CoordinateForm::Linear:
        return 0.25 * c.beta * x * x;
    case CoordinateForm::Sinh:
        return std::sinh(std::sqrt(c.alpha) * x);
    case CoordinateForm::Exp:
        return std::exp(std::sqrt(c.alpha) * x);
    case CoordinateForm::Cosh:
        return std::cosh(std::sqrt(c.alpha) * x);
    case CoordinateForm::Sin:
        return std::sin(std::sqrt(-c.alpha) * x);
    }
    return 0.0;
}

double dz_dx(const CanonicalCoordinate &c, double x)
{
    require_in_domain(c, x);
    switch (c.form) {
    case CoordinateForm::Constant:
        return std::sqrt(c.gamma);
    case CoordinateForm::Linear:
        return 0.5 * c.beta * x;
    case CoordinateForm::Sinh:
        return std::sqrt(c.alpha) * std::cosh(std::sqrt(c.alpha) * x);
    case CoordinateForm::Exp:
        return std::sqrt(c.alpha) * std::exp(std::sqrt(c.alpha) * x);
    case CoordinateForm::Cosh:
        return std::sqrt(c.alpha) * std::sinh(std::sqrt(c.alpha) * x);
    case CoordinateForm::Sin:
        return std::sqrt(-c.alpha) * std::cos(std::sqrt(-c.alpha) * x);
    }
    return 0.0;
}

double x_of_z(const CanonicalCoordinate &c, double z)
{
    auto outside = [&]() {
        return DomainError("z = " + std::to_string(z) + " is outside the image of the " +
                           std::string(to_string(c.form)) + " coordinate");
    };
    switch (c.form) {
    case CoordinateForm::Constant:
        if (!std::isfinite(z)) {
            throw outside();
        }
        return z / std::sqrt(c.gamma);
    case CoordinateForm::Linear:
        if (!(z > 0.0) || !std::isfinite(z)) {
            throw outside();
        }
        return 2.0 * std::sqrt(z / c.beta);
    case CoordinateForm::Sinh:
        if (!std::isfinite(z)) {
            throw outside();
        }
        return std::asinh(z) / std::sqrt(c.alpha);
    case CoordinateForm::Exp:
        if (!(z > 0.0) || !std::isfinite(z)) {
            throw outside();
        }
        return std::log(z) / std::sqrt(c.alpha);
    case CoordinateForm::Cosh:
        if (!(z > 1.0) || !std::isfinite(z)) {
            throw outside();
        }
        return std::acosh(z) / std::sqrt(c.alpha);
    case CoordinateForm::Sin:
        if (!(std::abs(z) < 1.0)) {
            throw outside();
        }
        return std::asin(z) / std::sqrt(-c.alpha);
    }
    return 0.0;
}

} // namespace qesqnm

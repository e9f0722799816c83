#ifndef QESQNM_COORDINATES_HPP
#define QESQNM_COORDINATES_HPP

#include "qesqnm/model.hpp"

#include <string_view>

namespace qesqnm {

/// The sinusoidal coordinates z(x) with z'^2 = Q(z), n <= 2, up to an
/// affine change of z.
///
///   Constant  z'^2 = gamma           z = sqrt(gamma) x          full line
///   Linear    z'^2 = beta z          z = beta x^2 / 4           x > 0
///   Sinh      z'^2 = alpha (z^2+1)   z = sinh(sqrt(alpha) x)    full line
///   Exp       z'^2 = alpha z^2       z = exp(sqrt(alpha) x)     full line
///   Cosh      z'^2 = alpha (z^2-1)   z = cosh(sqrt(alpha) x)    x > 0
///   Sin       z'^2 = alpha (z^2-1)   z = sin(sqrt(-alpha) x)    |sqrt(-alpha) x| < pi/2
///             with alpha < 0
enum class CoordinateForm { Constant, Linear, Sinh, Exp, Cosh, Sin };

std::string_view to_string(CoordinateForm f);

/// Open interval of x; infinite ends use +-infinity.
struct Domain {
    double lo;
    double hi;

    bool contains(double x) const { return x > lo && x < hi; }
    bool lo_finite() const;
    bool hi_finite() const;
};

struct CanonicalCoordinate {
    CoordinateForm form;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    int delta = 0; ///< only meaningful for the quadratic forms
    Domain domain;

    /// Natural length unit: 1/sqrt|alpha| for the quadratic forms, 1 otherwise.
    double length_scale() const;
    PolyQ as_poly() const;
};

/// z_original = scale * z_canonical + shift.
struct AffineMap {
    double scale = 1.0;
    double shift = 0.0;

    bool is_identity() const { return scale == 1.0 && shift == 0.0; }
};

struct CoordinateResolution {
    CanonicalCoordinate coordinate;
    AffineMap map;
};

/// Reduce a real Q (n <= 2) to one of the canonical forms. Already canonical
/// inputs pass through with the identity map. Throws ModelError for Q == 0,
/// complex Q or sign configurations with no real coordinate, and
/// UnsupportedModel for n > 2.
CoordinateResolution canonical_coordinate(const PolyQ &q);

/// The spec rewritten in the canonical variable: P(s w + t)/s, Q(s w + t)/s^2.
struct CanonicalModel {
    ModelSpec spec;
    CanonicalCoordinate coordinate;
    AffineMap map;
};

CanonicalModel canonicalize(const ModelSpec &spec);

/// Throws DomainError for x outside the open domain.
double z_of_x(const CanonicalCoordinate &c, double x);
/// dz/dx (the + branch of z' = sqrt(Q)).
double dz_dx(const CanonicalCoordinate &c, double x);
/// Inverse map; throws DomainError for z outside the image of the domain.
double x_of_z(const CanonicalCoordinate &c, double z);

} // namespace qesqnm

#endif

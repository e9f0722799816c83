#include "oracles.hpp"

#include "qesqnm/catalog.hpp"
#include "qesqnm/coordinates.hpp"
#include "qesqnm/polyroots.hpp"
#include "qesqnm/prepotential.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace qesqnm;

namespace {

std::vector<double> probe_points(const CanonicalCoordinate &c)
{
    const double ell = c.length_scale();
    std::vector<double> xs;
    for (double t : {0.13, 0.31, 0.5, 0.72, 0.91}) {
        if (c.domain.lo_finite() && c.domain.hi_finite()) {
            xs.push_back(c.domain.lo + t * (c.domain.hi - c.domain.lo));
        } else if (c.domain.lo_finite()) {
            xs.push_back(c.domain.lo + 4.0 * ell * t);
        } else {
            xs.push_back(-3.0 * ell + 6.0 * ell * t);
        }
    }
    return xs;
}

PolyQ real_q(double a, double b, double g) { return {a, b, g, {}}; }

} // namespace

TEST_CASE("classification follows max{m, n-1}")
{
    PolyP p{0.0, 1.0, 1.0, {}};
    CHECK(classify_solvability(p, real_q(1, 0, 1)).kind == Solvability::ExactlySolvable);
    p.A2 = 1.0;
    const SolvabilityClass c = classify_solvability(p, real_q(1, 0, 1));
    CHECK(c.kind == Solvability::QesType1);
    CHECK(c.m == 2);
    CHECK(c.n == 2);
    p.higher = {0.5};
    CHECK(classify_solvability(p, real_q(1, 0, 1)).kind == Solvability::HigherType);
    PolyQ cubic = real_q(1, 0, 1);
    cubic.higher = {1.0};
    CHECK(classify_solvability(PolyP{0.0, 1.0, 0.0, {}}, cubic).kind == Solvability::QesType1);
}

TEST_CASE("family tags round-trip through strings")
{
    for (Family f : {Family::Scarf2, Family::Morse, Family::GenPoschlTeller, Family::ShiftedOsc,
                     Family::RadialOsc, Family::Scarf1, Family::Custom}) {
        CHECK(family_from_string(to_string(f)) == f);
    }
    CHECK_THROWS_AS(family_from_string("nonsense"), ModelError);
}

TEST_CASE("canonical coordinates satisfy z'^2 = Q and invert")
{
    const std::vector<PolyQ> qs{real_q(0, 0, 2.5), real_q(0, 3, 0),  real_q(1.5, 0, 1.5),
                                real_q(0.7, 0, 0), real_q(2, 0, -2), real_q(-1.3, 0, 1.3)};
    for (const PolyQ &q : qs) {
        const CoordinateResolution r = canonical_coordinate(q);
        CHECK(r.map.is_identity());
        ModelSpec s;
        s.q = q;
        for (double x : probe_points(r.coordinate)) {
            const double z = z_of_x(r.coordinate, x);
            CHECK(z == doctest::Approx(oracle::z_of_x(s, x)).epsilon(1e-13));
            const double zp = dz_dx(r.coordinate, x);
            CHECK(zp * zp == doctest::Approx(oracle::Q(s, z).real()).epsilon(1e-12));
            const double h = 1e-5;
            const double fd = (z_of_x(r.coordinate, x + h) - z_of_x(r.coordinate, x - h)) / (2 * h);
            CHECK(zp == doctest::Approx(fd).epsilon(1e-8));
            CHECK(x_of_z(r.coordinate, z) == doctest::Approx(x).epsilon(1e-11));
        }
    }
}

TEST_CASE("affine reduction maps Q onto its canonical form")
{
    const std::vector<PolyQ> qs{real_q(2, 0, 8), real_q(1, 2, 3), real_q(3, 6, 0), real_q(1, -4, 3),
                                real_q(-2, 2, 4), real_q(0, 2, 5)};
    for (const PolyQ &q : qs) {
        const CoordinateResolution r = canonical_coordinate(q);
        const PolyQ c = r.coordinate.as_poly();
        for (double w : {-0.7, 0.2, 0.9, 1.6}) {
            const double s = r.map.scale;
            const cplx lhs = q(s * w + r.map.shift) / (s * s);
            CHECK(std::abs(lhs - c(w)) < 1e-12 * (1.0 + std::abs(lhs)));
        }
    }
}

TEST_CASE("coordinate rejects Q without a real sinusoidal form")
{
    CHECK_THROWS_AS(canonical_coordinate(real_q(0, 0, 0)), ModelError);
    CHECK_THROWS_AS(canonical_coordinate(real_q(0, 0, -1)), ModelError);
    CHECK_THROWS_AS(canonical_coordinate(real_q(-1, 0, -1)), ModelError);
    CHECK_THROWS_AS(canonical_coordinate(PolyQ{cplx(1, 1), 0.0, 1.0, {}}), ModelError);
    PolyQ cubic = real_q(1, 0, 1);
    cubic.higher = {1.0};
    CHECK_THROWS_AS(canonical_coordinate(cubic), UnsupportedModel);
}

TEST_CASE("domain guards")
{
    const CanonicalCoordinate c = canonical_coordinate(real_q(2, 0, -2)).coordinate;
    CHECK_THROWS_AS(z_of_x(c, -0.5), DomainError);
    CHECK_THROWS_AS(x_of_z(c, 0.5), DomainError);
}

TEST_CASE("W0 closed forms agree with quadrature for every preset")
{
    for (const Preset &preset : list_presets()) {
        CAPTURE(preset.id);
        const ModelSpec spec = instantiate(preset.id);
        const Prepotential pre(spec);
        const std::vector<double> xs = probe_points(pre.coordinate());
        const double x_ref = xs[2];
        for (double x : xs) {
            const cplx closed = pre.w0(x) - pre.w0(x_ref);
            const cplx quad = w0_quadrature(spec, x_ref, x);
            CHECK(std::abs(closed - quad) < 1e-9 * (1.0 + std::abs(quad)));
        }
    }
}

TEST_CASE("W0' matches a central difference of W0 and P/z'")
{
    for (const Preset &preset : list_presets()) {
        CAPTURE(preset.id);
        const ModelSpec spec = instantiate(preset.id);
        const Prepotential pre(spec);
        for (double x : probe_points(pre.coordinate())) {
            const double h = 1e-5 * pre.coordinate().length_scale();
            const cplx fd = (pre.w0(x + h) - pre.w0(x - h)) / (2 * h);
            const cplx wp = pre.w0_prime(x);
            CHECK(std::abs(wp - fd) < 1e-6 * (1.0 + std::abs(wp)));
            const double z = oracle::z_of_x(spec, x);
            const double zp = std::sqrt(oracle::Q(spec, z).real());
            CHECK(std::abs(wp - oracle::P(spec, z) / zp) < 1e-10 * (1.0 + std::abs(wp)));
        }
    }
}

TEST_CASE("log_phi is -W0 plus the log of the root product")
{
    const ModelSpec spec = instantiate("sextic-qes");
    const Prepotential pre(spec);
    const std::vector<cplx> roots{cplx(-1.5, 0.25), cplx(0.75, -0.5)};
    for (double x : {0.3, 1.1, 2.2}) {
        const double z = oracle::z_of_x(spec, x);
        const cplx expect = std::exp(-pre.w0(x)) * (z - roots[0]) * (z - roots[1]);
        CHECK(std::abs(std::exp(pre.log_phi(x, roots)) - expect) < 1e-12 * std::abs(expect));
    }
}

TEST_CASE("polynomial roots reproduce their polynomial")
{
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + trial % 9;
        std::vector<cplx> zs;
        for (int k = 0; k < d; ++k) {
            zs.emplace_back(g(rng), g(rng));
        }
        const std::vector<cplx> c = oracle::from_roots(zs);
        std::vector<cplx> found = polynomial_roots(c);
        REQUIRE(found.size() == zs.size());
        for (const cplx &z : zs) {
            double best = 1e300;
            for (const cplx &f : found) {
                best = std::min(best, std::abs(f - z));
            }
            CHECK(best < 1e-9 * (1.0 + std::abs(z)));
        }
    }
}

TEST_CASE("polynomial roots keep exact zeros and handle known cases")
{
    const std::vector<cplx> c{0.0, 0.0, -1.0, 0.0, 1.0}; // z^2 (z^2 - 1)
    std::vector<cplx> r = polynomial_roots(c);
    REQUIRE(r.size() == 4);
    CHECK(std::count(r.begin(), r.end(), cplx(0.0)) == 2);
    const std::vector<cplx> unit{1.0, 0.0, 0.0, 0.0, 0.0, 1.0}; // z^5 = -1
    for (const cplx &z : polynomial_roots(unit)) {
        CHECK(std::abs(std::pow(z, 5) + 1.0) < 1e-13);
    }
}

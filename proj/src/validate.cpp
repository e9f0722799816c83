#include "qesqnm/coordinates.hpp"
#include "qesqnm/model.hpp"
#include "qesqnm/spectrum.hpp"

#include <cmath>
#include <sstream>

namespace qesqnm {

namespace {

constexpr double kTol = 1e-10;

bool is_real(cplx c) { return std::abs(c.imag()) <= kTol * (1.0 + std::abs(c.real())); }
bool is_imag(cplx c) { return std::abs(c.real()) <= kTol * (1.0 + std::abs(c.imag())); }
bool is_zero(cplx c, double scale = 1.0) { return std::abs(c) <= kTol * scale; }

bool all_real(const ModelSpec &s) { return is_real(s.p.A2) && is_real(s.p.A1) && is_real(s.p.A0); }

std::string show(cplx c)
{
    std::ostringstream os;
    os.precision(17);
    os << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    return os.str();
}

/// The named family must be stated in its canonical coordinate.
bool check_coordinate(const ModelSpec &s, ValidationReport &r)
{
    const double a = s.q.alpha.real();
    const double b = s.q.beta.real();
    const double g = s.q.gamma.real();
    bool ok = true;
    const char *want = "";
    switch (s.family) {
    case Family::Scarf2:
        ok = a > 0 && b == 0 && g == a;
        want = "alpha > 0, beta = 0, gamma = alpha";
        break;
    case Family::Morse:
        ok = a > 0 && b == 0 && g == 0;
        want = "alpha > 0, beta = gamma = 0";
        break;
    case Family::GenPoschlTeller:
        ok = a > 0 && b == 0 && g == -a;
        want = "alpha > 0, beta = 0, gamma = -alpha";
        break;
    case Family::ShiftedOsc:
        ok = a == 0 && b == 0 && g > 0;
        want = "alpha = beta = 0, gamma > 0";
        break;
    case Family::RadialOsc:
        ok = a == 0 && b > 0 && g == 0;
        want = "alpha = 0, beta > 0, gamma = 0";
        break;
    case Family::Scarf1:
        ok = a < 0 && b == 0 && g == -a;
        want = "alpha < 0, beta = 0, gamma = -alpha";
        break;
    case Family::Custom:
        return true;
    }
    if (!ok) {
        r.fail("family-coordinate", std::string(to_string(s.family)) + " requires Q with " + want);
    }
    return ok;
}

void check_family(const ModelSpec &s, ValidationReport &r)
{
    const PolyP &p = s.p;
    const double alpha = s.q.alpha.real();
    const double N = s.level_count;
    const std::string fam(to_string(s.family));
    switch (s.family) {
    case Family::Scarf2:
    case Family::GenPoschlTeller: {
        if (p.A2 == 0.0) {
            return; // the sampled check covers the exact and QNM cases
        }
        if (is_real(p.A2)) {
            if (!all_real(s)) {
                r.fail("family-constraint", fam + " with real A2 needs real A1 and A0");
            }
            return;
        }
        if (!is_imag(p.A2)) {
            r.fail("family-constraint", fam + " needs A2 real or purely imaginary, got " + show(p.A2));
            return;
        }
        const cplx k = 2.0 * p.A1 / alpha - 2.0 * N - 1.0;
        if (!is_zero(k, 1.0 + N)) {
            r.fail("family-constraint",
                   fam + " with imaginary A2 needs 2 A1/alpha - 2N - 1 = 0, got " + show(k));
        }
        const cplx combo = s.family == Family::Scarf2 ? p.A0 - p.A2 : p.A0 + p.A2;
        if (!is_real(combo)) {
            r.fail("family-constraint", fam + (s.family == Family::Scarf2 ? " needs A0 - A2" : " needs A0 + A2") +
                                            " real, got " + show(combo));
        }
        return;
    }
    case Family::Morse: {
        if (p.A2 == 0.0) {
            const bool real_case = is_real(p.A0) && is_real(p.A1);
            const bool qnm_case = is_imag(p.A0) && is_imag(2.0 * p.A1 / alpha + 1.0);
            if (!real_case && !qnm_case) {
                r.fail("family-constraint",
                       "morse with A2 = 0 needs real A0, A1 or imaginary A0 and 2 A1/alpha + 1");
            }
            return;
        }
        if (is_real(p.A2)) {
            if (!all_real(s)) {
                r.fail("family-constraint", "morse with real A2 needs real A1 and A0");
            }
            return;
        }
        if (!is_imag(p.A2)) {
            r.fail("family-constraint", "morse needs A2 real or purely imaginary, got " + show(p.A2));
            return;
        }
        const cplx k = p.A1 / alpha - N - 0.5;
        const bool first = is_zero(k, 1.0 + N) && is_real(p.A0);
        const bool mirror = is_imag(k) && is_zero(p.A0);
        if (!first && !mirror) {
            r.fail("family-constraint", "morse with imaginary A2 needs A1/alpha = N + 1/2 with real A0, "
                                        "or A1/alpha - N - 1/2 imaginary with A0 = 0");
        }
        return;
    }
    case Family::ShiftedOsc:
    case Family::RadialOsc:
    case Family::Scarf1:
        if (p.A2 != 0.0 && !all_real(s)) {
            r.fail("family-constraint", fam + " with A2 != 0 needs real coefficients");
        }
        return;
    case Family::Custom:
        return;
    }
}

} // namespace

ValidationReport validate_model(const ModelSpec &spec)
{
    ValidationReport r;
    if (spec.level_count < 0) {
        r.fail("structure", "N must be non-negative");
        return r;
    }
    if (classify_solvability(spec.p, spec.q).kind == Solvability::HigherType) {
        r.fail("solvability", "max{m, n-1} >= 3 is outside the generated scope");
        return r;
    }
    try {
        canonical_coordinate(spec.q);
    } catch (const std::exception &e) {
        r.fail("coordinate", e.what());
        return r;
    }
    if (!check_coordinate(spec, r)) {
        return r;
    }

    const PotentialShape shape = potential_shape(spec);
    for (double x : interior_samples(shape.model.coordinate, 64)) {
        const cplx v = shape.shape_value(x);
        r.max_imag_leak = std::max(r.max_imag_leak, std::abs(v.imag()) / (1.0 + std::abs(v.real())));
    }
    if (r.max_imag_leak > 1e-9) {
        std::ostringstream msg;
        msg.precision(3);
        msg << "V(x) is complex (relative leak " << r.max_imag_leak << ")";
        for (const PotentialTerm &t : shape.terms) {
            if (std::abs(t.coefficient.imag()) > 1e-9 * (1.0 + std::abs(t.coefficient.real()))) {
                msg << "; term " << t.shape << " = " << show(t.coefficient);
            }
        }
        r.fail("reality", msg.str());
    }
    check_family(spec, r);
    return r;
}

} // namespace qesqnm

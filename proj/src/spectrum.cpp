#include "qesqnm/spectrum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace qesqnm {

namespace {

using Quartic = std::array<cplx, 5>;

/// R = P^2 + P Q'/2 - Q P', ascending coefficients.
Quartic r_polynomial(const PolyP &p, const PolyQ &q)
{
    const std::array<cplx, 3> pc{p.A0, p.A1, p.A2};
    const std::array<cplx, 3> qc{q.gamma, q.beta, q.alpha};
    const std::array<cplx, 2> dp{p.A1, 2.0 * p.A2};
    const std::array<cplx, 2> dq{q.beta, 2.0 * q.alpha};
    Quartic r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r[i + j] += pc[i] * pc[j];
        }
        for (int j = 0; j < 2; ++j) {
            r[i + j] += 0.5 * pc[i] * dq[j] - qc[i] * dp[j];
        }
    }
    return r;
}

std::array<std::string_view, 4> basis_names(CoordinateForm f)
{
    switch (f) {
    case CoordinateForm::Constant:
        return {"x^4", "x^3", "x^2", "x"};
    case CoordinateForm::Linear:
        return {"x^6", "x^4", "x^2", "x^-2"};
    case CoordinateForm::Sinh:
        return {"cosh^2", "sinh", "sech^2", "tanh*sech"};
    case CoordinateForm::Exp:
        return {"exp(2u)", "exp(u)", "exp(-u)", "exp(-2u)"};
    case CoordinateForm::Cosh:
        return {"sinh^2", "cosh", "cosech^2", "coth*cosech"};
    case CoordinateForm::Sin:
        return {"cos^2", "sin", "sec^2", "tan*sec"};
    }
    return {"", "", "", ""};
}

std::array<double, 4> basis_values(const CanonicalCoordinate &c, double x)
{
    switch (c.form) {
    case CoordinateForm::Constant:
        return {x * x * x * x, x * x * x, x * x, x};
    case CoordinateForm::Linear: {
        const double x2 = x * x;
        return {x2 * x2 * x2, x2 * x2, x2, 1.0 / x2};
    }
    case CoordinateForm::Sinh: {
        const double u = std::sqrt(c.alpha) * x;
        const double ch = std::cosh(u);
        return {ch * ch, std::sinh(u), 1.0 / (ch * ch), std::tanh(u) / ch};
    }
    case CoordinateForm::Exp: {
        const double u = std::sqrt(c.alpha) * x;
        return {std::exp(2.0 * u), std::exp(u), std::exp(-u), std::exp(-2.0 * u)};
    }
    case CoordinateForm::Cosh: {
        const double u = std::sqrt(c.alpha) * x;
        const double sh = std::sinh(u);
        return {sh * sh, std::cosh(u), 1.0 / (sh * sh), std::cosh(u) / (sh * sh)};
    }
    case CoordinateForm::Sin: {
        const double u = std::sqrt(-c.alpha) * x;
        const double co = std::cos(u);
        return {co * co, std::sin(u), 1.0 / (co * co), std::sin(u) / (co * co)};
    }
    }
    return {0.0, 0.0, 0.0, 0.0};
}

} // namespace

std::vector<double> interior_samples(const CanonicalCoordinate &c, int count)
{
    const double ell = c.length_scale();
    std::vector<double> xs(count);
    for (int i = 0; i < count; ++i) {
        const double t = (i + 0.5) / count;
        if (c.domain.lo_finite() && c.domain.hi_finite()) {
            xs[i] = c.domain.lo + (c.domain.hi - c.domain.lo) * (i + 1.0) / (count + 1.0);
        } else if (c.domain.lo_finite()) {
            xs[i] = c.domain.lo + 8.0 * ell * t;
        } else {
            xs[i] = -8.0 * ell + 16.0 * ell * t;
        }
    }
    return xs;
}

cplx PotentialShape::shape_value(double x) const
{
    const std::array<double, 4> b = basis_values(model.coordinate, x);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < terms.size() && i < b.size(); ++i) {
        if (terms[i].coefficient != 0.0) {
            acc += terms[i].coefficient * b[i];
        }
    }
    return acc;
}

PotentialShape potential_shape(const ModelSpec &spec)
{
    PotentialShape out;
    out.model = canonicalize(spec);
    const CanonicalCoordinate &c = out.model.coordinate;
    const PolyP &p = out.model.spec.p;
    const Quartic r = r_polynomial(p, out.model.spec.q);
    const cplx shift = 2.0 * p.A2 * static_cast<double>(spec.level_count);

    std::array<cplx, 4> k{};
    switch (c.form) {
    case CoordinateForm::Constant: {
        const double g = c.gamma;
        const double sg = std::sqrt(g);
        k = {r[4] / g * (g * g), r[3] / g * (g * sg), r[2] / g * g, (r[1] / g - shift) * sg};
        out.offset = r[0] / g;
        break;
    }
    case CoordinateForm::Linear: {
        const double b = c.beta;
        const double q4 = b / 4.0;
        k = {r[4] / b * (q4 * q4 * q4), r[3] / b * (q4 * q4), (r[2] / b - shift) * q4,
             r[0] / b / q4};
        out.offset = r[1] / b;
        break;
    }
    case CoordinateForm::Exp: {
        const double a = c.alpha;
        k = {r[4] / a, r[3] / a - shift, r[1] / a, r[0] / a};
        out.offset = r[2] / a;
        break;
    }
    case CoordinateForm::Sinh:
    case CoordinateForm::Cosh:
    case CoordinateForm::Sin: {
        // R = S (z^2 + delta) + t1 z + t0
        const double a = c.alpha;
        const double d = c.delta;
        const cplx s2 = r[4];
        const cplx s1 = r[3];
        const cplx s0 = r[2] - d * s2;
        const cplx t1 = r[1] - d * s1;
        const cplx t0 = r[0] - d * s0;
        if (c.form == CoordinateForm::Sinh) {
            k = {s2 / a, s1 / a - shift, t0 / a, t1 / a};
            out.offset = (s0 - s2) / a;
        } else if (c.form == CoordinateForm::Cosh) {
            k = {s2 / a, s1 / a - shift, t0 / a, t1 / a};
            out.offset = (s0 + s2) / a;
        } else {
            k = {-s2 / a, s1 / a - shift, -t0 / a, -t1 / a};
            out.offset = (s0 + s2) / a;
        }
        break;
    }
    }
    const auto names = basis_names(c.form);
    for (int i = 0; i < 4; ++i) {
        out.terms.push_back({std::string(names[i]), k[i]});
    }
    return out;
}

cplx gauged_potential(const CanonicalModel &model, cplx z)
{
    const PolyP &p = model.spec.p;
    const PolyQ &q = model.spec.q;
    const cplx pz = p(z);
    const cplx r = pz * pz + 0.5 * pz * q.derivative(z) - q(z) * p.derivative(z);
    return r / q(z) - 2.0 * p.A2 * static_cast<double>(model.spec.level_count) * z;
}

PotentialAssembly assemble_potential(const ModelSpec &spec, const RootSet &level)
{
    PotentialAssembly out;
    out.shape = potential_shape(spec);
    out.constant = out.shape.offset - level.lambda;
    for (double x : interior_samples(out.shape.model.coordinate, 64)) {
        const cplx v = out.shape.shape_value(x);
        out.max_imag_leak = std::max(out.max_imag_leak, std::abs(v.imag()) / (1.0 + std::abs(v.real())));
    }
    if (out.max_imag_leak > 1e-9) {
        for (const PotentialTerm &t : out.shape.terms) {
            if (std::abs(t.coefficient.imag()) > 1e-9 * (1.0 + std::abs(t.coefficient.real()))) {
                std::ostringstream msg;
                msg.precision(17);
                msg << "term " << t.shape << " has imaginary coefficient " << t.coefficient.imag();
                out.diagnostics.push_back({"reality", msg.str()});
            }
        }
        if (out.diagnostics.empty()) {
            out.diagnostics.push_back({"reality", "V(x) has an imaginary part on the sample grid"});
        }
    }
    return out;
}

cplx level_energy(const ModelSpec &spec, const RootSet &level)
{
    return level.lambda - potential_shape(spec).offset;
}

std::vector<LadderEntry> exact_spectrum(const ModelSpec &spec, int n_max)
{
    const CanonicalModel cm = canonicalize(spec);
    const PolyP &p = cm.spec.p;
    if (p.A2 != 0.0) {
        throw ModelError("closed-form ladder needs A2 = 0");
    }
    if (n_max < 0) {
        throw ModelError("n_max must be non-negative");
    }
    const CanonicalCoordinate &c = cm.coordinate;
    std::vector<LadderEntry> out;
    for (int n = 0; n <= n_max; ++n) {
        LadderEntry e{n, 0.0, false};
        switch (c.form) {
        case CoordinateForm::Constant:
            e.E = 2.0 * p.A1 * (n + 0.5) - p.A0 * p.A0 / c.gamma;
            break;
        case CoordinateForm::Linear:
            e.E = p.A1 * (2.0 * n + 0.5 - 2.0 * p.A0 / c.beta);
            break;
        default:
            e.E = 2.0 * p.A1 * static_cast<double>(n) - c.alpha * n * n - p.A1 * p.A1 / c.alpha;
            e.beyond_turnover = (2.0 * p.A1 - 2.0 * c.alpha * n).real() <= 0.0;
            break;
        }
        out.push_back(e);
    }
    return out;
}

Eigenfunction::Eigenfunction(const ModelSpec &spec, std::vector<cplx> roots)
    : prepotential_(spec)
    , roots_(std::move(roots))
{
}

cplx Eigenfunction::log_value(double x) const { return prepotential_.log_phi(x, roots_); }

cplx Eigenfunction::operator()(double x) const { return std::exp(log_value(x)); }

Eigenfunction eigenfunction(const ModelSpec &spec, const RootSet &level)
{
    return Eigenfunction(spec, level.roots);
}

std::string_view to_string(ModeClass m)
{
    switch (m) {
    case ModeClass::BoundState:
        return "BoundState";
    case ModeClass::DecayingQNM:
        return "DecayingQNM";
    case ModeClass::GrowingQNM:
        return "GrowingQNM";
    case ModeClass::NonNormalizable:
        return "NonNormalizable";
    }
    return "NonNormalizable";
}

ModeClass classify_mode(Normalizability verdict, cplx E)
{
    if (verdict == Normalizability::NonNormalizable) {
        return ModeClass::NonNormalizable;
    }
    if (std::abs(E.imag()) <= 1e-9 * (1.0 + std::abs(E.real()))) {
        return verdict == Normalizability::Normalizable ? ModeClass::BoundState
                                                        : ModeClass::NonNormalizable;
    }
    return E.imag() < 0.0 ? ModeClass::DecayingQNM : ModeClass::GrowingQNM;
}

Spectrum solve_spectrum(const ModelSpec &spec)
{
    Spectrum out;
    out.solvability = classify_solvability(spec.p, spec.q);
    if (out.solvability.kind == Solvability::HigherType) {
        throw UnsupportedModel("higher-type models (max{m, n-1} >= 3) are not generated");
    }
    out.spec = spec;
    out.model = canonicalize(spec);
    out.shape = potential_shape(spec);
    out.ground = endpoint_analysis(spec, 0);
    std::vector<RootSet> sets = qes_levels(spec);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        SpectralLevel lv;
        lv.n = static_cast<int>(i);
        lv.E = sets[i].lambda - out.shape.offset;
        lv.endpoints = endpoint_analysis(spec, sets[i].degree(), sets[i].zero_roots, sets[i].roots);
        lv.mode = classify_mode(lv.endpoints.overall, lv.E);
        lv.rootset = std::move(sets[i]);
        out.levels.push_back(std::move(lv));
    }
    return out;
}

} // namespace qesqnm

#include "qesqnm/catalog.hpp"

#include <cmath>
#include <sstream>

namespace qesqnm {

namespace {

const cplx I(0.0, 1.0);
constexpr double kPerturb = 1e-3;

PolyQ sinh_q(double a) { return {a, 0.0, a, {}}; }
PolyQ exp_q(double a) { return {a, 0.0, 0.0, {}}; }
PolyQ cosh_q(double a) { return {a, 0.0, -a, {}}; }
/// z'^2 = a (1 - z^2) with a > 0.
PolyQ sin_q(double a) { return {-a, 0.0, a, {}}; }
PolyQ const_q(double g) { return {0.0, 0.0, g, {}}; }
PolyQ linear_q(double b) { return {0.0, b, 0.0, {}}; }

ModelSpec make(Family f, PolyQ q, cplx A2, cplx A1, cplx A0, int N)
{
    ModelSpec s;
    s.family = f;
    s.q = std::move(q);
    s.p.A2 = A2;
    s.p.A1 = A1;
    s.p.A0 = A0;
    s.level_count = N;
    return s;
}

ModelSpec imag_A0(ModelSpec s)
{
    s.p.A0 += I * kPerturb;
    return s;
}

ModelSpec real_A1(ModelSpec s)
{
    s.p.A1 += kPerturb;
    return s;
}

using Violations = std::vector<std::string>;

void need(Violations &v, bool ok, const std::string &what)
{
    if (!ok) {
        v.push_back(what);
    }
}

std::string num(double x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

ExpectedVerdict fixed(Solvability s, Normalizability g, EnergyExpectation e)
{
    return {s, g, e};
}

std::function<ExpectedVerdict(const Params &, int)> always(Solvability s, Normalizability g,
                                                           EnergyExpectation e)
{
    return [=](const Params &, int) { return fixed(s, g, e); };
}

std::vector<Preset> make_presets()
{
    using S = Solvability;
    using G = Normalizability;
    using En = EnergyExpectation;
    std::vector<Preset> v;

    v.push_back({"scarf2-exact", Family::Scarf2, "Scarf II, exactly solvable with real bound states",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"b", 3.0, 0.5, 4.0, "A1 > 0"},
                  {"a", 0.5, -1.0, 1.0, "A0"}},
                 3,
                 [](const Params &p, int N) {
                     return make(Family::Scarf2, sinh_q(p.at("alpha")), 0.0, p.at("b"), p.at("a"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("b") > 0, "b = A1 > 0");
                     return out;
                 },
                 always(S::ExactlySolvable, G::Normalizable, En::Real), imag_A0});

    v.push_back({"scarf2-qnm", Family::Scarf2, "Scarf II, exactly solvable quasinormal modes",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"c", 2.0, 0.5, 2.0, "c != 0, 2 A1/alpha + 1 = -ic/alpha"},
                  {"d", 0.0, -1.0, 1.0, "A0 = -id/2"}},
                 3,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     return make(Family::Scarf2, sinh_q(a), 0.0, -(I * p.at("c") + a) / 2.0,
                                 -I * p.at("d") / 2.0, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     return out;
                 },
                 always(S::ExactlySolvable, G::QnmOutgoing, En::Complex), real_A1});

    v.push_back({"scarf2-qes-qnm", Family::Scarf2, "Scarf II, quasi-exactly solvable with quasinormal modes",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"c", 1.0, 0.5, 2.0, "A2 = ic, c != 0"},
                  {"a", 1.0, 0.5, 2.0, "A0 - A2 = a alpha, a != 0"}},
                 2,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     const cplx A2 = I * p.at("c");
                     return make(Family::Scarf2, sinh_q(a), A2, a * (N + 0.5), A2 + p.at("a") * a, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     need(out, p.at("a") != 0, "a != 0 (a = 0 is scarf2-singular)");
                     return out;
                 },
                 always(S::QesType1, G::Normalizable, En::Complex), real_A1});

    v.push_back({"scarf2-singular", Family::Scarf2,
                 "Scarf II, singular potential unbounded from below with real energies",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"}, {"c", 1.0, 0.5, 2.0, "A2 = A0 = ic, c != 0"}},
                 1,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     const cplx A2 = I * p.at("c");
                     return make(Family::Scarf2, sinh_q(a), A2, a * (N + 0.5), A2, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     return out;
                 },
                 always(S::QesType1, G::Normalizable, En::Real), real_A1});

    v.push_back({"scarf2-qes-real-none", Family::Scarf2,
                 "Scarf II with real A2 != 0: no normalizable quasi-exactly solvable states",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"a", 1.0, 0.5, 2.0, "A2 real, != 0"},
                  {"b", 1.0, -1.0, 2.0, "A1"},
                  {"d", 0.5, -1.0, 1.0, "A0"}},
                 1,
                 [](const Params &p, int N) {
                     return make(Family::Scarf2, sinh_q(p.at("alpha")), p.at("a"), p.at("b"), p.at("d"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("a") != 0, "a = A2 != 0");
                     return out;
                 },
                 always(S::QesType1, G::NonNormalizable, En::Unspecified), imag_A0});

    v.push_back({"morse-exact", Family::Morse, "Morse, exactly solvable with real bound states",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"b", 3.0, 0.5, 4.0, "A1 > 0"},
                  {"a", -1.0, -2.0, -0.5, "A0 < 0"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::Morse, exp_q(p.at("alpha")), 0.0, p.at("b"), p.at("a"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("b") > 0, "b = A1 > 0");
                     need(out, p.at("a") < 0, "a = A0 < 0");
                     return out;
                 },
                 always(S::ExactlySolvable, G::Normalizable, En::Real), imag_A0});

    v.push_back({"morse-qnm", Family::Morse, "Morse, exactly solvable quasinormal modes",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"c", 1.0, 0.5, 2.0, "A0 = ic, c != 0"},
                  {"d", 2.0, 0.5, 2.0, "2 A1/alpha + 1 = -id"}},
                 2,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     return make(Family::Morse, exp_q(a), 0.0, -a * (I * p.at("d") + 1.0) / 2.0,
                                 I * p.at("c"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     return out;
                 },
                 [](const Params &p, int) {
                     return fixed(S::ExactlySolvable, G::QnmOutgoing,
                                  p.at("d") != 0 ? En::Complex : En::Real);
                 },
                 real_A1});

    v.push_back({"morse-qes-real", Family::Morse, "Morse, quasi-exactly solvable with real energies",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"a", 1.0, 0.5, 2.0, "A2 > 0"},
                  {"b", 1.0, -1.0, 2.0, "A1"},
                  {"d", -1.0, -2.0, -0.5, "A0 < 0"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::Morse, exp_q(p.at("alpha")), p.at("a"), p.at("b"), p.at("d"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("a") > 0, "a = A2 > 0");
                     need(out, p.at("d") < 0, "d = A0 < 0");
                     return out;
                 },
                 always(S::QesType1, G::Normalizable, En::Real), imag_A0});

    v.push_back({"morse-qes-qnm", Family::Morse, "Morse, quasi-exactly solvable with quasinormal modes",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"b", 1.0, 0.5, 2.0, "A2 = -ib/2, b != 0"},
                  {"d", 1.0, 0.5, 2.0, "A0 = -d/2, d > 0"}},
                 2,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     return make(Family::Morse, exp_q(a), -I * p.at("b") / 2.0, (N + 0.5) * a,
                                 -p.at("d") / 2.0, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("b") != 0, "b != 0");
                     need(out, p.at("d") > 0, "d > 0");
                     return out;
                 },
                 always(S::QesType1, G::Normalizable, En::Complex), real_A1});

    v.push_back({"morse-qnm-mirror", Family::Morse,
                 "Morse-type quasinormal modes, parity mirror of morse-qnm",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"c", 1.0, 0.5, 2.0, "A2 = -ic, c != 0"},
                  {"d", 2.0, 0.5, 2.0, "A1/alpha = id/2 + N + 1/2"}},
                 2,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     return make(Family::Morse, exp_q(a), -I * p.at("c"),
                                 a * (I * p.at("d") / 2.0 + (N + 0.5)), 0.0, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     return out;
                 },
                 [](const Params &p, int) {
                     return fixed(S::QesType1, G::QnmOutgoing, p.at("d") != 0 ? En::Complex : En::Real);
                 },
                 real_A1});

    v.push_back({"genpt-exact", Family::GenPoschlTeller,
                 "generalized Poschl-Teller, exactly solvable with real bound states",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"b", 3.0, 0.5, 4.0, "A1 > 0"},
                  {"a", -4.0, -6.0, -0.5, "A0 < -A1"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::GenPoschlTeller, cosh_q(p.at("alpha")), 0.0, p.at("b"), p.at("a"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("b") > 0, "b = A1 > 0");
                     need(out, p.at("a") < -p.at("b"), "a = A0 < -b");
                     return out;
                 },
                 always(S::ExactlySolvable, G::Normalizable, En::Real), imag_A0});

    v.push_back({"genpt-qnm", Family::GenPoschlTeller,
                 "generalized Poschl-Teller, exactly solvable quasinormal modes",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"c", 2.0, 0.5, 2.0, "c != 0, 2 A1/alpha + 1 = -ic/alpha"},
                  {"d", 0.0, -1.0, 1.0, "A0 = -id/2"}},
                 3,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     return make(Family::GenPoschlTeller, cosh_q(a), 0.0, -(I * p.at("c") + a) / 2.0,
                                 -I * p.at("d") / 2.0, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     return out;
                 },
                 always(S::ExactlySolvable, G::QnmOutgoing, En::Complex), real_A1});

    v.push_back({"genpt-qes-real", Family::GenPoschlTeller,
                 "generalized Poschl-Teller, quasi-exactly solvable with real energies",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"a", 1.0, 0.5, 2.0, "A2 > 0"},
                  {"b", 1.0, -1.0, 2.0, "A1"},
                  {"d", -3.0, -6.0, -2.0, "A0, with A2 + A1 + A0 < 0"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::GenPoschlTeller, cosh_q(p.at("alpha")), p.at("a"), p.at("b"),
                                 p.at("d"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("a") > 0, "a = A2 > 0");
                     need(out, p.at("a") + p.at("b") + p.at("d") < 0, "A2 + A1 + A0 < 0");
                     return out;
                 },
                 always(S::QesType1, G::Normalizable, En::Real), imag_A0});

    v.push_back({"genpt-qes-qnm", Family::GenPoschlTeller,
                 "generalized Poschl-Teller, quasi-exactly solvable with quasinormal modes",
                 {{"alpha", 1.0, 0.5, 2.0, "alpha > 0"},
                  {"c", 1.0, 0.5, 2.0, "A2 = ic, c != 0"},
                  {"a", 2.0, 0.0, 6.0, "A0 + A2 = -a alpha, a > N + 1/2"}},
                 1,
                 [](const Params &p, int N) {
                     const double a = p.at("alpha");
                     const cplx A2 = I * p.at("c");
                     return make(Family::GenPoschlTeller, cosh_q(a), A2, a * (N + 0.5),
                                 -p.at("a") * a - A2, N);
                 },
                 [](const Params &p, int N) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     need(out, p.at("a") > N + 0.5, "a > N + 1/2 (a > " + num(N + 0.5) + ")");
                     return out;
                 },
                 always(S::QesType1, G::Normalizable, En::Complex), real_A1});

    v.push_back({"shifted-osc", Family::ShiftedOsc,
                 "shifted oscillator with A2 != 0: no quasi-exactly solvable states",
                 {{"gamma", 1.0, 0.5, 2.0, "gamma > 0"},
                  {"a", 1.0, -2.0, 2.0, "A2 != 0"},
                  {"b", 1.0, -1.0, 2.0, "A1"},
                  {"d", 0.0, -1.0, 1.0, "A0"}},
                 1,
                 [](const Params &p, int N) {
                     return make(Family::ShiftedOsc, const_q(p.at("gamma")), p.at("a"), p.at("b"), p.at("d"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("gamma") > 0, "gamma > 0");
                     need(out, p.at("a") != 0, "a = A2 != 0");
                     return out;
                 },
                 always(S::QesType1, G::NonNormalizable, En::Unspecified), imag_A0});

    v.push_back({"shifted-osc-qnm", Family::ShiftedOsc, "inverted shifted oscillator, exactly solvable quasinormal modes",
                 {{"gamma", 1.0, 0.5, 2.0, "gamma > 0"}, {"c", 2.0, 0.5, 3.0, "A1 = -ic/2, c != 0"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::ShiftedOsc, const_q(p.at("gamma")), 0.0, -I * p.at("c") / 2.0, 0.0, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("gamma") > 0, "gamma > 0");
                     need(out, p.at("c") != 0, "c != 0");
                     return out;
                 },
                 always(S::ExactlySolvable, G::QnmOutgoing, En::Complex), real_A1});

    v.push_back({"radial-osc", Family::RadialOsc, "radial oscillator, exactly solvable with real bound states",
                 {{"b", 1.0, 0.5, 2.0, "A1 > 0"}, {"d", -4.0, -6.0, -2.0, "A0 <= 0"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::RadialOsc, linear_q(4.0), 0.0, p.at("b"), p.at("d"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("b") > 0, "b = A1 > 0");
                     need(out, p.at("d") <= 0, "d = A0 <= 0");
                     return out;
                 },
                 always(S::ExactlySolvable, G::Normalizable, En::Real), imag_A0});

    v.push_back({"sextic-qes", Family::RadialOsc, "sextic oscillator, quasi-exactly solvable with real energies",
                 {{"a", 1.0, 0.5, 2.0, "A2 = 2a > 0"}, {"b", 1.0, -1.0, 2.0, "A1 = 2b"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::RadialOsc, linear_q(4.0), 2.0 * p.at("a"), 2.0 * p.at("b"), 0.0, N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("a") > 0, "a > 0");
                     return out;
                 },
                 always(S::QesType1, G::Normalizable, En::Real), imag_A0});

    v.push_back({"radial-osc-qnm", Family::RadialOsc, "inverted radial oscillator, exactly solvable quasinormal modes",
                 {{"a", 1.0, 0.5, 2.0, "A1 = -2ia, a != 0"}, {"gamma", 1.0, 0.0, 2.0, "A0 = -2 gamma, gamma >= 0"}},
                 2,
                 [](const Params &p, int N) {
                     return make(Family::RadialOsc, linear_q(4.0), 0.0, -2.0 * I * p.at("a"),
                                 -2.0 * p.at("gamma"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("a") != 0, "a != 0");
                     need(out, p.at("gamma") >= 0, "gamma >= 0");
                     return out;
                 },
                 always(S::ExactlySolvable, G::QnmOutgoing, En::Complex), real_A1});

    v.push_back({"scarf1", Family::Scarf1,
                 "Scarf I on a finite interval with A2 != 0: no quasinormal modes, no normalizable states",
                 {{"alpha", 1.0, 0.5, 2.0, "z'^2 = alpha (1 - z^2), alpha > 0"},
                  {"a", 1.0, 0.5, 1.5, "A2 real, != 0"},
                  {"b", 0.25, 0.1, 0.4, "A1"},
                  {"d", 0.25, 0.0, 0.5, "A0"}},
                 1,
                 [](const Params &p, int N) {
                     return make(Family::Scarf1, sin_q(p.at("alpha")), p.at("a"), p.at("b"), p.at("d"), N);
                 },
                 [](const Params &p, int) {
                     Violations out;
                     need(out, p.at("alpha") > 0, "alpha > 0");
                     need(out, p.at("a") != 0, "a = A2 != 0");
                     return out;
                 },
                 always(S::QesType1, G::NonNormalizable, En::Unspecified), imag_A0});

    return v;
}

} // namespace

const std::vector<Preset> &list_presets()
{
    static const std::vector<Preset> presets = make_presets();
    return presets;
}

const Preset &find_preset(const std::string &id)
{
    for (const Preset &p : list_presets()) {
        if (p.id == id) {
            return p;
        }
    }
    throw ModelError("unknown preset '" + id + "'");
}

Params resolve_params(const Preset &preset, const Params &params)
{
    Params out;
    for (const ParamSpec &s : preset.params) {
        out[s.name] = s.default_value;
    }
    for (const auto &[name, value] : params) {
        if (!out.count(name)) {
            throw ModelError("preset " + preset.id + " has no parameter '" + name + "'");
        }
        if (!std::isfinite(value)) {
            throw ModelError("parameter '" + name + "' must be finite");
        }
        out[name] = value;
    }
    return out;
}

ModelSpec instantiate(const std::string &id, const Params &params, std::optional<int> N)
{
    const Preset &preset = find_preset(id);
    const Params full = resolve_params(preset, params);
    const int n = N.value_or(preset.default_N);
    if (n < 0) {
        throw ConstraintViolation(id + ": N >= 0");
    }
    const std::vector<std::string> bad = preset.violations(full, n);
    if (!bad.empty()) {
        std::string msg = id + ": constraint violated:";
        for (const std::string &b : bad) {
            msg += " " + b + ";";
        }
        msg.pop_back();
        throw ConstraintViolation(msg);
    }
    return preset.build(full, n);
}

Params random_params(const Preset &preset, int N, std::mt19937_64 &rng)
{
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Params p;
        for (const ParamSpec &s : preset.params) {
            std::uniform_real_distribution<double> dist(s.lo, s.hi);
            p[s.name] = dist(rng);
        }
        if (preset.violations(p, N).empty()) {
            return p;
        }
    }
    throw ModelError("no admissible random draw for preset " + preset.id);
}

} // namespace qesqnm

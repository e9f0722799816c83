#include "qesqnm/json_io.hpp"

#include <cmath>

namespace qesqnm {

namespace {

Json number(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    return nullptr;
}

cplx field(const Json &j, const char *key)
{
    if (!j.contains(key)) {
        throw ModelError(std::string("spec is missing '") + key + "'");
    }
    return complex_from_json(j.at(key));
}

Json endpoint_to_json(const EndpointBehavior &b)
{
    Json j;
    j["finite"] = b.finite;
    j["growth"] = std::string(to_string(b.kind));
    j["rate"] = number(b.rate);
    j["verdict"] = std::string(to_string(b.verdict));
    j["admissible"] = b.admissible;
    j["trend_consistent"] = b.trend_consistent;
    return j;
}

Json endpoints_to_json(const EndpointReport &r)
{
    Json j;
    j["normalizability"] = std::string(to_string(r.overall));
    j["lower"] = endpoint_to_json(r.lower);
    j["upper"] = endpoint_to_json(r.upper);
    return j;
}

std::string_view to_string(EnergyExpectation e)
{
    switch (e) {
    case EnergyExpectation::Real:
        return "real";
    case EnergyExpectation::Complex:
        return "complex";
    case EnergyExpectation::Unspecified:
        return "unspecified";
    }
    return "unspecified";
}

} // namespace

Json complex_to_json(cplx z) { return Json::array({number(z.real()), number(z.imag())}); }

cplx complex_from_json(const Json &j)
{
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ModelError("complex numbers must be [re, im] or a real number, got " + j.dump());
}

Json spec_to_json(const ModelSpec &spec)
{
    Json j;
    j["family"] = std::string(to_string(spec.family));
    j["A2"] = complex_to_json(spec.p.A2);
    j["A1"] = complex_to_json(spec.p.A1);
    j["A0"] = complex_to_json(spec.p.A0);
    j["alpha"] = complex_to_json(spec.q.alpha);
    j["beta"] = complex_to_json(spec.q.beta);
    j["gamma"] = complex_to_json(spec.q.gamma);
    j["N"] = spec.level_count;
    if (!spec.p.higher.empty()) {
        Json h = Json::array();
        for (const cplx &c : spec.p.higher) {
            h.push_back(complex_to_json(c));
        }
        j["higher_p"] = h;
    }
    if (!spec.q.higher.empty()) {
        Json h = Json::array();
        for (const cplx &c : spec.q.higher) {
            h.push_back(complex_to_json(c));
        }
        j["higher_q"] = h;
    }
    return j;
}

ModelSpec spec_from_json(const Json &input)
{
    if (!input.is_object()) {
        throw ModelError("spec must be a JSON object");
    }
    const Json &j = input.contains("spec") ? input.at("spec") : input;
    if (!j.is_object()) {
        throw ModelError("spec must be a JSON object");
    }
    ModelSpec s;
    s.family = j.contains("family") ? family_from_string(j.at("family").get<std::string>()) : Family::Custom;
    s.p.A2 = field(j, "A2");
    s.p.A1 = field(j, "A1");
    s.p.A0 = field(j, "A0");
    s.q.alpha = field(j, "alpha");
    s.q.beta = field(j, "beta");
    s.q.gamma = field(j, "gamma");
    if (!j.contains("N") || !j.at("N").is_number_integer()) {
        throw ModelError("spec needs an integer 'N'");
    }
    s.level_count = j.at("N").get<int>();
    if (j.contains("higher_p")) {
        for (const Json &c : j.at("higher_p")) {
            s.p.higher.push_back(complex_from_json(c));
        }
    }
    if (j.contains("higher_q")) {
        for (const Json &c : j.at("higher_q")) {
            s.q.higher.push_back(complex_from_json(c));
        }
    }
    return s;
}

Json rootset_to_json(const RootSet &r)
{
    Json j;
    j["lambda"] = complex_to_json(r.lambda);
    Json roots = Json::array();
    for (const cplx &z : r.roots) {
        roots.push_back(complex_to_json(z));
    }
    j["roots"] = roots;
    j["residual_max"] = number(r.residual_max);
    j["residual_scale"] = number(r.residual_scale);
    j["flags"] = r.flags;
    return j;
}

Json potential_terms_to_json(const PotentialShape &shape)
{
    Json j;
    for (const PotentialTerm &t : shape.terms) {
        j[t.shape] = complex_to_json(t.coefficient);
    }
    return j;
}

Json spectrum_to_json(const Spectrum &s)
{
    Json j;
    j["spec"] = spec_to_json(s.spec);
    j["classification"] = {{"kind", std::string(to_string(s.solvability.kind))},
                           {"m", s.solvability.m},
                           {"n", s.solvability.n}};
    const CanonicalCoordinate &c = s.model.coordinate;
    j["coordinate"] = {{"form", std::string(to_string(c.form))},
                       {"domain", Json::array({number(c.domain.lo), number(c.domain.hi)})},
                       {"z_scale", s.model.map.scale},
                       {"z_shift", s.model.map.shift}};
    j["ground_state"] = endpoints_to_json(s.ground);
    Json levels = Json::array();
    for (const SpectralLevel &lv : s.levels) {
        Json l;
        l["n"] = lv.n;
        l["E"] = complex_to_json(lv.E);
        l["mode_class"] = std::string(to_string(lv.mode));
        l["normalizability"] = std::string(to_string(lv.endpoints.overall));
        l["degree"] = lv.rootset.degree();
        l["roots"] = rootset_to_json(lv.rootset)["roots"];
        l["rootset"] = rootset_to_json(lv.rootset);
        levels.push_back(l);
    }
    j["levels"] = levels;
    j["potential_terms"] = potential_terms_to_json(s.shape);
    j["potential_offset"] = complex_to_json(s.shape.offset);
    j["time_convention"] = "exp(-i E t)";
    return j;
}

Json report_to_json(const VerificationReport &report)
{
    Json j;
    j["passed"] = report.passed();
    Json checks = Json::array();
    for (const Check &c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"value", number(c.value)},
                          {"tolerance", number(c.tolerance)},
                          {"detail", c.detail}});
    }
    j["checks"] = checks;
    return j;
}

Json preset_to_json(const Preset &preset)
{
    Json j;
    j["id"] = preset.id;
    j["family"] = std::string(to_string(preset.family));
    j["description"] = preset.description;
    j["default_N"] = preset.default_N;
    Json schema = Json::array();
    Params defaults;
    for (const ParamSpec &p : preset.params) {
        schema.push_back({{"name", p.name},
                          {"default", p.default_value},
                          {"sample_range", Json::array({p.lo, p.hi})},
                          {"meaning", p.meaning}});
        defaults[p.name] = p.default_value;
    }
    j["schema"] = schema;
    const ExpectedVerdict e = preset.expected(defaults, preset.default_N);
    j["expected"] = {{"solvability", std::string(to_string(e.solvability))},
                     {"ground_state", std::string(to_string(e.ground))},
                     {"energies", std::string(to_string(e.energies))}};
    return j;
}

} // namespace qesqnm

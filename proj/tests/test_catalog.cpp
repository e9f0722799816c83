#include "qesqnm/catalog.hpp"
#include "qesqnm/spectrum.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace qesqnm;

namespace {

bool all_real(const Spectrum &sp)
{
    for (const SpectralLevel &lv : sp.levels) {
        if (std::abs(lv.E.imag()) > 1e-9 * (1.0 + std::abs(lv.E.real()))) {
            return false;
        }
    }
    return true;
}

void check_verdict(const Preset &p, const Params &prm, int N)
{
    const ModelSpec s = p.build(prm, N);
    const ExpectedVerdict e = p.expected(prm, N);
    const ValidationReport v = validate_model(s);
    CHECK(v.valid);
    CHECK_FALSE(validate_model(p.perturb(s)).valid);
    const Spectrum sp = solve_spectrum(s);
    CHECK(sp.solvability.kind == e.solvability);
    CHECK(sp.ground.overall == e.ground);
    if (e.energies != EnergyExpectation::Unspecified) {
        CHECK(all_real(sp) == (e.energies == EnergyExpectation::Real));
    }
}

} // namespace

TEST_CASE("catalog lists twenty distinct presets")
{
    const std::vector<Preset> &all = list_presets();
    CHECK(all.size() == 20);
    std::set<std::string> ids;
    for (const Preset &p : all) {
        ids.insert(p.id);
        CHECK(&find_preset(p.id) == &p);
        CHECK_FALSE(p.description.empty());
        for (const ParamSpec &ps : p.params) {
            CHECK(ps.lo <= ps.hi);
        }
    }
    CHECK(ids.size() == all.size());
    CHECK_THROWS_AS(find_preset("no-such-model"), ModelError);
}

TEST_CASE("defaults validate and the constrained coefficient cannot move")
{
    for (const Preset &p : list_presets()) {
        CAPTURE(p.id);
        check_verdict(p, resolve_params(p, {}), p.default_N);
    }
}

TEST_CASE("random draws reproduce the expected verdicts")
{
    std::mt19937_64 rng(20240601);
    for (const Preset &p : list_presets()) {
        CAPTURE(p.id);
        for (int t = 0; t < 12; ++t) {
            const int N = 1 + t % 3;
            const Params prm = random_params(p, N, rng);
            CAPTURE(N);
            check_verdict(p, prm, N);
        }
    }
}

TEST_CASE("parameter errors are reported by name")
{
    CHECK_THROWS_AS(instantiate("scarf2-exact", {{"c", 1.0}}), ModelError);
    CHECK_THROWS_AS(instantiate("scarf2-exact", {{"alpha", std::nan("")}}), ModelError);
    try {
        instantiate("morse-exact", {{"a", 1.0}});
        FAIL("accepted A0 > 0");
    } catch (const ConstraintViolation &e) {
        CHECK(std::string(e.what()).find("A0 < 0") != std::string::npos);
    }
    CHECK_THROWS_AS(instantiate("scarf2-qnm", {{"c", 0.0}}), ConstraintViolation);
}

TEST_CASE("genpt-qes-qnm needs a > N + 1/2")
{
    for (int N : {1, 2, 3}) {
        CHECK_THROWS_AS(instantiate("genpt-qes-qnm", {{"a", N + 0.5}}, N), ConstraintViolation);
        CHECK_THROWS_AS(instantiate("genpt-qes-qnm", {{"a", N + 0.25}}, N), ConstraintViolation);
        const ModelSpec s = instantiate("genpt-qes-qnm", {{"a", N + 0.75}}, N);
        CHECK(validate_model(s).valid);
    }
}

TEST_CASE("negative presets are non-normalizable")
{
    for (const char *id : {"scarf2-qes-real-none", "shifted-osc", "scarf1"}) {
        CAPTURE(id);
        const Spectrum sp = solve_spectrum(instantiate(id));
        CHECK(sp.ground.overall == Normalizability::NonNormalizable);
        for (const SpectralLevel &lv : sp.levels) {
            CHECK(lv.mode == ModeClass::NonNormalizable);
        }
    }
}

TEST_CASE("genpt-qes-real gives real bound states")
{
    const Spectrum sp = solve_spectrum(instantiate("genpt-qes-real"));
    for (const SpectralLevel &lv : sp.levels) {
        CHECK(lv.mode == ModeClass::BoundState);
        CHECK(std::abs(lv.E.imag()) < 1e-9);
    }
}

TEST_CASE("Scarf I with A2 != 0 can still bind")
{
    // Both end exponents are positive once A1 > |A0 + A2|.
    ModelSpec s;
    s.family = Family::Scarf1;
    s.q = {-1.0, 0.0, 1.0, {}};
    s.p = {0.5, 2.0, 0.0, {}};
    s.level_count = 1;
    CHECK(validate_model(s).valid);
    const Spectrum sp = solve_spectrum(s);
    CHECK(sp.ground.overall == Normalizability::Normalizable);

    // A Bethe root on the endpoint z = -1 adds two to the exponent there.
    s.p = {1.0, 0.5, 0.0, {}};
    const Spectrum edge = solve_spectrum(s);
    CHECK(edge.ground.overall == Normalizability::NonNormalizable);
    REQUIRE(edge.levels.size() == 2);
    const SpectralLevel &lv = edge.levels[0];
    REQUIRE(lv.rootset.roots.size() == 1);
    CHECK(std::abs(lv.rootset.roots[0] + 1.0) < 1e-12);
    CHECK(lv.E.real() == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(lv.mode == ModeClass::BoundState);
    CHECK(edge.levels[1].mode == ModeClass::NonNormalizable);
}

TEST_CASE("reality diagnostics name the offending terms")
{
    ModelSpec s = instantiate("scarf2-exact");
    s.p.A0 += cplx(0.0, 0.01);
    const ValidationReport r = validate_model(s);
    CHECK_FALSE(r.valid);
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].check == "reality");
    CHECK(r.violations[0].message.find("tanh*sech") != std::string::npos);

    ModelSpec wrong = instantiate("morse-exact");
    wrong.q.gamma = 1.0;
    CHECK_FALSE(validate_model(wrong).valid);
}

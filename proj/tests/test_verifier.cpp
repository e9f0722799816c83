#include "oracles.hpp"

#include "qesqnm/catalog.hpp"
#include "qesqnm/verifier.hpp"

#include <doctest.h>

#include <random>

using namespace qesqnm;

TEST_CASE("summation identities hold for arbitrary distinct roots")
{
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int n = 2; n <= 9; ++n) {
        std::vector<cplx> z;
        for (int k = 0; k < n; ++k) {
            z.emplace_back(g(rng), g(rng));
        }
        const SummationReport r = summation_identities(z);
        CHECK_FALSE(r.clustered);
        CHECK(r.pairwise_deviation < 1e-12);
        CHECK(r.double_sum_deviation < 1e-12);
    }
    const SummationReport twin = summation_identities(std::vector<cplx>{1.0, 1.0 + 1e-12, 3.0});
    CHECK(twin.clustered);
}

TEST_CASE("residuals converge at second order for every preset")
{
    for (const Preset &p : list_presets()) {
        CAPTURE(p.id);
        const ModelSpec s = instantiate(p.id);
        for (const SpectralLevel &lv : solve_spectrum(s).levels) {
            const Grid g = default_grid(s, lv.E, 2001);
            const ConvergenceEstimate c = convergence_order(s, lv.rootset, g);
            CHECK(c.order == doctest::Approx(2.0).epsilon(0.15));
        }
    }
}

TEST_CASE("residual detects a wrong energy")
{
    const ModelSpec s = instantiate("morse-exact");
    const SpectralLevel lv = solve_spectrum(s).levels[1];
    const Grid g = default_grid(s, lv.E, 2001);
    const double good = residual_norm(s, lv.rootset, g).l2;
    const double bad = residual_norm(s, lv.rootset, g, lv.E + 1.0).l2;
    CHECK(bad > 0.1);
    CHECK(bad > 100 * good);
}

TEST_CASE("finite-difference oracle reproduces the harmonic ladder")
{
    // Q = 1, P = z: harmonic ladder E_n = 2n + 1
    ModelSpec s;
    s.q = {0.0, 0.0, 1.0, {}};
    s.p = {0.0, 1.0, 0.0, {}};
    s.level_count = 3;
    const Grid g = oracle_grid(s, 7.0, 4001);
    const OracleResult r = fd_oracle(s, g, 6);
    REQUIRE(r.eigenvalues.size() == 6);
    for (int n = 0; n < 6; ++n) {
        CHECK(r.eigenvalues[n] == doctest::Approx(2.0 * n + 1.0).epsilon(1e-4));
    }
    CHECK(r.truncation_ok);
}

TEST_CASE("truncation sensitivity catches a clipped box")
{
    ModelSpec s;
    s.q = {0.0, 0.0, 1.0, {}};
    s.p = {0.0, 1.0, 0.0, {}};
    s.level_count = 1;
    Grid g{-1.0, 1.0, 801};
    const OracleResult r = fd_oracle(s, g, 2);
    CHECK_FALSE(r.truncation_ok);
}

TEST_CASE("sextic levels are found by the oracle")
{
    for (int N : {1, 2, 3}) {
        const ModelSpec s = instantiate("sextic-qes", {}, N);
        const Spectrum sp = solve_spectrum(s);
        cplx top = 0.0;
        for (const SpectralLevel &lv : sp.levels) {
            top = std::abs(lv.E) > std::abs(top) ? lv.E : top;
        }
        const OracleResult r = fd_oracle(s, oracle_grid(s, top, 4001), 2 * N + 4);
        CHECK(r.truncation_ok);
        for (const SpectralLevel &lv : sp.levels) {
            double best = 1e300;
            for (double e : r.eigenvalues) {
                best = std::min(best, std::abs(e - lv.E.real()) / std::max(1.0, std::abs(lv.E.real())));
            }
            CHECK(best < 1e-3);
        }
    }
}

TEST_CASE("parity maps the mirror Morse model onto the Morse QNM ladder")
{
    for (double c : {0.5, 1.0, 2.0}) {
        for (double d : {0.0, 1.0, 2.0}) {
            for (int N = 1; N <= 5; ++N) {
                const ModelSpec s = instantiate("morse-qnm-mirror", {{"c", c}, {"d", d}}, N);
                REQUIRE(is_mirror_morse(s));
                const ParityReport r = parity_equivalence(s);
                CHECK(r.passed());
                CHECK(r.max_energy_diff < 1e-10);
                CHECK(r.max_mirror_bae < 1e-9);
                CHECK(r.max_ratio_deviation < 1e-8);
            }
        }
    }
    CHECK_FALSE(is_mirror_morse(instantiate("morse-qnm")));
    CHECK_THROWS_AS(parity_equivalence(instantiate("morse-qnm")), ModelError);
}

TEST_CASE("worked example: mirror Morse with c 1, d 2, N 2")
{
    const Spectrum sp = solve_spectrum(instantiate("morse-qnm-mirror", {{"c", 1}, {"d", 2}}, 2));
    REQUIRE(sp.levels.size() == 3);
    CHECK(std::abs(sp.levels[0].E - cplx(-5.25, -5.0)) < 1e-10);
    CHECK(std::abs(sp.levels[1].E - cplx(-1.25, -3.0)) < 1e-10);
    CHECK(std::abs(sp.levels[2].E - cplx(0.75, -1.0)) < 1e-10);
}

TEST_CASE("verify_model passes on every preset")
{
    for (const Preset &p : list_presets()) {
        CAPTURE(p.id);
        const VerificationReport r = verify_model(instantiate(p.id));
        for (const Check &c : r.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.passed);
        }
    }
}

TEST_CASE("verify_model fails under an impossible tolerance")
{
    VerifyOptions o;
    o.tol = 1e-300;
    CHECK_FALSE(verify_model(instantiate("scarf2-qes-qnm"), o).passed());
}

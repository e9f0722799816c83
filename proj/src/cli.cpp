#include "qesqnm/cli.hpp"

#include "qesqnm/catalog.hpp"
#include "qesqnm/json_io.hpp"
#include "qesqnm/spectrum.hpp"
#include "qesqnm/verifier.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace qesqnm {

namespace {

struct RunConfig {
    std::string preset;
    std::string spec_file;
    std::string spec_inline;
    std::optional<int> N;
    std::map<std::string, double> params;
    int grid_points = 2001;
    std::optional<double> x_lo;
    std::optional<double> x_hi;
    double tol = 1e-9;
    std::string out;
    std::string terms_out;
    int level = 0;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sends an artifact to --out or to the given stream.
void emit(const RunConfig &cfg, std::ostream &out, const std::string &text)
{
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
        throw InputError("cannot open '" + cfg.out + "' for writing");
    }
    f << text;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string &path)
{
    std::ifstream f(path);
    if (!f) {
        throw InputError("cannot read '" + path + "'");
    }
    return Json::parse(f);
}

ModelSpec load_spec(const RunConfig &cfg)
{
    const int sources = !cfg.preset.empty() + !cfg.spec_file.empty() + !cfg.spec_inline.empty();
    if (sources != 1) {
        throw InputError("give exactly one of --preset, --spec-file, --spec");
    }
    if (!cfg.preset.empty()) {
        return instantiate(cfg.preset, cfg.params, cfg.N);
    }
    if (!cfg.params.empty()) {
        throw InputError("family parameters need --preset");
    }
    ModelSpec spec =
        spec_from_json(cfg.spec_file.empty() ? Json::parse(cfg.spec_inline) : read_json_file(cfg.spec_file));
    if (cfg.N) {
        spec.level_count = *cfg.N;
    }
    return spec;
}

/// Rejects higher-type and invalid specs before any solve.
void require_valid(const ModelSpec &spec)
{
    if (classify_solvability(spec.p, spec.q).kind == Solvability::HigherType) {
        throw UnsupportedModel("max{m, n-1} >= 3 is outside the generated scope");
    }
    const ValidationReport r = validate_model(spec);
    if (!r.valid) {
        std::string msg = "invalid model";
        for (const Diagnostic &d : r.violations) {
            msg += "\n  " + d.check + ": " + d.message;
        }
        throw InputError(msg);
    }
}

VerifyOptions verify_options(const RunConfig &cfg)
{
    VerifyOptions o;
    o.grid_points = cfg.grid_points;
    o.x_lo = cfg.x_lo;
    o.x_hi = cfg.x_hi;
    o.tol = cfg.tol;
    return o;
}

std::string g17(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int cmd_catalog(const RunConfig &cfg, std::ostream &out)
{
    Json list = Json::array();
    for (const Preset &p : list_presets()) {
        list.push_back(preset_to_json(p));
    }
    emit(cfg, out, dump(list));
    return kExitOk;
}

int cmd_solve(const RunConfig &cfg, std::ostream &out)
{
    const ModelSpec spec = load_spec(cfg);
    require_valid(spec);
    emit(cfg, out, dump(spectrum_to_json(solve_spectrum(spec))));
    return kExitOk;
}

int cmd_potential(const RunConfig &cfg, std::ostream &out, std::ostream &err)
{
    const ModelSpec spec = load_spec(cfg);
    require_valid(spec);
    const Spectrum sp = solve_spectrum(spec);
    if (cfg.level < 0 || cfg.level >= static_cast<int>(sp.levels.size())) {
        throw InputError("--level must lie in [0, " + std::to_string(sp.levels.size() - 1) + "]");
    }
    const SpectralLevel &lv = sp.levels[cfg.level];
    Grid grid = default_grid(spec, lv.E, cfg.grid_points);
    if (cfg.x_lo) {
        grid.x_lo = *cfg.x_lo;
    }
    if (cfg.x_hi) {
        grid.x_hi = *cfg.x_hi;
    }
    if (!(grid.x_hi > grid.x_lo)) {
        throw InputError("--x-hi must exceed --x-lo");
    }
    const Eigenfunction f = eigenfunction(spec, lv.rootset);
    std::vector<cplx> logs(grid.points);
    double peak = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid.points; ++i) {
        logs[i] = f.log_value(grid.x(i));
        if (std::isfinite(logs[i].real())) {
            peak = std::max(peak, logs[i].real());
        }
    }
    std::ostringstream csv;
    csv << "x,V_re,V_im,phi_re,phi_im\n";
    for (int i = 0; i < grid.points; ++i) {
        const double x = grid.x(i);
        const cplx v = sp.shape.shape_value(x);
        const cplx phi = std::exp(logs[i] - peak);
        csv << g17(x) << ',' << g17(v.real()) << ',' << g17(v.imag()) << ',' << g17(phi.real()) << ','
            << g17(phi.imag()) << '\n';
    }
    emit(cfg, out, csv.str());

    Json terms;
    terms["level"] = lv.n;
    terms["E"] = complex_to_json(lv.E);
    terms["potential_terms"] = potential_terms_to_json(sp.shape);
    terms["potential_offset"] = complex_to_json(sp.shape.offset);
    terms["x_range"] = Json::array({grid.x_lo, grid.x_hi});
    const std::string path = !cfg.terms_out.empty() ? cfg.terms_out
                             : !cfg.out.empty()     ? cfg.out + ".terms.json"
                                                    : std::string();
    if (path.empty()) {
        err << dump(terms);
    } else {
        std::ofstream t(path, std::ios::binary);
        if (!t) {
            throw InputError("cannot open '" + path + "' for writing");
        }
        t << dump(terms);
    }
    return kExitOk;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out)
{
    const ModelSpec spec = load_spec(cfg);
    if (classify_solvability(spec.p, spec.q).kind == Solvability::HigherType) {
        throw UnsupportedModel("max{m, n-1} >= 3 is outside the generated scope");
    }
    const VerificationReport report = verify_model(spec, verify_options(cfg));
    emit(cfg, out, dump(report_to_json(report)));
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_spectrum(const RunConfig &cfg, std::ostream &out)
{
    const ModelSpec spec = load_spec(cfg);
    require_valid(spec);
    Json levels = Json::array();
    for (const LadderEntry &e : exact_spectrum(spec, spec.level_count)) {
        levels.push_back({{"n", e.n}, {"E", complex_to_json(e.E)}, {"beyond_turnover", e.beyond_turnover}});
    }
    Json j;
    j["spec"] = spec_to_json(spec);
    j["ladder"] = levels;
    emit(cfg, out, dump(j));
    return kExitOk;
}

void add_input_options(CLI::App *cmd, RunConfig &cfg)
{
    cmd->add_option("--preset", cfg.preset, "catalog preset id");
    cmd->add_option("--spec-file", cfg.spec_file, "JSON spec (or solve output) to read");
    cmd->add_option("--spec", cfg.spec_inline, "inline JSON spec");
    cmd->add_option("--N", cfg.N, "polynomial degree bound N")->check(CLI::NonNegativeNumber);
    for (const char *name : {"alpha", "a", "b", "c", "d"}) {
        cmd->add_option_function<double>(
            std::string("--") + name, [&cfg, name](double v) { cfg.params[name] = v; }, "preset parameter");
    }
    cmd->add_option_function<double>(
        "--gamma-param", [&cfg](double v) { cfg.params["gamma"] = v; }, "preset parameter gamma");
    cmd->add_option("--out", cfg.out, "output file (default: stdout)");
}

void add_grid_options(CLI::App *cmd, RunConfig &cfg)
{
    cmd->add_option("--grid-points", cfg.grid_points, "grid points")->check(CLI::Range(64, 1000001));
    cmd->add_option("--x-lo", cfg.x_lo, "left grid end");
    cmd->add_option("--x-hi", cfg.x_hi, "right grid end");
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    RunConfig cfg;
    CLI::App app{"Spectra of quasi-exactly solvable and quasinormal-mode potentials"};
    app.require_subcommand(1);
    CLI::App *catalog = app.add_subcommand("catalog", "list presets with parameter schemas");
    catalog->add_option("--out", cfg.out, "output file (default: stdout)");
    CLI::App *solve = app.add_subcommand("solve", "levels, Bethe roots, energies and mode classes");
    add_input_options(solve, cfg);
    CLI::App *potential = app.add_subcommand("potential", "CSV of V(x) and phi(x) plus term breakdown");
    add_input_options(potential, cfg);
    add_grid_options(potential, cfg);
    potential->add_option("--level", cfg.level, "level index");
    potential->add_option("--terms-out", cfg.terms_out, "term breakdown JSON (default: <out>.terms.json)");
    CLI::App *verify = app.add_subcommand("verify", "run the verification checks");
    add_input_options(verify, cfg);
    add_grid_options(verify, cfg);
    verify->add_option("--tol", cfg.tol, "Bethe residual tolerance")->check(CLI::PositiveNumber);
    CLI::App *spectrum = app.add_subcommand("spectrum", "closed-form ladder for A2 = 0");
    add_input_options(spectrum, cfg);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        const std::vector<CLI::App *> subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }

    try {
        if (catalog->parsed()) {
            return cmd_catalog(cfg, out);
        }
        if (solve->parsed()) {
            return cmd_solve(cfg, out);
        }
        if (potential->parsed()) {
            return cmd_potential(cfg, out, err);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        return cmd_spectrum(cfg, out);
    } catch (const UnsupportedModel &e) {
        err << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const nlohmann::json::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}

} // namespace qesqnm

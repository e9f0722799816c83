#ifndef QESQNM_VERIFIER_HPP
#define QESQNM_VERIFIER_HPP

#include "qesqnm/bethe.hpp"
#include "qesqnm/model.hpp"
#include "qesqnm/spectrum.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qesqnm {

/// Uniform grid on [x_lo, x_hi] with `points` nodes, h = (x_hi - x_lo)/(points - 1).
struct Grid {
    double x_lo = 0.0;
    double x_hi = 0.0;
    int points = 0;
    /// How many times the interval was shrunk to avoid non-finite values.
    int standoff_widenings = 0;

    double spacing() const { return (x_hi - x_lo) / (points - 1); }
    double x(int i) const { return x_lo + i * spacing(); }
    /// Same interval, 2M - 1 points (h halved).
    Grid refined() const;
};

/// Truncates the domain where |V(x) - E| >= 1e3 |E| + 1e3, capped at
/// 12 length units from the origin (12/sqrt|alpha| for the quadratic forms)
/// and kept 1e-3 length units off finite endpoints. Throws ModelError for
/// points < 64.
Grid default_grid(const ModelSpec &spec, cplx energy, int points);

struct ResidualNorm {
    double l2 = 0.0;  ///< ||r||_2 / ||phi||_2 over interior nodes
    double max = 0.0; ///< max|r| / max|phi|
    int standoff_widenings = 0;
};

/// r = -phi'' + (V - E) phi with the 3-point stencil. `energy` overrides the
/// level energy (used to show that a wrong E is detected).
ResidualNorm residual_norm(const ModelSpec &spec, const RootSet &level, const Grid &grid,
                           std::optional<cplx> energy = std::nullopt);

struct ConvergenceEstimate {
    double order = 0.0;
    ResidualNorm coarse;
    ResidualNorm fine;
    bool monotone = true;
};

/// log2 of the L2 residual ratio between `grid` and grid.refined().
ConvergenceEstimate convergence_order(const ModelSpec &spec, const RootSet &level,
                                      const Grid &grid);

struct OracleResult {
    std::vector<double> eigenvalues;
    std::vector<double> widened_eigenvalues;
    /// Relative shift of each eigenvalue under widening.
    std::vector<double> shifts;
    double max_truncation_shift = 0.0;
    bool truncation_ok = true;
    Grid grid;
};

/// Grid for the finite-difference oracle: like default_grid, but a regular
/// Linear-form model (no x^-2 term) is reflected onto a symmetric interval.
Grid oracle_grid(const ModelSpec &spec, cplx reference_energy, int points);

/// k lowest eigenvalues of the Dirichlet 3-point discretization of
/// -d^2/dx^2 + V(x), by bisection. The solve is repeated on a domain widened
/// by 25% at the same spacing; relative shifts above truncation_tol are
/// flagged.
/// Throws ModelError if V has an imaginary part above 1e-9.
OracleResult fd_oracle(const ModelSpec &spec, const Grid &grid, int k,
                       double truncation_tol = 1e-6);

struct SummationReport {
    /// max_k | sum_{l!=k} z_l/(z_l-z_k) - (N-1 - sum_{l!=k} z_k/(z_k-z_l)) |
    double pairwise_deviation = 0.0;
    /// | sum_k sum_{l!=k} z_k/(z_k-z_l) - N(N-1)/2 |
    double double_sum_deviation = 0.0;
    bool clustered = false;
};

SummationReport summation_identities(std::span<const cplx> roots);

struct ParityLevel {
    int mirror_level = 0;     ///< level index n in the mirror model
    cplx energy;              ///< solver energy of the input model
    cplx mirror_energy;       ///< closed-form energy of the mirror level
    double energy_diff = 0.0;
    double mirror_bae_max = 0.0;
    double ratio_deviation = 0.0;
};

struct ParityReport {
    std::vector<ParityLevel> levels;
    double max_energy_diff = 0.0;
    double max_mirror_bae = 0.0;
    double max_ratio_deviation = 0.0;
    bool bae_ok = true;
    bool energy_ok = true;
    bool eigenfunction_ok = true;
    bool passed() const { return bae_ok && energy_ok && eigenfunction_ok; }
};

/// Whether the spec has the A2 = -ic, A1/alpha = id/2 + N + 1/2, A0 = 0 Morse
/// shape.
bool is_mirror_morse(const ModelSpec &spec);

/// Maps each level of the mirror Morse model through x -> -x (z -> 1/z) onto
/// the exactly solvable Morse QNM model with A0 = ic, 2 A1/alpha + 1 = -id
/// and checks Bethe equations, energies and eigenfunction ratios. Throws
/// ModelError if the spec is not of that shape.
ParityReport parity_equivalence(const ModelSpec &spec, double bae_tol = 1e-9,
                                double energy_tol = 1e-10, double ratio_tol = 1e-8);

struct Check {
    std::string name;
    bool passed = true;
    double value = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int grid_points = 2001;
    std::optional<double> x_lo;
    std::optional<double> x_hi;
    double tol = 1e-9;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool passed() const;
};

/// Runs every applicable check on a spec: Bethe residuals, Lambda
/// consistency, summation identities, residual convergence per level,
/// closed-form ladder (A2 = 0), conjugation closure and real energies for
/// the singular Scarf shape, the oracle for real bound states, and parity
/// equivalence for the mirror Morse shape.
VerificationReport verify_model(const ModelSpec &spec, const VerifyOptions &options = {});

} // namespace qesqnm

#endif

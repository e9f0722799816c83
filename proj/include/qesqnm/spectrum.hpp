#ifndef QESQNM_SPECTRUM_HPP
#define QESQNM_SPECTRUM_HPP

#include "qesqnm/bethe.hpp"
#include "qesqnm/coordinates.hpp"
#include "qesqnm/model.hpp"
#include "qesqnm/prepotential.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qesqnm {

/// One shape function of the family basis with its coefficient, e.g.
/// {"sech^2", c} for the Sinh form.
struct PotentialTerm {
    std::string shape;
    cplx coefficient;
};

/// The N-dependent potential U(z) = [P^2 + P Q'/2 - Q P'] / Q - 2 A2 N z split
/// into x-dependent shape terms plus a constant. The basis per form:
///
///   Constant  x^4, x^3, x^2, x
///   Linear    x^6, x^4, x^2, x^-2
///   Sinh      cosh^2, sinh, sech^2, tanh*sech
///   Exp       exp(2u), exp(u), exp(-u), exp(-2u)
///   Cosh      sinh^2, cosh, cosech^2, coth*cosech
///   Sin       cos^2, sin, sec^2, tan*sec
///
/// with u = sqrt|alpha| x.
struct PotentialShape {
    CanonicalModel model;
    std::vector<PotentialTerm> terms;
    cplx offset{0.0}; ///< constant part of U

    /// Sum of the shape terms (no constant).
    cplx shape_value(double x) const;
};

PotentialShape potential_shape(const ModelSpec &spec);

/// `count` points spread over the interior of the domain (8 length scales
/// for unbounded sides).
std::vector<double> interior_samples(const CanonicalCoordinate &c, int count);

/// U(z) of the canonical model at canonical z.
cplx gauged_potential(const CanonicalModel &model, cplx z);

/// V_N(x) = V(x) + C with H_N phi_N = 0 and C = -E.
struct PotentialAssembly {
    PotentialShape shape;
    cplx constant{0.0};
    double max_imag_leak = 0.0;
    std::vector<Diagnostic> diagnostics;

    cplx V(double x) const { return shape.shape_value(x); }
    cplx V_N(double x) const { return shape.shape_value(x) + constant; }
    cplx energy() const { return -constant; }
};

/// Builds the split and checks that V(x) is real on 64 interior samples
/// (|Im| <= 1e-9 (1 + |Re|)); leakage is reported as a diagnostic naming the
/// offending term.
PotentialAssembly assemble_potential(const ModelSpec &spec, const RootSet &level);

/// E = Lambda - offset.
cplx level_energy(const ModelSpec &spec, const RootSet &level);

struct LadderEntry {
    int n;
    cplx E;
    /// n is past the top of the parabola in n (quadratic forms only).
    bool beyond_turnover = false;
};

/// Closed-form ladder of an A2 = 0 model, per form:
///   quadratic forms  E_n = 2 A1 n - alpha n^2 - A1^2/alpha
///   Constant         E_n = 2 A1 (n + 1/2) - A0^2/gamma
///   Linear           E_n = A1 (2n + 1/2 - 2 A0/beta)
/// Throws ModelError when A2 != 0.
std::vector<LadderEntry> exact_spectrum(const ModelSpec &spec, int n_max);

/// phi(x) = exp(-W0(x)) prod_k (z(x) - z_k), unnormalized.
class Eigenfunction {
public:
    Eigenfunction(const ModelSpec &spec, std::vector<cplx> roots);

    cplx operator()(double x) const;
    cplx log_value(double x) const;
    const Prepotential &prepotential() const { return prepotential_; }
    const std::vector<cplx> &roots() const { return roots_; }

private:
    Prepotential prepotential_;
    std::vector<cplx> roots_;
};

Eigenfunction eigenfunction(const ModelSpec &spec, const RootSet &level);

/// Time dependence exp(-i E t): Im E < 0 decays.
enum class ModeClass { BoundState, DecayingQNM, GrowingQNM, NonNormalizable };

std::string_view to_string(ModeClass m);

ModeClass classify_mode(Normalizability verdict, cplx E);

struct SpectralLevel {
    int n = 0;
    cplx E{0.0};
    ModeClass mode = ModeClass::NonNormalizable;
    RootSet rootset;
    EndpointReport endpoints;
};

struct Spectrum {
    ModelSpec spec; ///< as supplied
    CanonicalModel model;
    SolvabilityClass solvability;
    PotentialShape shape;
    std::vector<SpectralLevel> levels;
    /// Verdict for phi0 alone.
    EndpointReport ground;
};

/// Whole pipeline: canonicalize, algebraize, solve, assemble, classify.
Spectrum solve_spectrum(const ModelSpec &spec);

} // namespace qesqnm

#endif

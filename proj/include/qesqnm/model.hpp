#ifndef QESQNM_MODEL_HPP
#define QESQNM_MODEL_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qesqnm {

using cplx = std::complex<double>;

/// Raised for malformed input (bad coefficients, unknown family, ...).
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a model lies outside what the generators support
/// (max{m, n-1} >= 3, or a non-sinusoidal coordinate).
class UnsupportedModel : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a coordinate or evaluator is used outside its open domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// P(z) = A2 z^2 + A1 z + A0, with W0' z' = P(z).
///
/// `higher` holds A3, A4, ... and exists only so that the classifier can see
/// models beyond the generated scope.
struct PolyP {
    cplx A2{0.0}, A1{0.0}, A0{0.0};
    std::vector<cplx> higher;

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    /// -1 for the zero polynomial.
    int degree(double zero_tol = 0.0) const;
};

/// Q(z) = alpha z^2 + beta z + gamma, with z'^2 = Q(z).
struct PolyQ {
    cplx alpha{0.0}, beta{0.0}, gamma{0.0};
    std::vector<cplx> higher;

    cplx operator()(cplx z) const;
    cplx derivative(cplx z) const;
    int degree(double zero_tol = 0.0) const;
    bool is_real() const;
};

enum class Family { Scarf2, Morse, GenPoschlTeller, ShiftedOsc, RadialOsc, Scarf1, Custom };

std::string_view to_string(Family f);
/// Throws ModelError for an unknown tag.
Family family_from_string(std::string_view s);

/// Complete definition of one quantum system: the two polynomials, the
/// degree N of p_N and a family tag.
struct ModelSpec {
    PolyP p;
    PolyQ q;
    int level_count = 0;
    Family family = Family::Custom;
};

enum class Solvability { ExactlySolvable, QesType1, HigherType };

std::string_view to_string(Solvability s);

struct SolvabilityClass {
    Solvability kind;
    int m; ///< degree of P
    int n; ///< degree of Q
};

/// Structural classification by max{m, n-1}: <= 1 exact, == 2 type-1 QES,
/// >= 3 higher type. Degrees use |c| <= zero_tol as the zero test.
SolvabilityClass classify_solvability(const PolyP &p, const PolyQ &q, double zero_tol = 0.0);

struct Diagnostic {
    std::string check;
    std::string message;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Diagnostic> violations;
    /// Largest |Im V| / (1 + |Re V|) seen by the sampled reality check.
    double max_imag_leak = 0.0;

    void fail(std::string check, std::string message);
};

/// Structural checks, a sampled reality check of the x-dependent potential
/// and the closed-form reality constraints of the named families. Never
/// throws for a well-formed spec; problems are collected as diagnostics.
ValidationReport validate_model(const ModelSpec &spec);

} // namespace qesqnm

#endif

#ifndef QESQNM_PREPOTENTIAL_HPP
#define QESQNM_PREPOTENTIAL_HPP

#include "qesqnm/coordinates.hpp"
#include "qesqnm/model.hpp"

#include <span>
#include <string_view>
#include <vector>

namespace qesqnm {

/// Closed-form W0 for a canonicalized model. Additive constants follow the
/// textbook forms (e.g. the Cosh form uses ln tanh(u/2) for coth^-1 cosh u,
/// the Linear form uses (2 A0/beta) ln x).
class Prepotential {
public:
    explicit Prepotential(const ModelSpec &spec);

    const CanonicalModel &model() const { return model_; }
    const CanonicalCoordinate &coordinate() const { return model_.coordinate; }

    /// Throws DomainError outside the open domain.
    cplx w0(double x) const;
    /// P(z)/z' evaluated at z(x).
    cplx w0_prime(double x) const;
    cplx phi0(double x) const;

    /// -W0(x) + sum_k log(z(x) - z_k): the complex log of phi_N without
    /// overflow. Root values are in the canonical variable.
    cplx log_phi(double x, std::span<const cplx> roots) const;

private:
    CanonicalModel model_;
};

/// W0(x) - W0(x_ref) by adaptive Gauss-Kronrod quadrature of P(z)/Q(z) along
/// z, independent of the closed forms.
cplx w0_quadrature(const ModelSpec &spec, double x_ref, double x);

enum class GrowthKind { SuperExponential, Exponential, Power, Bounded };
enum class EndpointVerdict { Decaying, Growing, PowerDivergent, Bounded };
enum class Normalizability { Normalizable, NonNormalizable, QnmOutgoing };

std::string_view to_string(GrowthKind g);
std::string_view to_string(EndpointVerdict v);
std::string_view to_string(Normalizability n);

struct EndpointBehavior {
    bool upper = false;     ///< hi end of the domain when true
    bool finite = false;    ///< endpoint at finite x
    GrowthKind kind = GrowthKind::Bounded;
    double rate = 0.0;      ///< leading coefficient of log|phi| in the kind's variable
    EndpointVerdict verdict = EndpointVerdict::Bounded;
    bool admissible = false; ///< acceptable for a normalizable state
    bool trend_consistent = true;
};

struct EndpointReport {
    EndpointBehavior lower;
    EndpointBehavior upper;
    Normalizability overall = Normalizability::NonNormalizable;
    bool trend_consistent = true;
};

/// Asymptotics of |phi0 * p| with p of the given degree, `zero_roots` of
/// which sit at z = 0; roots on a finite end of the Sin and Cosh forms are
/// read from `roots`. Verdicts come from exponent bookkeeping per canonical
/// form; a sampled trend test on a geometric approach to each end sets the
/// trend_consistent flags.
///
/// QnmOutgoing is returned when nothing grows super-exponentially and no
/// finite endpoint diverges, but some infinite end is not decaying: an
/// outgoing-wave profile that needs a complex energy to be a QNM.
EndpointReport endpoint_analysis(const ModelSpec &spec, int degree, int zero_roots = 0,
                                 std::span<const cplx> roots = {});

} // namespace qesqnm

#endif

#ifndef QESQNM_BETHE_HPP
#define QESQNM_BETHE_HPP

#include "qesqnm/model.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <vector>

namespace qesqnm {

using ComplexMatrix = Eigen::MatrixXcd;

/// The gauged operator -Q d^2 + (2P - Q'/2) d - 2 A2 N z restricted to
/// polynomials of degree <= N, in the monomial basis. Entry (i, j) is the
/// coefficient of z^i in the image of z^j. Column j has at most four
/// nonzeros: rows j+1, j, j-1, j-2.
struct GaugedMatrix {
    ComplexMatrix entries;
    int N = 0;

    /// No entries above the diagonal (A2 != 0 with beta = gamma = A0 = 0).
    bool lower_triangular() const;
    /// No entries below the diagonal (A2 == 0).
    bool upper_triangular() const;
};

/// One solvable level: the eigenvalue Lambda of the gauged matrix, the zeros
/// of the associated polynomial (canonical variable) and the Bethe residuals.
struct RootSet {
    cplx lambda{0.0};
    std::vector<cplx> roots;
    /// Ascending powers; leading coefficient 1.
    std::vector<cplx> coefficients;
    std::vector<cplx> residuals;
    double residual_max = 0.0;
    /// max(1, max|z_k|^2 * max|coefficient of P, Q|)
    double residual_scale = 1.0;
    int zero_roots = 0;
    std::vector<std::string> flags;

    int degree() const { return static_cast<int>(roots.size()); }
    bool has_flag(std::string_view f) const;
};

/// Builds the matrix for the canonicalized spec. Throws UnsupportedModel for
/// higher-type specs.
GaugedMatrix algebraize(const ModelSpec &spec);

/// All N+1 levels. Triangular matrices (A2 == 0, or the lower-triangular
/// exact-in-disguise case) are solved by substitution so that exact zero
/// coefficients survive; the general case uses a dense complex eigensolver
/// followed by Newton refinement of each eigenpair.
///
/// Order: by polynomial degree, then Re Lambda, then Im Lambda. Roots within
/// a set are ascending by (Re, Im).
std::vector<RootSet> qes_levels(const ModelSpec &spec);

struct BaeResult {
    std::vector<cplx> residuals;
    bool clustered = false;
};

/// Residual k = A2 z_k^2 + (A1 - alpha/2) z_k + A0 - beta/4
///              - sum_{l != k} Q(z_k)/(z_k - z_l).
/// Coincident roots at a double zero of Q contribute their limiting value 0;
/// any other pair closer than 1e-10 * scale sets `clustered`.
BaeResult bae_residuals(const ModelSpec &spec, std::span<const cplx> roots);

struct ConjugationClosure {
    bool closed = false;
    /// partner[k] is the index of the root matching -conj(z_k).
    std::vector<int> partner;
};

/// Whether the multiset is invariant under z -> -conj(z) within tol.
ConjugationClosure conjugation_closure(std::span<const cplx> roots, double tol = 1e-9);

} // namespace qesqnm

#endif

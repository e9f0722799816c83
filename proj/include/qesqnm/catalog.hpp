#ifndef QESQNM_CATALOG_HPP
#define QESQNM_CATALOG_HPP

#include "qesqnm/model.hpp"
#include "qesqnm/prepotential.hpp"

#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qesqnm {

/// Thrown by instantiate() when a parameter is outside its schema; the
/// message names the violated constraint.
class ConstraintViolation : public ModelError {
public:
    using ModelError::ModelError;
};

using Params = std::map<std::string, double>;

struct ParamSpec {
    std::string name;
    double default_value;
    /// Sampling box for random draws; constraints are checked separately.
    double lo;
    double hi;
    std::string meaning;
};

enum class EnergyExpectation { Real, Complex, Unspecified };

struct ExpectedVerdict {
    Solvability solvability;
    /// Verdict for phi0 (degree-0 polynomial factor).
    Normalizability ground;
    EnergyExpectation energies;
};

struct Preset {
    std::string id;
    Family family;
    std::string description;
    std::vector<ParamSpec> params;
    int default_N = 1;
    std::function<ModelSpec(const Params &, int)> build;
    /// Empty when every constraint holds.
    std::function<std::vector<std::string>(const Params &, int)> violations;
    std::function<ExpectedVerdict(const Params &, int)> expected;
    /// Moves the constrained coefficient by 1e-3 (the direction the reality
    /// constraint forbids).
    std::function<ModelSpec(ModelSpec)> perturb;
};

const std::vector<Preset> &list_presets();

/// Throws ModelError for an unknown id.
const Preset &find_preset(const std::string &id);

/// Fills missing parameters with defaults. Throws ModelError for unknown
/// ids or parameter names, ConstraintViolation for out-of-range values.
ModelSpec instantiate(const std::string &id, const Params &params = {},
                      std::optional<int> N = std::nullopt);

/// Complete parameter set with defaults applied.
Params resolve_params(const Preset &preset, const Params &params);

/// Uniform draw inside the sampling box that satisfies the constraints.
Params random_params(const Preset &preset, int N, std::mt19937_64 &rng);

} // namespace qesqnm

#endif

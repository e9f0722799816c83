#ifndef QESQNM_JSON_IO_HPP
#define QESQNM_JSON_IO_HPP

#include "qesqnm/bethe.hpp"
#include "qesqnm/catalog.hpp"
#include "qesqnm/model.hpp"
#include "qesqnm/spectrum.hpp"
#include "qesqnm/verifier.hpp"

#include <nlohmann/json.hpp>

namespace qesqnm {

using Json = nlohmann::ordered_json;

/// Complex numbers are two-element arrays [re, im].
Json complex_to_json(cplx z);
cplx complex_from_json(const Json &j);

/// {family, A2, A1, A0, alpha, beta, gamma, N}; optional "higher_p" /
/// "higher_q" arrays carry A3.. and the Q coefficients beyond z^2.
Json spec_to_json(const ModelSpec &spec);
/// Accepts a bare spec or any object with a "spec" member (so solve output
/// can be fed back in). Throws ModelError on missing or malformed keys.
ModelSpec spec_from_json(const Json &j);

/// {lambda, roots, residual_max, flags}
Json rootset_to_json(const RootSet &r);

/// {spec, classification, coordinate, ground_state, levels, potential_terms}
Json spectrum_to_json(const Spectrum &s);

Json potential_terms_to_json(const PotentialShape &shape);

Json report_to_json(const VerificationReport &report);

/// {id, family, description, default_N, schema: [...]}
Json preset_to_json(const Preset &preset);

} // namespace qesqnm

#endif

#pragma once

#include <utility>

#include <json.hpp>

#include "alvero/ace.hpp"
#include "alvero/multipoly.hpp"

namespace alvero {

inline constexpr int kSchemaVersion = 1;

/// [{"coeff": "-1", "exponents": [2, 0]}, ...] in decreasing grevlex order.
nlohmann::json terms_to_json(const MultiPoly& p);

/// {degree, level, pairs, roots, multiplicities, residual, per_pair_gaps,
/// level_gap, seed, iterations}; roots are the distinct cluster values.
nlohmann::json candidate_to_json(const AceCandidate& candidate, const AceSpec& spec);

/// Inverse of candidate_to_json. Residual and gaps are recomputed from the
/// roots rather than trusted. Accepts a bare candidate object or a report
/// carrying it under "candidate". Throws std::invalid_argument on malformed
/// input.
std::pair<AceSpec, AceCandidate> candidate_from_json(const nlohmann::json& j, double cluster_tol = kDefaultClusterTol);

}  // namespace alvero

#pragma once

#include <string>

#include <json.hpp>

#include "charfactor/factorizer.hpp"

namespace charfactor {

/// Schema {m, n, lambda, balanced, mu, w0_sign, etas, epsilon}; mu, w0_sign
/// and epsilon are null for a vanishing certificate and etas is empty.
nlohmann::json certificate_to_json(const FactorizationCertificate& cert);

/// Inverse of certificate_to_json. Validates shapes and dominance;
/// throws std::invalid_argument on malformed input.
FactorizationCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace charfactor

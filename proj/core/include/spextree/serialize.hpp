#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "spextree/covering.hpp"
#include "spextree/extremal.hpp"
#include "spextree/spectral.hpp"
#include "spextree/tree.hpp"
#include "spextree/verify.hpp"

namespace spextree {

/// Every JSON document carries "schema": kSchemaVersion.
inline constexpr const char* kSchemaVersion = "spextree/1";

nlohmann::json to_json(const SpectralValue& value);
nlohmann::json to_json(const TreeProfile& profile);
nlohmann::json to_json(const CoveringFamily& family);
nlohmann::json to_json(const GraphDescriptor& descriptor);
nlohmann::json to_json(const Prediction& prediction);
nlohmann::json to_json(const OracleResult& result);
nlohmann::json to_json(const VerificationReport& report);

/// Wraps a payload as {"schema": ..., <kind>: payload}.
nlohmann::json document(const std::string& kind, nlohmann::json payload);

/// "n,predicted_rho,oracle_rho,outcome" rows.
std::string to_csv(const VerificationReport& report);

}  // namespace spextree

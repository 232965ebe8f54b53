#pragma once

#include <json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vulngraph/bounds.hpp"
#include "vulngraph/harness.hpp"
#include "vulngraph/invariants.hpp"

namespace vulngraph {

/// Reals go out rounded to 12 significant digits so reports diff cleanly.
/// Non-finite values become null.
nlohmann::json real12(double x);
std::string format12(double x);

nlohmann::json to_json(const InvariantSet& inv);
nlohmann::json to_json(const BoundReport& r, double truth, double tolerance);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const BenchRow& row);

}  // namespace vulngraph

#pragma once

#include <string>

#include "json.hpp"

#include "aicbnb/cardinality.hpp"
#include "aicbnb/dataset.hpp"
#include "aicbnb/enumerate.hpp"
#include "aicbnb/solver.hpp"
#include "aicbnb/stepwise.hpp"

namespace aicbnb {

inline constexpr const char* kReportSchema = "aic-subset-report/1";

/// Doubles are stored as JSON numbers (round-trip exact); infinities, which
/// JSON numbers cannot carry, become the strings "inf" / "-inf".
nlohmann::json encode_number(double v);
double decode_number(const nlohmann::json& j);

nlohmann::json to_json(const IndexSet& s);
nlohmann::json to_json(const ObjectiveValue& v, int n);
nlohmann::json to_json(const Incumbent& inc, int n);
nlohmann::json to_json(const SolveReport& r, int n);
nlohmann::json to_json(const StepwiseResult& r, int n);
nlohmann::json to_json(const CardinalityResult& r, int n);
nlohmann::json to_json(const SweepReport& r, int n);
nlohmann::json to_json(const EnumerationResult& r, int n);
nlohmann::json to_json(const Standardization& s);

/// Solver tolerances and conventions worth pinning in every report.
nlohmann::json settings_json(const SolverConfig& cfg);

/// Wraps a payload in the versioned envelope: {"schema": ..., "kind": ...,
/// plus the payload's keys}.
nlohmann::json make_report(const std::string& kind, nlohmann::json payload);

void write_report(const std::string& path, const nlohmann::json& doc);

}  // namespace aicbnb

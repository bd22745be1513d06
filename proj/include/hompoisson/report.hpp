#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hompoisson/checks.hpp"

namespace hompoisson {

/// {identity, passed, witnesses[{basis, labels?, residual, symbolic_residual?}], parts?}.
/// Rationals are "p/q" strings. `basis` names the indices when they are basis indices.
nlohmann::ordered_json report_to_json(const CheckReport& report, const std::vector<std::string>& basis = {});

/// "PASS identity" / "FAIL identity" lines, witnesses indented beneath,
/// parts nested.
void print_report(std::ostream& out, const CheckReport& report, const std::vector<std::string>& basis = {},
                  int indent = 0);

/// Residual vector as "c1*name1 + c2*name2" (or "0").
std::string format_vector(const Vector& v, const std::vector<std::string>& basis);

}  // namespace hompoisson

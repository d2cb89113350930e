#pragma once

#include <string>
#include <vector>

#include "davenport/fine.hpp"
#include "davenport/identities.hpp"

namespace davenport {

/*
 * Report serialization. JSON is the primary machine format; each identity
 * report is the object {identity, params{...}, lhs, rhs, residual, bound,
 * bound_is_heuristic, pass} with params as a string-to-string map in
 * insertion order. CSV mirrors one row per report with params flattened to
 * "key=value" pairs joined by ';'. The table form is for terminals. All
 * numbers are emitted round-trip exact, so identical inputs yield
 * byte-identical output.
 */

std::string reports_json(const std::vector<IdentityReport>& reps);
std::string reports_csv(const std::vector<IdentityReport>& reps);
std::string reports_table(const std::vector<IdentityReport>& reps);

std::string fine_json(const FineScan& scan);
std::string fine_csv(const FineScan& scan);
std::string fine_table(const FineScan& scan);

std::string probe_json(const std::vector<ProbeRow>& rows);
std::string probe_csv(const std::vector<ProbeRow>& rows);
std::string probe_table(const std::vector<ProbeRow>& rows);

} // namespace davenport

#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "quiver/checks.hpp"
#include "quiver/families.hpp"
#include "quiver/spectra.hpp"

namespace quiver {

using Json = nlohmann::ordered_json;

/// {check, verdict, first_violation, margin, tolerance, quiver, sharp,
///  parameters, stats[, reason]}
Json to_json(const CheckReport& r);
/// Same schema with the per-k sequence table attached as "sequences".
Json to_json(const CheckReport& r, const SequenceTable& sequences);
Json to_json(const Certificate& c);
Json to_json(const SequenceTable& t);
Json to_json(const AggregateReport& a);

/// Batch file: {family, params: {n, m, loops, multi}, seed, trials, checks,
/// [explore_s3, tolerance, classical_bound, threshold_s, threads]}.
/// Throws ParseError on schema violations.
SearchSpec search_spec_from_json(const Json& j);
SearchSpec load_search_spec(const std::string& path);

}  // namespace quiver

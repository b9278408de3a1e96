#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "probkit/json_io.hpp"

namespace probkit {

struct SuiteSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t errors = 0;  // case could not run (hypothesis/spec errors)
};

/// Run one inequality case described as JSON. Cases carry an "id" plus the
/// case parameters; "mode" is "exact" (default where available) or "mc" with
/// "trials"/"seed". Missing seeds fall back to `default_seed`.
VerificationReport run_case(const Json& spec, std::uint64_t default_seed);

/// Run a config (JSON array of cases). Case errors are recorded per-case and
/// the suite continues. Reports come back in case order, independent of any
/// evaluation scheduling.
std::vector<VerificationReport> run_suite(const Json& config, std::uint64_t base_seed);

/// Deterministic default grid: >= 200 cases covering every inequality id,
/// with per-case seeds derived from `seed`.
Json default_suite_config(std::uint64_t seed);

SuiteSummary summarize(const std::vector<VerificationReport>& reports);

std::string reports_to_jsonl(const std::vector<VerificationReport>& reports);
/// Columns: inequality_id, bound, reference, slack, pass.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace probkit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dforge/cli/job.hpp"

namespace dforge::cli {

struct RunOptions {
  std::uint64_t seed = 0;
  /// τ-degree bound for non-CM certificates; defaults to deg_τ of the isogeny.
  std::optional<int> certify_bound;
  unsigned jobs = 1;
};

/// verify, degree, dual, j, find, project, classify, star-orbit.
const std::vector<std::string>& job_commands();

/// Runs one job command. Throws InputError for missing or malformed
/// parameters and Error for domain failures.
Json run_command(const std::string& command, const JobDocument& doc, const RunOptions& options);

/// The worked example over K = F_q(T)(√(T+1)) for odd q: every check is
/// reported with its outcome. Throws EvenCharacteristicUnsupported for q even
/// and InvalidArgument when q is not a prime power.
Json example35_report(std::uint64_t q, const RunOptions& options);

/// Copy of iso carrying a non-CM certificate for its source; MissingCertificate
/// when the bounded endomorphism search finds more than φ_A.
Isogeny certify(const Isogeny& iso, const RunOptions& options);

}  // namespace dforge::cli

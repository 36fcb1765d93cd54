#pragma once

#include <json.hpp>

#include <complex>
#include <string>
#include <vector>

// Job execution layer behind the CLI: schema-checked JSON jobs in, a
// deterministic ResultEnvelope out.  Unknown fields are rejected; envelopes
// re-parse to equal values and are byte-identical for identical inputs.

namespace hypcr {

using json = nlohmann::json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Distinct process exit codes for the CLI.
enum ExitCode { exit_ok = 0, exit_schema = 2, exit_precondition = 3, exit_nonconvergence = 4 };

inline const char* kToolkitVersion = "0.1.0";

// FNV-1a of the canonical (sorted-key) dump.
std::string inputs_hash(const json& job);

// Validate against the per-command schema; throws SchemaError.
void validate_job(const json& job);

// Execute a validated job.  Throws SchemaError / std::invalid_argument /
// std::domain_error; solver nonconvergence is data in the envelope (the CLI
// maps it to an exit code only under --strict).
json run_job(const json& job);

// Envelope skeleton: command echo, inputs hash, outputs, diagnostics, version.
json make_envelope(const json& job);

// Write text atomically (temp file + rename).
void write_atomic(const std::string& path, const std::string& text);

// Grid CSV with header "s,t,re,im" (polar shapes emit r,theta in the s,t columns).
std::string grid_to_csv(const json& domain, const std::vector<std::complex<double>>& values);
std::vector<std::complex<double>> grid_from_csv(const std::string& text);

}  // namespace hypcr

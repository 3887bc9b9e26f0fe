#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace margeo {

/// One command invocation as accepted by the CLI and the C API.
struct JobSpec {
  std::string command;
  std::string complex_text;
  std::optional<std::vector<int>> d;
  std::map<std::string, std::string> options;
};

const std::vector<std::string>& job_commands();
bool command_needs_complex(const std::string& command);

/// Rejects unknown commands and option keys early.
void validate_command(const std::string& command);
void validate_option(const std::string& key);

/// Runs the job and returns the report document
/// {tool, version, schema_version, command, input, result, verdict[, timing]}.
nlohmann::json run_job(const JobSpec& job);

/// Default location of the reference-example file.
std::string default_golden_path();

}  // namespace margeo

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nel/cli/config.hpp"

namespace nel::cli {

/// Schema versions of every emitted format, printed by --version.
inline constexpr int kOutputRecordVersion = 1;

const std::vector<CommandSpec>& command_specs();
/// Throws ValidationError for an unknown command name.
const CommandSpec& command_spec(const std::string& name);

/// Checks the module preconditions of a resolved config without computing anything.
/// Throws DomainError (or ValidationError) on violation.
void validate_command(const RunConfig& config);

/// Runs a validated config, streaming the payload and returning the summary object that
/// goes into the output record header.
nlohmann::ordered_json run_command(const RunConfig& config, std::ostream& payload);

}  // namespace nel::cli

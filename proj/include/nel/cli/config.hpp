#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nel::cli {

enum class ParamType { Real, Integer, Unsigned, Text, Choice, RealList };

struct ParamSpec {
    std::string name;
    ParamType type = ParamType::Real;
    std::optional<std::string> default_value;  ///< empty and not required: the key is optional
    bool required = false;
    std::vector<std::string> choices;          ///< Choice only
    std::vector<std::string> models;           ///< models the key applies to; empty means all
    std::string help;
};

using Value = std::variant<double, std::int64_t, std::uint64_t, std::string, std::vector<double>>;

/// Command schema. `selector` names the key (if any) whose value picks the model.
struct CommandSpec {
    std::string name;
    std::string help;
    std::vector<ParamSpec> params;
    std::optional<std::string> selector;
};

/// Resolved configuration: every applicable key with a value, in canonical (sorted) order.
/// seed, out and format are ordinary keys of every command.
struct RunConfig {
    std::string command;
    std::map<std::string, Value> params;

    double real(const std::string& key) const;
    std::int64_t integer(const std::string& key) const;
    std::uint64_t seed() const;
    const std::string& text(const std::string& key) const;
    const std::vector<double>& list(const std::string& key) const;
    bool has(const std::string& key) const { return params.count(key) != 0; }
    const std::string& out() const { return text("out"); }
    const std::string& format() const { return text("format"); }

    bool operator==(const RunConfig&) const = default;
};

/// Raw key = value pairs with the line each came from.
struct RawEntry {
    std::string value;
    int line = 0;  ///< 0 for command-line flags
};
using RawConfig = std::map<std::string, RawEntry>;

/// Parses flat `key = value` text with `#` comments. Throws ValidationError naming the
/// line on malformed lines and duplicate keys.
RawConfig parse_config_text(const std::string& text);
RawConfig read_config_file(const std::filesystem::path& path);

/// Checks keys and types against the schema, fills defaults, and rejects missing required
/// keys and keys that do not apply to the selected model. Throws ValidationError.
RunConfig resolve(const CommandSpec& spec, const RawConfig& raw);

/// Canonical text: `command = name` plus one `key = value` line per parameter, sorted by key.
std::string serialize(const RunConfig& config);
std::string format_value(const Value& v);

}  // namespace nel::cli

#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "nel/cli/app.hpp"

namespace nel::test {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

/// Runs the tool in-process with argv[0] = "nel".
inline CliResult run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"nel"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

/// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("nel_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Everything after the header line.
inline std::string payload_of(const std::filesystem::path& path) {
    const std::string text = slurp(path);
    const auto nl = text.find('\n');
    return nl == std::string::npos ? std::string() : text.substr(nl + 1);
}

/// Parsed header record (a leading "# " on CSV files is skipped).
inline nlohmann::json header_of(const std::filesystem::path& path) {
    std::string text = slurp(path);
    text = text.substr(0, text.find('\n'));
    if (text.rfind("# ", 0) == 0) text = text.substr(2);
    return nlohmann::json::parse(text);
}

/// Payload lines split on newlines, without the trailing empty entry.
inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) lines.push_back(line);
    return lines;
}

}  // namespace nel::test

#include "nel/cli/app.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nel/cli/commands.hpp"
#include "nel/core/error.hpp"

#ifndef NEL_BUILD_ID
#define NEL_BUILD_ID "unknown"
#endif

namespace nel::cli {
namespace {

using json = nlohmann::ordered_json;

std::string version_text() {
    std::ostringstream s;
    s << "nel " << NEL_BUILD_ID << "\n"
      << "output record schema " << kOutputRecordVersion << "\n"
      << "spectrum csv 1, trajectory jsonl 1, residual report jsonl 1, lyapunov csv 1, poincare csv 1\n";
    return s.str();
}

struct Subcommand {
    const CommandSpec* spec = nullptr;
    CLI::App* app = nullptr;
    std::string config_path;
    std::map<std::string, std::string> flags;  // node-stable storage bound to CLI11 options
    std::map<std::string, CLI::Option*> options;
};

std::string option_help(const CommandSpec& spec, const std::string& key) {
    std::string help;
    for (const auto& p : spec.params) {
        if (p.name != key) continue;
        std::string part;
        if (!p.models.empty()) {
            part += "[";
            for (std::size_t i = 0; i < p.models.size(); ++i) part += (i ? "," : "") + p.models[i];
            part += "] ";
        }
        if (p.required)
            part += "required";
        else if (p.default_value)
            part += "default " + *p.default_value;
        else
            part += "optional";
        if (!p.choices.empty()) {
            part += " {";
            for (std::size_t i = 0; i < p.choices.size(); ++i) part += (i ? "|" : "") + p.choices[i];
            part += "}";
        }
        help += (help.empty() ? "" : "; ") + part;
    }
    return help;
}

void write_record(const std::filesystem::path& path, const RunConfig& config, const json& header_tail,
                  const std::string& payload) {
    json header;
    header["record"] = "header";
    header["schema_version"] = kOutputRecordVersion;
    header["command"] = config.command;
    json cfg = json::object();
    for (const auto& [k, v] : config.params) cfg[k] = format_value(v);
    header["config"] = cfg;
    header["build"] = NEL_BUILD_ID;
    for (const auto& [k, v] : header_tail.items()) header[k] = v;

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    if (config.format() == "csv") f << "# ";
    f << header.dump() << "\n" << payload;
    f.flush();
    if (!f) throw IoError("write to " + path.string() + " failed");
}

int execute(const RunConfig& config, std::ostream& err) {
    const std::filesystem::path out = config.out();
    const std::filesystem::path partial = out.string() + ".partial";
    std::ostringstream payload;
    const auto start = std::chrono::steady_clock::now();
    auto seconds = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
    json summary;
    try {
        summary = run_command(config, payload);
    } catch (const ComputationalError& e) {
        write_record(partial, config,
                     json{{"duration_s", seconds()}, {"status", "error"}, {"message", e.what()}}, payload.str());
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
    write_record(partial, config, json{{"duration_s", seconds()}, {"status", "ok"}, {"summary", summary}},
                 payload.str());
    std::error_code ec;
    std::filesystem::rename(partial, out, ec);
    if (ec) throw IoError("cannot rename " + partial.string() + " to " + out.string() + ": " + ec.message());
    return kExitOk;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Computational: return kExitComputation;
        case ErrorKind::Io: return kExitIo;
        default: return kExitValidation;
    }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stability spectra, Lax-pair checks and chaos diagnostics for Euler and model PDEs", "nel"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version_text());

    std::vector<std::unique_ptr<Subcommand>> subs;
    for (const auto& spec : command_specs()) {
        auto sub = std::make_unique<Subcommand>();
        sub->spec = &spec;
        sub->app = app.add_subcommand(spec.name, spec.help);
        sub->app->add_option("--config", sub->config_path, "flat key = value file; flags override its entries");
        std::set<std::string> seen;
        for (const auto& p : spec.params) {
            if (!seen.insert(p.name).second) continue;
            sub->options[p.name] = sub->app->add_option("--" + p.name, sub->flags[p.name], option_help(spec, p.name));
        }
        subs.push_back(std::move(sub));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion&) {
        out << version_text();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitValidation;
    }

    try {
        for (const auto& sub : subs) {
            if (!sub->app->parsed()) continue;
            RawConfig raw;
            if (!sub->config_path.empty()) raw = read_config_file(sub->config_path);
            for (const auto& [key, opt] : sub->options)
                if (opt->count() > 0) raw[key] = RawEntry{sub->flags[key], 0};
            const RunConfig config = resolve(*sub->spec, raw);
            validate_command(config);
            return execute(config, err);
        }
        throw ValidationError("no command given");
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}

}  // namespace nel::cli

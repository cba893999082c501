#include "nel/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "nel/core/error.hpp"

namespace nel::cli {
namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string where(const RawEntry& e) {
    return e.line > 0 ? "line " + std::to_string(e.line) + ": " : "";
}

template <class T>
bool parse_number(const std::string& s, T& out) {
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool parse_real(const std::string& s, double& out) { return parse_number(s, out) && std::isfinite(out); }

Value typed(const ParamSpec& p, const RawEntry& e) {
    const std::string& s = e.value;
    auto fail = [&](const char* what) {
        throw ValidationError(where(e) + "key '" + p.name + "' expects " + what + ", got '" + s + "'");
    };
    switch (p.type) {
        case ParamType::Real: {
            double v;
            if (!parse_real(s, v)) fail("a real number");
            return v;
        }
        case ParamType::Integer: {
            std::int64_t v;
            if (!parse_number(s, v)) fail("an integer");
            return v;
        }
        case ParamType::Unsigned: {
            std::uint64_t v;
            if (!parse_number(s, v)) fail("a non-negative integer");
            return v;
        }
        case ParamType::Text:
            if (s.empty()) fail("a non-empty value");
            return s;
        case ParamType::Choice:
            if (std::find(p.choices.begin(), p.choices.end(), s) == p.choices.end()) {
                std::string all;
                for (const auto& c : p.choices) all += (all.empty() ? "" : "|") + c;
                fail(("one of " + all).c_str());
            }
            return s;
        case ParamType::RealList: {
            std::vector<double> v;
            std::stringstream ss(s);
            std::string item;
            while (std::getline(ss, item, ',')) {
                double x;
                if (!parse_real(trim(item), x)) fail("a comma-separated list of reals");
                v.push_back(x);
            }
            if (v.empty()) fail("a comma-separated list of reals");
            return v;
        }
    }
    return s;
}

bool applies(const ParamSpec& p, const std::string& model) {
    return p.models.empty() || std::find(p.models.begin(), p.models.end(), model) != p.models.end();
}

std::string real_text(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace

RawConfig parse_config_text(const std::string& text) {
    RawConfig out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ValidationError("line " + std::to_string(number) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ValidationError("line " + std::to_string(number) + ": missing key");
        auto [it, inserted] = out.emplace(key, RawEntry{value, number});
        if (!inserted)
            throw ValidationError("line " + std::to_string(number) + ": duplicate key '" + key + "' (first set on line " +
                                  std::to_string(it->second.line) + ")");
    }
    return out;
}

RawConfig read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

RunConfig resolve(const CommandSpec& spec, const RawConfig& raw) {
    RunConfig cfg;
    cfg.command = spec.name;
    if (auto it = raw.find("command"); it != raw.end() && it->second.value != spec.name)
        throw ValidationError(where(it->second) + "config is for command '" + it->second.value + "', not '" +
                              spec.name + "'");

    auto find_spec = [&](const std::string& key) -> const ParamSpec* {
        for (const auto& p : spec.params)
            if (p.name == key) return &p;
        return nullptr;
    };
    for (const auto& [key, entry] : raw) {
        if (key == "command") continue;
        if (!find_spec(key)) throw ValidationError(where(entry) + "unknown key '" + key + "' for " + spec.name);
    }

    std::string model;
    if (spec.selector) {
        const ParamSpec* sel = find_spec(*spec.selector);
        auto it = raw.find(*spec.selector);
        if (it != raw.end()) {
            model = std::get<std::string>(typed(*sel, it->second));
        } else if (sel->default_value) {
            model = *sel->default_value;
        } else {
            throw ValidationError("missing required flag --" + *spec.selector);
        }
    }

    for (const auto& p : spec.params) {
        auto it = raw.find(p.name);
        if (!applies(p, model)) {
            const bool other_applies = std::any_of(spec.params.begin(), spec.params.end(), [&](const ParamSpec& q) {
                return q.name == p.name && applies(q, model);
            });
            if (it != raw.end() && !other_applies)
                throw ValidationError(where(it->second) + "key '" + p.name + "' does not apply to " + *spec.selector +
                                      " " + model);
            continue;
        }
        if (it != raw.end()) {
            cfg.params[p.name] = typed(p, it->second);
        } else if (p.default_value) {
            cfg.params[p.name] = typed(p, RawEntry{*p.default_value, 0});
        } else if (p.required) {
            throw ValidationError("missing required flag --" + p.name);
        }
    }
    return cfg;
}

std::string format_value(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, double>) {
                return real_text(x);
            } else if constexpr (std::is_same_v<T, std::string>) {
                return x;
            } else if constexpr (std::is_same_v<T, std::vector<double>>) {
                std::string s;
                for (double d : x) s += (s.empty() ? "" : ",") + real_text(d);
                return s;
            } else {
                return std::to_string(x);
            }
        },
        v);
}

std::string serialize(const RunConfig& config) {
    std::map<std::string, std::string> lines;
    lines["command"] = config.command;
    for (const auto& [k, v] : config.params) lines[k] = format_value(v);
    std::string out;
    for (const auto& [k, v] : lines) out += k + " = " + v + "\n";
    return out;
}

double RunConfig::real(const std::string& key) const { return std::get<double>(params.at(key)); }
std::int64_t RunConfig::integer(const std::string& key) const { return std::get<std::int64_t>(params.at(key)); }
std::uint64_t RunConfig::seed() const { return std::get<std::uint64_t>(params.at("seed")); }
const std::string& RunConfig::text(const std::string& key) const { return std::get<std::string>(params.at(key)); }
const std::vector<double>& RunConfig::list(const std::string& key) const {
    return std::get<std::vector<double>>(params.at(key));
}

}  // namespace nel::cli

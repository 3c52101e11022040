#include "proofcheck/config.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace proofcheck {

using nlohmann::json;

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::size_t lo = item.find_first_not_of(" \t");
        if (lo == std::string::npos) continue;
        std::size_t hi = item.find_last_not_of(" \t");
        out.push_back(item.substr(lo, hi - lo + 1));
    }
    return out;
}

/// Accepts either a JSON array of strings or a single comma-separated
/// string.
std::optional<std::string> string_list(const json& value,
                                       std::vector<std::string>& out) {
    if (value.is_string()) {
        out = split_commas(value.get<std::string>());
        return std::nullopt;
    }
    if (value.is_array()) {
        out.clear();
        for (const json& item : value) {
            if (!item.is_string()) return "expected a string";
            out.push_back(item.get<std::string>());
        }
        return std::nullopt;
    }
    return "expected an array of strings or a comma list";
}

std::optional<Severity> severity_from(const std::string& name) {
    if (name == "Error" || name == "error") return Severity::Error;
    if (name == "Warning" || name == "warning") return Severity::Warning;
    return std::nullopt;
}

} // namespace

std::optional<std::string> set_layers(Config& config,
                                      const std::string& spec) {
    std::set<Layer> layers;
    for (const std::string& name : split_commas(spec)) {
        std::optional<Layer> layer = layer_from(name);
        if (!layer) return "unknown layer '" + name + "'";
        layers.insert(*layer);
    }
    if (layers.empty()) return std::string("at least one layer is required");
    config.layers = std::move(layers);
    return std::nullopt;
}

std::optional<std::string> disable_rule(Config& config,
                                        const std::string& rule) {
    std::optional<RuleId> id = rule_id_from(rule);
    if (!id) return "unknown rule id '" + rule + "'";
    config.rules.disabled.insert(*id);
    return std::nullopt;
}

std::optional<std::string> set_severity(Config& config,
                                        const std::string& assignment) {
    std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        return std::string("expected RULE=Error|Warning");
    std::optional<RuleId> id = rule_id_from(assignment.substr(0, eq));
    if (!id) return "unknown rule id '" + assignment.substr(0, eq) + "'";
    std::optional<Severity> sev = severity_from(assignment.substr(eq + 1));
    if (!sev) return "unknown severity '" + assignment.substr(eq + 1) + "'";
    config.rules.severity_overrides[*id] = *sev;
    return std::nullopt;
}

std::variant<Config, std::string> parse_config(const std::string& json_text) {
    json j = json::parse(json_text, nullptr, false);
    if (j.is_discarded()) return std::string("config is not valid JSON");
    if (!j.is_object()) return std::string("config is not a JSON object");

    Config config;
    for (const auto& [key, value] : j.items()) {
        std::optional<std::string> err;
        if (key == "layers.enabled") {
            if (value.is_string()) {
                err = set_layers(config, value.get<std::string>());
            } else {
                std::vector<std::string> names;
                err = string_list(value, names);
                if (!err) {
                    std::string joined;
                    for (const std::string& n : names) {
                        if (!joined.empty()) joined += ",";
                        joined += n;
                    }
                    err = set_layers(config, joined);
                }
            }
        } else if (key == "rules.disabled") {
            std::vector<std::string> names;
            err = string_list(value, names);
            for (std::size_t i = 0; !err && i < names.size(); ++i)
                err = disable_rule(config, names[i]);
        } else if (key == "rules.severity_overrides") {
            if (!value.is_object()) {
                err = "expected an object of rule id -> severity";
            } else {
                for (const auto& [rule, sev] : value.items()) {
                    if (!sev.is_string()) {
                        err = "severity for '" + rule + "' is not a string";
                        break;
                    }
                    err = set_severity(config,
                                       rule + "=" + sev.get<std::string>());
                    if (err) break;
                }
            }
        } else if (key == "setoption.denylist") {
            err = string_list(value, config.rules.set_option_denylist);
        } else if (key == "hashcmd.denylist") {
            err = string_list(value, config.rules.hash_command_denylist);
        } else if (key == "compiler.url") {
            if (!value.is_string()) err = "expected a string";
            else config.compiler_url = value.get<std::string>();
        } else if (key == "compiler.mock_path") {
            if (!value.is_string()) err = "expected a string";
            else config.mock_path = value.get<std::string>();
        } else if (key == "compiler.mode") {
            if (!value.is_string()) {
                err = "expected a string";
            } else {
                std::string mode = value.get<std::string>();
                if (mode != "live" && mode != "mock" && mode != "record")
                    err = "unknown mode '" + mode + "'";
                else
                    config.compiler_mode = mode;
            }
        } else if (key == "compiler.timeout_seconds") {
            if (!value.is_number_integer() || value.get<int>() < 1)
                err = "expected an integer >= 1";
            else
                config.timeout_seconds = value.get<int>();
        } else if (key == "compiler.retries") {
            if (!value.is_number_integer() || value.get<int>() < 0)
                err = "expected an integer >= 0";
            else
                config.retries = value.get<int>();
        } else if (key == "compiler.max_inflight") {
            if (!value.is_number_integer() || value.get<int>() < 1)
                err = "expected an integer >= 1";
            else
                config.max_inflight = value.get<int>();
        } else if (key == "parallelism") {
            if (!value.is_number_integer() || value.get<int>() < 1)
                err = "expected an integer >= 1";
            else
                config.parallelism = value.get<int>();
        } else if (key == "pass_at_k") {
            if (!value.is_array()) {
                err = "expected an array of integers";
            } else {
                config.pass_at_ks.clear();
                for (const json& k : value) {
                    if (!k.is_number_integer() || k.get<int>() < 1) {
                        err = "expected integers >= 1";
                        break;
                    }
                    config.pass_at_ks.push_back(k.get<int>());
                }
            }
        } else {
            err = "unrecognized key";
        }
        if (err) return "config key '" + key + "': " + *err;
    }
    return config;
}

std::variant<Config, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return "cannot open config file '" + path + "'";
    std::ostringstream buf;
    buf << in.rdbuf();
    auto parsed = parse_config(buf.str());
    if (auto* err = std::get_if<std::string>(&parsed))
        return "config file '" + path + "': " + *err;
    return parsed;
}

PipelineConfig make_pipeline_config(const Config& config) {
    PipelineConfig out;
    out.enabled = config.layers;
    out.rules = config.rules;
    out.parallelism = config.parallelism;
    out.pass_at_ks = config.pass_at_ks;
    return out;
}

std::shared_ptr<CompilerClient> make_client(const Config& config,
                                            std::string* error) {
    ClientConfig cc;
    cc.url = config.compiler_url;
    cc.mock_path = config.mock_path;
    cc.retries = config.retries;
    cc.max_inflight = config.max_inflight;
    cc.timeout_seconds = config.timeout_seconds;

    std::string mode = config.compiler_mode;
    if (mode.empty()) {
        if (!cc.mock_path.empty() && !cc.url.empty()) mode = "record";
        else if (!cc.mock_path.empty()) mode = "mock";
        else if (!cc.url.empty()) mode = "live";
        else return nullptr;
    }
    if (mode == "mock") {
        if (cc.mock_path.empty()) {
            if (error) *error = "mock mode requires compiler.mock_path";
            return nullptr;
        }
        cc.mode = ClientMode::Mock;
    } else if (mode == "record") {
        if (cc.url.empty() || cc.mock_path.empty()) {
            if (error)
                *error = "record mode requires compiler.url and "
                         "compiler.mock_path";
            return nullptr;
        }
        cc.mode = ClientMode::Record;
    } else {
        if (cc.url.empty()) {
            if (error) *error = "live mode requires compiler.url";
            return nullptr;
        }
        cc.mode = ClientMode::Live;
    }
    return std::make_shared<CompilerClient>(std::move(cc));
}

} // namespace proofcheck

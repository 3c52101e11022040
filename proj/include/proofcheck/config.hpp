#pragma once

#include "proofcheck/pipeline.hpp"

#include <string>
#include <variant>

namespace proofcheck {

/// Runtime configuration, merged from an optional JSON file (flat dotted
/// keys) and command-line overrides.
struct Config {
    std::set<Layer> layers = {Layer::Syntax, Layer::Target, Layer::Ast};
    RuleOptions rules;
    int parallelism = 1;
    std::vector<int> pass_at_ks = {1, 32};

    std::string compiler_url;
    std::string mock_path;
    std::string compiler_mode; // "", "live", "mock", "record"
    int timeout_seconds = 60;
    int retries = 2;
    int max_inflight = 8;
};

/// Parses a config JSON object. Recognized keys:
///   layers.enabled            array or comma list of SYNTAX|TARGET|AST
///   rules.disabled            array or comma list of rule ids
///   rules.severity_overrides  object: rule id -> "Error"|"Warning"
///   setoption.denylist        array or comma list of option names
///   hashcmd.denylist          array or comma list of #commands
///   compiler.url              base URL of the compile service
///   compiler.mock_path        JSONL response store
///   compiler.mode             live|mock|record (default inferred)
///   compiler.timeout_seconds  int
///   compiler.retries          int
///   compiler.max_inflight     int
///   parallelism               int >= 1
///   pass_at_k                 array of ints >= 1
/// Unknown keys are rejected.
std::variant<Config, std::string> parse_config(const std::string& json_text);
std::variant<Config, std::string> load_config_file(const std::string& path);

/// Comma-list setters shared by the config file and CLI flags. Each
/// returns an error message on bad input, std::nullopt on success.
std::optional<std::string> set_layers(Config& config, const std::string& spec);
std::optional<std::string> disable_rule(Config& config,
                                        const std::string& rule);
std::optional<std::string> set_severity(Config& config,
                                        const std::string& assignment);

PipelineConfig make_pipeline_config(const Config& config);

/// Builds a client, or nullptr when neither a URL nor a mock store is
/// configured (the SYNTAX layer then reports COMPILER_UNAVAILABLE).
std::shared_ptr<CompilerClient> make_client(const Config& config,
                                            std::string* error);

} // namespace proofcheck

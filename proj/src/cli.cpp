#include "proofcheck/cli.hpp"

#include "proofcheck/config.hpp"
#include "proofcheck/fixtures.hpp"
#include "proofcheck/pipeline.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace proofcheck::cli {

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string config_path;
    std::string layers;
    std::vector<std::string> disable_rules;
    std::vector<std::string> severities;
    std::string compiler_url;
    std::string mock_path;
    std::string mode;
    int parallelism = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path,
                    "Config JSON (default: $PROOFCHECK_CONFIG)");
    cmd->add_option("--layers", flags.layers,
                    "Comma list of layers to run (SYNTAX,TARGET,AST)");
    cmd->add_option("--disable-rule", flags.disable_rules,
                    "Rule id to disable (repeatable)");
    cmd->add_option("--severity", flags.severities,
                    "Override rule severity, RULE=Error|Warning (repeatable)");
    cmd->add_option("--compiler-url", flags.compiler_url,
                    "Compile service base URL");
    cmd->add_option("--mock", flags.mock_path,
                    "JSONL store of recorded compiler responses");
    cmd->add_option("--mode", flags.mode, "Compiler mode: live|mock|record")
        ->check(CLI::IsMember({"live", "mock", "record"}));
    cmd->add_option("--parallelism", flags.parallelism,
                    "Worker threads for corpus runs")
        ->check(CLI::PositiveNumber);
}

/// Merges the config file (flag, else $PROOFCHECK_CONFIG) with CLI
/// overrides. Returns false after printing the reason.
bool resolve_config(const CommonFlags& flags, Config& config,
                    std::ostream& err) {
    std::string path = flags.config_path;
    if (path.empty()) {
        if (const char* env = std::getenv("PROOFCHECK_CONFIG")) path = env;
    }
    if (!path.empty()) {
        auto loaded = load_config_file(path);
        if (auto* msg = std::get_if<std::string>(&loaded)) {
            err << "proofcheck: " << *msg << "\n";
            return false;
        }
        config = std::get<Config>(loaded);
    }
    if (!flags.layers.empty()) {
        if (auto msg = set_layers(config, flags.layers)) {
            err << "proofcheck: --layers: " << *msg << "\n";
            return false;
        }
    }
    for (const std::string& rule : flags.disable_rules) {
        if (auto msg = disable_rule(config, rule)) {
            err << "proofcheck: --disable-rule: " << *msg << "\n";
            return false;
        }
    }
    for (const std::string& assignment : flags.severities) {
        if (auto msg = set_severity(config, assignment)) {
            err << "proofcheck: --severity: " << *msg << "\n";
            return false;
        }
    }
    if (!flags.compiler_url.empty()) config.compiler_url = flags.compiler_url;
    if (!flags.mock_path.empty()) config.mock_path = flags.mock_path;
    if (!flags.mode.empty()) config.compiler_mode = flags.mode;
    if (flags.parallelism > 0) config.parallelism = flags.parallelism;
    return true;
}

bool read_file(const std::string& path, std::string& content,
               std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "proofcheck: cannot read '" << path << "'\n";
        return false;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    content = buf.str();
    return true;
}

bool write_file(const std::string& path, const std::string& content,
                std::ostream& err) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        err << "proofcheck: cannot write '" << path << "'\n";
        return false;
    }
    out << content;
    if (!out) {
        err << "proofcheck: short write to '" << path << "'\n";
        return false;
    }
    return true;
}

void print_layers(const PipelineReport& report, std::ostream& out) {
    for (const LayerOutcome& lo : report.layers) {
        out << layer_name(lo.layer) << " " << outcome_name(lo.outcome);
        if (!lo.note.empty()) out << " (" << lo.note << ")";
        out << "\n";
    }
}

std::array<std::size_t, kLayerCount> single_record_funnel(
    const PipelineReport& report) {
    std::array<std::size_t, kLayerCount> pass_after{};
    for (int l = 0; l < kLayerCount; ++l)
        pass_after[l] = report.passes_through(static_cast<Layer>(l)) ? 1 : 0;
    return pass_after;
}

int cmd_check(const std::string& problem_path,
              const std::string& candidate_path, const std::string& target,
              const std::string& out_path, const CommonFlags& flags,
              std::ostream& out, std::ostream& err) {
    Config config;
    if (!resolve_config(flags, config, err)) return kExitUsage;

    std::string problem_text;
    std::string candidate_text;
    if (!read_file(problem_path, problem_text, err)) return kExitUsage;
    if (!read_file(candidate_path, candidate_text, err)) return kExitUsage;

    std::string client_error;
    std::shared_ptr<CompilerClient> client =
        make_client(config, &client_error);
    if (!client && !client_error.empty()) {
        err << "proofcheck: " << client_error << "\n";
        return kExitUsage;
    }
    Pipeline pipeline(make_pipeline_config(config), client);

    CorpusRecord record;
    record.id = candidate_path;
    record.problem_id = problem_path;
    record.problem = problem_text;
    record.candidate = candidate_text;
    record.target = target;

    PipelineReport report = pipeline.verify(record);
    if (!report.error.empty()) {
        err << "proofcheck: " << report.error << "\n";
        return kExitUsage;
    }

    print_layers(report, out);
    const LayerOutcome& ast = report.layer(Layer::Ast);
    if (ast.enabled && ast.outcome != Outcome::Skipped) {
        Verdict verdict;
        verdict.findings = ast.findings;
        verdict.legal = ast.outcome == Outcome::Pass;
        out << explain(verdict) << "\n";
    }
    out << "\n" << render_layer_table(single_record_funnel(report), 1);
    out << "finalValid: " << (report.final_valid ? "true" : "false") << "\n";

    if (!out_path.empty() &&
        !write_file(out_path, report_to_json(report) + "\n", err))
        return kExitUsage;
    return report.final_valid ? kExitValid : kExitInvalid;
}

int cmd_corpus(const std::string& input_path, const std::string& out_path,
               const CommonFlags& flags, std::ostream& out,
               std::ostream& err) {
    Config config;
    if (!resolve_config(flags, config, err)) return kExitUsage;

    std::ifstream in(input_path, std::ios::binary);
    if (!in) {
        err << "proofcheck: cannot read '" << input_path << "'\n";
        return kExitUsage;
    }

    std::string client_error;
    std::shared_ptr<CompilerClient> client =
        make_client(config, &client_error);
    if (!client && !client_error.empty()) {
        err << "proofcheck: " << client_error << "\n";
        return kExitUsage;
    }
    Pipeline pipeline(make_pipeline_config(config), client);

    CorpusResult result = pipeline.run_corpus(in);

    std::ostringstream machine;
    for (const PipelineReport& report : result.reports)
        machine << report_to_json(report) << "\n";
    machine << corpus_summary_to_json(result.stats, config.pass_at_ks)
            << "\n";

    // Keep machine output and the human funnel on separate streams.
    std::ostream* human = &out;
    if (out_path.empty()) {
        out << machine.str();
        human = &err;
    } else if (!write_file(out_path, machine.str(), err)) {
        return kExitUsage;
    }

    *human << render_layer_table(result.stats.pass_after,
                                 result.stats.total - result.stats.malformed);
    *human << "records: " << result.stats.total
           << ", malformed: " << result.stats.malformed << "\n";
    for (const MalformedLine& bad : result.malformed_lines)
        *human << "  line " << bad.line << ": " << bad.message << "\n";
    return kExitValid;
}

int cmd_fixtures(const std::string& dir, std::ostream& out,
                 std::ostream& err) {
    std::string error;
    if (!fixtures::emit(dir, &error)) {
        err << "proofcheck: " << error << "\n";
        return kExitUsage;
    }
    out << "fixtures written to " << dir << " ("
        << fixtures::all().size() << " files)\n";
    return kExitValid;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Legality checker for machine-generated Lean 4 proofs"};
    app.name("proofcheck");
    app.require_subcommand(1);

    CommonFlags flags;

    auto* check = app.add_subcommand(
        "check", "Verify one candidate against a reference problem");
    std::string problem_path;
    std::string candidate_path;
    std::string target;
    std::string check_out;
    check->add_option("--problem", problem_path, "Reference problem file")
        ->required();
    check->add_option("--candidate", candidate_path, "Candidate proof file")
        ->required();
    check->add_option("--target", target, "Target theorem name")->required();
    check->add_option("--out", check_out, "Write the report JSON here");
    add_common_flags(check, flags);

    auto* corpus = app.add_subcommand(
        "corpus", "Verify a JSONL corpus and print the layer funnel");
    std::string corpus_input;
    std::string corpus_out;
    corpus->add_option("--input", corpus_input, "Corpus JSONL file")
        ->required();
    corpus->add_option("--out", corpus_out,
                       "Write report JSONL + summary here");
    add_common_flags(corpus, flags);

    auto* fixtures_cmd = app.add_subcommand(
        "fixtures", "Write the embedded reference fixtures to a directory");
    std::string fixtures_dir;
    fixtures_cmd->add_option("--dir", fixtures_dir, "Output directory")
        ->required();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("proofcheck");
    for (const std::string& arg : args) argv.push_back(arg.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitValid : kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(problem_path, candidate_path, target, check_out,
                             flags, out, err);
        if (corpus->parsed())
            return cmd_corpus(corpus_input, corpus_out, flags, out, err);
        if (fixtures_cmd->parsed())
            return cmd_fixtures(fixtures_dir, out, err);
    } catch (const std::exception& e) {
        err << "proofcheck: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "proofcheck: no command given\n";
    return kExitUsage;
}

} // namespace proofcheck::cli

#include "proofcheck/legality.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace proofcheck {

const char* rule_id_name(RuleId rule) {
    switch (rule) {
    case RuleId::R1_TargetTampered: return "R1_TargetTampered";
    case RuleId::R2_EarlyExit: return "R2_EarlyExit";
    case RuleId::R3_UnprovenAssumption: return "R3_UnprovenAssumption";
    case RuleId::R4_MetaComponent: return "R4_MetaComponent";
    case RuleId::R5_UnsafeBypass: return "R5_UnsafeBypass";
    case RuleId::R6_GlobalVariable: return "R6_GlobalVariable";
    case RuleId::R7_ConceptShadowing: return "R7_ConceptShadowing";
    case RuleId::R8_InstanceInjection: return "R8_InstanceInjection";
    case RuleId::R9_PrerequisiteTampering: return "R9_PrerequisiteTampering";
    case RuleId::R10_SorryRemaining: return "R10_SorryRemaining";
    }
    return "?";
}

const char* rule_pattern_name(RuleId rule) {
    switch (rule) {
    case RuleId::R1_TargetTampered: return "Tampering with the Theorem";
    case RuleId::R2_EarlyExit: return "Early Termination via #exit";
    case RuleId::R3_UnprovenAssumption: return "Introducing Unproven Assumptions";
    case RuleId::R4_MetaComponent: return "Modifying or Adding Meta/Syntax Components";
    case RuleId::R5_UnsafeBypass: return "Bypassing Safety Checks";
    case RuleId::R6_GlobalVariable: return "Adding Global Variables";
    case RuleId::R7_ConceptShadowing: return "Redefining Background Concepts";
    case RuleId::R8_InstanceInjection: return "Injecting Local Instances";
    case RuleId::R9_PrerequisiteTampering: return "Prerequisite Tampering";
    case RuleId::R10_SorryRemaining: return "Unproved Placeholder Remaining";
    }
    return "?";
}

std::optional<RuleId> rule_id_from(std::string_view name) {
    for (int i = 0; i < kRuleCount; ++i) {
        RuleId rule = static_cast<RuleId>(i);
        if (name == rule_id_name(rule)) return rule;
    }
    return std::nullopt;
}

const char* severity_name(Severity severity) {
    return severity == Severity::Error ? "Error" : "Warning";
}

namespace {

std::string normalize_command(const Command& cmd) {
    return normalize_tree(cmd.raw);
}

/// Top-level commands plus mutual-block members, in source order. Members of
/// a mutual block are checked as if they were top-level.
void flatten_commands(const std::vector<Command>& cmds,
                      std::vector<const Command*>& out) {
    for (const Command& cmd : cmds) {
        if (cmd.is<MutualBlock>()) {
            out.push_back(&cmd);
            flatten_commands(cmd.get<MutualBlock>().commands, out);
        } else {
            out.push_back(&cmd);
        }
    }
}

std::vector<const Command*> flatten_commands(const ParsedFile& file) {
    std::vector<const Command*> out;
    flatten_commands(file.commands, out);
    return out;
}

/// Span of a command minus attached leading trivia.
SourceSpan significant_span(const Command& cmd) {
    TokenStream toks = flatten(cmd.raw);
    const Token* first = nullptr;
    const Token* last = nullptr;
    for (const Token& tok : toks) {
        if (is_trivia(tok)) continue;
        if (!first) first = &tok;
        last = &tok;
    }
    if (!first) return cmd.span;
    return SourceSpan{first->span.start, last->span.end, first->span.line,
                      first->span.column};
}

const Declaration* decl_of(const Command& cmd) {
    return cmd.is<DeclCmd>() ? &cmd.get<DeclCmd>().decl : nullptr;
}

std::string decl_label(const Declaration& decl) {
    std::string label;
    for (const std::string& m : decl.modifiers) {
        label += m;
        label += " ";
    }
    label += decl_keyword_name(decl.keyword);
    if (!decl.name.empty()) {
        label += " ";
        label += decl.name;
    }
    return label;
}

class Checker {
public:
    Checker(const ParsedFile& problem, const ParsedFile& candidate,
            const std::string& target, const RuleOptions& options)
        : problem_(problem), candidate_(candidate), target_(target),
          options_(options) {}

    Verdict run() {
        prepare();
        rule1();
        rule2();
        rule3();
        rule4();
        rule5();
        rule6();
        rule7();
        rule8();
        rule9();
        rule10();
        verdict_.legal =
            std::none_of(verdict_.findings.begin(), verdict_.findings.end(),
                         [](const Finding& f) {
                             return f.severity == Severity::Error;
                         });
        return std::move(verdict_);
    }

private:
    const ParsedFile& problem_;
    const ParsedFile& candidate_;
    const std::string& target_;
    const RuleOptions& options_;

    Verdict verdict_;
    std::vector<const Command*> problem_cmds_;
    std::vector<const Command*> candidate_cmds_;
    std::multiset<std::string> problem_units_;
    std::multiset<std::string> candidate_units_;
    ExtractResult problem_target_;
    ExtractResult candidate_target_;
    std::string problem_sig_;

    SourceSpan file_span() const {
        return SourceSpan{0, candidate_.source.size(), 1, 1};
    }

    void prepare() {
        problem_target_ = extract_theorem(problem_, target_);
        if (problem_target_.status != ExtractStatus::Found)
            throw TargetMissingError(target_);
        problem_sig_ = normalize_signature(problem_target_.decl->signature);

        problem_cmds_ = flatten_commands(problem_);
        candidate_cmds_ = flatten_commands(candidate_);
        for (const Command* cmd : problem_cmds_)
            problem_units_.insert(normalize_command(*cmd));
        for (const Command* cmd : candidate_cmds_)
            candidate_units_.insert(normalize_command(*cmd));
        candidate_target_ = extract_theorem(candidate_, target_);
    }

    bool in_problem(const Command& cmd) const {
        return problem_units_.count(normalize_command(cmd)) != 0;
    }

    bool is_candidate_target(const Command* cmd) const {
        return candidate_target_.status == ExtractStatus::Found &&
               cmd == candidate_target_.command;
    }

    void emit(RuleId rule, SourceSpan span, std::string message) {
        if (options_.disabled.count(rule)) return;
        Severity sev = Severity::Error;
        auto it = options_.severity_overrides.find(rule);
        if (it != options_.severity_overrides.end()) sev = it->second;
        verdict_.findings.push_back(
            Finding{rule, sev, span, std::move(message)});
    }

    void rule1() {
        switch (candidate_target_.status) {
        case ExtractStatus::NotFound:
            emit(RuleId::R1_TargetTampered, file_span(),
                 "target theorem '" + target_ +
                     "' not found in candidate (missing, renamed, or "
                     "unreachable)");
            return;
        case ExtractStatus::Duplicate:
            emit(RuleId::R1_TargetTampered, file_span(),
                 "multiple declarations named '" + target_ +
                     "' in candidate");
            return;
        case ExtractStatus::Found:
            break;
        }
        std::string sig =
            normalize_signature(candidate_target_.decl->signature);
        if (sig != problem_sig_) {
            emit(RuleId::R1_TargetTampered, candidate_target_.decl->span,
                 "target theorem '" + target_ +
                     "' signature differs from the problem statement");
        }
    }

    void rule2() {
        for (const Command* cmd : candidate_cmds_) {
            if (!cmd->is<HashCmd>()) continue;
            const std::string& name = cmd->get<HashCmd>().name;
            if (name == "#exit") {
                emit(RuleId::R2_EarlyExit, significant_span(*cmd),
                     "'#exit' stops compilation; everything after it is "
                     "never checked");
            } else if (std::find(options_.hash_command_denylist.begin(),
                                 options_.hash_command_denylist.end(),
                                 name) !=
                       options_.hash_command_denylist.end()) {
                emit(RuleId::R2_EarlyExit, significant_span(*cmd),
                     "hash command '" + name + "' is denylisted");
            }
        }
    }

    void rule3() {
        for (const Command* cmd : candidate_cmds_) {
            const Declaration* decl = decl_of(*cmd);
            if (!decl) continue;
            if (decl->keyword != DeclKeyword::Axiom &&
                decl->keyword != DeclKeyword::Opaque)
                continue;
            if (in_problem(*cmd)) continue;
            emit(RuleId::R3_UnprovenAssumption, decl->span,
                 "'" + decl_label(*decl) +
                     "' introduces an unproven assumption absent from the "
                     "problem");
        }
    }

    void rule4() {
        for (const Command* cmd : candidate_cmds_) {
            if (cmd->is<MetaDeclCmd>()) {
                if (in_problem(*cmd)) continue;
                const auto& meta = cmd->get<MetaDeclCmd>();
                std::string what = meta.keyword;
                if (!meta.name.empty()) what += " \"" + meta.name + "\"";
                emit(RuleId::R4_MetaComponent, significant_span(*cmd),
                     "meta/syntax component '" + what +
                         "' not present in the problem");
            } else if (cmd->is<SetOptionCmd>()) {
                const std::string& option = cmd->get<SetOptionCmd>().option;
                if (std::find(options_.set_option_denylist.begin(),
                              options_.set_option_denylist.end(),
                              option) !=
                    options_.set_option_denylist.end()) {
                    emit(RuleId::R4_MetaComponent, significant_span(*cmd),
                         "set_option '" + option +
                             "' disables compiler verification");
                }
            }
        }
    }

    void rule5() {
        for (const Command* cmd : candidate_cmds_) {
            const Declaration* decl = decl_of(*cmd);
            if (!decl) continue;
            bool unsafe_mod = decl->has_modifier("unsafe");
            bool partial_mod = decl->has_modifier("partial");
            if (!unsafe_mod && !partial_mod) continue;
            if (in_problem(*cmd)) continue;
            emit(RuleId::R5_UnsafeBypass, decl->span,
                 "'" + decl_label(*decl) + "' bypasses " +
                     (unsafe_mod ? "kernel safety checks"
                                 : "termination checking"));
        }
    }

    void rule6() {
        for (const Command* cmd : candidate_cmds_) {
            if (!cmd->is<VariableCmd>()) continue;
            if (in_problem(*cmd)) continue;
            emit(RuleId::R6_GlobalVariable, significant_span(*cmd),
                 "variable command not present in the problem: variable " +
                     normalize_tree(cmd->get<VariableCmd>().binders));
        }
    }

    void rule7() {
        std::set<std::string> refs =
            referenced_identifiers(problem_target_.decl->signature);
        for (const Command* cmd : candidate_cmds_) {
            if (is_candidate_target(cmd)) continue;
            std::string name;
            SourceSpan span;
            if (const Declaration* decl = decl_of(*cmd)) {
                name = decl->name;
                span = decl->span;
            } else if (cmd->is<MetaDeclCmd>()) {
                name = cmd->get<MetaDeclCmd>().name;
                span = significant_span(*cmd);
            }
            if (name.empty()) continue;
            if (in_problem(*cmd)) continue;
            std::string final_part = name.substr(name.rfind('.') + 1);
            if (refs.count(final_part) == 0) continue;
            emit(RuleId::R7_ConceptShadowing, span,
                 "redefines '" + final_part +
                     "', which the target statement references");
        }
    }

    void rule8() {
        for (const Command* cmd : candidate_cmds_) {
            if (is_candidate_target(cmd)) continue;
            if (const Declaration* decl = decl_of(*cmd)) {
                if (decl->keyword != DeclKeyword::Instance) continue;
                if (in_problem(*cmd)) continue;
                emit(RuleId::R8_InstanceInjection, decl->span,
                     "'" + decl_label(*decl) +
                         "' injects an instance not present in the problem");
            } else if (cmd->is<AttributeCmd>()) {
                if (in_problem(*cmd)) continue;
                bool touches_instance = false;
                for (const Token& tok : flatten(cmd->raw))
                    if (tok.kind == TokenKind::Keyword &&
                        tok.text == "instance")
                        touches_instance = true;
                if (!touches_instance) continue;
                emit(RuleId::R8_InstanceInjection, significant_span(*cmd),
                     "attribute command grants 'instance' status and is not "
                     "present in the problem");
            }
        }
    }

    void rule9() {
        for (const Command* pcmd : problem_cmds_) {
            if (pcmd->is<MutualBlock>()) continue;
            if (pcmd == problem_target_.command) {
                rule9_target();
                continue;
            }
            std::string desc;
            std::string name;
            if (const Declaration* decl = decl_of(*pcmd)) {
                desc = decl_label(*decl);
                name = decl->name;
            } else if (pcmd->is<MetaDeclCmd>()) {
                const auto& meta = pcmd->get<MetaDeclCmd>();
                desc = meta.keyword;
                name = meta.name;
                if (!name.empty()) desc += " \"" + name + "\"";
            } else {
                continue;
            }
            if (candidate_units_.count(normalize_command(*pcmd)) != 0)
                continue;
            emit(RuleId::R9_PrerequisiteTampering, candidate_span_for(name),
                 "problem prerequisite '" + desc +
                     "' is missing or altered in the candidate");
        }
    }

    // The target theorem's body is exempt, but it must still appear as a
    // theorem/lemma with the problem's exact (normalized) signature.
    void rule9_target() {
        for (const Command* cmd : candidate_cmds_) {
            const Declaration* decl = decl_of(*cmd);
            if (!decl) continue;
            if (decl->keyword != DeclKeyword::Theorem &&
                decl->keyword != DeclKeyword::Lemma)
                continue;
            if (decl->name != problem_target_.decl->name) continue;
            if (normalize_signature(decl->signature) == problem_sig_) return;
        }
        emit(RuleId::R9_PrerequisiteTampering,
             candidate_span_for(problem_target_.decl->name),
             "target theorem '" + target_ +
                 "' does not appear in the candidate with the problem's "
                 "signature");
    }

    SourceSpan candidate_span_for(const std::string& name) {
        if (!name.empty()) {
            for (const Command* cmd : candidate_cmds_) {
                if (const Declaration* decl = decl_of(*cmd)) {
                    if (decl->name == name) return decl->span;
                } else if (cmd->is<MetaDeclCmd>()) {
                    if (cmd->get<MetaDeclCmd>().name == name)
                        return significant_span(*cmd);
                }
            }
        }
        return file_span();
    }

    void rule10() {
        for (const Token& tok : candidate_.all_tokens()) {
            if (tok.kind != TokenKind::Keyword) continue;
            if (tok.text != "sorry" && tok.text != "admit") continue;
            emit(RuleId::R10_SorryRemaining, tok.span,
                 "'" + tok.text + "' leaves the goal unproved");
        }
    }
};

} // namespace

Verdict check_legality(const ParsedFile& problem, const ParsedFile& candidate,
                       const std::string& target,
                       const RuleOptions& options) {
    return Checker(problem, candidate, target, options).run();
}

std::string explain(const Verdict& verdict) {
    std::ostringstream out;
    out << (verdict.legal ? "LEGAL" : "ILLEGAL") << " ("
        << verdict.findings.size()
        << (verdict.findings.size() == 1 ? " finding)" : " findings)");
    std::vector<const Finding*> ordered;
    ordered.reserve(verdict.findings.size());
    for (const Finding& f : verdict.findings) ordered.push_back(&f);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const Finding* a, const Finding* b) {
                         if (a->span.start != b->span.start)
                             return a->span.start < b->span.start;
                         return static_cast<int>(a->rule) <
                                static_cast<int>(b->rule);
                     });
    for (const Finding* f : ordered) {
        out << "\n"
            << rule_id_name(f->rule) << "  " << rule_pattern_name(f->rule)
            << "  " << f->span.line << ":" << f->span.column << "  "
            << f->message;
        if (f->severity == Severity::Warning) out << " [warning]";
    }
    return out.str();
}

} // namespace proofcheck

#pragma once

#include "proofcheck/ast.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace proofcheck {

enum class RuleId {
    R1_TargetTampered,
    R2_EarlyExit,
    R3_UnprovenAssumption,
    R4_MetaComponent,
    R5_UnsafeBypass,
    R6_GlobalVariable,
    R7_ConceptShadowing,
    R8_InstanceInjection,
    R9_PrerequisiteTampering,
    R10_SorryRemaining,
};

constexpr int kRuleCount = 10;

const char* rule_id_name(RuleId rule);
const char* rule_pattern_name(RuleId rule);
std::optional<RuleId> rule_id_from(std::string_view name);

enum class Severity { Error, Warning };

const char* severity_name(Severity severity);

struct Finding {
    RuleId rule;
    Severity severity = Severity::Error;
    SourceSpan span; // always inside the candidate file
    std::string message;
};

struct Verdict {
    bool legal = true;
    std::vector<Finding> findings;
};

struct RuleOptions {
    std::set<RuleId> disabled;
    std::map<RuleId, Severity> severity_overrides;
    std::vector<std::string> set_option_denylist = {"debug.skipKernelTC"};
    std::vector<std::string> hash_command_denylist; // #exit always rejected
};

/// The problem file does not contain the target theorem.
class TargetMissingError : public std::runtime_error {
public:
    explicit TargetMissingError(const std::string& target)
        : std::runtime_error("TARGET_MISSING_IN_PROBLEM: " + target) {}
};

/// Checks a candidate proof file against the problem file. Deterministic:
/// findings come back ordered by rule then span. `legal` is true iff no
/// finding has Error severity. Throws TargetMissingError when the problem
/// lacks the target theorem.
Verdict check_legality(const ParsedFile& problem, const ParsedFile& candidate,
                       const std::string& target,
                       const RuleOptions& options = {});

/// Human-readable report: a LEGAL/ILLEGAL header, then one line per finding
/// (rule id, pattern name, line:column, message) ordered by span.
std::string explain(const Verdict& verdict);

} // namespace proofcheck

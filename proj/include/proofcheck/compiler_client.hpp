#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace proofcheck {

/// One diagnostic from the compiler service. Positions are 1-based lines
/// and 0-based columns, as the service reports them.
struct CompilePosition {
    int line = 0;
    int column = 0;
    bool operator==(const CompilePosition&) const = default;
};

struct CompileDiagnostic {
    std::string severity; // "error" | "warning" | "info"
    std::optional<CompilePosition> pos;
    std::optional<CompilePosition> end_pos;
    std::string data;
    bool operator==(const CompileDiagnostic&) const = default;
};

struct CompileResponse {
    bool pass = false;
    std::vector<CompileDiagnostic> errors;
    bool operator==(const CompileResponse&) const = default;
};

struct CompileRequest {
    std::string code;
    int timeout_seconds = 60;
};

enum class CompileErrorKind {
    EmptyCode,
    ConnectionFailed,
    Timeout,
    MalformedResponse,
    MockMiss,
};

const char* compile_error_kind_name(CompileErrorKind kind);

struct CompileError {
    CompileErrorKind kind = CompileErrorKind::ConnectionFailed;
    std::string detail;
};

using CompileResult = std::variant<CompileResponse, CompileError>;

inline bool compile_ok(const CompileResult& r) {
    return std::holds_alternative<CompileResponse>(r);
}

/// SHA-256 of `data`, lowercase hex.
std::string sha256_hex(std::string_view data);

/// Content-addressed store of compiler responses, persisted as JSONL
/// records {"hash": ..., "response": {...}}.
class MockStore {
public:
    MockStore() = default;

    /// Loads records from a JSONL file. Returns false if the file cannot
    /// be opened; malformed lines are skipped.
    bool load(const std::string& path);
    bool save(const std::string& path) const;

    std::optional<CompileResponse> find(std::string_view code) const;
    void insert(std::string_view code, const CompileResponse& response);
    std::size_t size() const { return entries_.size(); }

private:
    std::map<std::string, CompileResponse> entries_;
};

/// Parses a compiler-service response body. Accepts both the bare object
/// {"pass": ..., "errors": [...]} and the {"info": {...}} wrapper.
CompileResult parse_compile_response(const std::string& body);

std::string compile_response_to_json(const CompileResponse& response);

enum class ClientMode { Live, Mock, Record };

struct ClientConfig {
    ClientMode mode = ClientMode::Mock;
    std::string url;       // live/record: e.g. "http://127.0.0.1:8000"
    std::string mock_path; // mock/record: JSONL store
    int retries = 2;       // additional attempts after the first
    int max_inflight = 8;
    int timeout_seconds = 60;
};

/// Client for the check-compile service. Thread-safe; concurrent compile()
/// calls are capped at `max_inflight` in-flight HTTP requests.
class CompilerClient {
public:
    explicit CompilerClient(ClientConfig config);
    ~CompilerClient();

    CompilerClient(const CompilerClient&) = delete;
    CompilerClient& operator=(const CompilerClient&) = delete;

    CompileResult compile(const CompileRequest& request);

    const ClientConfig& config() const { return config_; }

    /// Record mode: writes the accumulated store back to mock_path.
    bool flush();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
    ClientConfig config_;
};

} // namespace proofcheck

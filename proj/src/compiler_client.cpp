#include "proofcheck/compiler_client.hpp"

#include <httplib.h>
#include <json.hpp>

#include <array>
#include <chrono>
#include <cstring>
#include <fstream>
#include <mutex>
#include <semaphore>
#include <sstream>
#include <thread>

namespace proofcheck {

using nlohmann::json;

const char* compile_error_kind_name(CompileErrorKind kind) {
    switch (kind) {
    case CompileErrorKind::EmptyCode: return "EmptyCode";
    case CompileErrorKind::ConnectionFailed: return "ConnectionFailed";
    case CompileErrorKind::Timeout: return "Timeout";
    case CompileErrorKind::MalformedResponse: return "MalformedResponse";
    case CompileErrorKind::MockMiss: return "MockMiss";
    }
    return "?";
}

// --- SHA-256 ---------------------------------------------------------------

namespace {

constexpr std::array<std::uint32_t, 64> kSha256K = {
    0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
    0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
    0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
    0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
    0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
    0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
    0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
    0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
    0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
    0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
    0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};

inline std::uint32_t rotr(std::uint32_t x, int n) {
    return (x >> n) | (x << (32 - n));
}

void sha256_block(std::array<std::uint32_t, 8>& state,
                  const unsigned char* block) {
    std::array<std::uint32_t, 64> w{};
    for (int i = 0; i < 16; ++i) {
        w[i] = (std::uint32_t(block[i * 4]) << 24) |
               (std::uint32_t(block[i * 4 + 1]) << 16) |
               (std::uint32_t(block[i * 4 + 2]) << 8) |
               std::uint32_t(block[i * 4 + 3]);
    }
    for (int i = 16; i < 64; ++i) {
        std::uint32_t s0 =
            rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
        std::uint32_t s1 =
            rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
        w[i] = w[i - 16] + s0 + w[i - 7] + s1;
    }
    auto [a, b, c, d, e, f, g, h] = state;
    for (int i = 0; i < 64; ++i) {
        std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
        std::uint32_t ch = (e & f) ^ (~e & g);
        std::uint32_t t1 = h + s1 + ch + kSha256K[i] + w[i];
        std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
        std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
        std::uint32_t t2 = s0 + maj;
        h = g;
        g = f;
        f = e;
        e = d + t1;
        d = c;
        c = b;
        b = a;
        a = t1 + t2;
    }
    state[0] += a;
    state[1] += b;
    state[2] += c;
    state[3] += d;
    state[4] += e;
    state[5] += f;
    state[6] += g;
    state[7] += h;
}

} // namespace

std::string sha256_hex(std::string_view data) {
    std::array<std::uint32_t, 8> state = {0x6a09e667, 0xbb67ae85, 0x3c6ef372,
                                          0xa54ff53a, 0x510e527f, 0x9b05688c,
                                          0x1f83d9ab, 0x5be0cd19};
    const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
    std::size_t n = data.size();
    std::size_t full = n / 64;
    for (std::size_t i = 0; i < full; ++i) sha256_block(state, bytes + i * 64);

    std::array<unsigned char, 128> tail{};
    std::size_t rem = n - full * 64;
    std::memcpy(tail.data(), bytes + full * 64, rem);
    tail[rem] = 0x80;
    std::size_t tail_len = (rem < 56) ? 64 : 128;
    std::uint64_t bit_len = std::uint64_t(n) * 8;
    for (int i = 0; i < 8; ++i)
        tail[tail_len - 1 - i] = static_cast<unsigned char>(bit_len >> (8 * i));
    sha256_block(state, tail.data());
    if (tail_len == 128) sha256_block(state, tail.data() + 64);

    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(64);
    for (std::uint32_t word : state) {
        for (int shift = 28; shift >= 0; shift -= 4)
            out.push_back(hex[(word >> shift) & 0xf]);
    }
    return out;
}

// --- Response (de)serialization ---------------------------------------------

namespace {

std::optional<CompilePosition> position_from_json(const json& j) {
    if (!j.is_object()) return std::nullopt;
    CompilePosition pos;
    if (j.contains("line") && j["line"].is_number())
        pos.line = j["line"].get<int>();
    if (j.contains("column") && j["column"].is_number())
        pos.column = j["column"].get<int>();
    return pos;
}

json position_to_json(const CompilePosition& pos) {
    return json{{"line", pos.line}, {"column", pos.column}};
}

std::optional<CompileResponse> response_from_json(const json& root) {
    const json* j = &root;
    if (j->is_object() && j->contains("info") && (*j)["info"].is_object())
        j = &(*j)["info"];
    if (!j->is_object() || !j->contains("pass") ||
        !(*j)["pass"].is_boolean())
        return std::nullopt;
    CompileResponse resp;
    resp.pass = (*j)["pass"].get<bool>();
    if (j->contains("errors")) {
        if (!(*j)["errors"].is_array()) return std::nullopt;
        for (const json& e : (*j)["errors"]) {
            if (!e.is_object()) return std::nullopt;
            CompileDiagnostic diag;
            if (e.contains("severity") && e["severity"].is_string())
                diag.severity = e["severity"].get<std::string>();
            else
                diag.severity = "error";
            if (e.contains("pos")) diag.pos = position_from_json(e["pos"]);
            if (e.contains("endPos"))
                diag.end_pos = position_from_json(e["endPos"]);
            if (e.contains("data") && e["data"].is_string())
                diag.data = e["data"].get<std::string>();
            resp.errors.push_back(std::move(diag));
        }
    }
    return resp;
}

json response_to_json_obj(const CompileResponse& resp) {
    json errors = json::array();
    for (const CompileDiagnostic& diag : resp.errors) {
        json e{{"severity", diag.severity}, {"data", diag.data}};
        if (diag.pos) e["pos"] = position_to_json(*diag.pos);
        if (diag.end_pos) e["endPos"] = position_to_json(*diag.end_pos);
        errors.push_back(std::move(e));
    }
    return json{{"pass", resp.pass}, {"errors", std::move(errors)}};
}

} // namespace

CompileResult parse_compile_response(const std::string& body) {
    json root = json::parse(body, nullptr, false);
    if (root.is_discarded())
        return CompileError{CompileErrorKind::MalformedResponse, body};
    std::optional<CompileResponse> resp = response_from_json(root);
    if (!resp)
        return CompileError{CompileErrorKind::MalformedResponse, body};
    return *resp;
}

std::string compile_response_to_json(const CompileResponse& response) {
    return response_to_json_obj(response).dump();
}

// --- MockStore ---------------------------------------------------------------

bool MockStore::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return false;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object()) continue;
        if (!record.contains("hash") || !record["hash"].is_string()) continue;
        if (!record.contains("response")) continue;
        std::optional<CompileResponse> resp =
            response_from_json(record["response"]);
        if (!resp) continue;
        entries_[record["hash"].get<std::string>()] = std::move(*resp);
    }
    return true;
}

bool MockStore::save(const std::string& path) const {
    std::ofstream out(path, std::ios::trunc);
    if (!out) return false;
    for (const auto& [hash, resp] : entries_) {
        json record{{"hash", hash}, {"response", response_to_json_obj(resp)}};
        out << record.dump() << "\n";
    }
    return bool(out);
}

std::optional<CompileResponse> MockStore::find(std::string_view code) const {
    auto it = entries_.find(sha256_hex(code));
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void MockStore::insert(std::string_view code,
                       const CompileResponse& response) {
    entries_[sha256_hex(code)] = response;
}

// --- CompilerClient ----------------------------------------------------------

struct CompilerClient::Impl {
    MockStore store;
    std::mutex store_mutex;
    std::unique_ptr<std::counting_semaphore<4096>> inflight;
    std::string host; // scheme://host:port
    std::string path; // request path
    bool dirty = false;
};

namespace {

void split_url(const std::string& url, std::string& host, std::string& path) {
    host = url;
    path = "/compile";
    auto scheme = url.find("://");
    std::size_t from = scheme == std::string::npos ? 0 : scheme + 3;
    auto slash = url.find('/', from);
    if (slash != std::string::npos) {
        host = url.substr(0, slash);
        path = url.substr(slash);
    }
}

} // namespace

CompilerClient::CompilerClient(ClientConfig config)
    : impl_(std::make_unique<Impl>()), config_(std::move(config)) {
    if (config_.max_inflight < 1) config_.max_inflight = 1;
    if (config_.max_inflight > 4096) config_.max_inflight = 4096;
    impl_->inflight = std::make_unique<std::counting_semaphore<4096>>(
        config_.max_inflight);
    if (!config_.mock_path.empty() && config_.mode != ClientMode::Live)
        impl_->store.load(config_.mock_path);
    split_url(config_.url, impl_->host, impl_->path);
}

CompilerClient::~CompilerClient() {
    if (impl_ && impl_->dirty) flush();
}

bool CompilerClient::flush() {
    if (config_.mock_path.empty()) return false;
    std::lock_guard<std::mutex> lock(impl_->store_mutex);
    bool ok = impl_->store.save(config_.mock_path);
    if (ok) impl_->dirty = false;
    return ok;
}

CompileResult CompilerClient::compile(const CompileRequest& request) {
    if (request.code.empty())
        return CompileError{CompileErrorKind::EmptyCode,
                            "refusing to compile empty code"};

    if (config_.mode != ClientMode::Live) {
        std::lock_guard<std::mutex> lock(impl_->store_mutex);
        std::optional<CompileResponse> hit = impl_->store.find(request.code);
        if (hit) return *hit;
        if (config_.mode == ClientMode::Mock)
            return CompileError{CompileErrorKind::MockMiss,
                                sha256_hex(request.code)};
    }

    json body{{"code", request.code},
              {"timeout", request.timeout_seconds > 0
                              ? request.timeout_seconds
                              : config_.timeout_seconds}};
    std::string payload = body.dump();

    CompileError last{CompileErrorKind::ConnectionFailed, "no attempt made"};
    int attempts = config_.retries < 0 ? 1 : config_.retries + 1;
    for (int attempt = 0; attempt < attempts; ++attempt) {
        if (attempt > 0) {
            std::this_thread::sleep_for(
                std::chrono::milliseconds(100 * (1 << (attempt - 1))));
        }
        impl_->inflight->acquire();
        httplib::Client cli(impl_->host);
        cli.set_connection_timeout(config_.timeout_seconds, 0);
        cli.set_read_timeout(config_.timeout_seconds, 0);
        cli.set_write_timeout(config_.timeout_seconds, 0);
        httplib::Result res =
            cli.Post(impl_->path, payload, "application/json");
        impl_->inflight->release();

        if (!res) {
            CompileErrorKind kind = CompileErrorKind::ConnectionFailed;
            if (res.error() == httplib::Error::ConnectionTimeout ||
                res.error() == httplib::Error::Read ||
                res.error() == httplib::Error::Write)
                kind = CompileErrorKind::Timeout;
            last = CompileError{kind, httplib::to_string(res.error())};
            continue;
        }
        if (res->status != 200) {
            last = CompileError{CompileErrorKind::ConnectionFailed,
                                "HTTP " + std::to_string(res->status)};
            continue;
        }
        CompileResult parsed = parse_compile_response(res->body);
        if (!compile_ok(parsed)) return parsed; // do not retry bad payloads
        if (config_.mode == ClientMode::Record) {
            std::lock_guard<std::mutex> lock(impl_->store_mutex);
            impl_->store.insert(request.code,
                                std::get<CompileResponse>(parsed));
            impl_->dirty = true;
        }
        return parsed;
    }
    return last;
}

} // namespace proofcheck

#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace proofcheck::fixtures {

/// One embedded fixture file. `path` is relative with forward slashes;
/// `content` is the exact bytes written by emit().
struct FixtureFile {
    std::string_view path;
    std::string_view content;
};

/// Every embedded fixture: reference problems, hack-pattern candidates,
/// clean proofs, expectation manifests, the recorded compiler responses,
/// and a ten-record corpus tying them together.
std::span<const FixtureFile> all();

std::optional<std::string_view> content(std::string_view path);

/// Writes the fixture tree under `dir`. Deterministic: emitting twice
/// produces byte-identical files.
bool emit(const std::filesystem::path& dir, std::string* error = nullptr);

} // namespace proofcheck::fixtures

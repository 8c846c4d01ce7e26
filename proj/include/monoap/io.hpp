#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace monoap {

/// Writes to a sibling temporary file and renames it over path. Throws IoError.
void atomic_write(const std::filesystem::path& path, std::string_view content);

/// Whole file contents. Throws IoError.
std::string read_text(const std::filesystem::path& path);

std::uint64_t fnv1a64(std::string_view data);

}  // namespace monoap

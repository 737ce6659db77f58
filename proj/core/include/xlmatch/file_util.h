#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace xlmatch {

// Writes to a temporary sibling and renames it over `path`, so readers never
// see a partial file. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

// Throws IoError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace xlmatch

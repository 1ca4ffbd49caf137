#pragma once

#include <string>

namespace mpsa {

// Writes content to a sibling temporary file and renames it over the target,
// so interrupted runs never leave partial artifacts.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace mpsa

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace hyperconic::io {

/// Shortest decimal that round-trips the exact double (%.17g).
std::string format_full(double value);

std::string join_csv(const std::vector<double>& values);
std::vector<double> split_csv(const std::string& line);

/// Write via a sibling temp file and rename, so readers never observe a
/// partial file.
void write_text_file_atomic(const std::filesystem::path& path,
                            const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace hyperconic::io

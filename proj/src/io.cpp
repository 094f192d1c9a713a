#include "hyperconic/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hyperconic::io {

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string join_csv(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ',';
    out += format_full(values[i]);
  }
  return out;
}

std::vector<double> split_csv(const std::string& line) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(',', start);
    if (end == std::string::npos) end = line.size();
    std::string field = line.substr(start, end - start);
    const char* begin = field.c_str();
    char* parsed = nullptr;
    double value = std::strtod(begin, &parsed);
    while (parsed != nullptr && (*parsed == ' ' || *parsed == '\t' ||
                                 *parsed == '\r')) {
      ++parsed;
    }
    if (parsed == begin || (parsed != nullptr && *parsed != '\0')) {
      throw std::invalid_argument("malformed numeric field: '" + field + "'");
    }
    values.push_back(value);
    if (end == line.size()) break;
    start = end + 1;
  }
  return values;
}

void write_text_file_atomic(const std::filesystem::path& path,
                            const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open for writing: " + tmp.string());
    }
    out << content;
    if (!out.flush()) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open for reading: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace hyperconic::io

#pragma once

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>

namespace ffmfg {

/// Shortest decimal representation that parses back to exactly the same
/// double ("1", "0.1", "2.5e-12", "nan", "inf").
std::string format_double(double value);

/// Comma-separated writer with `\n` line endings. Creation fails if the file
/// exists and overwrite is false; all writes go through a single stream.
class CsvWriter {
public:
  CsvWriter(const std::filesystem::path& path, bool overwrite);

  void write_row(std::initializer_list<std::string_view> cells);
  void close();

private:
  std::ofstream out_;
  std::filesystem::path path_;
};

}  // namespace ffmfg

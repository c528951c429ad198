#include "ffmfg/csv.hpp"

#include <charconv>
#include <system_error>

namespace ffmfg {

std::string format_double(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer, ptr);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, bool overwrite) : path_(path) {
  if (!overwrite && std::filesystem::exists(path))
    throw std::ios_base::failure("refusing to overwrite existing file " + path.string() +
                                 " (pass --force to allow)");
  out_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
  if (!out_) throw std::ios_base::failure("cannot open " + path.string() + " for writing");
}

void CsvWriter::write_row(std::initializer_list<std::string_view> cells) {
  bool first = true;
  for (std::string_view cell : cells) {
    if (!first) out_ << ',';
    out_ << cell;
    first = false;
  }
  out_ << '\n';
  if (!out_) throw std::ios_base::failure("write failed for " + path_.string());
}

void CsvWriter::close() {
  out_.close();
  if (out_.fail()) throw std::ios_base::failure("close failed for " + path_.string());
}

}  // namespace ffmfg

// Copyright 2026 The hausanoise Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hausanoise/io.hpp"

#include <sstream>

#include "hausanoise/errors.hpp"

namespace hausanoise::io {

LineReader::LineReader(const std::filesystem::path& path)
    : path_(path), in_(path, std::ios::binary) {
  if (!in_) throw IoError("cannot open '" + path.string() + "' for reading");
}

std::optional<std::string> LineReader::next() {
  std::string line;
  if (!std::getline(in_, line)) {
    if (in_.bad()) throw IoError("read failure on '" + path_.string() + "'");
    return std::nullopt;
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::vector<std::string> LineReader::next_block(std::size_t max_lines) {
  std::vector<std::string> block;
  block.reserve(max_lines);
  while (block.size() < max_lines) {
    auto line = next();
    if (!line) break;
    block.push_back(std::move(*line));
  }
  return block;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  LineReader reader(path);
  std::vector<std::string> lines;
  while (auto line = reader.next()) lines.push_back(std::move(*line));
  return lines;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LineWriter::LineWriter(const std::filesystem::path& path)
    : path_(path), out_(path, std::ios::binary | std::ios::trunc) {
  if (!out_) throw IoError("cannot open '" + path.string() + "' for writing");
}

void LineWriter::write(std::string_view line) {
  out_.write(line.data(), static_cast<std::streamsize>(line.size()));
  out_.put('\n');
  if (!out_) throw IoError("write failure on '" + path_.string() + "'");
}

void LineWriter::close() {
  out_.close();
  if (!out_) throw IoError("cannot close '" + path_.string() + "'");
}

void write_lines(const std::filesystem::path& path,
                 std::span<const std::string> lines) {
  LineWriter writer(path);
  for (const auto& line : lines) writer.write(line);
  writer.close();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.close();
  if (!out) throw IoError("write failure on '" + path.string() + "'");
}

}  // namespace hausanoise::io

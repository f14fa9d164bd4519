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

#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hausanoise::io {

// Streams a UTF-8 text file line by line, stripping a trailing '\r'.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);

  std::optional<std::string> next();
  // Reads up to `max_lines` lines; an empty result means end of file.
  std::vector<std::string> next_block(std::size_t max_lines);

 private:
  std::filesystem::path path_;
  std::ifstream in_;
};

std::vector<std::string> read_lines(const std::filesystem::path& path);
std::string read_file(const std::filesystem::path& path);

class LineWriter {
 public:
  explicit LineWriter(const std::filesystem::path& path);

  void write(std::string_view line);
  void close();

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

void write_lines(const std::filesystem::path& path,
                 std::span<const std::string> lines);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hausanoise::io

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

// Writes a deterministic Hausa-like corpus (and optionally its lexicon).

#include <CLI11.hpp>

#include "hausa_fixture.hpp"
#include "hausanoise/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate a deterministic Hausa-like corpus"};
  std::size_t count = 5000;
  std::uint64_t seed = 1;
  std::string out, lexicon_out;
  app.add_option("--count", count, "Sentences")->capture_default_str();
  app.add_option("--seed", seed, "Corpus seed")->capture_default_str();
  app.add_option("--out", out, "Corpus file")->required();
  app.add_option("--lexicon-out", lexicon_out, "Also write the word list");
  CLI11_PARSE(app, argc, argv);

  hausanoise::io::write_lines(out, hausanoise::fixture::hausa_sentences(count, seed));
  if (!lexicon_out.empty()) {
    hausanoise::io::write_lines(lexicon_out, hausanoise::fixture::hausa_vocabulary());
  }
  return 0;
}

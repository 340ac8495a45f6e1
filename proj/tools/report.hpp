// Copyright 2026 The vcbound Authors
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

// Output plumbing for the command-line tool: exit codes, number formatting,
// JSON/CSV emission and run manifests.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vcbound/vcbound.h"

namespace vcbound::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitUnsupported = 4,
};

inline constexpr int kSchemaVersion = 1;

class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, const std::string& what)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const { return exit_code_; }

 private:
  int exit_code_;
};

// Throws CliError with the exit code matching a failed library status.
void check(vcb_status status);

// Shortest decimal string that round-trips to x ("inf", "-inf", "nan" for
// non-finite values).
std::string shortest(double x);

// x to 6 significant digits, for human-readable tables.
std::string sig6(double x);

// JSON text with every floating-point number in shortest round-trip form.
// Non-finite doubles become strings.
std::string dump_json(const Json& j, int indent = 2);

std::string sha256_hex(std::string_view bytes);
std::string utc_timestamp();

// Parses "a", "a,b,c" or "lo:hi:step" (inclusive). Empty or reversed ranges
// throw CliError(kExitUsage).
std::vector<double> parse_real_range(std::string_view text);
std::vector<std::int64_t> parse_int_range(std::string_view text);

// Ties an output file to its inputs. Every emitted data file gets a digest
// entry; runtime holds the fields that legitimately vary between runs.
struct RunManifest {
  std::string command;
  Json config = Json::object();
  std::vector<std::uint64_t> base_seeds;
  Json runtime = Json::object();

  Json to_json() const;
};

// Writes `content` to `path` and a manifest next to it at
// `<path>.manifest.json` listing the file's SHA-256. Throws CliError(kExitIo).
void write_with_manifest(const std::filesystem::path& path, const std::string& content,
                         RunManifest manifest);

void write_file(const std::filesystem::path& path, const std::string& content);

std::string manifest_path_for(const std::filesystem::path& path);

}  // namespace vcbound::cli

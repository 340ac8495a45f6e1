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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace vcbound::cli {

// Where m_n(S) comes from: an explicit --m, or a class plus a growth mode
// ("exact", "sauer" for (en/d)^d, "paper-n2" for n^2 on intervals).
struct GrowthSpec {
  std::optional<double> m;
  std::optional<std::string> class_name;
  std::size_t dimension = 2;
  std::string mode = "exact";
};

struct BoundOptions {
  std::int64_t n = 0;
  double epsilon = 0.0;
  GrowthSpec growth;
  double constant = 0.4748;
  std::string variant = "paper";
  std::string format = "table";
};

struct CompareOptions {
  std::string n_range;
  std::string eps_range;
  GrowthSpec growth;
  double constant = 0.4748;
  std::string variant = "paper";
  std::optional<std::string> out;
};

struct CrossoverOptions {
  std::int64_t n = 0;
  double constant = 0.4748;
  std::string variant = "paper";
  bool m_given = false;
  std::string format = "table";
};

struct SimulateOptions {
  std::string class_name = "intervals";
  std::size_t dimension = 2;
  std::string distribution = "uniform01";
  std::size_t n = 0;
  double epsilon = 0.0;
  std::uint64_t trials = 10'000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  double confidence = 0.999;
  double constant = 0.4748;
  std::string variant = "paper";
  std::optional<std::string> out;
};

struct GrowthOptions {
  std::string class_name = "intervals";
  std::size_t dimension = 2;
  std::string r_range = "1:10:1";
  std::string format = "table";
  bool verify = false;
};

struct SampleOptions {
  std::string distribution = "uniform01";
  std::size_t dimension = 1;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

// Scan of the exact tail against the flat C/sqrt(n) single-set form.
struct AuditOptions {
  std::string n_range = "5:200:5";
  std::string p_range = "0.05:0.95:0.05";
  std::string eps_range = "0.02:0.4:0.02";
  double constant = 0.4748;
  std::optional<std::string> out;
};

// Each command writes its report to `out` and returns an exit code; failures
// surface as CliError. command_line is recorded in manifests.
int run_bound(const BoundOptions& o, std::ostream& out);
int run_compare(const CompareOptions& o, const std::string& command_line, std::ostream& out);
int run_crossover(const CrossoverOptions& o, std::ostream& out);
int run_simulate(const SimulateOptions& o, const std::string& command_line, std::ostream& out);
int run_growth(const GrowthOptions& o, std::ostream& out);
int run_sample(const SampleOptions& o, const std::string& command_line, std::ostream& out);
int run_audit(const AuditOptions& o, const std::string& command_line, std::ostream& out);

}  // namespace vcbound::cli

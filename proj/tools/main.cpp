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

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "report.hpp"

namespace {

using namespace vcbound::cli;

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

unsigned default_workers() {
  const char* env = std::getenv("VCBOUND_WORKERS");
  if (!env || !*env) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0 || v > 1024) {
    throw CliError(kExitUsage, "VCBOUND_WORKERS must be an integer in [1, 1024]");
  }
  return static_cast<unsigned>(v);
}

void add_growth_flags(CLI::App* cmd, GrowthSpec& g) {
  cmd->add_option("--m", g.m, "growth value m_n(S), used as given");
  cmd->add_option("--class", g.class_name, "rays, intervals, halfplanes or halfspaces");
  cmd->add_option("--dim", g.dimension, "dimension for halfspaces")->capture_default_str();
  cmd->add_option("--growth", g.mode, "exact, sauer or paper-n2")->capture_default_str();
}

void add_bound_flags(CLI::App* cmd, double& constant, std::string& variant) {
  cmd->add_option("--constant", constant, "Berry-Esseen constant C")->capture_default_str();
  cmd->add_option("--variant", variant, "paper, two_sided or moment")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string command_line = join_args(argc, argv);
  CLI::App app{"Uniform deviation bounds: classical and normal-approximation forms"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(vcb_version()));

  BoundOptions bound;
  auto* c_bound = app.add_subcommand("bound", "evaluate both bounds at one (n, epsilon)");
  c_bound->add_option("--n", bound.n, "sample size")->required();
  c_bound->add_option("--eps", bound.epsilon, "deviation epsilon")->required();
  add_growth_flags(c_bound, bound.growth);
  add_bound_flags(c_bound, bound.constant, bound.variant);
  c_bound->add_option("--format", bound.format, "table, csv or json")->capture_default_str();

  CompareOptions compare;
  auto* c_compare = app.add_subcommand("compare", "tabulate both bounds over an (n, epsilon) grid");
  c_compare->add_option("--n", compare.n_range, "n values: a, a,b,c or lo:hi:step")->required();
  c_compare->add_option("--eps", compare.eps_range, "epsilon values, same syntax")->required();
  add_growth_flags(c_compare, compare.growth);
  add_bound_flags(c_compare, compare.constant, compare.variant);
  c_compare->add_option("--out", compare.out, "CSV path (stdout if omitted)");

  CrossoverOptions crossover;
  double ignored_m = 0.0;
  auto* c_cross = app.add_subcommand("crossover", "epsilon ranges where the refined bound is smaller");
  c_cross->add_option("--n", crossover.n, "sample size")->required();
  add_bound_flags(c_cross, crossover.constant, crossover.variant);
  auto* m_flag = c_cross->add_option("--m", ignored_m, "not accepted")->group("");
  c_cross->add_option("--format", crossover.format, "table or json")->capture_default_str();

  SimulateOptions sim;
  auto* c_sim = app.add_subcommand("simulate", "Monte Carlo estimate of B_n checked against both bounds");
  c_sim->add_option("--class", sim.class_name, "rays, intervals, halfplanes or halfspaces")
      ->capture_default_str();
  c_sim->add_option("--dim", sim.dimension, "dimension for halfspaces")->capture_default_str();
  c_sim->add_option("--dist", sim.distribution, "uniform01 or gaussian")->capture_default_str();
  c_sim->add_option("--n", sim.n, "sample size")->required();
  c_sim->add_option("--eps", sim.epsilon, "deviation epsilon")->required();
  c_sim->add_option("--trials", sim.trials, "Monte Carlo trials")->capture_default_str();
  c_sim->add_option("--seed", sim.seed, "base seed")->capture_default_str();
  auto* workers_flag = c_sim->add_option("--workers", sim.workers, "worker threads (default $VCBOUND_WORKERS or 1)");
  c_sim->add_option("--confidence", sim.confidence, "Wilson interval level")->capture_default_str();
  add_bound_flags(c_sim, sim.constant, sim.variant);
  c_sim->add_option("--out", sim.out, "JSON path (stdout if omitted)");

  GrowthOptions growth;
  auto* c_growth = app.add_subcommand("growth", "growth function, shattering and Sauer bounds");
  c_growth->add_option("--class", growth.class_name, "rays, intervals, halfplanes or halfspaces")
      ->capture_default_str();
  c_growth->add_option("--dim", growth.dimension, "dimension for halfspaces")->capture_default_str();
  c_growth->add_option("--r", growth.r_range, "r values: a, a,b,c or lo:hi:step")->capture_default_str();
  c_growth->add_option("--format", growth.format, "table, csv or json")->capture_default_str();
  c_growth->add_flag("--verify", growth.verify, "also enumerate traces on a moment-curve configuration");

  SampleOptions sample;
  auto* c_sample = app.add_subcommand("sample", "draw a seeded sample and write it as CSV");
  c_sample->add_option("--dist", sample.distribution, "uniform01 or gaussian")->capture_default_str();
  c_sample->add_option("--dim", sample.dimension, "dimension")->capture_default_str();
  c_sample->add_option("--n", sample.n, "sample size")->required();
  c_sample->add_option("--seed", sample.seed, "seed")->capture_default_str();
  c_sample->add_option("--out", sample.out, "CSV path")->required();

  AuditOptions audit;
  auto* c_audit = app.add_subcommand("audit", "exact tail vs the flat C/sqrt(n) form over a (n, p, epsilon) grid");
  c_audit->add_option("--n", audit.n_range, "n values")->capture_default_str();
  c_audit->add_option("--p", audit.p_range, "p values")->capture_default_str();
  c_audit->add_option("--eps", audit.eps_range, "epsilon values")->capture_default_str();
  c_audit->add_option("--constant", audit.constant, "Berry-Esseen constant C")->capture_default_str();
  c_audit->add_option("--out", audit.out, "CSV path for the violation rows (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_bound) return run_bound(bound, std::cout);
    if (*c_compare) return run_compare(compare, command_line, std::cout);
    if (*c_cross) {
      crossover.m_given = m_flag->count() > 0;
      return run_crossover(crossover, std::cout);
    }
    if (*c_sim) {
      if (workers_flag->count() == 0) sim.workers = default_workers();
      return run_simulate(sim, command_line, std::cout);
    }
    if (*c_growth) return run_growth(growth, std::cout);
    if (*c_sample) return run_sample(sample, command_line, std::cout);
    if (*c_audit) return run_audit(audit, command_line, std::cout);
  } catch (const CliError& e) {
    std::cerr << "vcbound: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "vcbound: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

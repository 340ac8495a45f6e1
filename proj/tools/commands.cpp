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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "report.hpp"
#include "vcbound/vcbound.h"

namespace vcbound::cli {
namespace {

vcb_variant parse_variant(const std::string& name) {
  if (name == "paper") return VCB_VARIANT_PAPER;
  if (name == "two_sided" || name == "two-sided") return VCB_VARIANT_TWO_SIDED;
  if (name == "moment") return VCB_VARIANT_MOMENT;
  throw CliError(kExitUsage, "unknown variant '" + name + "' (paper, two_sided, moment)");
}

const char* variant_name(vcb_variant v) {
  switch (v) {
    case VCB_VARIANT_PAPER:
      return "paper";
    case VCB_VARIANT_TWO_SIDED:
      return "two_sided";
    case VCB_VARIANT_MOMENT:
      return "moment";
  }
  return "unknown";
}

vcb_class parse_class(const std::string& name, std::size_t dimension) {
  if (name == "rays") return {VCB_CLASS_RAYS, 1};
  if (name == "intervals") return {VCB_CLASS_INTERVALS, 1};
  if (name == "halfplanes") return {VCB_CLASS_HALFSPACES, 2};
  if (name == "halfspaces") {
    if (dimension == 0) throw CliError(kExitUsage, "--dim must be >= 1");
    return {VCB_CLASS_HALFSPACES, dimension};
  }
  throw CliError(kExitUsage, "unknown class '" + name + "' (rays, intervals, halfplanes, halfspaces)");
}

std::string class_label(vcb_class c) {
  switch (c.kind) {
    case VCB_CLASS_RAYS:
      return "rays";
    case VCB_CLASS_INTERVALS:
      return "intervals";
    case VCB_CLASS_HALFSPACES:
      return c.dimension == 2 ? "halfplanes" : "halfspaces_" + std::to_string(c.dimension);
  }
  return "unknown";
}

vcb_distribution parse_distribution(const std::string& name, std::size_t dimension) {
  if (name == "uniform01") {
    if (dimension != 1) throw CliError(kExitUsage, "uniform01 is one-dimensional");
    return {VCB_DIST_UNIFORM01, 1};
  }
  if (name == "gaussian" || name == "std_gaussian") return {VCB_DIST_STD_GAUSSIAN, dimension};
  throw CliError(kExitUsage, "unknown distribution '" + name + "' (uniform01, gaussian)");
}

struct ResolvedGrowth {
  double log_m = 0.0;
  std::string source = "m=1";
};

ResolvedGrowth resolve_growth(const GrowthSpec& g, std::int64_t n) {
  if (n < 1) throw CliError(kExitUsage, "--n must be >= 1");
  if (g.m && g.class_name) throw CliError(kExitUsage, "--m and --class are mutually exclusive");
  if (g.m) {
    if (!(*g.m >= 1.0) || !std::isfinite(*g.m)) throw CliError(kExitUsage, "--m must be >= 1");
    return {std::log(*g.m), "explicit"};
  }
  if (!g.class_name) return {};
  const vcb_class cls = parse_class(*g.class_name, g.dimension);
  const auto un = static_cast<std::uint64_t>(n);
  if (g.mode == "exact") {
    vcb_count c{};
    check(vcb_growth_exact(cls, un, &c));
    return {c.log_value, class_label(cls) + ", exact growth"};
  }
  if (g.mode == "sauer") {
    std::size_t d = 0;
    check(vcb_class_vc_dimension(cls, &d));
    vcb_count sum{};
    vcb_count expo{};
    check(vcb_sauer_bound(un, d, &sum, &expo));
    // (en/d)^d can fall below 1 only when n < d/e, where it is no bound at all
    return {std::max(0.0, expo.log_value), class_label(cls) + ", (en/d)^d with d=" + std::to_string(d)};
  }
  if (g.mode == "paper-n2") {
    if (cls.kind != VCB_CLASS_INTERVALS) {
      throw CliError(kExitUsage, "--growth paper-n2 applies to intervals only");
    }
    return {2.0 * std::log(static_cast<double>(n)), "intervals, n^2"};
  }
  throw CliError(kExitUsage, "unknown growth mode '" + g.mode + "' (exact, sauer, paper-n2)");
}

vcb_bound_query make_query(std::int64_t n, double eps, double log_m, double constant, vcb_variant v) {
  return {n, eps, log_m, constant, v};
}

Json breakdown_json(const char* name, const vcb_breakdown& b) {
  Json j;
  j["name"] = name;
  j["normal_tail_term"] = b.normal_tail_term;
  j["be_term"] = b.be_term;
  j["raw_total"] = b.raw_total;
  j["clamped_total"] = b.clamped_total;
  j["log_raw_total"] = b.log_raw_total;
  return j;
}

void validate_epsilon(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw CliError(kExitUsage, "--eps must lie in (0, 1)");
}

void validate_format(const std::string& f) {
  if (f != "table" && f != "csv" && f != "json") {
    throw CliError(kExitUsage, "unknown format '" + f + "' (table, csv, json)");
  }
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

}  // namespace

int run_bound(const BoundOptions& o, std::ostream& out) {
  validate_format(o.format);
  validate_epsilon(o.epsilon);
  const vcb_variant variant = parse_variant(o.variant);
  const ResolvedGrowth g = resolve_growth(o.growth, o.n);
  const auto q = make_query(o.n, o.epsilon, g.log_m, o.constant, variant);
  vcb_breakdown classical{};
  vcb_breakdown refined{};
  check(vcb_hoeffding_vc(&q, &classical));
  check(vcb_refined_vc(&q, &refined));
  const double m = std::exp(g.log_m);

  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = {{"n", o.n},         {"epsilon", o.epsilon},   {"m", m},
                   {"log_m", g.log_m}, {"growth", g.source},     {"constant", o.constant},
                   {"variant", variant_name(variant)}};
    j["bounds"] = Json::array({breakdown_json("classical", classical), breakdown_json("refined", refined)});
    out << dump_json(j) << '\n';
    return kExitOk;
  }
  if (o.format == "csv") {
    out << "bound,normal_tail_term,be_term,raw_total,clamped_total,log_raw_total\n";
    for (const auto& [name, b] : {std::pair{"classical", classical}, std::pair{"refined", refined}}) {
      out << name << ',' << shortest(b.normal_tail_term) << ',' << shortest(b.be_term) << ','
          << shortest(b.raw_total) << ',' << shortest(b.clamped_total) << ','
          << shortest(b.log_raw_total) << '\n';
    }
    return kExitOk;
  }
  out << "n = " << o.n << ", epsilon = " << shortest(o.epsilon) << ", m = " << sig6(m) << " ("
      << g.source << "), C = " << shortest(o.constant) << ", variant = " << variant_name(variant)
      << "\n\n";
  out << pad("bound", 11) << pad("normal_term", 14) << pad("be_term", 14) << pad("raw_total", 14)
      << "clamped_total\n";
  for (const auto& [name, b] : {std::pair{"classical", classical}, std::pair{"refined", refined}}) {
    out << pad(name, 11) << pad(sig6(b.normal_tail_term), 14) << pad(sig6(b.be_term), 14)
        << pad(sig6(b.raw_total), 14) << sig6(b.clamped_total) << '\n';
  }
  return kExitOk;
}

int run_compare(const CompareOptions& o, const std::string& command_line, std::ostream& out) {
  const auto ns = parse_int_range(o.n_range);
  const auto epss = parse_real_range(o.eps_range);
  const vcb_variant variant = parse_variant(o.variant);

  std::ostringstream csv;
  csv << "n,epsilon,m,classical,refined_total,refined_normal_term,refined_be_term,winner\n";
  for (const auto n : ns) {
    const ResolvedGrowth g = resolve_growth(o.growth, n);
    for (const double eps : epss) {
      validate_epsilon(eps);
      const auto q = make_query(n, eps, g.log_m, o.constant, variant);
      vcb_breakdown classical{};
      vcb_breakdown refined{};
      check(vcb_hoeffding_vc(&q, &classical));
      check(vcb_refined_vc(&q, &refined));
      const bool refined_wins = refined.log_raw_total < classical.log_raw_total;
      csv << n << ',' << shortest(eps) << ',' << shortest(std::exp(g.log_m)) << ','
          << shortest(classical.clamped_total) << ',' << shortest(refined.clamped_total) << ','
          << shortest(refined.normal_tail_term) << ',' << shortest(refined.be_term) << ','
          << (refined_wins ? "refined" : "classical") << '\n';
    }
  }

  if (!o.out) {
    out << csv.str();
    return kExitOk;
  }
  RunManifest man;
  man.command = "compare";
  man.config = {{"n", o.n_range},
                {"epsilon", o.eps_range},
                {"m", o.growth.m ? Json(*o.growth.m) : Json(nullptr)},
                {"class", o.growth.class_name ? Json(*o.growth.class_name) : Json(nullptr)},
                {"dimension", o.growth.dimension},
                {"growth", o.growth.mode},
                {"constant", o.constant},
                {"variant", variant_name(variant)}};
  man.runtime = {{"command_line", command_line}, {"timestamp", utc_timestamp()}};
  write_with_manifest(*o.out, csv.str(), std::move(man));
  out << "wrote " << *o.out << " (" << ns.size() * epss.size() << " rows)\n";
  return kExitOk;
}

int run_crossover(const CrossoverOptions& o, std::ostream& out) {
  if (o.m_given) {
    throw CliError(kExitUsage, "crossover does not take --m: the window is independent of m");
  }
  if (o.format != "table" && o.format != "json") {
    throw CliError(kExitUsage, "unknown format '" + o.format + "' (table, json)");
  }
  if (o.n < 1) throw CliError(kExitUsage, "--n must be >= 1");
  const vcb_variant variant = parse_variant(o.variant);
  vcb_window_set* set = nullptr;
  check(vcb_crossover_window(o.n, o.constant, variant, &set));
  std::vector<vcb_window> windows(vcb_window_set_size(set));
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const auto st = vcb_window_set_get(set, i, &windows[i]);
    if (st != VCB_OK) {
      vcb_window_set_free(set);
      check(st);
    }
  }
  vcb_window_set_free(set);

  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["config"] = {{"n", o.n}, {"constant", o.constant}, {"variant", variant_name(variant)}};
    Json arr = Json::array();
    for (const auto& w : windows) {
      auto ep = [](const vcb_window_endpoint& e) {
        return Json{{"epsilon", e.epsilon},
                    {"diff_below", e.diff_below},
                    {"diff_above", e.diff_above},
                    {"at_domain_edge", e.at_domain_edge != 0}};
      };
      arr.push_back(Json{{"lower", ep(w.lower)}, {"upper", ep(w.upper)}});
    }
    j["windows"] = arr;
    out << dump_json(j) << '\n';
    return kExitOk;
  }

  out << "crossover n = " << o.n << ", C = " << shortest(o.constant)
      << ", variant = " << variant_name(variant) << '\n';
  if (windows.empty()) {
    out << "empty\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < windows.size(); ++i) {
    const auto& w = windows[i];
    out << "window " << i + 1 << ": (" << sig6(w.lower.epsilon) << ", " << sig6(w.upper.epsilon)
        << ")\n";
    for (const auto& [name, e] : {std::pair{"lower", w.lower}, std::pair{"upper", w.upper}}) {
      out << "  " << name << ' ' << sig6(e.epsilon) << ": refined - classical "
          << (e.diff_below < 0 ? '-' : '+') << " below, " << (e.diff_above < 0 ? '-' : '+')
          << " above" << (e.at_domain_edge ? " (edge of search range)" : "") << '\n';
    }
  }
  return kExitOk;
}

int run_simulate(const SimulateOptions& o, const std::string& command_line, std::ostream& out) {
  validate_epsilon(o.epsilon);
  if (o.trials == 0) throw CliError(kExitUsage, "--trials must be >= 1");
  if (o.workers == 0) throw CliError(kExitUsage, "--workers must be >= 1");
  if (o.n == 0) throw CliError(kExitUsage, "--n must be >= 1");
  const vcb_variant variant = parse_variant(o.variant);
  const vcb_class cls = parse_class(o.class_name, o.dimension);
  const vcb_distribution dist = parse_distribution(o.distribution, cls.dimension);

  const auto started = std::chrono::steady_clock::now();
  const vcb_mc_config cfg{o.trials, o.seed, o.workers, o.confidence};
  vcb_mc_estimate est{};
  check(vcb_estimate_bn(cls, dist, o.n, o.epsilon, &cfg, &est));
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  vcb_count growth{};
  check(vcb_growth_exact(cls, o.n, &growth));
  const auto q = make_query(static_cast<std::int64_t>(o.n), o.epsilon, growth.log_value, o.constant, variant);
  std::vector<vcb_breakdown> bounds(2);
  check(vcb_hoeffding_vc(&q, &bounds[0]));
  check(vcb_refined_vc(&q, &bounds[1]));
  std::vector<vcb_verdict> verdicts(bounds.size());
  check(vcb_verify_bound(&est, bounds.data(), bounds.size(), verdicts.data()));

  const char* names[] = {"classical", "refined"};
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["config"] = {{"class", class_label(cls)},
                 {"dimension", cls.dimension},
                 {"distribution", o.distribution},
                 {"n", o.n},
                 {"epsilon", o.epsilon},
                 {"trials", o.trials},
                 {"seed", o.seed},
                 {"confidence_level", o.confidence},
                 {"constant", o.constant},
                 {"variant", variant_name(variant)},
                 {"growth_value", growth.value}};
  j["estimate"] = {{"successes", est.successes}, {"trials", est.trials}, {"p_hat", est.p_hat},
                   {"ci_low", est.ci_low},       {"ci_high", est.ci_high},
                   {"confidence_level", est.confidence_level}};
  Json jb = Json::array();
  Json jv = Json::array();
  for (std::size_t i = 0; i < bounds.size(); ++i) {
    jb.push_back(breakdown_json(names[i], bounds[i]));
    jv.push_back(Json{{"bound", names[i]},
                      {"clamped_total", verdicts[i].bound},
                      {"ci_low", verdicts[i].ci_low},
                      {"margin", verdicts[i].margin},
                      {"verdict", verdicts[i].violation ? "VIOLATION" : "PASS"}});
  }
  j["bounds"] = jb;
  j["verdicts"] = jv;

  RunManifest man;
  man.command = "simulate";
  man.config = j["config"];
  man.base_seeds = {o.seed};
  man.runtime = {{"command_line", command_line},
                 {"workers", o.workers},
                 {"timestamp", utc_timestamp()},
                 {"elapsed_seconds", elapsed}};
  j["manifest"] = man.to_json();

  const std::string text = dump_json(j) + "\n";
  if (o.out) {
    write_with_manifest(*o.out, text, std::move(man));
    out << "wrote " << *o.out << '\n';
  } else {
    out << text;
  }
  return kExitOk;
}

int run_growth(const GrowthOptions& o, std::ostream& out) {
  validate_format(o.format);
  const vcb_class cls = parse_class(o.class_name, o.dimension);
  const auto rs = parse_int_range(o.r_range);
  std::size_t d = 0;
  check(vcb_class_vc_dimension(cls, &d));

  struct Row {
    std::int64_t r;
    vcb_count growth;
    bool shattered;
    std::optional<vcb_count> sauer_sum, sauer_exp;
    std::optional<std::uint64_t> enumerated;
  };
  std::vector<Row> rows;
  for (const auto r : rs) {
    if (r < 0) throw CliError(kExitUsage, "r must be >= 0");
    Row row{r, {}, false, {}, {}, {}};
    check(vcb_growth_exact(cls, static_cast<std::uint64_t>(r), &row.growth));
    row.shattered = r < 63 && row.growth.value == std::ldexp(1.0, static_cast<int>(r));
    if (r >= 1) {
      vcb_count s{};
      vcb_count e{};
      check(vcb_sauer_bound(static_cast<std::uint64_t>(r), d, &s, &e));
      row.sauer_sum = s;
      row.sauer_exp = e;
    }
    if (o.verify) {
      // points on the moment curve (t, t^2, ..., t^d) are in general position
      std::vector<double> coords;
      for (std::int64_t t = 1; t <= r; ++t) {
        double v = 1.0;
        for (std::size_t k = 0; k < cls.dimension; ++k) coords.push_back(v *= static_cast<double>(t));
      }
      vcb_trace_report rep{};
      check(vcb_trace_count(coords.data(), static_cast<std::size_t>(r), cls, &rep));
      row.enumerated = rep.distinct_traces;
    }
    rows.push_back(row);
  }

  auto opt = [](const std::optional<vcb_count>& c) { return c ? shortest(c->value) : std::string("-"); };
  if (o.format == "json") {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["class"] = class_label(cls);
    j["vc_dimension"] = d;
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json e{{"r", row.r}, {"growth", row.growth.value}, {"shattered", row.shattered}};
      e["sauer_sum"] = row.sauer_sum ? Json(row.sauer_sum->value) : Json(nullptr);
      e["sauer_exp"] = row.sauer_exp ? Json(row.sauer_exp->value) : Json(nullptr);
      if (row.enumerated) e["enumerated"] = *row.enumerated;
      arr.push_back(e);
    }
    j["rows"] = arr;
    out << dump_json(j) << '\n';
    return kExitOk;
  }
  if (o.format == "csv") {
    out << "r,growth,shattered,sauer_sum,sauer_exp" << (o.verify ? ",enumerated" : "") << '\n';
    for (const auto& row : rows) {
      out << row.r << ',' << shortest(row.growth.value) << ',' << (row.shattered ? "true" : "false")
          << ',' << opt(row.sauer_sum) << ',' << opt(row.sauer_exp);
      if (row.enumerated) out << ',' << *row.enumerated;
      out << '\n';
    }
    return kExitOk;
  }
  out << "class = " << class_label(cls) << ", VC dimension = " << d << "\n\n";
  out << pad("r", 6) << pad("growth", 14) << pad("shattered", 11) << pad("sauer_sum", 14)
      << pad("(en/d)^d", 14) << (o.verify ? "enumerated" : "") << '\n';
  for (const auto& row : rows) {
    out << pad(std::to_string(row.r), 6) << pad(shortest(row.growth.value), 14)
        << pad(row.shattered ? "yes" : "no", 11) << pad(opt(row.sauer_sum), 14)
        << pad(row.sauer_exp ? sig6(row.sauer_exp->value) : "-", 14);
    if (row.enumerated) out << *row.enumerated;
    out << '\n';
  }
  return kExitOk;
}

int run_sample(const SampleOptions& o, const std::string& command_line, std::ostream& out) {
  if (o.n == 0) throw CliError(kExitUsage, "--n must be >= 1");
  if (o.out.empty()) throw CliError(kExitUsage, "--out is required");
  const vcb_distribution dist = parse_distribution(o.distribution, o.dimension);
  vcb_sample* s = nullptr;
  check(vcb_sample_create(dist, o.n, o.seed, &s));
  const auto st = vcb_sample_write_csv(s, o.out.c_str(), nullptr);
  vcb_sample_free(s);
  check(st);

  // the library writes the CSV itself; read it back so the manifest digest
  // covers exactly the bytes on disk
  std::ifstream in(o.out, std::ios::binary);
  if (!in) throw CliError(kExitIo, "cannot read back '" + o.out + "'");
  std::ostringstream bytes;
  bytes << in.rdbuf();

  RunManifest man;
  man.command = "sample";
  man.config = {{"distribution", dist.kind == VCB_DIST_UNIFORM01 ? "uniform01" : "std_gaussian"},
                {"dimension", dist.dimension},
                {"n", o.n},
                {"seed", o.seed},
                {"generator", "splitmix64/polar"}};
  man.base_seeds = {o.seed};
  man.runtime = {{"command_line", command_line}, {"timestamp", utc_timestamp()}};
  write_with_manifest(o.out, bytes.str(), std::move(man));
  out << "wrote " << o.out << " and " << manifest_path_for(o.out) << '\n';
  return kExitOk;
}

int run_audit(const AuditOptions& o, const std::string& command_line, std::ostream& out) {
  const auto ns = parse_int_range(o.n_range);
  const auto ps = parse_real_range(o.p_range);
  const auto epss = parse_real_range(o.eps_range);

  std::ostringstream csv;
  csv << "n,p,epsilon,exact_tail,paper_bound,excess\n";
  std::uint64_t points = 0;
  std::uint64_t violations = 0;
  double worst_excess = 0.0;
  for (const auto n : ns) {
    for (const double p : ps) {
      for (const double eps : epss) {
        double exact = 0.0;
        vcb_breakdown b{};
        check(vcb_exact_binomial_tail(n, p, eps, &exact));
        check(vcb_refined_single(n, p, eps, VCB_VARIANT_PAPER, o.constant, &b));
        ++points;
        if (exact > b.clamped_total) {
          ++violations;
          worst_excess = std::max(worst_excess, exact - b.clamped_total);
          csv << n << ',' << shortest(p) << ',' << shortest(eps) << ',' << shortest(exact) << ','
              << shortest(b.clamped_total) << ',' << shortest(exact - b.clamped_total) << '\n';
        }
      }
    }
  }

  out << "paper-variant audit: " << points << " grid points, " << violations
      << " violations, largest excess " << sig6(worst_excess) << '\n';
  if (!o.out) {
    out << csv.str();
    return kExitOk;
  }
  RunManifest man;
  man.command = "audit";
  man.config = {{"n", o.n_range},
                {"p", o.p_range},
                {"epsilon", o.eps_range},
                {"constant", o.constant},
                {"grid_points", points},
                {"violations", violations}};
  man.runtime = {{"command_line", command_line}, {"timestamp", utc_timestamp()}};
  write_with_manifest(*o.out, csv.str(), std::move(man));
  out << "wrote " << *o.out << '\n';
  return kExitOk;
}

}  // namespace vcbound::cli

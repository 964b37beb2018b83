// Copyright 2026 The trailfrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "trailfrac/trailfrac.hpp"

namespace trailfrac::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, text };

// Bad flag values found after CLI11 accepted the command line.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format;
  std::string out_path;

  std::string graph_path;
  std::string subset;
  bool witness = false;
  bool oracle = false;

  std::optional<std::size_t> lanes;
  bool timing = false;

  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double confidence = 0.95;

  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;

  std::uint64_t m_min = 0;
  std::uint64_t m_max = 0;
};

Format resolve_format(const Options& opts, Format fallback, std::initializer_list<Format> allowed,
                      const std::string& command) {
  Format f = fallback;
  if (opts.format == "json") f = Format::json;
  if (opts.format == "csv") f = Format::csv;
  if (opts.format == "text") f = Format::text;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end()) {
    throw UsageError("format '" + opts.format + "' is not supported by '" + command + "'");
  }
  return f;
}

std::size_t default_lanes() {
  if (const char* env = std::getenv("TRAILFRAC_LANES"); env != nullptr && *env != '\0') {
    std::size_t value = 0;
    const char* end = env + std::string_view(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc{} || ptr != end || value == 0) {
      throw UsageError(std::string("TRAILFRAC_LANES must be a positive integer, got '") + env + "'");
    }
    return value;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::vector<EdgeId> parse_subset(const std::string& text) {
  std::vector<EdgeId> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    EdgeId value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw UsageError("malformed --subset entry '" + token + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<EdgeId>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

void cmd_check(const Options& opts, std::ostream& out) {
  const auto format = resolve_format(opts, Format::json, {Format::json, Format::text}, "check");
  const auto indices = parse_subset(opts.subset);
  const Multigraph graph = load_graph(opts.graph_path);
  const EdgeSubset subset = EdgeSubset::from_indices(graph.edge_count(), indices);
  const TrailVerdict verdict = is_trail(graph, subset);
  std::optional<bool> oracle;
  if (opts.oracle) oracle = oracle_is_trail(graph, subset);

  if (format == Format::json) {
    Json j;
    j["is_trail"] = verdict.is_trail;
    j["failure_reason"] = verdict.failure_reason ? Json(to_string(*verdict.failure_reason)) : Json(nullptr);
    if (opts.witness) j["witness"] = verdict.witness ? Json(*verdict.witness) : Json(nullptr);
    if (oracle) {
      j["oracle"] = *oracle;
      j["oracle_agrees"] = *oracle == verdict.is_trail;
    }
    out << j.dump(2) << '\n';
    return;
  }
  if (verdict.is_trail) {
    out << "trail";
    if (opts.witness) out << ": witness " << join(*verdict.witness);
  } else {
    out << "not a trail: " << to_string(*verdict.failure_reason);
  }
  out << '\n';
  if (oracle) out << "oracle: " << (*oracle == verdict.is_trail ? "agrees" : "DISAGREES") << '\n';
}

void cmd_count(const Options& opts, std::ostream& out) {
  const auto format =
      resolve_format(opts, Format::json, {Format::json, Format::csv, Format::text}, "count");
  const std::size_t lanes = opts.lanes.value_or(default_lanes());
  const Multigraph graph = load_graph(opts.graph_path);
  const CountReport report = count_trails_exact(graph, lanes);
  switch (format) {
    case Format::json:
      write_json(out, report, opts.timing);
      break;
    case Format::csv:
      out << "m,d,f,f_decimal,lanes" << (opts.timing ? ",elapsed_seconds" : "") << '\n';
      out << report.m << ',' << report.d << ',' << report.f_exact() << ',' << std::setprecision(12)
          << report.f() << ',' << report.lanes;
      if (opts.timing) out << ',' << report.elapsed_seconds;
      out << '\n';
      break;
    case Format::text:
      out << "m = " << report.m << "\nd = " << report.d << "\nf = " << report.f_exact() << " = "
          << std::setprecision(12) << report.f() << "\nlanes = " << report.lanes << '\n';
      if (opts.timing) out << "elapsed = " << report.elapsed_seconds << " s\n";
      break;
  }
}

void cmd_estimate(const Options& opts, std::ostream& out) {
  const auto format =
      resolve_format(opts, Format::json, {Format::json, Format::csv, Format::text}, "estimate");
  const std::size_t lanes = opts.lanes.value_or(default_lanes());
  const Multigraph graph = load_graph(opts.graph_path);
  const EstimateReport report =
      estimate_trail_fraction(graph, opts.samples, opts.seed, opts.confidence, lanes);
  switch (format) {
    case Format::json:
      write_json(out, report);
      break;
    case Format::csv:
      out << "estimate,ci_low,ci_high,confidence,samples,seed\n"
          << std::setprecision(12) << report.estimate << ',' << report.ci_low << ','
          << report.ci_high << ',' << report.confidence << ',' << report.samples << ','
          << report.seed << '\n';
      break;
    case Format::text:
      out << std::setprecision(12) << "f ~= " << report.estimate << "  (" << report.confidence * 100
          << "% CI [" << report.ci_low << ", " << report.ci_high << "], " << report.samples
          << " samples, seed " << report.seed << ")\n";
      break;
  }
}

void cmd_eis(const Options& opts, std::ostream& out) {
  const auto format = resolve_format(opts, Format::json, {Format::json, Format::text}, "eis");
  const Multigraph graph = load_graph(opts.graph_path);
  const EisSequence seq = greedy_eis(graph);
  const std::size_t active = non_isolated_vertex_count(graph);
  const bool verified = verify_eis(graph, seq);
  const bool lemma = 2 * seq.length() >= active;
  if (format == Format::json) {
    Json j;
    j["length"] = seq.length();
    j["vertices"] = seq.vertices;
    j["fresh_edges"] = seq.fresh_edges;
    j["non_isolated_vertices"] = active;
    j["lemma_bound"] = static_cast<double>(active) / 2.0;
    j["lemma_holds"] = lemma;
    j["verified"] = verified;
    out << j.dump(2) << '\n';
    return;
  }
  out << "sequence:";
  for (auto v : seq.vertices) out << ' ' << v;
  out << "\nlength = " << seq.length() << " (lemma needs >= " << static_cast<double>(active) / 2.0
      << ")\nverified = " << (verified ? "yes" : "no") << '\n';
}

void cmd_scan(const Options& opts, std::ostream& out) {
  const auto format =
      resolve_format(opts, Format::csv, {Format::json, Format::csv, Format::text}, "scan");
  const auto rows = family_ratio_scan(opts.m_min, opts.m_max);
  if (format == Format::csv) {
    write_csv(out, rows);
    return;
  }
  if (format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : rows) {
      arr.push_back({{"m", r.m},
                     {"d", to_string(r.d)},
                     {"f", r.f},
                     {"f_sqrt_m", r.f_sqrt_m},
                     {"theorem_bound", r.theorem_bound}});
    }
    out << arr.dump(2) << '\n';
    return;
  }
  out << std::setprecision(12);
  for (const auto& r : rows) {
    out << "m=" << r.m << "  f=" << r.f << "  f*sqrt(m)=" << r.f_sqrt_m
        << "  theorem=" << r.theorem_bound << '\n';
  }
}

// Ranges for the inequality summary emitted by `bounds`.
constexpr std::uint64_t kStirlingCap = 5000;
constexpr std::uint64_t kCentralCap = 2000;
constexpr std::uint64_t kWindowCap = 64;
constexpr std::uint64_t kTailCap = 64;
constexpr std::uint64_t kVandermondeCap = 200;

Json bounds_checks(std::uint64_t m) {
  Json checks;

  const std::uint64_t n_max = std::min(m, kStirlingCap);
  bool stirling = true;
  BigInt fact = 1;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    fact *= n;
    stirling = stirling && stirling_sandwich_holds(n, fact);
  }
  checks["stirling"] = {{"n_max", n_max}, {"holds", stirling}};

  const std::uint64_t c_max = std::min(m, kCentralCap) / 2 * 2;
  bool central = true;
  for (std::uint64_t c = 2; c <= c_max; c += 2) central = central && central_binomial_bound_check(c);
  checks["central_binomial"] = {{"c_max", c_max}, {"holds", central}};

  const std::uint64_t w_max = std::min(m, kWindowCap);
  bool window = true;
  for (std::uint64_t c = 1; c <= w_max; ++c) {
    for (std::int64_t j = -1; j <= static_cast<std::int64_t>(c) + 1; ++j) {
      window = window && balance_window_bound_check(c, j);
    }
  }
  checks["balance_window"] = {{"c_max", w_max}, {"holds", window}};

  const std::uint64_t r_max = std::min(m, kTailCap);
  bool tail = true;
  for (std::uint64_t r = 2; r <= r_max; ++r) tail = tail && case2_tail_bound_check(r).holds;
  checks["case2_tail"] = {{"r_max", r_max}, {"holds", tail}};

  const std::uint64_t v_max = std::min(m, kVandermondeCap) / 2 * 2;
  bool vandermonde = true;
  for (std::uint64_t k = 2; k <= v_max; k += 2) vandermonde = vandermonde && vandermonde_identity_check(k);
  checks["vandermonde"] = {{"m_max", v_max}, {"holds", vandermonde}};
  return checks;
}

void cmd_bounds(const Options& opts, std::ostream& out) {
  const auto format = resolve_format(opts, Format::json, {Format::json, Format::text}, "bounds");
  const BoundReport report = bound_report(opts.m);
  const auto r = static_cast<std::uint64_t>(std::floor(report.sequence_length));

  Json j;
  j["m"] = report.m;
  j["theorem_bound"] = report.theorem_value;
  j["k"] = report.degree_threshold;
  j["r"] = report.sequence_length;
  if (report.family) {
    j["family"] = {{"d", to_string(report.family->total)},
                   {"f", *report.family_f},
                   {"f_sqrt_m", *report.ratio}};
  }
  if (r >= 2) {
    const auto tail = case2_tail_bound_check(r);
    j["case2_at_floor_r"] = {{"r", r},
                             {"tail_sum", tail.tail_sum},
                             {"polynomial_bound", tail.polynomial_bound},
                             {"quadratic_bound", tail.quadratic_bound},
                             {"holds", tail.holds}};
  }
  j["checks"] = bounds_checks(opts.m);

  if (format == Format::json) {
    out << j.dump(2) << '\n';
    return;
  }
  out << std::setprecision(12) << "m = " << report.m << "\nsqrt(log2 m / m) = " << report.theorem_value
      << "\nk = m / log2 m = " << report.degree_threshold << "\nr = log2 m = " << report.sequence_length
      << '\n';
  if (report.family) {
    out << "f(G(m)) = " << *report.family_f << "\nf(G(m)) * sqrt(m) = " << *report.ratio << '\n';
  }
  for (const auto& [name, check] : j["checks"].items()) {
    out << name << ": " << (check["holds"].get<bool>() ? "holds" : "VIOLATED") << '\n';
  }
}

void emit(const std::string& path, const std::string& body, std::ostream& out) {
  if (path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  file << body;
  if (!file) throw std::runtime_error("failed writing output file: " + path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trail-representability of edge subsets in directed multigraphs", "trailfrac"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", opts.out_path, "Write the report to a file instead of stdout");

  auto* check = app.add_subcommand("check", "Decide whether an edge subset is a trail");
  check->add_option("graph", opts.graph_path, "Edge-list file")->required();
  check->add_option("--subset", opts.subset, "Comma-separated edge indices")->required();
  check->add_flag("--witness", opts.witness, "Include a witness ordering");
  check->add_flag("--oracle", opts.oracle, "Cross-check with the permutation oracle (|T| <= 8)");

  auto* count = app.add_subcommand("count", "Exact d(G) and f(G) by enumeration");
  count->add_option("graph", opts.graph_path, "Edge-list file")->required();
  count->add_option("--lanes", opts.lanes, "Worker lanes (default: $TRAILFRAC_LANES or cores)")
      ->check(CLI::PositiveNumber);
  count->add_flag("--timing", opts.timing, "Include wall time in the report");

  auto* estimate = app.add_subcommand("estimate", "Monte Carlo estimate of f(G)");
  estimate->add_option("graph", opts.graph_path, "Edge-list file")->required();
  estimate->add_option("--samples", opts.samples, "Number of sampled subsets")
      ->required()
      ->check(CLI::PositiveNumber);
  estimate->add_option("--seed", opts.seed, "64-bit seed")->required();
  estimate->add_option("--confidence", opts.confidence, "Interval confidence level")
      ->check(CLI::Range(0.0, 1.0));
  estimate->add_option("--lanes", opts.lanes, "Worker lanes")->check(CLI::PositiveNumber);

  auto* eis = app.add_subcommand("eis", "Greedy edge-increasing sequence");
  eis->add_option("graph", opts.graph_path, "Edge-list file")->required();

  auto* gen = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen->require_subcommand(1);
  auto* gen_family_cmd = gen->add_subcommand("family", "Two-vertex family G(m)");
  gen_family_cmd->add_option("--m", opts.m, "Even edge count")->required();
  auto* gen_random = gen->add_subcommand("random", "Uniform random multigraph");
  gen_random->add_option("--n", opts.n, "Vertex count")->required();
  gen_random->add_option("--m", opts.m, "Edge count")->required();
  gen_random->add_option("--seed", opts.seed, "64-bit seed")->required();
  auto* gen_path_cmd = gen->add_subcommand("path", "Directed path with k edges");
  gen_path_cmd->add_option("--k", opts.k, "Edge count")->required();
  auto* gen_cycle_cmd = gen->add_subcommand("cycle", "Directed cycle with k edges");
  gen_cycle_cmd->add_option("--k", opts.k, "Edge count")->required();
  auto* gen_star_cmd = gen->add_subcommand("star", "Out-star with k leaves");
  gen_star_cmd->add_option("--k", opts.k, "Leaf count")->required();

  auto* scan = app.add_subcommand("scan", "Family ratio table f(G(m)) * sqrt(m)");
  scan->add_option("--m-min", opts.m_min, "Smallest even m")->required();
  scan->add_option("--m-max", opts.m_max, "Largest even m")->required();

  auto* bounds = app.add_subcommand("bounds", "Theorem value and inequality checks");
  bounds->add_option("--m", opts.m, "Edge count (>= 2)")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  std::ostringstream body;
  try {
    if (*check) {
      cmd_check(opts, body);
    } else if (*count) {
      cmd_count(opts, body);
    } else if (*estimate) {
      cmd_estimate(opts, body);
    } else if (*eis) {
      cmd_eis(opts, body);
    } else if (*gen) {
      Multigraph g;
      if (*gen_family_cmd) g = gen_family(opts.m);
      if (*gen_random) g = gen_random_multigraph(opts.n, opts.m, opts.seed);
      if (*gen_path_cmd) g = gen_path(opts.k);
      if (*gen_cycle_cmd) g = gen_cycle(opts.k);
      if (*gen_star_cmd) g = gen_star(opts.k);
      body << serialize_graph(g);
    } else if (*scan) {
      cmd_scan(opts, body);
    } else if (*bounds) {
      cmd_bounds(opts, body);
    }
    emit(opts.out_path, body.str(), out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace trailfrac::cli

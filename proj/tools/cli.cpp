// Copyright 2026 The Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "basis_relabel/errors.hpp"
#include "basis_relabel/generators.hpp"
#include "basis_relabel/oracle.hpp"
#include "basis_relabel/omp.hpp"
#include "basis_relabel/reconfig.hpp"

namespace basis_relabel::cli {
namespace {

struct Options {
  std::string instance_path;
  std::string sequence_path;
  std::string algorithm = "auto";
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out_path;
  bool no_fallback = false;
  bool timing = false;
  std::string family;
  std::string sizes;
  int size = 0;
  int seeds = 1;
  int rank = 2;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out_path.empty() || o.out_path == "-") {
    out << text;
    return;
  }
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file || !(file << text)) {
    throw UsageError("cannot write '" + o.out_path + "'");
  }
}

InstanceFile load_instance(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return parse_instance(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

std::uint64_t resolve_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("BASIS_RELABEL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
      throw UsageError("BASIS_RELABEL_BUDGET must be a non-negative integer");
    }
    return v;
  }
  return PlannerConfig{}.search_budget;
}

PlannerConfig make_config(const Options& o) {
  PlannerConfig c;
  c.algorithm = parse_algorithm(o.algorithm);
  c.search_budget = resolve_budget(o);
  c.allow_fallback = !o.no_fallback;
  c.seed = o.seed;
  return c;
}

struct LoadedPair {
  InstanceFile instance;
  MatroidHandle matroid;
  LabelledBasis start;
  LabelledBasis target;
};

LoadedPair load_pair(const std::string& path) {
  InstanceFile inst = load_instance(path);
  if (!inst.start || !inst.target) {
    throw UsageError(path + ": instance needs both 'start' and 'target'");
  }
  MatroidHandle m = inst.matroid();
  LabelledBasis s(*inst.start), t(*inst.target);
  validate_labelled_basis(m, s);
  validate_labelled_basis(m, t);
  return LoadedPair{std::move(inst), std::move(m), std::move(s), std::move(t)};
}

std::string fixed(double x, int digits = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

int cmd_check(const Options& o, std::ostream& out) {
  const LoadedPair p = load_pair(o.instance_path);
  const PlanReport report = feasible(p.matroid, p.start, p.target);
  out << "feasible " << (report.feasible ? "yes" : "no") << "\n";
  out << "rank " << p.matroid.rank() << "\n";
  for (const LabelDiagnosis& d : report.labels) {
    out << "label " << d.label << ": element " << d.source << " (component "
        << d.source_component << ") -> element " << d.target << " (component "
        << d.target_component << ")" << (d.ok() ? "" : " mismatch") << "\n";
  }
  return report.feasible ? kOk : kRejected;
}

int cmd_plan(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedPair p = load_pair(o.instance_path);
  const PlanReport report = plan(p.matroid, p.start, p.target, make_config(o));
  SequenceFile file;
  file.instance_hash = instance_hash(p.instance);
  file.algorithm = std::string(algorithm_name(report.algorithm));
  file.bound = report.declared_bound;
  file.steps = report.sequence;
  emit(o, serialize_sequence(file, parse_format(o.format)), out);
  std::ostream& summary = o.out_path.empty() || o.out_path == "-" ? err : out;
  summary << "algorithm " << file.algorithm << "\n"
          << "length " << report.sequence.size() << "\n"
          << "bound " << report.declared_bound << "\n"
          << "diameter "
          << (report.diameter ? std::to_string(*report.diameter) : "-") << "\n"
          << "layers " << report.layer_count << "\n"
          << "fell-back " << (report.fell_back ? "yes" : "no") << "\n"
          << "oracle-calls " << report.oracle_calls << "\n";
  if (o.timing) summary << "wall-ms " << fixed(report.wall_ms, 3) << "\n";
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedPair p = load_pair(o.instance_path);
  SequenceFile seq;
  try {
    seq = parse_sequence(read_input(o.sequence_path));
  } catch (const ParseError& e) {
    throw ParseError(o.sequence_path + ": " + e.what(), e.line(), e.column());
  }
  const std::uint64_t hash = instance_hash(p.instance);
  if (seq.instance_hash != hash) {
    err << "warning: sequence was written for instance " << hex64(seq.instance_hash)
        << " but this instance hashes to " << hex64(hash) << "; replaying anyway\n";
  }
  const Verdict v = verify_sequence(p.matroid, p.start, seq.steps, p.target);
  if (v.ok) {
    out << "ok " << v.steps << " steps\n";
    return kOk;
  }
  out << "invalid";
  if (v.failing_index) out << " at step " << *v.failing_index;
  out << ": " << v.reason << "\n";
  return kRejected;
}

void stats_row(std::ostream& out, const std::string& name,
               const MatroidHandle& m, const ElementSet& basis,
               std::optional<const ConstructionState*> state) {
  const FundamentalGraph s = fundamental_graph(m, basis);
  const int d = diameter(s);
  out << name << "," << m.size() << "," << m.rank() << "," << d << ",";
  if (state) {
    out << (*state)->layer_count() << "," << max_layer_distance(s, **state);
  } else {
    out << ",";
  }
  const double root = std::sqrt(static_cast<double>(std::max(1, m.rank())));
  out << "," << fixed(d / root) << ",ok\n";
}

int cmd_stats(const Options& o, std::ostream& out) {
  InstanceFile inst;
  if (!o.instance_path.empty()) {
    inst = load_instance(o.instance_path);
  } else if (!o.family.empty()) {
    inst = family_instance(o.family, o.size, o.seed, o.rank);
  } else {
    throw UsageError("stats needs an instance file or --family and --size");
  }
  const MatroidHandle m = inst.matroid();
  PlannerConfig config;
  config.search_budget = resolve_budget(o);
  std::ostringstream notes;
  out << "basis,elements,rank,diameter,layers,max_layer_distance,"
         "diameter_over_sqrt_rank,status\n";
  stats_row(out, "greedy", m, m.greedy_basis(), std::nullopt);
  if (as_graphic(m) != nullptr) {
    const ConstructionState st = build_log_diameter_tree(m);
    stats_row(out, "log-tree", m, st.basis, &st);
    for (std::size_t i = 0; i < st.records.size(); ++i) {
      const LayerRecord& r = st.records[i];
      if (r.halving_trace.empty()) continue;
      notes << "# halving layer " << r.layer << " record " << i << " edges "
            << r.simple.size() << " iterations " << r.halving_iterations
            << " max-block";
      for (int b : r.halving_trace) notes << " " << b;
      notes << "\n";
    }
  }
  try {
    const ConstructionState st = build_sqrt_diameter_basis(m, config);
    stats_row(out, "sqrt-basis", m, st.basis, &st);
  } catch (const BudgetExceededError&) {
    out << "sqrt-basis," << m.size() << "," << m.rank()
        << ",,,,,budget-exceeded\n";
  }
  out << notes.str();
  return kOk;
}

struct BenchJob {
  std::string family;
  int size = 0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kGeneric;
};

std::optional<int> small_optimum(const MatroidHandle& m, const LabelledBasis& s,
                                 const LabelledBasis& t) {
  if (m.size() > 12) return std::nullopt;
  double states = static_cast<double>(enumerate_bases(m, 12).size());
  for (int k = 2; k <= m.rank(); ++k) states *= k;
  if (states > 300000) return std::nullopt;
  return ReconfigGraph(m).distance(s, t);
}

std::string bench_row(const BenchJob& job, const Options& o,
                      std::uint64_t budget) {
  const InstanceFile inst = family_instance(job.family, job.size, job.seed, o.rank);
  const MatroidHandle m = inst.matroid();
  const LabelledBasis s(*inst.start), t(*inst.target);
  std::ostringstream row;
  row << job.family << "," << job.size << "," << job.seed << "," << m.size()
      << "," << m.rank() << "," << algorithm_name(job.algorithm) << ",";
  PlannerConfig config;
  config.algorithm = job.algorithm;
  config.search_budget = budget;
  config.allow_fallback = !o.no_fallback;
  try {
    const PlanReport r = plan(m, s, t, config);
    const auto best = small_optimum(m, s, t);
    const double len = static_cast<double>(r.sequence.size());
    std::string per_nlogn;
    if (inst.kind == MatroidKind::kGraph) {
      const double n = inst.graph.vertex_count;
      per_nlogn = n > 1 ? fixed(len / (n * std::log2(n))) : "";
    }
    const double r15 = std::pow(std::max(1, m.rank()), 1.5);
    row << r.sequence.size() << "," << r.declared_bound << ","
        << (best ? std::to_string(*best) : "") << ","
        << (r.diameter ? std::to_string(*r.diameter) : "") << ","
        << per_nlogn << "," << fixed(len / r15) << "," << r.oracle_calls
        << "," << (r.fell_back ? "yes" : "no") << ",ok";
    if (o.timing) row << "," << fixed(r.wall_ms, 3);
  } catch (const BudgetExceededError&) {
    row << ",,,,,,,,budget-exceeded";
    if (o.timing) row << ",";
  }
  return row.str();
}

int cmd_bench(const Options& o, std::ostream& out) {
  const std::vector<int> sizes = parse_sizes(o.sizes);
  const bool graph_family = o.family != "uniform" && o.family != "gf2";
  std::vector<Algorithm> algorithms;
  if (o.algorithm == "auto") {
    algorithms = {Algorithm::kGeneric,
                  graph_family ? Algorithm::kGraphicFast : Algorithm::kMatroidFast};
  } else {
    algorithms = {parse_algorithm(o.algorithm)};
  }
  // Validates the family name before any work starts.
  family_instance(o.family, sizes.front(), o.seed, o.rank);
  std::vector<BenchJob> jobs;
  for (int size : sizes) {
    for (int k = 0; k < o.seeds; ++k) {
      for (Algorithm a : algorithms) {
        jobs.push_back({o.family, size, o.seed + static_cast<std::uint64_t>(k), a});
      }
    }
  }
  const std::uint64_t budget = resolve_budget(o);
  std::vector<std::string> rows(jobs.size());
  const int count = static_cast<int>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      rows[i] = bench_row(jobs[i], o, budget);
    } catch (const std::exception& e) {
      rows[i] = jobs[i].family + "," + std::to_string(jobs[i].size) + "," +
                std::to_string(jobs[i].seed) + ",,," +
                std::string(algorithm_name(jobs[i].algorithm)) +
                ",,,,,,,,,error";
      if (o.timing) rows[i] += ",";
    }
  }
  std::ostringstream csv;
  csv << "family,size,seed,elements,rank,algorithm,length,bound,bfs_optimum,"
         "diameter,length_per_nlog2n,length_per_r1_5,oracle_calls,fell_back,"
         "status";
  if (o.timing) csv << ",wall_ms";
  csv << "\n";
  for (const std::string& r : rows) csv << r << "\n";
  emit(o, csv.str(), out);
  return kOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const InstanceFile inst = family_instance(o.family, o.size, o.seed, o.rank);
  emit(o, serialize_instance(inst, parse_format(o.format)), out);
  return kOk;
}

int dispatch(CLI::App& app, const Options& o, std::ostream& out,
             std::ostream& err) {
  const std::string name = app.get_subcommands().front()->get_name();
  if (name == "check") return cmd_check(o, out);
  if (name == "plan") return cmd_plan(o, out, err);
  if (name == "verify") return cmd_verify(o, out, err);
  if (name == "stats") return cmd_stats(o, out);
  if (name == "bench") return cmd_bench(o, out);
  return cmd_gen(o, out);
}

}  // namespace

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream items(text);
  std::string item;
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size() || v < 1) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad size '" + s + "' in '" + text + "'");
    }
  };
  while (std::getline(items, item, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(number(item));
      continue;
    }
    const int lo = number(item.substr(0, dots));
    std::string rest = item.substr(dots + 2);
    int factor = 0;
    if (const auto star = rest.find('*'); star != std::string::npos) {
      factor = number(rest.substr(star + 1));
      if (factor < 2) throw UsageError("geometric factor must be at least 2");
      rest = rest.substr(0, star);
    }
    const int hi = number(rest);
    for (long long v = lo; v <= hi; v = factor ? v * factor : v + 1) {
      out.push_back(static_cast<int>(v));
    }
  }
  if (out.empty()) throw UsageError("no sizes given");
  return out;
}

InstanceFile family_instance(const std::string& family, int size,
                             std::uint64_t seed, int uniform_rank) {
  InstanceFile inst;
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
  if (family == "cycle") {
    inst.graph = cycle_graph(size);
  } else if (family == "path") {
    inst.graph = path_graph(size);
  } else if (family == "complete") {
    inst.graph = complete_graph(size);
  } else if (family == "random-2conn") {
    inst.graph = random_two_connected(size, seed);
  } else if (family == "uniform") {
    if (uniform_rank < 0 || uniform_rank > size) {
      throw UsageError("uniform family needs 0 <= rank <= size");
    }
    inst.kind = MatroidKind::kUniform;
    inst.uniform_rank = uniform_rank;
    inst.uniform_size = size;
  } else if (family == "gf2") {
    inst.kind = MatroidKind::kMatrixGf2;
    inst.matrix = random_gf2_matrix(std::max(1, size / 2), size, rng);
  } else {
    throw UsageError("unknown family '" + family +
                     "' (cycle, path, complete, random-2conn, uniform, gf2)");
  }
  const MatroidHandle m = inst.matroid();
  const LabelledBasis start = random_labelling(random_basis(m, rng), rng);
  inst.start = start.by_label();
  inst.target = random_compatible_target(m, start, rng).by_label();
  return inst;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Plans and verifies labelled matroid basis reconfigurations.",
               "basis-relabel"};
  app.require_subcommand(1);
  const auto algorithms =
      CLI::IsMember({"generic", "graphic-fast", "matroid-fast", "auto"});
  const auto formats = CLI::IsMember({"text", "json"});

  auto* check = app.add_subcommand("check", "Decide reconfigurability");
  check->add_option("instance", o.instance_path, "Instance file")->required();

  auto* plan_cmd = app.add_subcommand("plan", "Emit an exchange sequence");
  plan_cmd->add_option("instance", o.instance_path, "Instance file")->required();
  plan_cmd->add_option("--algorithm", o.algorithm)->check(algorithms);
  plan_cmd->add_option("--budget", o.budget, "Search node budget");
  plan_cmd->add_option("--seed", o.seed);
  plan_cmd->add_option("--format", o.format)->check(formats);
  plan_cmd->add_option("--out", o.out_path, "Sequence file to write");
  plan_cmd->add_flag("--no-fallback", o.no_fallback,
                     "Fail with exit 3 instead of falling back to generic");
  plan_cmd->add_flag("--timing", o.timing, "Report wall time");

  auto* verify = app.add_subcommand("verify", "Replay a sequence file");
  verify->add_option("instance", o.instance_path, "Instance file")->required();
  verify->add_option("sequence", o.sequence_path, "Sequence file")->required();

  auto* stats = app.add_subcommand("stats", "Fundamental-graph diameters");
  stats->add_option("instance", o.instance_path, "Instance file");
  stats->add_option("--family", o.family);
  stats->add_option("--size", o.size);
  stats->add_option("--seed", o.seed);
  stats->add_option("--rank", o.rank, "Rank for the uniform family");
  stats->add_option("--budget", o.budget);

  auto* bench = app.add_subcommand("bench", "Benchmark planners as CSV");
  bench->add_option("--family", o.family)->required();
  bench->add_option("--sizes", o.sizes, "e.g. 8,16 or 4..10 or 8..512*2")
      ->required();
  bench->add_option("--seeds", o.seeds, "Seeds per size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", o.seed, "First seed");
  bench->add_option("--rank", o.rank, "Rank for the uniform family");
  bench->add_option("--algorithm", o.algorithm)->check(algorithms);
  bench->add_option("--budget", o.budget);
  bench->add_option("--out", o.out_path);
  bench->add_flag("--no-fallback", o.no_fallback);
  bench->add_flag("--timing", o.timing, "Add a wall_ms column");

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--family", o.family)->required();
  gen->add_option("--size", o.size)->required();
  gen->add_option("--seed", o.seed);
  gen->add_option("--rank", o.rank, "Rank for the uniform family");
  gen->add_option("--format", o.format)->check(formats);
  gen->add_option("--out", o.out_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  try {
    return dispatch(app, o, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return kRejected;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kBadInput;
  } catch (const PreconditionError& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kBadInput;
  } catch (const DomainError& e) {
    err << "invalid instance: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRejected;
  }
}

}  // namespace basis_relabel::cli

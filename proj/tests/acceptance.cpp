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

// Acceptance harness: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "basis_relabel/errors.hpp"
#include "basis_relabel/io.hpp"
#include "basis_relabel/reconfig.hpp"
#include "cli.hpp"
#include "support.hpp"

namespace basis_relabel {
namespace {

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> issues;

  void fail(std::string why) {
    pass = false;
    if (issues.size() < 8) issues.push_back(std::move(why));
  }
};

int report(int id, const std::string& title, const Outcome& o) {
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(),
              o.summary.c_str());
  for (const std::string& s : o.issues) std::printf("    %s\n", s.c_str());
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

int ceil_sqrt(int x) {
  int k = 0;
  while (k * k < x) ++k;
  return k;
}

struct SuiteEntry {
  std::string name;
  MatroidHandle matroid;
};

std::vector<SuiteEntry> instance_suite(int* graph_count) {
  std::vector<SuiteEntry> out;
  for (int n = 1; n <= 6; ++n) {
    int index = 0;
    for (Graph& g : testing::graphs_up_to_isomorphism(n)) {
      out.push_back({"graph" + std::to_string(n) + "-" + std::to_string(index++),
                     graphic_matroid(std::move(g))});
    }
  }
  *graph_count = static_cast<int>(out.size());
  for (auto& [name, m] : testing::random_matroid_suite(320, 2026, 10)) {
    out.push_back({name, m});
  }
  return out;
}

// Declared per-run bounds, recomputed from the report fields.
std::optional<long long> formula_bound(const MatroidHandle& m, const PlanReport& r) {
  const long long rank = m.rank();
  if (r.algorithm == Algorithm::kGeneric) return 6 * rank * rank;
  if (!r.diameter) return std::nullopt;
  const long long per_swap = std::max(0, 3 * *r.diameter - 3);
  if (r.algorithm == Algorithm::kGraphicFast) {
    return 2LL * as_graphic(m)->graph().vertex_count + rank * per_swap;
  }
  return 2 * rank + rank * per_swap;
}

struct InstanceResult {
  int pairs = 0;
  int agree = 0;
  int sequences = 0;
  int valid = 0;
  int bound_checks = 0;
  int bound_ok = 0;
  int fallbacks = 0;
  std::vector<std::string> issues;
};

InstanceResult run_instance(const SuiteEntry& entry, std::uint64_t seed) {
  InstanceResult res;
  const MatroidHandle& m = entry.matroid;
  Rng rng(seed);
  ReconfigGraph oracle(m);
  std::vector<Algorithm> algorithms{Algorithm::kGeneric, Algorithm::kMatroidFast};
  if (as_graphic(m) != nullptr) algorithms.push_back(Algorithm::kGraphicFast);
  int planned = 0;
  for (int k = 0; k < 20; ++k) {
    const LabelledBasis s = random_labelling(random_basis(m, rng), rng);
    const LabelledBasis t = k % 2 == 0 ? random_compatible_target(m, s, rng)
                                       : random_labelling(random_basis(m, rng), rng);
    const bool verdict = feasible(m, s, t).feasible;
    const bool truth = oracle.reachable(s, t);
    ++res.pairs;
    if (verdict == truth) {
      ++res.agree;
    } else {
      res.issues.push_back("c1 " + entry.name + " pair " + std::to_string(k) +
                           ": verdict " + std::to_string(verdict) + " oracle " +
                           std::to_string(truth));
    }
    if (!verdict || planned >= 6) continue;
    ++planned;
    for (Algorithm a : algorithms) {
      PlannerConfig config;
      config.algorithm = a;
      try {
        const PlanReport r = plan(m, s, t, config);
        ++res.sequences;
        const Verdict v = verify_sequence(m, s, r.sequence, t);
        if (v.ok) {
          ++res.valid;
        } else {
          res.issues.push_back("c2 " + entry.name + " " +
                               std::string(algorithm_name(a)) + ": " + v.reason);
        }
        res.fallbacks += r.fell_back ? 1 : 0;
        const auto bound = formula_bound(m, r);
        ++res.bound_checks;
        const long long len = static_cast<long long>(r.sequence.size());
        if (bound && len <= *bound && r.declared_bound == *bound) {
          ++res.bound_ok;
        } else {
          res.issues.push_back("c8 " + entry.name + " " +
                               std::string(algorithm_name(r.algorithm)) +
                               ": length " + std::to_string(len) + " bound " +
                               (bound ? std::to_string(*bound) : "missing"));
        }
      } catch (const std::exception& e) {
        ++res.sequences;
        ++res.bound_checks;
        res.issues.push_back("c2 " + entry.name + " " +
                             std::string(algorithm_name(a)) + " threw: " + e.what());
      }
    }
  }
  return res;
}

// Contracting a biggest circuit leaves only smaller ones.
bool biggest_circuit_shrinks(const MatroidHandle& m, std::string* why) {
  const auto circuits = enumerate_circuits(m, kStateSpaceCap);
  std::size_t biggest = 0;
  for (const Circuit& c : circuits) biggest = std::max(biggest, c.members.size());
  for (const Circuit& c : circuits) {
    if (c.members.size() != biggest) continue;
    std::size_t after = 0;
    for (const Circuit& d : enumerate_circuits(m.contract(c.members), kStateSpaceCap)) {
      after = std::max(after, d.members.size());
    }
    if (after >= biggest) {
      *why = "circuit of size " + std::to_string(biggest) +
             " leaves a circuit of size " + std::to_string(after);
      return false;
    }
  }
  return true;
}

bool is_connected_matroid(const MatroidHandle& m) {
  return m.size() >= 2 && loops(m).empty() && components(m).count == 1;
}

}  // namespace
}  // namespace basis_relabel

int main() {
  using namespace basis_relabel;
  const auto started = std::chrono::steady_clock::now();
  int failures = 0;

  // Criteria 1, 2, 6 and 8 share the small-instance suite.
  int graph_count = 0;
  const std::vector<SuiteEntry> suite = instance_suite(&graph_count);
  std::vector<InstanceResult> results(suite.size());
  const int count = static_cast<int>(suite.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      results[i] = run_instance(suite[i], 1000 + static_cast<std::uint64_t>(i));
    } catch (const std::exception& e) {
      results[i].pairs = 1;
      results[i].issues.push_back("c1 " + suite[i].name + " threw: " + e.what());
    }
  }
  InstanceResult total;
  for (const InstanceResult& r : results) {
    total.pairs += r.pairs;
    total.agree += r.agree;
    total.sequences += r.sequences;
    total.valid += r.valid;
    total.bound_checks += r.bound_checks;
    total.bound_ok += r.bound_ok;
    total.fallbacks += r.fallbacks;
    total.issues.insert(total.issues.end(), r.issues.begin(), r.issues.end());
  }
  auto issues_with = [&](const std::string& tag, Outcome& o) {
    for (const std::string& s : total.issues) {
      if (s.rfind(tag, 0) == 0) o.fail(s);
    }
  };

  {
    Outcome o;
    issues_with("c1", o);
    if (count < 500 || total.pairs < 20 * count) o.fail("suite too small");
    o.pass = o.pass && total.agree == total.pairs;
    o.summary = std::to_string(count) + " instances (" + std::to_string(graph_count) +
                " graphs on <= 6 vertices), " + std::to_string(total.agree) + "/" +
                std::to_string(total.pairs) + " verdicts match reachability";
    failures += report(1, "characterization", o);
  }

  // Extra sequences for criterion 2 come from criteria 3 and 4 below.
  int extra_sequences = 0;
  int extra_valid = 0;
  std::vector<std::string> extra_issues;
  auto record = [&](const MatroidHandle& m, const LabelledBasis& s,
                    const ExchangeSequence& seq, const LabelledBasis& t,
                    const std::string& what) {
    ++extra_sequences;
    const Verdict v = verify_sequence(m, s, seq, t);
    if (v.ok) {
      ++extra_valid;
    } else {
      extra_issues.push_back(what + ": " + v.reason);
    }
    return v.ok;
  };

  Outcome c3;
  {
    const MatroidHandle k3 = graphic_matroid(complete_graph(3));
    const LabelledBasis s({0, 1}), t({1, 0});
    for (Algorithm a : {Algorithm::kGeneric, Algorithm::kGraphicFast,
                        Algorithm::kMatroidFast}) {
      PlannerConfig config;
      config.algorithm = a;
      const PlanReport r = plan(k3, s, t, config);
      record(k3, s, r.sequence, t, "K3 " + std::string(algorithm_name(a)));
      if (r.sequence.size() != 3) {
        c3.fail("K3 " + std::string(algorithm_name(a)) + " used " +
                std::to_string(r.sequence.size()) + " steps");
      }
    }
    const auto k3_optimum = bfs_distance(k3, s, t);
    if (k3_optimum != 3) c3.fail("K3 BFS optimum is not 3");
    const MatroidHandle u24 = uniform_matroid(2, 4);
    for (Algorithm a : {Algorithm::kGeneric, Algorithm::kMatroidFast}) {
      PlannerConfig config;
      config.algorithm = a;
      const PlanReport r = plan(u24, s, t, config);
      record(u24, s, r.sequence, t, "U24 " + std::string(algorithm_name(a)));
      if (r.sequence.size() != 3) {
        c3.fail("U(2,4) " + std::string(algorithm_name(a)) + " used " +
                std::to_string(r.sequence.size()) + " steps");
      }
    }
    const auto optimum = bfs_distance(u24, s, t);
    if (optimum != 3) c3.fail("U(2,4) BFS optimum is not 3");
    c3.summary = "K3 swap 3 steps on every planner, U(2,4) swap 3 steps, BFS optimum " +
                 (optimum ? std::to_string(*optimum) : std::string("none"));
  }

  Outcome c4;
  {
    int cases = 0;
    int max_t = 0;
    for (std::uint64_t seed = 1; cases < 200; ++seed) {
      Rng rng(seed);
      MatroidHandle m = seed % 2 == 0
                            ? graphic_matroid(random_two_connected(rng.between(5, 24), seed))
                            : linear_matroid(random_gf2_matrix(rng.between(3, 8),
                                                               rng.between(6, 16), rng));
      m = m.remove(loops(m));
      if (m.rank() < 2) continue;
      const LabelledBasis t = random_labelling(random_basis(m, rng), rng);
      const FundamentalGraph s = fundamental_graph(m, t.basis());
      const Element e = t.element(1 + static_cast<int>(rng.below(t.rank())));
      const Element f = t.element(1 + static_cast<int>(rng.below(t.rank())));
      const auto dist = e == f ? std::nullopt : graph_distance(s, e, f);
      if (!dist) continue;
      ++cases;
      max_t = std::max(max_t, *dist);
      const ExchangeSequence seq = swap_labels(m, t, e, f);
      std::vector<Element> swapped = t.by_label();
      std::swap(swapped[*t.label_of(e) - 1], swapped[*t.label_of(f) - 1]);
      const bool ok = record(m, t, seq, LabelledBasis(swapped), "swap seed " +
                                                                  std::to_string(seed));
      if (static_cast<int>(seq.size()) != 3 * *dist - 3 || !ok) {
        c4.fail("seed " + std::to_string(seed) + ": t=" + std::to_string(*dist) +
                " length " + std::to_string(seq.size()) + (ok ? "" : " invalid"));
      }
    }
    c4.summary = std::to_string(cases) + " cases, length == 3t-3 with t up to " +
                 std::to_string(max_t) + ", only the two labels move";
  }

  {
    Outcome o;
    issues_with("c2", o);
    for (const std::string& s : extra_issues) o.fail(s);
    const int all = total.sequences + extra_sequences;
    const int ok = total.valid + extra_valid;
    o.pass = o.pass && all == ok;
    o.summary = std::to_string(ok) + "/" + std::to_string(all) +
                " emitted sequences replay to the target (" +
                std::to_string(total.fallbacks) + " budget fallbacks)";
    failures += report(2, "sequence validity", o);
  }
  failures += report(3, "exact small counts", c3);
  failures += report(4, "swap count law", c4);

  {
    Outcome o;
    int calls = 0;
    int worst_iterations = 0;
    double worst_ratio = 0;
    for (int n : {4, 8, 16, 32, 64, 128}) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = random_two_connected(n, seed);
        const HalvingCycle h = find_halving_cycle(g);
        const auto sizes = contracted_block_sizes(g, h.cycle);
        const int worst = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
        ++calls;
        worst_iterations = std::max(worst_iterations, h.iterations);
        worst_ratio = std::max(worst_ratio, static_cast<double>(worst) / g.edge_count());
        if (2 * worst > g.edge_count() || h.iterations > g.edge_count()) {
          o.fail("n=" + std::to_string(n) + " seed " + std::to_string(seed) +
                 ": block " + std::to_string(worst) + " of " +
                 std::to_string(g.edge_count()));
        }
        for (std::size_t i = 1; i < h.max_block_trace.size(); ++i) {
          if (h.max_block_trace[i] >= h.max_block_trace[i - 1]) {
            o.fail("n=" + std::to_string(n) + ": local search did not shrink");
          }
        }
      }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d calls up to n=128, max block/m = %.3f, max iterations %d",
                  calls, worst_ratio, worst_iterations);
    o.summary = buf;
    failures += report(5, "halving cycle", o);
  }

  {
    Outcome o;
    int checked = 0;
    for (const SuiteEntry& e : suite) {
      if (!is_connected_matroid(e.matroid)) continue;
      ++checked;
      std::string why;
      if (!biggest_circuit_shrinks(e.matroid, &why)) o.fail(e.name + ": " + why);
    }
    o.summary = std::to_string(checked) +
                " connected matroids, every biggest circuit C leaves only smaller "
                "circuits in M/C";
    if (checked == 0) o.fail("no connected matroids in the suite");
    failures += report(6, "biggest circuit shrinks", o);
  }

  {
    Outcome o;
    double worst_log = 0;
    int worst_prox = 0;
    for (int n : {64, 128, 256, 512}) {
      for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Graph g = random_two_connected(n, seed);
        const MatroidHandle m = graphic_matroid(g);
        const ConstructionState st = build_log_diameter_tree(g);
        if (!m.is_basis(st.basis)) o.fail("log-tree n=" + std::to_string(n) + " not a tree");
        const FundamentalGraph s = fundamental_graph(m, st.basis);
        const int d = diameter(s);
        const int bound = 4 * ceil_log2(g.edge_count()) + 4;
        worst_log = std::max(worst_log, static_cast<double>(d) / bound);
        worst_prox = std::max(worst_prox, max_layer_distance(s, st));
        if (d > bound) {
          o.fail("log-tree n=" + std::to_string(n) + " seed " + std::to_string(seed) +
                 ": diameter " + std::to_string(d) + " > " + std::to_string(bound));
        }
        for (const LayerRecord& r : st.records) {
          if (!r.halving_trace.empty() &&
              2 * r.halving_trace.back() > static_cast<int>(r.simple.size())) {
            o.fail("log-tree n=" + std::to_string(n) + ": halving bound broken");
          }
        }
      }
    }
    std::vector<MatroidHandle> small;
    for (int n : {4, 5, 6}) small.push_back(graphic_matroid(complete_graph(n)));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Rng rng(seed);
      Graph g = random_two_connected(rng.between(4, 11), seed);
      if (g.edge_count() <= 20) small.push_back(graphic_matroid(g));
      small.push_back(linear_matroid(
          random_gf2_matrix(rng.between(3, 8), rng.between(8, 20), rng)));
    }
    int worst_layers = 0;
    double worst_sqrt = 0;
    for (std::size_t i = 0; i < small.size(); ++i) {
      const MatroidHandle& m = small[i];
      const ConstructionState st = build_sqrt_diameter_basis(m);
      const FundamentalGraph s = fundamental_graph(m, st.basis);
      const int d = diameter(s);
      const int layers = st.layer_count();
      const int layer_cap = 2 * ceil_sqrt(m.rank()) + 2;
      worst_layers = std::max(worst_layers, layers);
      worst_sqrt = std::max(worst_sqrt, d / std::sqrt(std::max(1, m.rank())));
      worst_prox = std::max(worst_prox, max_layer_distance(s, st));
      if (!m.is_basis(st.basis) || d > 4 * layers + 2 || layers > layer_cap) {
        o.fail("sqrt instance " + std::to_string(i) + ": diameter " +
               std::to_string(d) + " layers " + std::to_string(layers) + " cap " +
               std::to_string(layer_cap));
      }
    }
    if (worst_prox > 4) o.fail("layer proximity " + std::to_string(worst_prox) + " > 4");
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "log-tree 40 graphs, max diameter/bound = %.3f; sqrt-basis %zu "
                  "instances, max layers %d, max diameter/sqrt(r) = %.3f; layer "
                  "proximity <= %d",
                  worst_log, small.size(), worst_layers, worst_sqrt, worst_prox);
    o.summary = buf;
    failures += report(7, "diameter bounds", o);
  }

  {
    Outcome o;
    issues_with("c8", o);
    // Larger graphic instances exercise the graphic bound with real diameters.
    int large = 0;
    double worst_const = 0;
    for (int n : {16, 32, 64}) {
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const InstanceFile inst = cli::family_instance("random-2conn", n, seed);
        const MatroidHandle m = inst.matroid();
        const LabelledBasis s(*inst.start), t(*inst.target);
        for (Algorithm a : {Algorithm::kGeneric, Algorithm::kGraphicFast}) {
          PlannerConfig config;
          config.algorithm = a;
          const PlanReport r = plan(m, s, t, config);
          const auto bound = formula_bound(m, r);
          const long long len = static_cast<long long>(r.sequence.size());
          ++large;
          if (!bound || len > *bound || !verify_sequence(m, s, r.sequence, t).ok) {
            o.fail("random-2conn n=" + std::to_string(n) + " " +
                   std::string(algorithm_name(a)) + " length " + std::to_string(len));
          }
          if (a == Algorithm::kGraphicFast) {
            worst_const = std::max(worst_const, len / (n * std::log2(n)));
          }
        }
      }
    }
    o.pass = o.pass && total.bound_ok == total.bound_checks;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "%d/%d suite runs and %d graph runs within their bounds; "
                  "graphic-fast length/(n log2 n) <= %.3f",
                  total.bound_ok, total.bound_checks, large, worst_const);
    o.summary = buf;
    failures += report(8, "length bounds", o);
  }

  {
    Outcome o;
    int p3 = 0, p4 = 0, p5 = 0;
    const auto pool = testing::random_matroid_suite(400, 77, 12);
    Rng rng(78);
    for (std::size_t i = 0; p3 < 200 && i < pool.size(); ++i) {
      const MatroidHandle& m = pool[i].matroid;
      const ElementSet b = random_basis(m, rng);
      const ElementSet outside = set_minus(m.elements(), b);
      if (outside.empty()) continue;
      const Element e = outside[rng.below(outside.size())];
      ElementSet partners;
      for (Element x : b) {
        if (m.is_basis(set_with(set_without(b, x), e))) partners.push_back(x);
      }
      ++p3;
      if (set_without(m.fundamental_circuit(b, e).members, e) != partners) {
        o.fail("exchange partners differ on " + pool[i].name);
      }
    }
    for (std::size_t i = 0; i < 200; ++i) {
      const MatroidHandle& m = pool[i].matroid;
      const ElementSet t = testing::random_subset(m.elements(), rng);
      const MatroidHandle c = m.contract(t);
      const ElementSet x = testing::random_subset(c.elements(), rng);
      ++p4;
      if (c.rank(x) != m.rank(set_union(x, t)) - m.rank(t)) {
        o.fail("rank identity fails on " + pool[i].name);
      }
      const ElementSet ti = m.maximal_independent(testing::random_subset(m.elements(), rng));
      const MatroidHandle ct = m.contract(ti);
      const ElementSet a = ct.maximal_independent(testing::random_subset(ct.elements(), rng));
      ++p5;
      if (!m.is_independent(set_union(ti, a))) {
        o.fail("augmentation fails on " + pool[i].name);
      }
    }
    if (p3 < 200) o.fail("only " + std::to_string(p3) + " exchange cases");
    o.summary = "exchange partners " + std::to_string(p3) + ", rank identity " +
                std::to_string(p4) + ", augmentation " + std::to_string(p5) + " cases";
    failures += report(9, "matroid properties", o);
  }

  {
    Outcome o;
    auto run = [](const std::vector<std::string>& args, std::string* out) {
      std::ostringstream o1, e1;
      const int code = cli::run(args, o1, e1);
      *out = o1.str();
      return code;
    };
    std::vector<std::vector<std::string>> commands{
        {"bench", "--family", "random-2conn", "--sizes", "8..32*2", "--seeds", "3"},
        {"bench", "--family", "uniform", "--rank", "2", "--sizes", "4..10", "--seeds", "2"},
        {"bench", "--family", "gf2", "--sizes", "8,12", "--seeds", "2"},
        {"gen", "--family", "random-2conn", "--size", "40", "--seed", "7"},
    };
    int compared = 0;
    for (const auto& args : commands) {
      std::string first, second;
      const int c1 = run(args, &first);
      const int c2 = run(args, &second);
      ++compared;
      if (c1 != 0 || c2 != 0 || first != second || first.empty()) {
        o.fail("differs: " + args[0] + " " + args[2]);
      }
    }
    for (const char* family : {"random-2conn", "gf2", "complete"}) {
      const InstanceFile inst = cli::family_instance(family, 9, 4);
      const std::string path = std::string("acceptance-") + family + ".txt";
      std::FILE* f = std::fopen(path.c_str(), "wb");
      const std::string text = serialize_instance(inst);
      std::fwrite(text.data(), 1, text.size(), f);
      std::fclose(f);
      for (const char* algorithm : {"generic", "matroid-fast", "auto"}) {
        for (const char* format : {"text", "json"}) {
          std::string first, second;
          const std::vector<std::string> args{"plan", path, "--algorithm", algorithm,
                                              "--format", format};
          const int c1 = run(args, &first);
          const int c2 = run(args, &second);
          ++compared;
          if (c1 != 0 || c2 != 0 || first != second) {
            o.fail(std::string("plan differs: ") + family + " " + algorithm);
          }
        }
      }
      std::remove(path.c_str());
    }
    o.summary = std::to_string(compared) +
                " command pairs produced byte-identical sequence files and CSVs";
    failures += report(10, "determinism", o);
  }

  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - started)
                          .count();
  std::printf("acceptance finished in %.1f s, %d failing criteria\n", secs, failures);
  return failures == 0 ? 0 : 1;
}

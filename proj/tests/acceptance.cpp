// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wsub/error.hpp"
#include "wsub/euler_subtree.hpp"
#include "wsub/generators.hpp"
#include "wsub/planar.hpp"
#include "wsub/rng.hpp"
#include "wsub/subset_sum.hpp"
#include "wsub/tree.hpp"

using namespace wsub;

namespace {

// Pinned limits.
constexpr int kRandomTrees = 1000;
constexpr int kMaxTreeOrder = 10;
constexpr Weight kMaxTreeWeight = 6;
constexpr Weight kMaxSlack = 4;
constexpr double kRandomTreeSeconds = 60.0;
constexpr int kTightMaxParam = 10;
constexpr int kLinearOrder = 1'000'000;
constexpr int kLinearSmallOrder = 100'000;
constexpr double kLinearSeconds = 5.0;
constexpr double kStepRatioLow = 8.0;
constexpr double kStepRatioHigh = 12.0;
constexpr int kSpectrumCheckMaxOrder = 14;
constexpr int kBranchSamples = 5;
constexpr std::uint64_t kBranchSeedBudget = 20'000;
constexpr int kMediumMaxOrder = 60;
constexpr int kSubsetMaxSize = 8;
constexpr Weight kSubsetMaxValue = 5;
constexpr double kSubsetSeconds = 120.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(std::move(why));
  }
};

std::string str(auto v) { return std::to_string(v); }

struct Named {
  std::string label;
  PlaneInstance inst;
};

// Fixture graphs shared by several criteria.
std::vector<Named> degree4_fixtures() {
  std::vector<Named> out;
  out.push_back({"octahedron", octahedron()});
  for (int n = 8; n <= 60; n += 2) out.push_back({"C_" + str(n) + "^2", square_of_cycle(n)});
  for (int p = 1; p <= 2; ++p) out.push_back({"malkevitch(" + str(p) + ")", malkevitch(p)});
  return out;
}

// ---------------------------------------------------------------------------

Outcome random_tree_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  long runs = 0, guaranteed = 0, found = 0;
  for (int i = 0; i < kRandomTrees; ++i) {
    const int n = 1 + i % kMaxTreeOrder;
    const auto tree = random_tree(n, 1 + i % kMaxTreeWeight, 0xACCE55 + i);
    const auto weights = oracle_subtree_weights(tree);
    for (Weight k = 1; k <= tree.total_weight(); ++k) {
      for (Weight g = 1; g <= kMaxSlack; ++g) {
        const auto cond = check_conditions(tree, k, g);
        if (!cond.cap_ok) continue;  // outside the search's input contract
        ++runs;
        const auto res = find_subtree(tree, k, g);
        if (res.found()) {
          ++found;
          if (!verify_subtree(tree, *res.subtree, k, g)) o.fail("invalid subtree, tree #" + str(i));
          if (!std::binary_search(weights.begin(), weights.end(), res.subtree->weight)) {
            o.fail("weight not in oracle set, tree #" + str(i));
          }
        }
        if (cond.overall()) {
          ++guaranteed;
          if (!res.found()) o.fail("NotFound although conditions hold, tree #" + str(i) + " k=" + str(k));
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= kRandomTreeSeconds) o.fail("took " + str(secs) + " s");
  o.detail = str(kRandomTrees) + " trees, " + str(runs) + " (k,g) runs, " + str(guaranteed) +
             " with conditions holding, " + str(found) + " found, " + str(secs) + " s";
  return o;
}

Outcome tight_fixtures() {
  Outcome o;
  const std::pair<TightFamily, std::string> expected[] = {{TightFamily::star_gh, "slack"},
                                                          {TightFamily::path_lower, "lower"},
                                                          {TightFamily::path_upper, "upper"},
                                                          {TightFamily::star_cap, "cap"}};
  int instances = 0;
  for (const auto& [family, flag] : expected) {
    const bool uses_q = family == TightFamily::path_lower || family == TightFamily::star_cap;
    for (int p = 2; p <= kTightMaxParam; ++p) {
      for (int q = 1; q <= (uses_q ? kTightMaxParam : 1); ++q) {
        if (family == TightFamily::star_cap && (q <= 2 || q >= p + 1)) continue;
        const auto inst = generate_tight_instance(family, p, q);
        const std::string where = std::string(to_string(family)) + " p=" + str(p) + " q=" + str(q);
        ++instances;
        const auto failed = check_conditions(inst.tree, inst.k, inst.g).failed();
        if (failed != std::vector<std::string>{flag}) o.fail(where + ": wrong failing flags");
        bool not_found = false;
        try {
          not_found = !find_subtree(inst.tree, inst.k, inst.g).found();
        } catch (const Error& e) {
          // a vertex heavier than k is refused up front; that refusal is the NotFound here
          not_found = e.kind() == ErrorKind::weight_exceeds_target && family == TightFamily::star_cap;
        }
        if (!not_found) o.fail(where + ": search did not report NotFound");
        if (window_achievable(oracle_subtree_weights(inst.tree), inst.k - inst.g + 1, inst.k)) {
          o.fail(where + ": oracle says the window is achievable");
        }
      }
    }
  }
  o.detail = str(instances) + " tight instances (4 families, p,q <= " + str(kTightMaxParam) + ")";
  return o;
}

WeightedTree alternating_path(int n) {
  std::vector<Weight> w(n);
  for (int i = 0; i < n; ++i) w[i] = i % 2 == 0 ? 1 : 2;
  return WeightedTree::path(w);
}

Outcome linearity() {
  Outcome o;
  std::size_t steps[2] = {0, 0};
  double secs = 0;
  const int orders[2] = {kLinearSmallOrder, kLinearOrder};
  for (int i = 0; i < 2; ++i) {
    const auto tree = alternating_path(orders[i]);
    const Weight k = tree.total_weight() / 2;
    if (!check_conditions(tree, k, 1).overall()) o.fail("conditions fail at N1=" + str(orders[i]));
    const auto t0 = Clock::now();
    const auto res = find_subtree(tree, k, 1);
    if (i == 1) secs = seconds_since(t0);
    steps[i] = res.steps;
    if (!res.found()) o.fail("NotFound at N1=" + str(orders[i]));
    const auto budget = 3 * 2 * static_cast<std::size_t>(orders[i] - 1);
    if (res.steps > budget) o.fail("steps " + str(res.steps) + " > " + str(budget));
  }
  const double ratio = static_cast<double>(steps[1]) / static_cast<double>(std::max<std::size_t>(steps[0], 1));
  if (secs >= kLinearSeconds) o.fail("N1=1e6 took " + str(secs) + " s");
  if (ratio < kStepRatioLow || ratio > kStepRatioHigh) o.fail("step ratio " + str(ratio));
  char buf[200];
  std::snprintf(buf, sizeof buf, "steps %zu (1e5) / %zu (1e6), ratio %.3f, 1e6 search %.3f s", steps[0], steps[1],
                ratio, secs);
  o.detail = buf;
  return o;
}

Outcome min_degree4_lengths() {
  Outcome o;
  int calls = 0, spectra = 0;
  auto fixtures = degree4_fixtures();
  int sampled = 0;
  for (std::uint64_t seed = 1; sampled < 20 && seed < kBranchSeedBudget; ++seed) {
    const int n = 8 + 2 * static_cast<int>(seed % 20);
    if (auto inst = random_min_degree4(n, n / 2 + static_cast<int>(seed % 4), seed)) {
      fixtures.push_back({"min-degree-4 seed " + str(seed), std::move(*inst)});
      ++sampled;
    }
  }
  for (const auto& [label, inst] : fixtures) {
    const auto& g = inst.graph;
    const int n = g.vertex_count();
    if (g.min_degree() < 4) o.fail(label + ": min degree below 4");
    const HamiltonCycle ham(g, inst.hamilton);
    const std::set<int> spectrum = n <= kSpectrumCheckMaxOrder ? brute::cycle_spectrum(g) : std::set<int>{};
    if (n <= kSpectrumCheckMaxOrder) ++spectra;
    for (int k = std::max(3, n / 2); k <= std::min(n, (n + 1) / 2 + 3); ++k) {
      ++calls;
      const auto res = find_cycle_near(g, ham, k, 1);
      if (!res.hypothesis.overall()) o.fail(label + " k=" + str(k) + ": hypothesis does not hold");
      if (!res.found()) {
        o.fail(label + " k=" + str(k) + ": NotFound");
        continue;
      }
      if (!validate_cycle(g, *res.cycle)) o.fail(label + " k=" + str(k) + ": invalid cycle");
      if (res.cycle->length() != static_cast<std::size_t>(k)) o.fail(label + " k=" + str(k) + ": wrong length");
      if (n <= kSpectrumCheckMaxOrder && !spectrum.contains(k)) o.fail(label + ": enumeration misses length " + str(k));
    }
  }
  o.detail = str(fixtures.size()) + " graphs (octahedron, C_n^2 n=8..60, malkevitch p=1,2, " + str(sampled) +
             " random), " + str(calls) + " calls, " + str(spectra) + " exhaustive spectra";
  return o;
}

Outcome half_cycles() {
  Outcome o;
  auto check = [&](const std::string& label, const PlaneInstance& inst, HalfCycleResult& res) {
    const int n = inst.graph.vertex_count();
    try {
      res = find_half_cycle_3conn(inst.graph, HamiltonCycle(inst.graph, inst.hamilton));
    } catch (const Error& e) {
      o.fail(label + ": " + e.what());
      return false;
    }
    const auto len = static_cast<int>(res.cycle.length());
    if (!validate_cycle(inst.graph, res.cycle)) o.fail(label + ": invalid cycle");
    if (len != n / 2 - 1 && len != n / 2 - 2) o.fail(label + ": length " + str(len));
    return true;
  };

  int squares = 0;
  for (int n = 8; n <= 40; n += 2) {
    HalfCycleResult res{};
    if (check("C_" + str(n) + "^2", square_of_cycle(n), res)) ++squares;
  }

  int hits[3] = {0, 0, 0};
  std::uint64_t seed = 1;
  for (; seed < kBranchSeedBudget && (hits[0] < kBranchSamples || hits[1] < kBranchSamples); ++seed) {
    const int n = 10 + 2 * static_cast<int>(seed % 12);
    // n/2 inside chords makes 4-regular instances (small-faces branch) likely
    const int inside = seed % 3 == 0 ? n / 2 + 1 + static_cast<int>(seed % 5) : n / 2;
    auto inst = random_min_degree4(n, inside, seed);
    if (!inst || !is_three_connected(inst->graph)) continue;
    HalfCycleResult res{};
    if (check("min-degree-4 seed " + str(seed), *inst, res)) ++hits[static_cast<int>(res.branch)];
  }
  if (hits[0] == 0) o.fail("no many-chords instance generated");
  if (hits[1] == 0) o.fail("no small-faces instance generated");
  o.detail = str(squares) + " squares of cycles; generated: " + str(hits[0]) + " many-chords, " + str(hits[1]) +
             " small-faces, " + str(hits[2]) + " square-of-cycle (" + str(seed - 1) + " seeds)";
  return o;
}

Outcome medium_cycles() {
  Outcome o;
  std::vector<Named> fixtures;
  for (int n = 6; n <= kMediumMaxOrder; n += 2) fixtures.push_back({"C_" + str(n) + "^2", square_of_cycle(n)});
  for (int p = 1; 6 * p <= kMediumMaxOrder; ++p) fixtures.push_back({"malkevitch(" + str(p) + ")", malkevitch(p)});
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const int n = 5 + static_cast<int>(seed % (kMediumMaxOrder - 4));
    auto inst = random_hamiltonian(n, seed, 60 + static_cast<int>(seed % 41));
    if (inst.graph.edge_count() >= 2 * static_cast<std::size_t>(n)) {
      fixtures.push_back({"random-hamiltonian seed " + str(seed), std::move(inst)});
    }
  }
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const int n = 8 + static_cast<int>(seed % 26) * 2;
    if (auto inst = random_min_degree4(n, n / 2 + static_cast<int>(seed % 6), seed)) {
      fixtures.push_back({"min-degree-4 seed " + str(seed), std::move(*inst)});
    }
  }
  for (const auto& [label, inst] : fixtures) {
    const int n = inst.graph.vertex_count();
    const auto res = find_cycle_medium(inst.graph, HamiltonCycle(inst.graph, inst.hamilton));
    if (!res.found()) {
      o.fail(label + ": NotFound");
      continue;
    }
    const auto len = static_cast<int>(res.cycle->length());
    if (!validate_cycle(inst.graph, *res.cycle)) o.fail(label + ": invalid cycle");
    if (3 * len < n || 3 * len > 2 * n) o.fail(label + ": length " + str(len) + " outside [n/3, 2n/3]");
  }
  o.detail = str(fixtures.size()) + " instances with m >= 2n, n <= " + str(kMediumMaxOrder);
  return o;
}

Outcome subset_sum_agreement() {
  Outcome o;
  const auto t0 = Clock::now();
  long multisets = 0, dense_yes = 0, partition_checked = 0, via_checked = 0;
  SplitMix64 rng(2024);
  std::vector<Weight> a;

  auto check_order = [&](const std::vector<Weight>& values) {
    const Multiset m(values);
    const auto sums = brute::subset_sums(values);
    const std::string where = "A=(" + [&] {
      std::string s;
      for (Weight v : values) s += (s.empty() ? "" : ",") + str(v);
      return s;
    }() + ")";
    for (Weight k = 1; k <= m.total(); ++k) {
      const bool truth = sums.contains(k);
      const auto oracle = oracle_subset_sum(m, k);
      if ((oracle.decision == Decision::yes) != truth) o.fail(where + ": oracle wrong at k=" + str(k));
      if (truth && !verify_witness(m, *oracle.witness, k)) o.fail(where + ": oracle witness");

      const auto dense = subset_sum_dense(m, k);
      if (dense.decision != Decision::not_applicable) {
        ++dense_yes;
        if (dense.decision != Decision::yes || !truth) o.fail(where + ": dense contradicts oracle at k=" + str(k));
        else if (!verify_witness(m, *dense.witness, k)) o.fail(where + ": dense witness at k=" + str(k));
      }
      if (2 * k <= m.total()) {
        const auto via = subset_sum_via_partition(m, k);
        if (via.decision != Decision::not_applicable) {
          ++via_checked;
          if ((via.decision == Decision::yes) != truth) o.fail(where + ": via-partition wrong at k=" + str(k));
          if (via.decision == Decision::yes && !verify_witness(m, *via.witness, k)) o.fail(where + ": via witness");
        }
      }
    }
    if (m.total() % 2 == 0) {
      const auto part = partition_dense(m);
      if (part.decision != Decision::not_applicable) {
        ++partition_checked;
        const bool truth = sums.contains(m.total() / 2);
        if ((part.decision == Decision::yes) != truth) o.fail(where + ": partition wrong");
        if (part.decision == Decision::yes) {
          // both sides must balance
          Weight side = 0;
          for (int i : part.witness->indices) side += m[i];
          if (!verify_witness(m, *part.witness, m.total() / 2) || 2 * side != m.total()) {
            o.fail(where + ": partition witness");
          }
        }
      }
    }
  };

  // every multiset (non-decreasing sequence) plus one shuffled order of it
  auto rec = [&](auto&& self, Weight min_value) -> void {
    if (!a.empty()) {
      ++multisets;
      check_order(a);
      auto shuffled = a;
      for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
      check_order(shuffled);
    }
    if (static_cast<int>(a.size()) == kSubsetMaxSize) return;
    for (Weight v = min_value; v <= kSubsetMaxValue; ++v) {
      a.push_back(v);
      self(self, v);
      a.pop_back();
    }
  };
  rec(rec, 1);

  const Multiset tight({2, 2, 2});
  if (partition_dense(tight).decision != Decision::not_applicable) o.fail("{2,2,2}: partition threshold applies");
  if (subset_sum_dense(tight, 3).decision != Decision::not_applicable) o.fail("{2,2,2}: dense applies");
  if (oracle_subset_sum(tight, 3).decision != Decision::no) o.fail("{2,2,2}: oracle is not false");

  const double secs = seconds_since(t0);
  if (secs >= kSubsetSeconds) o.fail("took " + str(secs) + " s");
  o.detail = str(multisets) + " multisets x 2 orders; dense applied " + str(dense_yes) + "x, partition " +
             str(partition_checked) + "x, via-partition " + str(via_checked) + "x; {2,2,2} NotApplicable/false; " +
             str(secs) + " s";
  return o;
}

Outcome structural_invariants() {
  Outcome o;
  long cycles = 0, traces = 0, duals = 0, boundaries = 0;

  std::vector<WeightedTree> trees;
  for (int i = 0; i < 300; ++i) trees.push_back(random_tree(1 + i % 50, 1 + i % 6, 0x5EED + i));
  for (auto family : {TightFamily::star_gh, TightFamily::path_lower, TightFamily::path_upper}) {
    for (int p = 2; p <= 6; ++p) trees.push_back(generate_tight_instance(family, p, 2).tree);
  }
  SplitMix64 rng(77);
  for (std::size_t t = 0; t < trees.size(); ++t) {
    const auto& tree = trees[t];
    if (tree.size() < 2) continue;
    const EulerCycle c(tree);
    ++cycles;
    if (c.size() != 2 * static_cast<std::size_t>(tree.size() - 1)) o.fail("Euler length, tree #" + str(t));
    std::vector<int> mult(tree.size(), 0);
    for (const auto& s : c.stops()) ++mult[s.vertex];
    for (int v = 0; v < tree.size(); ++v) {
      if (mult[v] != tree.degree(v)) o.fail("multiplicity, tree #" + str(t));
    }
    for (int rep = 0; rep < 4; ++rep) {
      const Weight k = tree.max_weight() + static_cast<Weight>(rng.below(tree.total_weight() - tree.max_weight() + 1));
      const Weight g = 1 + static_cast<Weight>(rng.below(4));
      const auto res = find_subtree(tree, c, k, g, {.start = rng.below(c.size()), .record_trace = true});
      ++traces;
      if (res.steps >= 3 * c.size()) o.fail("step budget, tree #" + str(t));
      for (const auto& snap : res.trace) {
        std::vector<char> on(tree.size(), 0);
        for (std::size_t i = 0, s = snap.start; i < snap.length; ++i, s = c.next(s)) on[c.vertex_at(s)] = 1;
        std::vector<int> vs;
        Weight w = 0;
        for (int v = 0; v < tree.size(); ++v) {
          if (on[v]) {
            vs.push_back(v);
            w += tree.weight(v);
          }
        }
        if (!is_connected_subset(tree, vs)) o.fail("disconnected window, tree #" + str(t));
        if (w != snap.weight) o.fail("incremental weight drift, tree #" + str(t));
      }
    }
  }

  auto graphs = degree4_fixtures();
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    graphs.push_back({"random-hamiltonian", random_hamiltonian(3 + static_cast<int>(seed % 40), seed,
                                                               static_cast<int>(seed % 101))});
  }
  for (const auto& [label, inst] : graphs) {
    const auto& g = inst.graph;
    const int n = g.vertex_count();
    const auto split = split_by_hamilton(g, HamiltonCycle(g, inst.hamilton));
    for (Side side : {Side::interior, Side::exterior}) {
      const auto dual = build_dual_tree(g, split, side);
      ++duals;
      if (dual.tree.total_weight() != n - 2) o.fail(label + ": dual weight");
      if (static_cast<std::size_t>(dual.tree.size()) != split.region(side).chords.size() + 1) {
        o.fail(label + ": dual size");
      }
      for (int rep = 0; rep < 6; ++rep) {
        std::vector<int> chosen{static_cast<int>(rng.below(dual.tree.size()))};
        std::vector<char> in(dual.tree.size(), 0);
        in[chosen[0]] = 1;
        const auto target = rng.below(dual.tree.size()) + 1;
        for (std::size_t i = 0; i < chosen.size() && chosen.size() < target; ++i) {
          for (int u : dual.tree.neighbors(chosen[i])) {
            if (!in[u] && chosen.size() < target) {
              in[u] = 1;
              chosen.push_back(u);
            }
          }
        }
        Weight w = 0;
        for (int v : chosen) w += dual.tree.weight(v);
        const auto cyc = subtree_to_cycle(g, dual, chosen);
        ++boundaries;
        if (cyc.length() != static_cast<std::size_t>(w + 2) || !validate_cycle(g, cyc)) {
          o.fail(label + ": cycle-length law");
        }
      }
    }
  }
  o.detail = str(cycles) + " Euler cycles, " + str(traces) + " replayed traces, " + str(duals) + " dual trees, " +
             str(boundaries) + " boundary cycles";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 random-tree oracle equivalence", random_tree_equivalence},
      {"2 tightness fixtures", tight_fixtures},
      {"3 linear step count and time", linearity},
      {"4 min-degree-4 cycle lengths", min_degree4_lengths},
      {"5 half-length cycles (3-connected)", half_cycles},
      {"6 medium cycles (m >= 2n)", medium_cycles},
      {"7 dense SubsetSum/Partition agreement", subset_sum_agreement},
      {"8 structural invariants", structural_invariants},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    for (const auto& p : o.problems) std::printf("       %s\n", p.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}

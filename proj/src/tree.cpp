#include "wsub/tree.hpp"

#include <algorithm>
#include <string>

#include "line_reader.hpp"
#include "wsub/error.hpp"
#include "wsub/rng.hpp"

namespace wsub {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::not_a_tree: return "not-a-tree";
    case ErrorKind::nonpositive_weight: return "nonpositive-weight";
    case ErrorKind::asymmetric_adjacency: return "asymmetric-adjacency";
    case ErrorKind::weight_overflow: return "weight-overflow";
    case ErrorKind::instance_too_large: return "instance-too-large";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::degenerate_tree: return "degenerate-tree";
    case ErrorKind::weight_exceeds_target: return "weight-exceeds-target";
    case ErrorKind::embedding_inconsistent: return "embedding-inconsistent";
    case ErrorKind::not_hamiltonian: return "not-hamiltonian";
    case ErrorKind::precondition_violated: return "precondition-violated";
    case ErrorKind::unexpected_structure: return "unexpected-structure";
    case ErrorKind::odd_total: return "odd-total";
    case ErrorKind::k_too_large: return "k-too-large";
    case ErrorKind::internal: return "internal";
  }
  return "unknown";
}

WeightedTree::WeightedTree(std::vector<std::vector<int>> adjacency, std::vector<Weight> weights)
    : adjacency_(std::move(adjacency)), weights_(std::move(weights)) {
  const auto n = adjacency_.size();
  if (n == 0) throw Error(ErrorKind::not_a_tree, "a tree needs at least one vertex");
  if (weights_.size() != n) {
    throw Error(ErrorKind::invalid_argument, "weight count " + std::to_string(weights_.size()) +
                                                 " does not match vertex count " + std::to_string(n));
  }
  for (std::size_t v = 0; v < n; ++v) {
    const Weight c = weights_[v];
    if (c < 1) {
      throw Error(ErrorKind::nonpositive_weight,
                  "vertex " + std::to_string(v) + " has weight " + std::to_string(c) + "; weights must be >= 1");
    }
    if (c >= kMaxTotalWeight - total_) throw Error(ErrorKind::weight_overflow, "total weight must stay below 2^62");
    total_ += c;
    max_weight_ = std::max(max_weight_, c);
  }

  // Symmetry in linear time: every list is duplicate-free and the multiset of
  // vertices listing u equals u's own list.
  std::vector<std::vector<int>> incoming(n);
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    for (int u : adjacency_[v]) {
      if (u < 0 || static_cast<std::size_t>(u) >= n) {
        throw Error(ErrorKind::asymmetric_adjacency,
                    "vertex " + std::to_string(v) + " lists out-of-range neighbour " + std::to_string(u));
      }
      if (static_cast<std::size_t>(u) == v) throw Error(ErrorKind::not_a_tree, "self-loop at vertex " + std::to_string(v));
      incoming[u].push_back(static_cast<int>(v));
    }
    degree_sum += adjacency_[v].size();
  }
  std::vector<std::size_t> stamp(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (int w : adjacency_[u]) {
      if (stamp[w] == u + 1) {
        throw Error(ErrorKind::not_a_tree,
                    "vertex " + std::to_string(u) + " lists neighbour " + std::to_string(w) + " twice");
      }
      stamp[w] = u + 1;
    }
    if (incoming[u].size() != adjacency_[u].size()) {
      throw Error(ErrorKind::asymmetric_adjacency, "adjacency of vertex " + std::to_string(u) + " is not symmetric");
    }
    for (int v : incoming[u]) {
      if (stamp[v] != u + 1) {
        throw Error(ErrorKind::asymmetric_adjacency, "vertex " + std::to_string(v) + " lists " + std::to_string(u) +
                                                         " but not vice versa");
      }
    }
  }

  if (degree_sum / 2 != n - 1) {
    throw Error(ErrorKind::not_a_tree,
                std::to_string(degree_sum / 2) + " edges on " + std::to_string(n) + " vertices (a tree has N1 - 1)");
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adjacency_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) throw Error(ErrorKind::not_a_tree, "graph is disconnected");
}

WeightedTree WeightedTree::path(std::span<const Weight> weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v + 1 < n; ++v) {
    adj[v].push_back(v + 1);
    adj[v + 1].push_back(v);
  }
  return WeightedTree(std::move(adj), std::vector<Weight>(weights.begin(), weights.end()));
}

WeightedTree WeightedTree::star(Weight center, std::span<const Weight> leaves) {
  const int n = static_cast<int>(leaves.size()) + 1;
  std::vector<std::vector<int>> adj(n);
  std::vector<Weight> w{center};
  for (int leaf = 1; leaf < n; ++leaf) {
    adj[0].push_back(leaf);
    adj[leaf].push_back(0);
    w.push_back(leaves[leaf - 1]);
  }
  return WeightedTree(std::move(adj), std::move(w));
}

SearchParams SearchParams::of(const WeightedTree& tree, Weight k, Weight g) {
  SearchParams p;
  p.k = k;
  p.g = g;
  p.n1 = tree.size();
  p.n2 = tree.total_weight();
  p.h = 2 * p.n1 - p.n2;
  return p;
}

ConditionReport check_conditions(Weight n1, Weight n2, Weight max_weight, Weight k, Weight g) {
  ConditionReport r;
  r.params = SearchParams{k, g, n1, n2, 2 * n1 - n2};
  const Weight h = r.params.h;
  r.range_ok = 1 <= k && k <= n2;
  r.slack_ok = g + h > 2;
  r.lower_ok = 2 * k - 4 * g - h + 3 <= n2;
  r.upper_ok = n2 <= 2 * k + g + h - 2;
  r.cap_ok = max_weight <= k;
  return r;
}

ConditionReport check_conditions(const WeightedTree& tree, Weight k, Weight g) {
  return check_conditions(tree.size(), tree.total_weight(), tree.max_weight(), k, g);
}

std::vector<std::string> ConditionReport::failed() const {
  std::vector<std::string> out;
  if (!range_ok) out.emplace_back("range");
  if (!slack_ok) out.emplace_back("slack");
  if (!lower_ok) out.emplace_back("lower");
  if (!upper_ok) out.emplace_back("upper");
  if (!cap_ok) out.emplace_back("cap");
  return out;
}

WeightedTree parse_tree(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty()) throw Error(ErrorKind::syntax, "empty input: expected header 'tree <N1>'");

  detail::LineCursor header(lines[0]);
  header.expect_word("tree");
  const std::int64_t n = header.integer();
  if (n < 1) header.fail("vertex count must be positive");
  if (!header.at_end()) header.fail("trailing text after header");
  if (static_cast<std::int64_t>(lines.size()) - 1 != n) {
    throw Error(ErrorKind::syntax, "header declares " + std::to_string(n) + " vertices but " +
                                       std::to_string(lines.size() - 1) + " vertex lines follow");
  }

  std::vector<std::vector<int>> adj(n);
  std::vector<Weight> weights(n, 0);
  std::vector<char> defined(n, 0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    const int v = cur.vertex(n);
    if (defined[v]) cur.fail("vertex " + std::to_string(v) + " defined twice");
    defined[v] = 1;
    cur.expect(':');
    weights[v] = cur.integer();
    cur.expect(':');
    while (!cur.at_end()) adj[v].push_back(cur.vertex(n));
  }
  return WeightedTree(std::move(adj), std::move(weights));
}

std::string serialize_tree(const WeightedTree& tree) {
  std::string out = "tree " + std::to_string(tree.size()) + "\n";
  for (int v = 0; v < tree.size(); ++v) {
    out += std::to_string(v) + ": " + std::to_string(tree.weight(v)) + ":";
    for (int u : tree.neighbors(v)) out += " " + std::to_string(u);
    out += "\n";
  }
  return out;
}

std::vector<Weight> oracle_subtree_weights(const WeightedTree& tree) {
  const Weight n = tree.size();
  const Weight total = tree.total_weight();
  if (n > kOracleCellLimit / total) {
    throw Error(ErrorKind::instance_too_large, "oracle table N1*N2 = " + std::to_string(n) + "*" +
                                                   std::to_string(total) + " exceeds 10^8 cells");
  }

  // BFS order from vertex 0; children are processed before their parent by
  // walking the order backwards.
  std::vector<int> order{0};
  std::vector<int> parent(n, -1);
  order.reserve(n);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int u : tree.neighbors(v)) {
      if (u != parent[v]) {
        parent[u] = v;
        order.push_back(u);
      }
    }
  }

  // top[v][w] != 0 iff some subtree with topmost vertex v weighs w.
  std::vector<std::vector<char>> top(n);
  std::vector<char> achievable(total + 1, 0);
  std::vector<Weight> child_members;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    auto& own = top[v];
    if (own.empty()) {
      own.assign(tree.weight(v) + 1, 0);
      own[tree.weight(v)] = 1;
    }
    for (std::size_t w = 0; w < own.size(); ++w) {
      if (own[w]) achievable[w] = 1;
    }
    const int p = parent[v];
    if (p < 0) break;
    auto& acc = top[p];
    if (acc.empty()) {
      acc.assign(tree.weight(p) + 1, 0);
      acc[tree.weight(p)] = 1;
    }
    child_members.clear();
    for (std::size_t w = 0; w < own.size(); ++w) {
      if (own[w]) child_members.push_back(static_cast<Weight>(w));
    }
    std::vector<char> merged(acc.size() + own.size() - 1, 0);
    for (std::size_t a = 0; a < acc.size(); ++a) {
      if (!acc[a]) continue;
      merged[a] = 1;
      for (Weight b : child_members) merged[a + b] = 1;
    }
    acc = std::move(merged);
    std::vector<char>().swap(own);
  }

  std::vector<Weight> out;
  for (Weight w = 1; w <= total; ++w) {
    if (achievable[w]) out.push_back(w);
  }
  return out;
}

bool window_achievable(std::span<const Weight> sorted_weights, Weight lo, Weight hi) {
  auto it = std::lower_bound(sorted_weights.begin(), sorted_weights.end(), lo);
  return it != sorted_weights.end() && *it <= hi;
}

std::string_view to_string(TightFamily family) {
  switch (family) {
    case TightFamily::star_gh: return "tight-star";
    case TightFamily::path_lower: return "tight-path-lower";
    case TightFamily::path_upper: return "tight-path-upper";
    case TightFamily::star_cap: return "tight-star-cap";
  }
  return "unknown";
}

std::optional<TightFamily> parse_tight_family(std::string_view name) {
  for (auto f : {TightFamily::star_gh, TightFamily::path_lower, TightFamily::path_upper, TightFamily::star_cap}) {
    if (to_string(f) == name) return f;
  }
  if (name == "star_gh") return TightFamily::star_gh;
  if (name == "path_lower") return TightFamily::path_lower;
  if (name == "path_upper") return TightFamily::path_upper;
  if (name == "star_cap") return TightFamily::star_cap;
  return std::nullopt;
}

TightInstance generate_tight_instance(TightFamily family, int p, int q) {
  if (p <= 1) throw Error(ErrorKind::invalid_argument, "tight families need p > 1");
  switch (family) {
    case TightFamily::star_gh: {
      // star of order 2p: centre 1, leaves 2; k = 2p, g = 1; fails only g + h > 2
      std::vector<Weight> leaves(2 * p - 1, 2);
      return {family, WeightedTree::star(1, leaves), 2 * Weight{p}, 1};
    }
    case TightFamily::path_lower: {
      // path v1..v_{p+2q}: the p middle vertices weigh 1, the rest 2
      if (q < 1) throw Error(ErrorKind::invalid_argument, "tight-path-lower needs q >= 1");
      std::vector<Weight> w(p + 2 * q, 2);
      for (int i = 1; i <= p; ++i) w[q + i - 1] = 1;
      return {family, WeightedTree::path(w), Weight{p} + 2 * q + 1, 1};
    }
    case TightFamily::path_upper: {
      // path v1..v_{2p+3}: c(v_{p+2}) = p+2, its two neighbours 2, the rest 1
      std::vector<Weight> w(2 * p + 3, 1);
      w[p] = 2;
      w[p + 1] = p + 2;
      w[p + 2] = 2;
      return {family, WeightedTree::path(w), Weight{p} + 3, 1};
    }
    case TightFamily::star_cap: {
      // star of order p+1: centre q+1 > k, leaves 1; k = q, g = 2.
      // q = p+1 would give h = 0 and break g + h > 2 as well.
      if (q <= 2 || q >= p + 1) {
        throw Error(ErrorKind::invalid_argument,
                    "tight-star-cap needs 2 < q < p + 1 (at q = p + 1 also g + h = 2)");
      }
      std::vector<Weight> leaves(p, 1);
      return {family, WeightedTree::star(Weight{q} + 1, leaves), Weight{q}, 2};
    }
  }
  throw Error(ErrorKind::invalid_argument, "unknown tight family");
}

WeightedTree random_tree(int n, Weight max_weight, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "random tree needs n >= 1");
  if (max_weight < 1) throw Error(ErrorKind::invalid_argument, "random tree needs max weight >= 1");
  SplitMix64 rng(seed);
  std::vector<std::vector<int>> adj(n);
  std::vector<Weight> w(n);
  for (int v = 0; v < n; ++v) {
    w[v] = rng.between(1, max_weight);
    if (v > 0) {
      const int parent = static_cast<int>(rng.below(static_cast<std::uint64_t>(v)));
      adj[parent].push_back(v);
      adj[v].push_back(parent);
    }
  }
  return WeightedTree(std::move(adj), std::move(w));
}

}  // namespace wsub

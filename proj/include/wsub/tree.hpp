#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wsub {

using Weight = std::int64_t;

/// Total tree weight must stay below this so every sum fits in a machine word.
inline constexpr Weight kMaxTotalWeight = Weight{1} << 62;

/// Tree with positive vertex weights and a fixed cyclic neighbour order
/// (rotation) at every vertex. Vertices are the dense indices 0..size()-1.
/// Construction validates the tree invariants and throws wsub::Error.
class WeightedTree {
 public:
  WeightedTree(std::vector<std::vector<int>> adjacency, std::vector<Weight> weights);

  static WeightedTree path(std::span<const Weight> weights);
  /// Vertex 0 is the centre, leaves are 1..leaves.size() in order.
  static WeightedTree star(Weight center, std::span<const Weight> leaves);

  int size() const { return static_cast<int>(adjacency_.size()); }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  Weight weight(int v) const { return weights_[v]; }
  std::span<const Weight> weights() const { return weights_; }
  Weight total_weight() const { return total_; }
  Weight max_weight() const { return max_weight_; }

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Weight> weights_;
  Weight total_ = 0;
  Weight max_weight_ = 0;
};

/// Target k, slack g and the derived N2 = c(T), h = 2 N1 - N2.
struct SearchParams {
  Weight k = 0;
  Weight g = 0;
  Weight n1 = 0;
  Weight n2 = 0;
  Weight h = 0;

  static SearchParams of(const WeightedTree& tree, Weight k, Weight g);
  Weight lower() const { return k - g + 1; }
};

/// One flag per sufficient condition for a subtree in the window, evaluated exactly.
struct ConditionReport {
  SearchParams params;
  bool range_ok = false;  // 1 <= k <= N2
  bool slack_ok = false;  // g + h > 2
  bool lower_ok = false;  // 2k - 4g - h + 3 <= N2
  bool upper_ok = false;  // N2 <= 2k + g + h - 2
  bool cap_ok = false;    // c(v) <= k for every v

  bool overall() const { return range_ok && slack_ok && lower_ok && upper_ok && cap_ok; }
  std::vector<std::string> failed() const;
};

ConditionReport check_conditions(const WeightedTree& tree, Weight k, Weight g);
ConditionReport check_conditions(Weight n1, Weight n2, Weight max_weight, Weight k, Weight g);

WeightedTree parse_tree(std::string_view text);
std::string serialize_tree(const WeightedTree& tree);

/// Cell budget (N1 * N2) for the dynamic-programming oracles.
inline constexpr Weight kOracleCellLimit = 100'000'000;

/// Every weight c(S) over all subtrees S, ascending. Rooted tree-knapsack:
/// the weights of subtrees topped at v are c(v) plus a sumset over children
/// of ({0} ∪ child sets). Throws instance_too_large above kOracleCellLimit.
std::vector<Weight> oracle_subtree_weights(const WeightedTree& tree);

/// True when some subtree weight lies in [lo, hi].
bool window_achievable(std::span<const Weight> sorted_weights, Weight lo, Weight hi);

enum class TightFamily { star_gh, path_lower, path_upper, star_cap };

std::string_view to_string(TightFamily family);
std::optional<TightFamily> parse_tight_family(std::string_view name);

/// A tightness example: every existence hypothesis but one holds, and no
/// subtree weight falls into [k - g + 1, k].
struct TightInstance {
  TightFamily family;
  WeightedTree tree;
  Weight k;
  Weight g;
};

/// `q` is ignored by star_gh and path_upper.
TightInstance generate_tight_instance(TightFamily family, int p, int q = 1);

/// Uniform random recursive tree (vertex i attaches to a random earlier
/// vertex) with weights in [1, max_weight]. Deterministic per seed.
WeightedTree random_tree(int n, Weight max_weight, std::uint64_t seed);

}  // namespace wsub

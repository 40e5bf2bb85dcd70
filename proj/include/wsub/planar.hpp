#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wsub/euler_subtree.hpp"
#include "wsub/tree.hpp"

namespace wsub {

/// A directed edge u -> adjacency(u)[index].
struct Dart {
  int tail;
  int index;
};

/// Closed boundary walk of one face, in tracing order.
struct Face {
  std::vector<Dart> darts;
  std::size_t length() const { return darts.size(); }
};

/// Connected simple plane graph given by a rotation system. Faces are traced
/// with the rule "after arriving at v along u->v, leave along the neighbour
/// following u in v's rotation". Construction checks symmetry, simplicity,
/// connectivity and Euler's formula n - m + f = 2.
class PlaneGraph {
 public:
  explicit PlaneGraph(std::vector<std::vector<int>> rotation);

  int vertex_count() const { return static_cast<int>(rotation_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }
  int min_degree() const;
  const std::vector<int>& neighbors(int v) const { return rotation_[v]; }
  bool has_edge(int u, int v) const;

  int head(Dart d) const { return rotation_[d.tail][d.index]; }
  /// The dart v -> u for d = u -> v.
  Dart reverse(Dart d) const { return {head(d), back_[d.tail][d.index]}; }
  /// Index of `v` in the rotation of `u`, or -1.
  int rotation_index(int u, int v) const;

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_of(Dart d) const { return dart_face_[dart_offset_[d.tail] + d.index]; }

 private:
  std::vector<std::vector<int>> rotation_;
  std::vector<std::vector<int>> back_;
  std::vector<std::vector<int>> sorted_;
  std::vector<std::size_t> dart_offset_;
  std::vector<std::size_t> dart_face_;
  std::vector<Face> faces_;
  std::size_t edge_count_ = 0;
};

/// Returns all faces (same as graph.faces()); kept as a free function for
/// callers that only need the tracing step.
std::vector<Face> trace_faces(const PlaneGraph& graph);

/// A Hamilton cycle as a vertex sequence; validated against its graph.
class HamiltonCycle {
 public:
  /// Throws not_hamiltonian unless `order` visits every vertex once and
  /// consecutive (cyclically) vertices are adjacent.
  HamiltonCycle(const PlaneGraph& graph, std::vector<int> order);

  const std::vector<int>& order() const { return order_; }
  int position(int v) const { return position_[v]; }
  int size() const { return static_cast<int>(order_.size()); }
  int next(int v) const { return order_[(position_[v] + 1) % size()]; }
  int prev(int v) const { return order_[(position_[v] + size() - 1) % size()]; }
  bool is_cycle_edge(int u, int v) const { return next(u) == v || prev(u) == v; }

 private:
  std::vector<int> order_;
  std::vector<int> position_;
};

enum class Side { interior, exterior };

/// Faces and chords of each open region bounded by the Hamilton cycle.
/// `interior` is the side with more chords (ties: the side of the first
/// chord in input order).
struct HamiltonSplit {
  struct Region {
    std::vector<std::pair<int, int>> chords;
    std::vector<std::size_t> faces;  // face ids in PlaneGraph::faces()
    std::size_t edge_count(int n) const { return static_cast<std::size_t>(n) + chords.size(); }
  };
  Region interior;
  Region exterior;

  const Region& region(Side side) const { return side == Side::interior ? interior : exterior; }
};

HamiltonSplit split_by_hamilton(const PlaneGraph& graph, const HamiltonCycle& ham);

/// Tree of the faces on one side of the Hamilton cycle; adjacent faces share
/// a chord; weight = face length - 2. Total weight is always n - 2.
struct DualTree {
  WeightedTree tree;
  std::vector<std::size_t> face;                        // dual vertex -> face id
  std::vector<std::vector<std::pair<int, int>>> chord;  // [v][i]: primal chord under dual edge v - tree.neighbors(v)[i]
};

DualTree build_dual_tree(const PlaneGraph& graph, const HamiltonSplit& split, Side side);
DualTree build_dual_tree(const PlaneGraph& graph, const HamiltonCycle& ham, Side side);

struct CycleResult {
  std::vector<int> vertices;  // cyclic order
  std::size_t length() const { return vertices.size(); }
};

/// Distinct vertices, length >= 3, consecutive (and last-first) adjacent.
bool validate_cycle(const PlaneGraph& graph, const CycleResult& cycle);

/// Boundary of the union of the faces in `dual_vertices` (a connected set of
/// dual vertices). Its length is c(S) + 2.
CycleResult subtree_to_cycle(const PlaneGraph& graph, const DualTree& dual, std::span<const int> dual_vertices);

/// Density hypothesis for a cycle of length in [k - g + 1, k], with the
/// instance's own density gamma = m/n - 2 (so gamma * n = m - 2n exactly).
struct DensityReport {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  std::int64_t g = 0;
  bool gamma_ok = false;   // -1 <= gamma < 1
  bool slack_ok = false;   // g + ceil(gamma n) + 2 > 0
  bool range_ok = false;   // 3 <= k <= n
  bool lower_ok = false;   // floor((1 - gamma) n / 2) <= k
  bool upper_ok = false;   // k <= ceil((1 + gamma) n) / 2 + 2g + 3/2

  bool overall() const { return gamma_ok && slack_ok && range_ok && lower_ok && upper_ok; }
  std::vector<std::string> failed() const;
};

DensityReport check_density_hypothesis(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t g);

struct CycleSearch {
  std::optional<CycleResult> cycle;
  DensityReport hypothesis;
  std::optional<ConditionReport> tree_conditions;  // on the interior dual tree with target k - 2
  std::size_t steps = 0;

  bool found() const { return cycle.has_value(); }
};

/// Cycle of length in [k - g + 1, k] via the interior dual tree and the window
/// search with target k - 2. Guaranteed when `hypothesis.overall()`; an empty
/// result otherwise means the search did not find one.
CycleSearch find_cycle_near(const PlaneGraph& graph, const HamiltonCycle& ham, std::int64_t k, std::int64_t g);

/// Slack used for the medium-length cycle query: the length band
/// [floor(2n/3) - g + 1, floor(2n/3)] must stay inside [n/3, 2n/3].
std::int64_t medium_cycle_slack(std::int64_t n);

/// Cycle of length between n/3 and 2n/3 (guaranteed for m >= 2n).
CycleSearch find_cycle_medium(const PlaneGraph& graph, const HamiltonCycle& ham);

enum class HalfCycleBranch { many_chords, small_faces, square_of_cycle };

std::string_view to_string(HalfCycleBranch branch);

struct HalfCycleResult {
  CycleResult cycle;
  HalfCycleBranch branch;
  std::size_t steps = 0;
};

/// For 3-connected graphs with min degree >= 4 and even n >= 8: a cycle of
/// length n/2 - 2 or n/2 - 1. Throws precondition_violated if the graph
/// does not qualify and unexpected_structure if the structural case analysis
/// breaks down (which would mean the guarantee itself is wrong).
HalfCycleResult find_half_cycle_3conn(const PlaneGraph& graph, const HamiltonCycle& ham);

/// O(n * m): no single vertex removal leaves an articulation point.
bool is_three_connected(const PlaneGraph& graph);

/// If `graph` is C_n^2 (n >= 8), the Hamilton order along which every vertex
/// is adjacent to its +-1 and +-2 neighbours; otherwise nullopt.
std::optional<std::vector<int>> square_cycle_order(const PlaneGraph& graph, const HamiltonCycle& ham);

/// Plane graph file: `graph <n>`, n lines `v: n1 n2 ...` (rotation order),
/// optionally `hamilton: v0 v1 ... v_{n-1}`.
struct GraphFile {
  PlaneGraph graph;
  std::optional<std::vector<int>> hamilton;
};

GraphFile parse_graph(std::string_view text);
std::string serialize_graph(const PlaneGraph& graph, std::span<const int> hamilton = {});

}  // namespace wsub

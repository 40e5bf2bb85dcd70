#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wsub/tree.hpp"

namespace wsub {

/// One stop of the Euler-tour cycle: standing at `vertex`, about to leave
/// along its `rotation_index`-th edge.
struct EulerStop {
  int vertex;
  int rotation_index;
};

/// The directed cycle obtained by walking around the embedded tree: each
/// edge is traversed once in each direction, so it has 2(N1 - 1) stops and
/// vertex v appears deg(v) times. The successor of stop (u, i), where the
/// i-th edge of u is the j-th edge of v, is (v, j + 1 mod deg v).
class EulerCycle {
 public:
  /// Throws degenerate_tree for a single-vertex tree.
  explicit EulerCycle(const WeightedTree& tree);

  std::size_t size() const { return stops_.size(); }
  const EulerStop& operator[](std::size_t i) const { return stops_[i]; }
  int vertex_at(std::size_t i) const { return stops_[i].vertex; }
  std::size_t next(std::size_t i) const { return i + 1 == stops_.size() ? 0 : i + 1; }
  std::span<const EulerStop> stops() const { return stops_; }

 private:
  std::vector<EulerStop> stops_;
};

/// A subtree found by the window search, with the cycle window [start_stop,
/// end_stop] (inclusive, wrapping) that produced it.
struct SubtreeResult {
  std::vector<int> vertices;  // ascending
  Weight weight = 0;
  std::size_t start_stop = 0;
  std::size_t end_stop = 0;
};

/// Window state after one pointer move, recorded when tracing is enabled.
struct WindowSnapshot {
  std::size_t start;
  std::size_t length;  // stops covered, >= 1
  Weight weight;
};

struct SearchOptions {
  std::size_t start = 0;
  bool record_trace = false;
};

struct SearchOutcome {
  std::optional<SubtreeResult> subtree;
  std::size_t steps = 0;  // pointer advances (grow + shrink)
  std::vector<WindowSnapshot> trace;

  bool found() const { return subtree.has_value(); }
};

/// Overload-discharge window search on the Euler-tour cycle for a subtree of
/// weight in [k - g + 1, k]: grow the head while the window is light, shrink
/// the tail while it is heavy, repeat. When check_conditions(tree, k, g)
/// holds the result is guaranteed; otherwise an empty outcome means the
/// search exhausted every tail position. At most 3 * |stops| pointer moves.
///
/// Throws weight_exceeds_target if some c(v) > k, invalid_argument for
/// k < 1, g < 1 or an out-of-range start stop.
SearchOutcome find_subtree(const WeightedTree& tree, Weight k, Weight g, const SearchOptions& options = {});
SearchOutcome find_subtree(const WeightedTree& tree, const EulerCycle& cycle, Weight k, Weight g,
                           const SearchOptions& options = {});

bool is_connected_subset(const WeightedTree& tree, std::span<const int> vertices);

bool verify_subtree(const WeightedTree& tree, const SubtreeResult& result, Weight k, Weight g);

}  // namespace wsub

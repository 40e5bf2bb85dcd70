#include "wsub/euler_subtree.hpp"

#include <algorithm>
#include <string>

#include "wsub/error.hpp"

namespace wsub {

EulerCycle::EulerCycle(const WeightedTree& tree) {
  const int n = tree.size();
  if (n < 2) throw Error(ErrorKind::degenerate_tree, "the Euler-tour cycle needs at least two vertices");

  // back[u][i] = j  where the i-th edge at u is the j-th edge at its other end.
  std::vector<std::vector<int>> back(n);
  std::vector<std::vector<std::pair<int, int>>> incoming(n);
  for (int u = 0; u < n; ++u) {
    back[u].resize(tree.degree(u));
    for (int i = 0; i < tree.degree(u); ++i) incoming[tree.neighbors(u)[i]].push_back({u, i});
  }
  std::vector<int> slot(n, -1);
  for (int v = 0; v < n; ++v) {
    const auto& nb = tree.neighbors(v);
    for (int j = 0; j < static_cast<int>(nb.size()); ++j) slot[nb[j]] = j;
    for (auto [u, i] : incoming[v]) back[u][i] = slot[u];
  }

  const std::size_t length = 2 * static_cast<std::size_t>(n - 1);
  stops_.reserve(length);
  EulerStop cur{0, 0};
  for (std::size_t step = 0; step < length; ++step) {
    stops_.push_back(cur);
    const int v = tree.neighbors(cur.vertex)[cur.rotation_index];
    const int j = back[cur.vertex][cur.rotation_index];
    cur = {v, (j + 1) % tree.degree(v)};
  }
  WSUB_CHECK(cur.vertex == 0 && cur.rotation_index == 0, "Euler walk did not close after 2(N1-1) stops");
}

namespace {

// Window [s, s + length) on the cycle with per-vertex occurrence counters so
// the distinct-vertex weight moves in O(1) per pointer advance.
class Window {
 public:
  Window(const WeightedTree& tree, const EulerCycle& cycle, std::size_t start)
      : tree_(tree), cycle_(cycle), occ_(tree.size(), 0), start_(start), end_(start) {
    enter(start);
    length_ = 1;
  }

  void grow() {
    end_ = cycle_.next(end_);
    enter(end_);
    ++length_;
  }

  void shrink() {
    leave(start_);
    start_ = cycle_.next(start_);
    --length_;
  }

  Weight weight() const { return weight_; }
  std::size_t start() const { return start_; }
  std::size_t end() const { return end_; }
  std::size_t length() const { return length_; }

  SubtreeResult result() const {
    SubtreeResult r;
    r.weight = weight_;
    r.start_stop = start_;
    r.end_stop = end_;
    for (int v = 0; v < tree_.size(); ++v) {
      if (occ_[v] > 0) r.vertices.push_back(v);
    }
    return r;
  }

 private:
  void enter(std::size_t stop) {
    const int v = cycle_.vertex_at(stop);
    if (occ_[v]++ == 0) weight_ += tree_.weight(v);
  }

  void leave(std::size_t stop) {
    const int v = cycle_.vertex_at(stop);
    if (--occ_[v] == 0) weight_ -= tree_.weight(v);
  }

  const WeightedTree& tree_;
  const EulerCycle& cycle_;
  std::vector<int> occ_;
  std::size_t start_;
  std::size_t end_;
  std::size_t length_ = 0;
  Weight weight_ = 0;
};

void validate_inputs(const WeightedTree& tree, Weight k, Weight g) {
  if (k < 1) throw Error(ErrorKind::invalid_argument, "target k must be >= 1");
  if (g < 1) throw Error(ErrorKind::invalid_argument, "slack g must be >= 1");
  if (tree.max_weight() > k) {
    throw Error(ErrorKind::weight_exceeds_target, "a vertex weighs " + std::to_string(tree.max_weight()) +
                                                      " > k = " + std::to_string(k));
  }
}

// No cycle exists; the only subtree is the vertex itself.
SearchOutcome single_vertex_search(const WeightedTree& tree, Weight k, Weight g, const SearchOptions& options) {
  if (options.start != 0) throw Error(ErrorKind::invalid_argument, "a single-vertex tree only has start 0");
  SearchOutcome out;
  const Weight c = tree.weight(0);
  if (options.record_trace) out.trace.push_back({0, 1, c});
  if (k - g + 1 <= c && c <= k) out.subtree = SubtreeResult{{0}, c, 0, 0};
  return out;
}

}  // namespace

SearchOutcome find_subtree(const WeightedTree& tree, Weight k, Weight g, const SearchOptions& options) {
  validate_inputs(tree, k, g);
  if (tree.size() == 1) return single_vertex_search(tree, k, g, options);
  return find_subtree(tree, EulerCycle(tree), k, g, options);
}

SearchOutcome find_subtree(const WeightedTree& tree, const EulerCycle& cycle, Weight k, Weight g,
                           const SearchOptions& options) {
  validate_inputs(tree, k, g);
  if (tree.size() == 1) return single_vertex_search(tree, k, g, options);
  const Weight lo = k - g + 1;
  SearchOutcome out;

  const std::size_t stops = cycle.size();
  WSUB_CHECK(stops == 2 * static_cast<std::size_t>(tree.size() - 1), "Euler cycle does not belong to this tree");
  if (options.start >= stops) {
    throw Error(ErrorKind::invalid_argument, "start stop " + std::to_string(options.start) + " out of range [0, " +
                                                 std::to_string(stops) + ")");
  }

  Window w(tree, cycle, options.start);
  std::size_t tail_moves = 0;
  auto record = [&] {
    if (options.record_trace) out.trace.push_back({w.start(), w.length(), w.weight()});
  };
  record();

  for (;;) {
    while (w.weight() < lo) {
      if (w.length() == stops) return out;  // whole tree is lighter than k - g + 1
      w.grow();
      ++out.steps;
      record();
    }
    if (w.weight() <= k) break;
    // A single stop never exceeds k, so shrinking stops before the window empties.
    while (w.weight() > k && tail_moves < stops) {
      w.shrink();
      ++tail_moves;
      ++out.steps;
      record();
    }
    if (lo <= w.weight() && w.weight() <= k) break;
    if (tail_moves >= stops) return out;  // the tail went all the way around
    WSUB_CHECK(out.steps < 3 * stops, "window search exceeded its 3|stops| step budget");
  }
  WSUB_CHECK(out.steps < 3 * stops, "window search exceeded its 3|stops| step budget");
  out.subtree = w.result();
  return out;
}

bool is_connected_subset(const WeightedTree& tree, std::span<const int> vertices) {
  if (vertices.empty()) return false;
  std::vector<char> member(tree.size(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= tree.size() || member[v]) return false;
    member[v] = 1;
  }
  std::vector<int> stack{vertices.front()};
  member[vertices.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : tree.neighbors(v)) {
      if (member[u] == 1) {
        member[u] = 2;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == vertices.size();
}

bool verify_subtree(const WeightedTree& tree, const SubtreeResult& result, Weight k, Weight g) {
  if (!is_connected_subset(tree, result.vertices)) return false;
  Weight sum = 0;
  for (int v : result.vertices) sum += tree.weight(v);
  return sum == result.weight && k - g + 1 <= sum && sum <= k;
}

}  // namespace wsub

#include "wsub/planar.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "line_reader.hpp"
#include "wsub/error.hpp"

namespace wsub {

namespace {

constexpr std::size_t kNoFace = std::numeric_limits<std::size_t>::max();

std::string edge_name(int u, int v) { return std::to_string(u) + "-" + std::to_string(v); }

}  // namespace

PlaneGraph::PlaneGraph(std::vector<std::vector<int>> rotation) : rotation_(std::move(rotation)) {
  const int n = vertex_count();
  if (n < 3) throw Error(ErrorKind::invalid_argument, "a plane graph here needs at least 3 vertices");

  std::vector<std::vector<std::pair<int, int>>> incoming(n);
  std::size_t degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < degree(v); ++i) {
      const int u = rotation_[v][i];
      if (u < 0 || u >= n) {
        throw Error(ErrorKind::asymmetric_adjacency,
                    "vertex " + std::to_string(v) + " lists out-of-range neighbour " + std::to_string(u));
      }
      if (u == v) throw Error(ErrorKind::invalid_argument, "self-loop at vertex " + std::to_string(v));
      incoming[u].push_back({v, i});
    }
    degree_sum += rotation_[v].size();
  }
  // back_[u][i] = j with rotation_[v][j] == u for v = rotation_[u][i]
  back_.resize(n);
  for (int v = 0; v < n; ++v) back_[v].assign(degree(v), -1);
  std::vector<int> slot(n, -1);
  std::vector<int> stamp(n, -1);
  for (int v = 0; v < n; ++v) {
    for (int j = 0; j < degree(v); ++j) {
      const int u = rotation_[v][j];
      if (stamp[u] == v) throw Error(ErrorKind::invalid_argument, "multi-edge " + edge_name(v, u));
      stamp[u] = v;
      slot[u] = j;
    }
    if (incoming[v].size() != rotation_[v].size()) {
      throw Error(ErrorKind::asymmetric_adjacency, "rotation of vertex " + std::to_string(v) + " is not symmetric");
    }
    for (auto [u, i] : incoming[v]) {
      if (stamp[u] != v) {
        throw Error(ErrorKind::asymmetric_adjacency,
                    "vertex " + std::to_string(u) + " lists " + std::to_string(v) + " but not vice versa");
      }
      back_[u][i] = slot[u];
    }
  }
  edge_count_ = degree_sum / 2;

  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : rotation_[v]) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  if (reached != n) throw Error(ErrorKind::invalid_argument, "plane graph is disconnected");

  sorted_ = rotation_;
  for (auto& nb : sorted_) std::sort(nb.begin(), nb.end());

  dart_offset_.resize(n + 1, 0);
  for (int v = 0; v < n; ++v) dart_offset_[v + 1] = dart_offset_[v] + rotation_[v].size();
  dart_face_.assign(degree_sum, kNoFace);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < degree(v); ++i) {
      if (dart_face_[dart_offset_[v] + i] != kNoFace) continue;
      Face face;
      Dart d{v, i};
      while (dart_face_[dart_offset_[d.tail] + d.index] == kNoFace) {
        dart_face_[dart_offset_[d.tail] + d.index] = faces_.size();
        face.darts.push_back(d);
        const int w = head(d);
        d = {w, (back_[d.tail][d.index] + 1) % degree(w)};
      }
      if (d.tail != v || d.index != i) {
        throw Error(ErrorKind::embedding_inconsistent, "face walk from dart " + edge_name(v, rotation_[v][i]) +
                                                           " does not close");
      }
      faces_.push_back(std::move(face));
    }
  }

  const auto euler = static_cast<long long>(n) - static_cast<long long>(edge_count_) +
                     static_cast<long long>(faces_.size());
  if (euler != 2) {
    throw Error(ErrorKind::embedding_inconsistent,
                "rotation system is not planar: n - m + f = " + std::to_string(n) + " - " +
                    std::to_string(edge_count_) + " + " + std::to_string(faces_.size()) + " = " +
                    std::to_string(euler) + ", expected 2");
  }
}

int PlaneGraph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (const auto& nb : rotation_) best = std::min(best, static_cast<int>(nb.size()));
  return best;
}

bool PlaneGraph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
  return std::binary_search(sorted_[u].begin(), sorted_[u].end(), v);
}

int PlaneGraph::rotation_index(int u, int v) const {
  const auto& nb = rotation_[u];
  auto it = std::find(nb.begin(), nb.end(), v);
  return it == nb.end() ? -1 : static_cast<int>(it - nb.begin());
}

std::vector<Face> trace_faces(const PlaneGraph& graph) { return graph.faces(); }

HamiltonCycle::HamiltonCycle(const PlaneGraph& graph, std::vector<int> order) : order_(std::move(order)) {
  const int n = graph.vertex_count();
  if (static_cast<int>(order_.size()) != n) {
    throw Error(ErrorKind::not_hamiltonian, "Hamilton sequence has " + std::to_string(order_.size()) +
                                                " vertices, graph has " + std::to_string(n));
  }
  position_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    const int v = order_[p];
    if (v < 0 || v >= n) throw Error(ErrorKind::not_hamiltonian, "vertex " + std::to_string(v) + " out of range");
    if (position_[v] >= 0) throw Error(ErrorKind::not_hamiltonian, "vertex " + std::to_string(v) + " repeated");
    position_[v] = p;
  }
  for (int p = 0; p < n; ++p) {
    const int u = order_[p];
    const int v = order_[(p + 1) % n];
    if (!graph.has_edge(u, v)) throw Error(ErrorKind::not_hamiltonian, edge_name(u, v) + " is not an edge");
  }
}

namespace {

// The Hamilton cycle splits the darts into two classes: those whose face lies
// on the left of the cycle's direction (the sector from prev to next in the
// rotation, going forward) and the rest.
class SideClassifier {
 public:
  SideClassifier(const PlaneGraph& graph, const HamiltonCycle& ham) : graph_(graph) {
    const int n = graph.vertex_count();
    prev_index_.resize(n);
    next_offset_.resize(n);
    for (int v = 0; v < n; ++v) {
      const int ip = graph.rotation_index(v, ham.prev(v));
      const int in = graph.rotation_index(v, ham.next(v));
      prev_index_[v] = ip;
      next_offset_[v] = (in - ip + graph.degree(v)) % graph.degree(v);
    }
  }

  // 0 = forward side, 1 = backward side
  int side(Dart d) const {
    const int deg = graph_.degree(d.tail);
    const int off = (d.index - prev_index_[d.tail] + deg) % deg;
    return (off >= 1 && off <= next_offset_[d.tail]) ? 0 : 1;
  }

 private:
  const PlaneGraph& graph_;
  std::vector<int> prev_index_;
  std::vector<int> next_offset_;
};

}  // namespace

HamiltonSplit split_by_hamilton(const PlaneGraph& graph, const HamiltonCycle& ham) {
  const SideClassifier sides(graph, ham);
  const auto& faces = graph.faces();

  std::array<HamiltonSplit::Region, 2> regions;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const int s = sides.side(faces[f].darts.front());
    for (const Dart& d : faces[f].darts) {
      if (sides.side(d) != s) {
        throw Error(ErrorKind::embedding_inconsistent,
                    "face through " + edge_name(d.tail, graph.head(d)) + " crosses the Hamilton cycle");
      }
    }
    regions[s].faces.push_back(f);
  }

  int first_chord_side = -1;
  for (int u = 0; u < graph.vertex_count(); ++u) {
    for (int i = 0; i < graph.degree(u); ++i) {
      const Dart d{u, i};
      const int v = graph.head(d);
      if (ham.is_cycle_edge(u, v)) continue;
      const int s = sides.side(d);
      if (sides.side(graph.reverse(d)) != s) {
        throw Error(ErrorKind::embedding_inconsistent, "chord " + edge_name(u, v) + " lies on both sides of the cycle");
      }
      if (first_chord_side < 0) first_chord_side = s;
      if (u < v) regions[s].chords.push_back({u, v});
    }
  }

  int interior = 0;
  if (regions[1].chords.size() > regions[0].chords.size()) {
    interior = 1;
  } else if (regions[1].chords.size() == regions[0].chords.size() && first_chord_side >= 0) {
    interior = first_chord_side;
  }
  HamiltonSplit split;
  split.interior = std::move(regions[interior]);
  split.exterior = std::move(regions[1 - interior]);
  WSUB_CHECK(split.interior.faces.size() == split.interior.chords.size() + 1 &&
                 split.exterior.faces.size() == split.exterior.chords.size() + 1,
             "each side must have one more face than chords");
  return split;
}

DualTree build_dual_tree(const PlaneGraph& graph, const HamiltonSplit& split, Side side) {
  const auto& region = split.region(side);
  const auto& faces = graph.faces();
  std::vector<int> dual_of(faces.size(), -1);
  for (std::size_t i = 0; i < region.faces.size(); ++i) dual_of[region.faces[i]] = static_cast<int>(i);

  const std::size_t count = region.faces.size();
  std::vector<std::vector<int>> adjacency(count);
  std::vector<Weight> weights(count);
  std::vector<std::vector<std::pair<int, int>>> chords(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Face& face = faces[region.faces[i]];
    weights[i] = static_cast<Weight>(face.length()) - 2;
    for (const Dart& d : face.darts) {
      const int other = dual_of[graph.face_of(graph.reverse(d))];
      if (other < 0) continue;  // Hamilton-cycle edge: the other face is across the cycle
      adjacency[i].push_back(other);
      chords[i].push_back({d.tail, graph.head(d)});
    }
  }

  DualTree dual{[&] {
                  try {
                    return WeightedTree(std::move(adjacency), std::move(weights));
                  } catch (const Error& e) {
                    throw Error(ErrorKind::internal, std::string("dual of one side is not a tree: ") + e.what());
                  }
                }(),
                region.faces, std::move(chords)};
  WSUB_CHECK(dual.tree.total_weight() == graph.vertex_count() - 2, "dual tree weight must equal n - 2");
  return dual;
}

DualTree build_dual_tree(const PlaneGraph& graph, const HamiltonCycle& ham, Side side) {
  return build_dual_tree(graph, split_by_hamilton(graph, ham), side);
}

bool validate_cycle(const PlaneGraph& graph, const CycleResult& cycle) {
  const auto& vs = cycle.vertices;
  if (vs.size() < 3) return false;
  std::vector<char> seen(graph.vertex_count(), 0);
  for (int v : vs) {
    if (v < 0 || v >= graph.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!graph.has_edge(vs[i], vs[(i + 1) % vs.size()])) return false;
  }
  return true;
}

CycleResult subtree_to_cycle(const PlaneGraph& graph, const DualTree& dual, std::span<const int> dual_vertices) {
  if (!is_connected_subset(dual.tree, dual_vertices)) {
    throw Error(ErrorKind::invalid_argument, "dual vertex set is not a connected subtree");
  }
  std::vector<char> in_set(graph.faces().size(), 0);
  Weight weight = 0;
  for (int d : dual_vertices) {
    in_set[dual.face[d]] = 1;
    weight += dual.tree.weight(d);
  }

  // Boundary darts, oriented along their faces, chain into one directed cycle.
  std::vector<int> succ(graph.vertex_count(), -1);
  std::size_t boundary = 0;
  int first = -1;
  for (int d : dual_vertices) {
    for (const Dart& dart : graph.faces()[dual.face[d]].darts) {
      if (in_set[graph.face_of(graph.reverse(dart))]) continue;
      WSUB_CHECK(succ[dart.tail] < 0, "boundary of a dual subtree visits a vertex twice");
      succ[dart.tail] = graph.head(dart);
      if (first < 0) first = dart.tail;
      ++boundary;
    }
  }

  CycleResult cycle;
  int v = first;
  do {
    cycle.vertices.push_back(v);
    v = succ[v];
    WSUB_CHECK(v >= 0, "boundary of a dual subtree is not closed");
  } while (v != first && cycle.vertices.size() <= boundary);
  WSUB_CHECK(cycle.vertices.size() == boundary, "boundary of a dual subtree is not a single cycle");
  WSUB_CHECK(static_cast<Weight>(boundary) == weight + 2, "boundary length must be c(S) + 2");
  return cycle;
}

std::vector<std::string> DensityReport::failed() const {
  std::vector<std::string> out;
  if (!gamma_ok) out.emplace_back("gamma");
  if (!slack_ok) out.emplace_back("slack");
  if (!range_ok) out.emplace_back("range");
  if (!lower_ok) out.emplace_back("lower");
  if (!upper_ok) out.emplace_back("upper");
  return out;
}

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

DensityReport check_density_hypothesis(std::int64_t n, std::int64_t m, std::int64_t k, std::int64_t g) {
  // gamma n = m - 2n, (1 - gamma) n = 3n - m, (1 + gamma) n = m - n, all integers.
  DensityReport r{n, m, k, g};
  r.gamma_ok = n <= m && m < 3 * n;
  r.slack_ok = g + (m - 2 * n) + 2 > 0;
  r.range_ok = 3 <= k && k <= n;
  r.lower_ok = floor_div(3 * n - m, 2) <= k;
  r.upper_ok = 2 * k <= (m - n) + 4 * g + 3;
  return r;
}

CycleSearch find_cycle_near(const PlaneGraph& graph, const HamiltonCycle& ham, std::int64_t k, std::int64_t g) {
  if (k < 3) throw Error(ErrorKind::invalid_argument, "cycle length target k must be >= 3");
  if (g < 1) throw Error(ErrorKind::invalid_argument, "slack g must be >= 1");
  const std::int64_t n = graph.vertex_count();
  CycleSearch out;
  out.hypothesis = check_density_hypothesis(n, static_cast<std::int64_t>(graph.edge_count()), k, g);
  if (k > n) return out;

  const auto split = split_by_hamilton(graph, ham);
  const DualTree dual = build_dual_tree(graph, split, Side::interior);
  const Weight target = k - 2;
  out.tree_conditions = check_conditions(dual.tree, target, g);
  if (dual.tree.max_weight() > target) {
    WSUB_CHECK(!out.hypothesis.overall(), "density hypothesis holds but a face is longer than k");
    return out;
  }
  const auto search = find_subtree(dual.tree, target, g);
  out.steps = search.steps;
  if (!search.found()) {
    WSUB_CHECK(!out.hypothesis.overall(), "density hypothesis holds but the window search failed");
    return out;
  }
  out.cycle = subtree_to_cycle(graph, dual, search.subtree->vertices);
  WSUB_CHECK(validate_cycle(graph, *out.cycle), "produced cycle failed validation");
  return out;
}

std::int64_t medium_cycle_slack(std::int64_t n) {
  const std::int64_t third_up = (n + 2) / 3;
  const std::int64_t k = 2 * n / 3;
  return std::min(third_up, k - third_up + 1);
}

CycleSearch find_cycle_medium(const PlaneGraph& graph, const HamiltonCycle& ham) {
  const std::int64_t n = graph.vertex_count();
  return find_cycle_near(graph, ham, 2 * n / 3, medium_cycle_slack(n));
}

std::string_view to_string(HalfCycleBranch branch) {
  switch (branch) {
    case HalfCycleBranch::many_chords: return "many-chords";
    case HalfCycleBranch::small_faces: return "small-faces";
    case HalfCycleBranch::square_of_cycle: return "square-of-cycle";
  }
  return "unknown";
}

namespace {

// Articulation points of G - removed via iterative lowpoint DFS. Returns
// false if G - removed is disconnected or has a cut vertex.
bool biconnected_without(const PlaneGraph& graph, int removed) {
  const int n = graph.vertex_count();
  const int root = removed == 0 ? 1 : 0;
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<int> parent(n, -1);
  std::vector<int> cursor(n, 0);
  int time = 0;
  int root_children = 0;
  int visited = 1;
  std::vector<int> stack{root};
  disc[root] = low[root] = time++;
  while (!stack.empty()) {
    const int v = stack.back();
    if (cursor[v] < graph.degree(v)) {
      const int u = graph.neighbors(v)[cursor[v]++];
      if (u == removed) continue;
      if (disc[u] < 0) {
        parent[u] = v;
        disc[u] = low[u] = time++;
        ++visited;
        if (v == root) ++root_children;
        stack.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
      continue;
    }
    stack.pop_back();
    const int p = parent[v];
    if (p >= 0) {
      low[p] = std::min(low[p], low[v]);
      if (p != root && low[v] >= disc[p]) return false;
    }
  }
  return visited == n - 1 && root_children == 1;
}

// Cycle of length `len` (3 <= len <= n) in C_n^2 with natural labels, mapped
// through `order`: even labels upward by 2-hops, then odd labels back down.
CycleResult square_cycle_of_length(const std::vector<int>& order, int len) {
  CycleResult c;
  const int top = len % 2 == 1 ? (len - 1) / 2 : (len - 2) / 2;
  for (int i = 0; i <= top; ++i) c.vertices.push_back(order[2 * i]);
  int odd = len % 2 == 1 ? 2 * top - 1 : 2 * top + 1;
  for (; odd >= 1; odd -= 2) c.vertices.push_back(order[odd]);
  return c;
}

bool is_natural_square_order(const PlaneGraph& graph, const std::vector<int>& order) {
  const int n = static_cast<int>(order.size());
  for (int p = 0; p < n; ++p) {
    const int v = order[p];
    if (graph.degree(v) != 4) return false;
    for (int d : {1, 2, n - 1, n - 2}) {
      if (!graph.has_edge(v, order[(p + d) % n])) return false;
    }
  }
  return true;
}

}  // namespace

bool is_three_connected(const PlaneGraph& graph) {
  if (graph.vertex_count() < 4) return false;
  for (int r = 0; r < graph.vertex_count(); ++r) {
    if (!biconnected_without(graph, r)) return false;
  }
  return true;
}

std::optional<std::vector<int>> square_cycle_order(const PlaneGraph& graph, const HamiltonCycle& ham) {
  const int n = graph.vertex_count();
  if (n < 8) return std::nullopt;
  if (is_natural_square_order(graph, ham.order())) return ham.order();

  // In C_n^2 (n >= 8) an edge lies in two triangles iff it joins cyclically
  // consecutive vertices, so those edges recover the natural Hamilton cycle.
  std::vector<std::vector<int>> consecutive(n);
  for (int u = 0; u < n; ++u) {
    if (graph.degree(u) != 4) return std::nullopt;
    for (int v : graph.neighbors(u)) {
      int common = 0;
      for (int w : graph.neighbors(u)) common += (w != v && graph.has_edge(v, w)) ? 1 : 0;
      if (common == 2) consecutive[u].push_back(v);
    }
    if (consecutive[u].size() != 2) return std::nullopt;
  }
  std::vector<int> order{0};
  int prev = -1;
  int cur = 0;
  while (static_cast<int>(order.size()) <= n) {
    const int nxt = consecutive[cur][0] != prev ? consecutive[cur][0] : consecutive[cur][1];
    prev = cur;
    cur = nxt;
    if (cur == 0) break;
    order.push_back(cur);
  }
  if (static_cast<int>(order.size()) != n || !is_natural_square_order(graph, order)) return std::nullopt;
  return order;
}

HalfCycleResult find_half_cycle_3conn(const PlaneGraph& graph, const HamiltonCycle& ham) {
  const int n = graph.vertex_count();
  if (n < 8 || n % 2 != 0) {
    throw Error(ErrorKind::precondition_violated, "needs an even number of vertices >= 8, got " + std::to_string(n));
  }
  if (graph.min_degree() < 4) {
    throw Error(ErrorKind::precondition_violated, "minimum degree " + std::to_string(graph.min_degree()) + " < 4");
  }
  if (!is_three_connected(graph)) throw Error(ErrorKind::precondition_violated, "graph is not 3-connected");

  const auto split = split_by_hamilton(graph, ham);
  const DualTree dual = build_dual_tree(graph, split, Side::interior);
  const Weight target = n / 2 - 3;
  const std::size_t interior_edges = split.interior.edge_count(n);

  HalfCycleResult out{};
  Weight g = 0;
  if (2 * interior_edges > 3 * static_cast<std::size_t>(n)) {
    out.branch = HalfCycleBranch::many_chords;
    g = 1;
  } else if (dual.tree.max_weight() <= target) {
    out.branch = HalfCycleBranch::small_faces;
    g = 2;
  } else {
    out.branch = HalfCycleBranch::square_of_cycle;
    const auto order = square_cycle_order(graph, ham);
    if (!order) {
      throw Error(ErrorKind::unexpected_structure,
                  "interior has exactly 3n/2 edges and a face of length >= n/2, but the graph is not the square "
                  "of a cycle");
    }
    out.cycle = square_cycle_of_length(*order, n / 2 - 1);
    WSUB_CHECK(validate_cycle(graph, out.cycle), "square-of-cycle construction produced an invalid cycle");
    return out;
  }

  if (dual.tree.max_weight() > target) {
    throw Error(ErrorKind::unexpected_structure, "an interior face has weight " +
                                                     std::to_string(dual.tree.max_weight()) + " > n/2 - 3");
  }
  const auto search = find_subtree(dual.tree, target, g);
  out.steps = search.steps;
  if (!search.found()) {
    std::string flags;
    for (const auto& f : check_conditions(dual.tree, target, g).failed()) flags += " " + f;
    throw Error(ErrorKind::unexpected_structure,
                "window search found no dual subtree of weight in [" + std::to_string(target - g + 1) + ", " +
                    std::to_string(target) + "]; failed conditions:" + (flags.empty() ? " none" : flags));
  }
  out.cycle = subtree_to_cycle(graph, dual, search.subtree->vertices);
  WSUB_CHECK(validate_cycle(graph, out.cycle), "produced cycle failed validation");
  const auto len = static_cast<int>(out.cycle.length());
  WSUB_CHECK(len == n / 2 - 1 || len == n / 2 - 2, "half cycle has the wrong length");
  return out;
}

GraphFile parse_graph(std::string_view text) {
  const auto lines = detail::significant_lines(text);
  if (lines.empty()) throw Error(ErrorKind::syntax, "empty input: expected header 'graph <n>'");
  detail::LineCursor header(lines[0]);
  header.expect_word("graph");
  const std::int64_t n = header.integer();
  if (n < 1) header.fail("vertex count must be positive");
  if (!header.at_end()) header.fail("trailing text after header");

  std::vector<std::vector<int>> rotation(n);
  std::vector<char> defined(n, 0);
  std::optional<std::vector<int>> hamilton;
  std::int64_t vertex_lines = 0;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::LineCursor cur(lines[i]);
    cur.skip_blanks();
    if (lines[i].text.find("hamilton") != std::string_view::npos) {
      if (hamilton) cur.fail("duplicate hamilton line");
      cur.expect_word("hamilton");
      cur.expect(':');
      hamilton.emplace();
      while (!cur.at_end()) hamilton->push_back(cur.vertex(n));
      continue;
    }
    const int v = cur.vertex(n);
    if (defined[v]) cur.fail("vertex " + std::to_string(v) + " defined twice");
    defined[v] = 1;
    ++vertex_lines;
    cur.expect(':');
    while (!cur.at_end()) rotation[v].push_back(cur.vertex(n));
  }
  if (vertex_lines != n) {
    throw Error(ErrorKind::syntax, "header declares " + std::to_string(n) + " vertices but " +
                                       std::to_string(vertex_lines) + " vertex lines follow");
  }
  return GraphFile{PlaneGraph(std::move(rotation)), std::move(hamilton)};
}

std::string serialize_graph(const PlaneGraph& graph, std::span<const int> hamilton) {
  std::string out = "graph " + std::to_string(graph.vertex_count()) + "\n";
  for (int v = 0; v < graph.vertex_count(); ++v) {
    out += std::to_string(v) + ":";
    for (int u : graph.neighbors(v)) out += " " + std::to_string(u);
    out += "\n";
  }
  if (!hamilton.empty()) {
    out += "hamilton:";
    for (int v : hamilton) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

}  // namespace wsub

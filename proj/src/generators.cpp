#include "wsub/generators.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "wsub/error.hpp"
#include "wsub/rng.hpp"

namespace wsub {

namespace {

Chord normalized(Chord c) { return c.first < c.second ? c : Chord{c.second, c.first}; }

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

// Chords of a random triangulation of the polygon 0..n-1.
std::vector<Chord> random_triangulation(int n, SplitMix64& rng) {
  std::vector<Chord> out;
  std::vector<std::pair<int, int>> todo{{0, n - 1}};  // polygon lo..hi, edge lo-hi closes it
  while (!todo.empty()) {
    auto [lo, hi] = todo.back();
    todo.pop_back();
    if (hi - lo < 3) continue;
    const int apex = lo + 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo - 1)));
    if (apex > lo + 1) out.push_back({lo, apex});
    if (apex < hi - 1) out.push_back({apex, hi});
    todo.push_back({lo, apex});
    todo.push_back({apex, hi});
  }
  return out;
}

bool crosses(Chord a, Chord b) {
  auto [p, q] = a;
  auto [r, s] = b;
  return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

bool cycle_adjacent(int n, int u, int v) {
  const int d = ((v - u) % n + n) % n;
  return d == 1 || d == n - 1;
}

}  // namespace

PlaneInstance plane_from_chords(int n, const std::vector<Chord>& inside, const std::vector<Chord>& outside) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "cycle length must be >= 3");
  std::vector<std::vector<int>> in(n), out(n);
  auto add = [n](std::vector<std::vector<int>>& side, Chord c) {
    if (c.first < 0 || c.second < 0 || c.first >= n || c.second >= n) {
      throw Error(ErrorKind::invalid_argument, "chord endpoint out of range");
    }
    side[c.first].push_back(c.second);
    side[c.second].push_back(c.first);
  };
  for (Chord c : inside) add(in, c);
  for (Chord c : outside) add(out, c);

  std::vector<std::vector<int>> rotation(n);
  for (int v = 0; v < n; ++v) {
    auto offset = [n, v](int w) { return (w - v + n) % n; };
    std::sort(in[v].begin(), in[v].end(), [&](int a, int b) { return offset(a) < offset(b); });
    std::sort(out[v].begin(), out[v].end(), [&](int a, int b) { return offset(a) > offset(b); });
    auto& r = rotation[v];
    r.push_back((v + 1) % n);
    r.insert(r.end(), in[v].begin(), in[v].end());
    r.push_back((v + n - 1) % n);
    r.insert(r.end(), out[v].begin(), out[v].end());
  }
  std::vector<int> hamilton(n);
  for (int v = 0; v < n; ++v) hamilton[v] = v;
  return {PlaneGraph(std::move(rotation)), std::move(hamilton)};
}

PlaneInstance square_of_cycle(int n) {
  if (n < 6 || n % 2 != 0) throw Error(ErrorKind::invalid_argument, "square-cycle needs an even n >= 6");
  std::vector<Chord> inside, outside;
  for (int i = 0; i < n; ++i) (i % 2 == 0 ? inside : outside).push_back({i, (i + 2) % n});
  return plane_from_chords(n, inside, outside);
}

PlaneInstance malkevitch(int p) {
  if (p < 1) throw Error(ErrorKind::invalid_argument, "malkevitch needs p >= 1");
  const int n = 6 * p;
  std::vector<std::vector<int>> rotation(n);
  std::vector<int> hamilton;
  for (int c = 0; c < p; ++c) {
    const int o = 6 * c;
    const int prev = 6 * ((c + p - 1) % p);
    const int next = 6 * ((c + 1) % p);
    const int top = o, bottom = o + 1;
    auto e = [o](int i) { return o + 2 + (i + 4) % 4; };
    rotation[top] = {e(0), e(1), e(2), e(3)};
    rotation[bottom] = {e(3), e(2), e(1), e(0)};
    for (int i = 0; i < 4; ++i) rotation[e(i)] = {top, e(i - 1), bottom, e(i + 1)};
    // e0-e1 is cut; e0 links back to the previous copy's e1, e1 forward to the next copy's e0
    std::replace(rotation[e(0)].begin(), rotation[e(0)].end(), e(1), prev + 3);
    std::replace(rotation[e(1)].begin(), rotation[e(1)].end(), e(0), next + 2);
    for (int v : {e(0), e(3), top, e(2), bottom, e(1)}) hamilton.push_back(v);
  }
  return {PlaneGraph(std::move(rotation)), std::move(hamilton)};
}

PlaneInstance octahedron() { return malkevitch(1); }

PlaneInstance random_hamiltonian(int n, std::uint64_t seed, int keep_percent) {
  if (n < 3) throw Error(ErrorKind::invalid_argument, "random-hamiltonian needs n >= 3");
  SplitMix64 rng(seed);
  auto inside = random_triangulation(n, rng);
  auto outside = random_triangulation(n, rng);
  const std::set<Chord> taken(inside.begin(), inside.end());
  auto keep = [&](Chord) { return static_cast<int>(rng.below(100)) < keep_percent; };
  std::erase_if(inside, [&](Chord c) { return !keep(c); });
  std::erase_if(outside, [&](Chord c) { return !keep(c) || taken.contains(c); });
  return plane_from_chords(n, inside, outside);
}

std::optional<PlaneInstance> random_min_degree4(int n, int inside_chords, std::uint64_t seed) {
  if (n < 6) throw Error(ErrorKind::invalid_argument, "random-min-degree4 needs n >= 6");
  SplitMix64 rng(seed);
  auto inside = random_triangulation(n, rng);
  shuffle(inside, rng);
  if (static_cast<int>(inside.size()) > inside_chords) inside.resize(std::max(inside_chords, 0));

  std::vector<int> need(n, 2);
  for (auto [a, b] : inside) {
    need[a] = std::max(need[a] - 1, 0);
    need[b] = std::max(need[b] - 1, 0);
  }
  const std::set<Chord> taken(inside.begin(), inside.end());
  std::vector<Chord> outside;
  long budget = 2000;

  // Smallest vertex still short of degree 4 picks a partner; backtrack on dead ends.
  auto fill = [&](auto&& self) -> bool {
    if (--budget < 0) return false;
    const auto v = static_cast<int>(std::find_if(need.begin(), need.end(), [](int x) { return x > 0; }) - need.begin());
    if (v == n) return true;
    std::vector<int> partners;
    for (int w = 0; w < n; ++w) {
      if (w == v || need[w] == 0 || cycle_adjacent(n, v, w)) continue;
      const Chord c = normalized({v, w});
      if (taken.contains(c) || std::find(outside.begin(), outside.end(), c) != outside.end()) continue;
      if (std::any_of(outside.begin(), outside.end(), [&](Chord o) { return crosses(o, c); })) continue;
      partners.push_back(w);
    }
    shuffle(partners, rng);
    for (int w : partners) {
      outside.push_back(normalized({v, w}));
      --need[v];
      --need[w];
      if (self(self)) return true;
      outside.pop_back();
      ++need[v];
      ++need[w];
    }
    return false;
  };
  if (!fill(fill)) return std::nullopt;
  return plane_from_chords(n, inside, outside);
}

}  // namespace wsub

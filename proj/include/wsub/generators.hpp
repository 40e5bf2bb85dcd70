#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wsub/planar.hpp"

namespace wsub {

/// A plane graph together with a Hamilton cycle of it.
struct PlaneInstance {
  PlaneGraph graph;
  std::vector<int> hamilton;
};

using Chord = std::pair<int, int>;

/// Cycle 0, 1, ..., n-1 with non-crossing chord sets drawn inside and outside.
/// Rotation at v: v+1, inside chords by increasing offset (w - v) mod n, v-1,
/// outside chords by decreasing offset. The Hamilton cycle is 0..n-1.
PlaneInstance plane_from_chords(int n, const std::vector<Chord>& inside, const std::vector<Chord>& outside);

/// C_n^2 for even n >= 6: chords (i, i+2) inside for even i, outside for odd i.
PlaneInstance square_of_cycle(int n);

/// Ring of p octahedra, each missing one equatorial edge, linked in a chain.
/// 4-regular, planar, hamiltonian, order 6p; p = 1 is the octahedron.
PlaneInstance malkevitch(int p);

PlaneInstance octahedron();

/// Random triangulations inside and outside the n-cycle, each chord kept
/// with probability keep_percent / 100. Deterministic per seed.
PlaneInstance random_hamiltonian(int n, std::uint64_t seed, int keep_percent = 100);

/// Min-degree-4 attempt: `inside_chords` chords sampled from a random inside
/// triangulation, then outside chords added by bounded backtracking so every
/// vertex gets degree at least 4. nullopt when the attempt fails.
std::optional<PlaneInstance> random_min_degree4(int n, int inside_chords, std::uint64_t seed);

}  // namespace wsub

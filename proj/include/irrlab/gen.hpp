#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "irrlab/digraph.hpp"
#include "irrlab/group.hpp"

namespace irrlab {

// Nondecreasing lists of cyclic orders (each >= 2) whose product is n;
// n = 1 yields the empty list (the trivial group).
std::vector<std::vector<Order>> all_factor_lists(Order n);

// One representative per isomorphism class of order n: the prime-power
// pieces of the primary decomposition, sorted ascending.
std::vector<Group> iso_classes(Order n);

// Representatives with exactly one involution, orders in [lo, hi].
std::vector<Group> single_involution_classes(Order lo, Order hi);

// Partitions of total into parts >= lo, nondecreasing; empty total yields
// the empty demand.
std::vector<std::vector<Order>> partitions_min(Order total, Order lo);

// Deterministic stream: identical seeds give identical draws everywhere.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  Order uniform(Order lo, Order hi);  // inclusive; modulo draw on purpose
  bool coin() { return eng() & 1; }
};

// Random digraph on n vertices (ids "v00", "v01", ... zero padded) whose
// weak components all have at least min_comp vertices; each component is a
// random spanning tree with random orientations plus up to |C| extra arcs.
Digraph random_digraph(Rng& rng, std::size_t n, std::size_t min_comp);

// Random part sizes >= lo summing exactly to total (requires total == 0 or
// total >= lo).
std::vector<Order> random_demand(Rng& rng, Order total, Order lo);

}  // namespace irrlab
